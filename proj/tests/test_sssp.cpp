#include <doctest.h>

#include <algorithm>

#include "negpath/oracle.hpp"
#include "negpath/sssp.hpp"
#include "support.hpp"

using namespace testing;

namespace {

void check_against_reference(const Graph &g, VertexId s, const SsspResult &r) {
    const auto ref = oracle::bellman_ford_reference(g, s);
    const bool anywhere = oracle::find_negative_cycle(g).has_value();
    CHECK(r.is_cycle() == anywhere);
    if (r.is_cycle()) {
        CHECK(is_closed_walk(g, r.cycle().edges));
        CHECK(walk_weight(g, r.cycle().edges) == r.cycle().total_weight);
        CHECK(r.cycle().total_weight < 0);
        return;
    }
    const Distances &d = r.distances();
    REQUIRE(d.dist.size() == ref.dist.size());
    for (VertexId v = 0; v < g.n(); ++v) {
        CHECK(d.dist[v] == ref.dist[v]);
        if (d.dist[v] && v != s) {
            // Parent tree edges are tight.
            const Edge &e = g.edge(d.parent[v]);
            CHECK(e.dst == v);
            CHECK(*d.dist[e.src] + e.w == *d.dist[v]);
        }
    }
    CHECK(d.parent[s] == kNoEdge);
}

int ceil_lg(Wide x) {
    int k = 0;
    while ((Wide{1} << k) < x)
        ++k;
    return k;
}

}  // namespace

TEST_SUITE("sssp") {

TEST_CASE("two negative edges on a path") {
    const Graph g = make(3, {{0, 1, -2}, {1, 2, -3}});
    const SsspResult r = sssp(g, 0);
    REQUIRE_FALSE(r.is_cycle());
    CHECK(r.distances().dist[0] == Wide{0});
    CHECK(r.distances().dist[1] == Wide{-2});
    CHECK(r.distances().dist[2] == Wide{-5});
}

TEST_CASE("single vertex") {
    const SsspResult r = sssp(make(1, {}), 0);
    REQUIRE_FALSE(r.is_cycle());
    CHECK(r.distances().dist[0] == Wide{0});
}

TEST_CASE("bad source and oversized weights are rejected") {
    const Graph g = make(2, {{0, 1, 1}});
    CHECK_THROWS_AS(sssp(g, 2), std::out_of_range);
    CHECK_THROWS_AS(sssp(g, -1), std::out_of_range);
    const Graph big = make(2, {{0, 1, (std::int64_t{1} << 40) + 1}});
    CHECK_THROWS_AS(sssp(big, 0), std::invalid_argument);
}

TEST_CASE("2-cycle -4 and 1 is found as a cycle of weight -3") {
    const Graph g = make(2, {{0, 1, -4}, {1, 0, 1}});
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SsspOptions opt;
        opt.seed = seed;
        const SsspResult r = sssp(g, 0, opt);
        REQUIRE(r.is_cycle());
        CHECK(r.cycle().total_weight == -3);
    }
}

TEST_CASE("agrees with reference Bellman-Ford on planted potentials") {
    Rng gen(401);
    for (int t = 0; t < 80; ++t) {
        const auto n = static_cast<VertexId>(1 + gen.below(80));
        const Graph g = planted_potential(gen, n, static_cast<std::int64_t>(gen.below(5 * n)), 1 + static_cast<std::int64_t>(gen.below(64)));
        SsspOptions opt;
        opt.seed = gen.next();
        const auto s = static_cast<VertexId>(gen.below(n));
        const SsspResult r = sssp(g, s, opt);
        check_against_reference(g, s, r);
        CHECK(r.stats.zero_weight_cuts == 0);
        if (r.stats.initial_w > 0)
            CHECK(r.stats.halving_steps <= ceil_lg(r.stats.initial_w) + 1);
    }
}

TEST_CASE("cycles anywhere are reported, also unreachable ones") {
    Rng gen(409);
    int cycles = 0;
    for (int t = 0; t < 80; ++t) {
        const auto n = static_cast<VertexId>(2 + gen.below(40));
        const Graph g = random_graph(gen, n, static_cast<std::int64_t>(gen.below(3 * n)), -8, 20);
        SsspOptions opt;
        opt.seed = gen.next();
        const SsspResult r = sssp(g, 0, opt);
        check_against_reference(g, 0, r);
        cycles += r.is_cycle();
    }
    CHECK(cycles > 5);

    // Source 0 cannot reach the negative 2-cycle on {1, 2}.
    const Graph g = make(3, {{1, 2, -3}, {2, 1, 1}});
    CHECK(sssp(g, 0).is_cycle());
    SsspOptions only;
    only.reachable_only = true;
    const SsspResult r = sssp(g, 0, only);
    REQUIRE_FALSE(r.is_cycle());
    CHECK(r.distances().dist[0] == Wide{0});
    CHECK_FALSE(r.distances().dist[1].has_value());
    CHECK_FALSE(r.distances().dist[2].has_value());
}

TEST_CASE("reachable-only matches the reference on the reachable part") {
    Rng gen(419);
    for (int t = 0; t < 40; ++t) {
        const auto n = static_cast<VertexId>(2 + gen.below(50));
        const Graph g = planted_potential(gen, n, static_cast<std::int64_t>(gen.below(2 * n)), 16);
        SsspOptions opt;
        opt.reachable_only = true;
        opt.seed = gen.next();
        const SsspResult r = sssp(g, 0, opt);
        REQUIRE_FALSE(r.is_cycle());
        const auto ref = oracle::bellman_ford_reference(g, 0);
        CHECK(r.distances().dist == ref.dist);
    }
}

TEST_CASE("same seed, same answer") {
    Rng gen(421);
    for (int t = 0; t < 10; ++t) {
        const auto n = static_cast<VertexId>(2 + gen.below(60));
        const Graph g = random_graph(gen, n, 3 * n, -5, 30);
        SsspOptions opt;
        opt.seed = 77;
        const SsspResult a = sssp(g, 0, opt);
        const SsspResult b = sssp(g, 0, opt);
        REQUIRE(a.is_cycle() == b.is_cycle());
        if (a.is_cycle())
            CHECK(a.cycle().edges == b.cycle().edges);
        else {
            CHECK(a.distances().dist == b.distances().dist);
            CHECK(a.distances().parent == b.distances().parent);
        }
        CHECK(a.stats.work == b.stats.work);
        CHECK(a.stats.restarts == b.stats.restarts);
    }
}

TEST_CASE("verify_potential") {
    const Graph pos = make(2, {{0, 1, 3}});
    CHECK(verify_potential(pos, {0, 0}, 0));
    const Graph neg = make(2, {{0, 1, -1}});
    CHECK_FALSE(verify_potential(neg, {0, 0}, 0));
    CHECK(verify_potential(neg, {0, 0}, 1));
    CHECK(verify_potential(neg, {0, -1}, 0));
}

TEST_CASE("scale outputs pass verify_potential at W/2") {
    Rng gen(431);
    int checked = 0;
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<VertexId>(1 + gen.below(50));
        const Wide W = Wide{2} << gen.below(5);
        const Graph g = planted_potential(gen, n, static_cast<std::int64_t>(gen.below(4 * n)), static_cast<std::int64_t>(W) / 2);
        Rng rng(gen.next());
        try {
            const ScaleOutcome out = scale(g, W, {}, rng);
            if (!out.is_cycle()) {
                CHECK(verify_potential(g, out.potential(), W / 2));
                ++checked;
            }
        } catch (const ScaleFailure &) {
        }
    }
    CHECK(checked > 80);
}

}  // TEST_SUITE
