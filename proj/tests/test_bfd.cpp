#include <doctest.h>

#include <set>

#include "negpath/bfd.hpp"
#include "negpath/oracle.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Snapshot {
    int iteration;
    BfdPhase phase;
    std::vector<Wide> d;
    std::set<VertexId> extracted;
    std::set<VertexId> queued;
};

BfdResult run_recording(const Graph &g, const PriceFunction &phi, std::vector<Snapshot> &snaps) {
    const BfdHook hook = [&](const BfdView &v) -> std::optional<VertexId> {
        snaps.push_back({v.iteration, v.phase, {v.d.begin(), v.d.end()}, {v.extracted.begin(), v.extracted.end()},
                         {v.queued.begin(), v.queued.end()}});
        return std::nullopt;
    };
    auto out = bellman_ford_dijkstra(g, phi, {}, hook);
    REQUIRE(std::holds_alternative<BfdResult>(out));
    return std::get<BfdResult>(out);
}

PriceFunction random_phi(Rng &rng, VertexId n, std::int64_t span) {
    PriceFunction phi(static_cast<std::size_t>(n));
    for (auto &p : phi)
        p = static_cast<Wide>(rng.below(static_cast<std::uint64_t>(2 * span + 1))) - span;
    return phi;
}

}  // namespace

TEST_SUITE("bfd") {

TEST_CASE("non-negative weights finish in one iteration with zero distances") {
    const Graph g = make(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 4}});
    auto out = bellman_ford_dijkstra(g, PriceFunction(3, 0));
    REQUIRE(std::holds_alternative<BfdResult>(out));
    const auto &r = std::get<BfdResult>(out);
    CHECK(r.iterations == 1);
    for (Wide d : r.d)
        CHECK(d == 0);
}

TEST_CASE("single negative edge takes two iterations") {
    const Graph g = make(2, {{0, 1, -2}});
    auto out = bellman_ford_dijkstra(g, PriceFunction(2, 0));
    REQUIRE(std::holds_alternative<BfdResult>(out));
    const auto &r = std::get<BfdResult>(out);
    CHECK(r.d[0] == 0);
    CHECK(r.d[1] == -2);
    CHECK(r.iterations == 2);
    CHECK(r.parent[1] == 0);
    CHECK(r.parent[0] == kNoEdge);
}

TEST_CASE("snapshots follow the layered distances") {
    Rng rng(101);
    for (int t = 0; t < 40; ++t) {
        const auto n = static_cast<VertexId>(2 + rng.below(30));
        const Graph g = planted_potential(rng, n, static_cast<std::int64_t>(rng.below(4 * n)) + 1, 8);
        const PriceFunction phi = random_phi(rng, n, 8);
        std::vector<Snapshot> snaps;
        const BfdResult r = run_recording(g, phi, snaps);
        const auto table = oracle::dist_i_bruteforce(g, phi, r.iterations + 1);
        int checked = 0;
        for (const Snapshot &s : snaps) {
            const int i = s.iteration;
            for (VertexId v = 0; v < n; ++v) {
                if (s.phase == BfdPhase::after_dijkstra) {
                    CHECK(s.d[v] == table.dist[i][v]);
                    CHECK(s.extracted.count(v) == (table.dist[i - 1][v] > table.dist[i][v] ? 1U : 0U));
                } else {
                    CHECK(s.d[v] == table.dist_prime[i][v]);
                    CHECK(s.queued.count(v) == (table.dist[i][v] > table.dist_prime[i][v] ? 1U : 0U));
                }
            }
            ++checked;
        }
        CHECK(checked == 2 * r.iterations);
        CHECK(r.repeat_extractions == 0);
    }
}

TEST_CASE("final distances match reference Bellman-Ford from a virtual source") {
    Rng rng(103);
    for (int t = 0; t < 40; ++t) {
        const auto n = static_cast<VertexId>(1 + rng.below(40));
        const Graph g = planted_potential(rng, n, static_cast<std::int64_t>(rng.below(3 * n)) + 1, 10);
        const PriceFunction phi = random_phi(rng, n, 10);
        auto out = bellman_ford_dijkstra(g, phi);
        REQUIRE(std::holds_alternative<BfdResult>(out));
        const auto &r = std::get<BfdResult>(out);
        // Reference: extra vertex n with zero edges to everyone.
        std::vector<InputEdge> edges;
        for (const Edge &e : g.edges())
            edges.push_back({e.src, e.dst, static_cast<std::int64_t>(e.w)});
        for (VertexId v = 0; v < n; ++v)
            edges.push_back({n, v, 0});
        const auto ref = oracle::bellman_ford_reference(make(n + 1, edges), n);
        REQUIRE(!ref.cycle);
        for (VertexId v = 0; v < n; ++v)
            CHECK(r.d[v] == *ref.dist[v]);
        // The result is a valid potential.
        for (const Edge &e : g.edges())
            CHECK(e.w + r.d[e.src] - r.d[e.dst] >= 0);
    }
}

TEST_CASE("parent walks reproduce the primary and auxiliary distances") {
    Rng rng(107);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<VertexId>(2 + rng.below(30));
        const Graph g = planted_potential(rng, n, 3 * n, 6);
        std::vector<Wide> aux(static_cast<std::size_t>(g.m()));
        for (auto &a : aux)
            a = static_cast<Wide>(rng.below(5));
        auto out = bellman_ford_dijkstra(g, random_phi(rng, n, 6), aux);
        REQUIRE(std::holds_alternative<BfdResult>(out));
        const auto &r = std::get<BfdResult>(out);
        for (VertexId v = 0; v < n; ++v) {
            CHECK(r.d[v] <= 0);
            Wide w = 0, a = 0;
            int steps = 0;
            for (VertexId x = v; r.parent[x] != kNoEdge && steps <= n; x = g.edge(r.parent[x]).src, ++steps) {
                w += g.edge(r.parent[x]).w;
                a += aux[r.parent[x]];
            }
            CHECK(steps <= n);
            CHECK(w == r.d[v]);
            CHECK(a == r.d_aux[v]);
        }
    }
}

TEST_CASE("iteration count is at most max eta plus one") {
    Rng rng(109);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<VertexId>(2 + rng.below(25));
        const Graph g = planted_potential(rng, n, 3 * n, 8);
        const PriceFunction phi = random_phi(rng, n, 4);
        auto out = bellman_ford_dijkstra(g, phi);
        REQUIRE(std::holds_alternative<BfdResult>(out));
        const auto &r = std::get<BfdResult>(out);
        const auto table = oracle::dist_i_bruteforce(g, phi, n + 1);
        // eta_max: fewest negative edges needed by all shortest paths at once.
        int eta = 0;
        while (table.dist[eta + 1] != table.dist.back())
            ++eta;
        CHECK(r.iterations <= eta + 1);
    }
}

TEST_CASE("negative cycle exhausts the budget and yields the cycle") {
    const Graph g = make(3, {{0, 1, 1}, {1, 2, -3}, {2, 0, 1}});
    auto out = bellman_ford_dijkstra(g, PriceFunction(3, 0));
    REQUIRE(std::holds_alternative<BfdBudgetExceeded>(out));
    const auto &b = std::get<BfdBudgetExceeded>(out);
    CHECK(b.iterations == 4);
    CHECK(is_closed_walk(g, b.cycle));
    CHECK(walk_weight(g, b.cycle) < 0);
}

TEST_CASE("budget-exceeded cycles on random graphs are negative closed walks") {
    Rng rng(113);
    int seen = 0;
    for (int t = 0; t < 60; ++t) {
        const auto n = static_cast<VertexId>(2 + rng.below(20));
        const Graph g = random_graph(rng, n, 3 * n, -6, 10);
        auto out = bellman_ford_dijkstra(g, PriceFunction(static_cast<std::size_t>(n), 0));
        const bool has_cycle = oracle::find_negative_cycle(g).has_value();
        CHECK(has_cycle == std::holds_alternative<BfdBudgetExceeded>(out));
        if (auto *b = std::get_if<BfdBudgetExceeded>(&out)) {
            ++seen;
            CHECK(is_closed_walk(g, b->cycle));
            CHECK(walk_weight(g, b->cycle) < 0);
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("early exit returns the walk behind the chosen vertex") {
    const Graph g = make(3, {{0, 1, -1}, {1, 2, -1}});
    const std::vector<Wide> aux{5, 7};
    const BfdHook hook = [](const BfdView &v) -> std::optional<VertexId> {
        if (v.phase == BfdPhase::after_bellman_ford && v.d_aux[2] > 10)
            return VertexId{2};
        return std::nullopt;
    };
    auto out = bellman_ford_dijkstra(g, PriceFunction(3, 0), aux, hook);
    REQUIRE(std::holds_alternative<BfdEarlyExit>(out));
    const auto &e = std::get<BfdEarlyExit>(out);
    CHECK(e.vertex == 2);
    CHECK(e.path == std::vector<EdgeId>{0, 1});
    CHECK(e.d == -2);
    CHECK(e.d_aux == 12);
    CHECK(e.iteration == 2);
}

TEST_CASE("layered oracle is monotone") {
    Rng rng(127);
    for (int t = 0; t < 20; ++t) {
        const auto n = static_cast<VertexId>(2 + rng.below(30));
        const Graph g = planted_potential(rng, n, 3 * n, 8);
        const auto table = oracle::dist_i_bruteforce(g, random_phi(rng, n, 8), 10);
        CHECK(table.dist[0] == std::vector<Wide>(static_cast<std::size_t>(n), kInfinity));
        for (int i = 0; i + 1 < static_cast<int>(table.dist.size()); ++i)
            for (VertexId v = 0; v < n; ++v) {
                CHECK(table.dist[i][v] >= table.dist_prime[i][v]);
                CHECK(table.dist_prime[i][v] >= table.dist[i + 1][v]);
            }
    }
}

}  // TEST_SUITE
