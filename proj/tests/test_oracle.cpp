#include <doctest.h>

#include <set>

#include "negpath/generators.hpp"
#include "negpath/io.hpp"
#include "negpath/oracle.hpp"
#include "negpath/search.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("oracle") {

TEST_CASE("Bellman-Ford on non-negative graphs equals Dijkstra") {
    Rng rng(501);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<VertexId>(1 + rng.below(60));
        const Graph g = random_graph(rng, n, static_cast<std::int64_t>(rng.below(4 * n)), 0, 9);
        const auto ref = oracle::bellman_ford_reference(g, 0);
        REQUIRE_FALSE(ref.cycle);
        const ShortestPathTree tree = dijkstra(g, 0);
        for (VertexId v = 0; v < n; ++v) {
            if (tree.dist[v] >= kInfinity)
                CHECK_FALSE(ref.dist[v].has_value());
            else
                CHECK(ref.dist[v] == tree.dist[v]);
        }
    }
}

TEST_CASE("Bellman-Ford finds the 2-cycle of weight -2") {
    const Graph g = make(2, {{0, 1, -3}, {1, 0, 1}});
    const auto ref = oracle::bellman_ford_reference(g, 0);
    REQUIRE(ref.cycle);
    CHECK(is_closed_walk(g, *ref.cycle));
    CHECK(walk_weight(g, *ref.cycle) == -2);
    const auto any = oracle::find_negative_cycle(g);
    REQUIRE(any);
    CHECK(walk_weight(g, *any) == -2);
}

TEST_CASE("planted potentials have no negative cycle and match Floyd") {
    Rng rng(503);
    for (int t = 0; t < 20; ++t) {
        const auto n = static_cast<VertexId>(1 + rng.below(40));
        const Graph g = planted_potential(rng, n, static_cast<std::int64_t>(rng.below(4 * n)), 30);
        CHECK_FALSE(oracle::find_negative_cycle(g).has_value());
        const auto ref = oracle::bellman_ford_reference(g, 0);
        const auto d = floyd(g);
        for (VertexId v = 0; v < n; ++v) {
            if (d[0][v] >= kInfinity)
                CHECK_FALSE(ref.dist[v].has_value());
            else
                CHECK(ref.dist[v] == d[0][v]);
        }
    }
}

TEST_CASE("cycle detection agrees with Floyd's diagonal") {
    Rng rng(509);
    for (int t = 0; t < 60; ++t) {
        const auto n = static_cast<VertexId>(1 + rng.below(20));
        const Graph g = random_graph(rng, n, static_cast<std::int64_t>(rng.below(3 * n)), -5, 12);
        const auto d = floyd(g);
        bool neg = false;
        for (VertexId v = 0; v < n; ++v)
            neg = neg || d[v][v] < 0;
        const auto c = oracle::find_negative_cycle(g);
        CHECK(c.has_value() == neg);
        if (c) {
            CHECK(is_closed_walk(g, *c));
            CHECK(walk_weight(g, *c) < 0);
        }
    }
}

TEST_CASE("layered distances: dist_0 is infinite and dist_1 is final without negative edges") {
    const Graph g = make(3, {{0, 1, 2}, {1, 2, 1}});
    const auto t = oracle::dist_i_bruteforce(g, {0, 0, 0}, 3);
    CHECK(t.dist[0] == std::vector<Wide>(3, kInfinity));
    CHECK(t.dist_prime[0] == std::vector<Wide>(3, kInfinity));
    CHECK(t.dist[1] == std::vector<Wide>(3, 0));
    CHECK(t.dist[3] == t.dist[1]);
    const Graph neg = make(2, {{0, 1, -2}});
    const auto u = oracle::dist_i_bruteforce(neg, {0, 0}, 3);
    CHECK(u.dist[1] == std::vector<Wide>{0, 0});
    CHECK(u.dist_prime[1] == std::vector<Wide>{0, -2});
    CHECK(u.dist[2] == std::vector<Wide>{0, -2});
}

TEST_CASE("weak diameter examples") {
    const Graph cyc = to_graph(gen::dicycle(10));
    const std::vector<VertexId> one{3};
    CHECK(oracle::weak_diameter(cyc, one) == 0);
    CHECK(oracle::weak_diameter(cyc, all_vertices(cyc)) == 9);
    CHECK(oracle::weak_diameter_parallel(cyc, all_vertices(cyc)) == 9);
    CHECK(oracle::weak_diameter_bounded(cyc, all_vertices(cyc), 9) == Wide{9});
    CHECK_FALSE(oracle::weak_diameter_bounded(cyc, all_vertices(cyc), 8).has_value());

    std::vector<InputEdge> edges;
    for (VertexId u = 0; u < 6; ++u)
        for (VertexId v = 0; v < 6; ++v)
            if (u != v)
                edges.push_back({u, v, 1});
    const Graph k6 = make(6, edges);
    CHECK(oracle::weak_diameter(k6, all_vertices(k6)) == 1);

    const Graph line = make(2, {{0, 1, 1}});
    CHECK(oracle::weak_diameter(line, all_vertices(line)) >= kInfinity);
}

TEST_CASE("weak diameter is monotone in U and matches Floyd") {
    Rng rng(521);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<VertexId>(2 + rng.below(30));
        const Graph g = random_graph(rng, n, 4 * n, 0, 7);
        const auto d = floyd(g);
        std::vector<VertexId> u;
        for (VertexId v = 0; v < n; ++v)
            if (rng.below(2))
                u.push_back(v);
        if (u.empty())
            u.push_back(0);
        Wide expect = 0;
        for (VertexId a : u)
            for (VertexId b : u)
                expect = std::max(expect, d[a][b]);
        const Wide got = oracle::weak_diameter(g, u);
        CHECK(got == expect);
        CHECK(oracle::weak_diameter_parallel(g, u) == got);
        std::vector<VertexId> sub(u.begin(), u.begin() + static_cast<std::ptrdiff_t>((u.size() + 1) / 2));
        CHECK(oracle::weak_diameter(g, sub) <= got);
        const Wide b = static_cast<Wide>(rng.below(20));
        const auto bounded = oracle::weak_diameter_bounded(g, u, b);
        CHECK(bounded.has_value() == (got <= b));
        if (bounded)
            CHECK(*bounded == got);
    }
}

TEST_CASE("components without removed edges") {
    const Graph g = make(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}});
    CHECK(oracle::components_without(g, CutSet{}).size() == 1);
    CHECK(oracle::components_without(g, CutSet({2})).size() == 2);
    CHECK(oracle::components_without(g, CutSet({0, 2})).size() == 3);
    Rng rng(523);
    for (int t = 0; t < 20; ++t) {
        const Graph h = random_graph(rng, 25, 60, 1, 3);
        std::set<VertexId> seen;
        for (const auto &c : oracle::components_without(h, CutSet{}))
            for (VertexId v : c)
                CHECK(seen.insert(v).second);
        CHECK(seen.size() == 25);
        CHECK(oracle::components_without(h, CutSet{}).size() == scc(h).components.size());
    }
}

TEST_CASE("cut estimator: zero-weight edges, easy deltas and one trial") {
    const Graph g = make(3, {{0, 1, 0}, {1, 2, 3}, {2, 0, 2}});
    const auto r = oracle::estimate_cut_prob(g, 2, 50, 9);
    CHECK(r.cut_frequency[0] == 0.0);
    CHECK_FALSE(r.zero_weight_cut());
    CHECK_FALSE(r.diameter_violation());
    const auto loose = oracle::estimate_cut_prob(g, 100, 30, 9);
    CHECK(loose.diameter_violations == 0);
    const auto one = oracle::estimate_cut_prob(g, 4, 1, 9);
    for (double f : one.cut_frequency)
        CHECK((f == 0.0 || f == 1.0));
    CHECK(one.trial_max_diameter.size() == 1);
}

TEST_CASE("serial and parallel estimators give identical reports") {
    const Graph g = to_graph(gen::grid(8, 8, 5, 4));
    const auto a = oracle::estimate_cut_prob(g, 12, 40, 17);
    const auto b = oracle::estimate_cut_prob_parallel(g, 12, 40, 17);
    CHECK(a.cut_frequency == b.cut_frequency);
    CHECK(a.trial_max_diameter == b.trial_max_diameter);
    CHECK(a.first_trial_diameters == b.first_trial_diameters);
    CHECK(a.max_frequency == b.max_frequency);
    CHECK(a.mean_frequency == b.mean_frequency);
    CHECK(a.diameter_violations == b.diameter_violations);
}

TEST_CASE("trials are independent of how many run") {
    const Graph g = to_graph(gen::dicycle(40));
    const auto few = oracle::estimate_cut_prob(g, 8, 5, 23);
    const auto many = oracle::estimate_cut_prob(g, 8, 20, 23);
    for (std::size_t t = 0; t < few.trial_max_diameter.size(); ++t)
        CHECK(few.trial_max_diameter[t] == many.trial_max_diameter[t]);
    CHECK(few.first_trial_diameters == many.first_trial_diameters);
}

}  // TEST_SUITE
