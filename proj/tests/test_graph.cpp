#include <doctest.h>

#include <set>

#include "negpath/graph.hpp"
#include "negpath/search.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("graph") {

TEST_CASE("build_graph degrees and volume") {
    const Graph empty = make(1, {});
    CHECK(empty.m() == 0);
    CHECK(empty.degree(0) == 0);

    const Graph one = make(2, {{0, 1, 5}});
    CHECK(one.degree(0) == 1);
    CHECK(one.degree(1) == 1);
    const VertexId both[] = {0, 1};
    CHECK(one.volume(both) == 2);

    const Graph two = make(2, {{0, 1, 5}, {1, 0, 5}});
    CHECK(two.degree(0) == 2);
    CHECK(two.m() == 2);
}

TEST_CASE("build_graph rejects out-of-range endpoints") {
    CHECK_THROWS_AS(make(2, {{0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make(2, {{-1, 0, 1}}), std::invalid_argument);
}

TEST_CASE("degree sum is twice the edge count, with self-loops and parallel edges") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_graph(rng, 30, 90, -5, 5);
        std::int64_t sum = 0;
        for (VertexId v = 0; v < g.n(); ++v) {
            sum += g.degree(v);
            CHECK(static_cast<std::int64_t>(g.out_edges(v).size() + g.in_edges(v).size()) == g.degree(v));
        }
        CHECK(sum == 2 * g.m());
        CHECK(g.volume(all_vertices(g)) == 2 * g.m());
        // Each edge listed once per direction.
        std::multiset<EdgeId> outs, ins;
        for (VertexId v = 0; v < g.n(); ++v) {
            for (EdgeId e : g.out_edges(v)) {
                outs.insert(e);
                CHECK(g.edge(e).src == v);
            }
            for (EdgeId e : g.in_edges(v)) {
                ins.insert(e);
                CHECK(g.edge(e).dst == v);
            }
        }
        CHECK(outs.size() == static_cast<std::size_t>(g.m()));
        CHECK(std::set<EdgeId>(outs.begin(), outs.end()).size() == outs.size());
        CHECK(outs == ins);
    }
}

TEST_CASE("nonneg_projection") {
    const Graph g = make(3, {{0, 1, -3}, {1, 2, 5}, {2, 0, 0}});
    const Graph p = nonneg_projection(g);
    CHECK(p.edge(0).w == 0);
    CHECK(p.edge(1).w == 5);
    CHECK(p.edge(2).w == 0);
    const Graph q = nonneg_projection(p);
    for (EdgeId e = 0; e < p.m(); ++e)
        CHECK(q.edge(e).w == p.edge(e).w);
}

TEST_CASE("reduced_graph telescopes") {
    Rng rng(5);
    const Graph g = make(4, {{0, 1, 3}, {1, 2, -2}, {2, 3, 7}, {3, 0, -1}});
    const Graph same = reduced_graph(g, PriceFunction(4, 0));
    for (EdgeId e = 0; e < g.m(); ++e)
        CHECK(same.edge(e).w == g.edge(e).w);
    for (int t = 0; t < 10; ++t) {
        PriceFunction phi(4);
        for (auto &p : phi)
            p = static_cast<Wide>(rng.below(100)) - 50;
        const Graph r = reduced_graph(g, phi);
        const std::vector<EdgeId> cycle{0, 1, 2, 3};
        CHECK(walk_weight(r, cycle) == walk_weight(g, cycle));
        const std::vector<EdgeId> path{0, 1, 2};
        CHECK(walk_weight(r, path) == walk_weight(g, path) + phi[0] - phi[3]);
    }
}

TEST_CASE("reduced_graph preserves shortest-path argmins") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        const Graph g = planted_potential(rng, 8, 20, 6);
        PriceFunction phi(8);
        for (auto &p : phi)
            p = static_cast<Wide>(rng.below(40)) - 20;
        const auto d = floyd(g);
        const auto dr = floyd(reduced_graph(g, phi));
        for (VertexId u = 0; u < 8; ++u)
            for (VertexId v = 0; v < 8; ++v) {
                if (d[u][v] >= kInfinity)
                    CHECK(dr[u][v] >= kInfinity);
                else
                    CHECK(dr[u][v] == d[u][v] + phi[u] - phi[v]);
            }
    }
}

TEST_CASE("shift_weights") {
    const Graph g = make(2, {{0, 1, -4}});
    CHECK(shift_weights(g, 2).edge(0).w == -2);
    CHECK(shift_weights(g, 0).edge(0).w == -4);
    CHECK(shift_weights(shift_weights(g, 9), -9).edge(0).w == -4);
}

TEST_CASE("induced_subgraph") {
    const Graph tri = make(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}});
    const Graph all = induced_subgraph(tri, all_vertices(tri));
    CHECK(all.m() == 3);
    const Graph none = induced_subgraph(tri, std::vector<VertexId>{});
    CHECK(none.n() == 0);
    CHECK(none.m() == 0);
    const std::vector<VertexId> pair{2, 1};
    const Graph sub = induced_subgraph(tri, pair);
    REQUIRE(sub.m() == 1);
    CHECK(sub.vertex_label(sub.edge(0).src) == 1);
    CHECK(sub.vertex_label(sub.edge(0).dst) == 2);
    CHECK(sub.edge_label(0) == 1);
    CHECK(sub.edge(0).w == 2);
    // Labels compose through a second restriction.
    const std::vector<VertexId> first{sub.edge(0).src};
    const Graph subsub = induced_subgraph(sub, first);
    CHECK(subsub.vertex_label(0) == 1);
}

TEST_CASE("scc examples") {
    const SccResult two = scc(make(2, {{0, 1, 1}, {1, 0, 1}}));
    CHECK(two.components.size() == 1);
    const SccResult line = scc(make(2, {{0, 1, 1}}));
    REQUIRE(line.components.size() == 2);
    CHECK(line.component_of[0] < line.component_of[1]);
}

TEST_CASE("scc agrees with the transitive closure on random tournaments") {
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const VertexId n = 8;
        std::vector<InputEdge> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                edges.push_back(rng.below(2) ? InputEdge{u, v, 1} : InputEdge{v, u, 1});
        const Graph g = make(n, edges);
        const auto d = floyd(g);
        const SccResult r = scc(g);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v) {
                const bool same = d[u][v] < kInfinity && d[v][u] < kInfinity;
                CHECK(same == (r.component_of[u] == r.component_of[v]));
            }
        for (const Edge &e : g.edges())
            CHECK(r.component_of[e.src] <= r.component_of[e.dst]);
    }
}

TEST_CASE("ball examples") {
    const Graph edge = make(2, {{0, 1, 5}});
    const VertexSet all = VertexSet::all(2);
    CHECK(ball(edge, all, 0, 4, Direction::out).size() == 1);
    CHECK(ball(edge, all, 0, 5, Direction::out).size() == 2);
    const Graph path = make(3, {{0, 1, 2}, {1, 2, 3}});
    const VertexSet b = ball(path, VertexSet::all(3), 0, 4, Direction::out);
    CHECK(b.size() == 2);
    CHECK(b.contains(0));
    CHECK(b.contains(1));
}

TEST_CASE("ball rejects negative weights inside the snapshot") {
    const Graph g = make(2, {{0, 1, -1}});
    CHECK_THROWS_AS(ball(g, VertexSet::all(2), 0, 3, Direction::out), std::invalid_argument);
}

TEST_CASE("ball stays inside the snapshot and is monotone in the radius") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_graph(rng, 40, 120, 0, 6);
        std::vector<VertexId> members;
        for (VertexId v = 0; v < g.n(); ++v)
            if (rng.below(4) != 0)
                members.push_back(v);
        if (members.empty())
            continue;
        const VertexSet snap(g.n(), members);
        const VertexId c = members[rng.below(members.size())];
        const Graph sub = induced_subgraph(g, members);
        const auto d = floyd(sub);
        VertexId local_c = 0;
        while (sub.vertex_label(local_c) != c)
            ++local_c;
        std::size_t prev = 0;
        for (Wide r = 0; r <= 12; ++r) {
            const VertexSet b = ball(g, snap, c, r, Direction::out);
            CHECK(b.size() >= prev);
            prev = b.size();
            for (VertexId x = 0; x < sub.n(); ++x)
                CHECK(b.contains(sub.vertex_label(x)) == (d[local_c][x] <= r));
        }
    }
}

TEST_CASE("in-ball equals the out-ball of the reversed graph") {
    Rng rng(37);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_graph(rng, 50, 150, 0, 5);
        const Graph r = reverse_graph(g);
        const VertexSet all = VertexSet::all(g.n());
        for (int k = 0; k < 5; ++k) {
            const auto c = static_cast<VertexId>(rng.below(50));
            const Wide radius = static_cast<Wide>(rng.below(10));
            const VertexSet in = ball(g, all, c, radius, Direction::in);
            const VertexSet out = ball(r, all, c, radius, Direction::out);
            CHECK(std::set<VertexId>(in.begin(), in.end()) == std::set<VertexId>(out.begin(), out.end()));
        }
    }
}

TEST_CASE("claimed balls only drop vertices an earlier source already holds") {
    Rng rng(41);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_graph(rng, 40, 100, 0, 4);
        const VertexSet all = VertexSet::all(g.n());
        ClaimTable claims(g.n());
        std::set<VertexId> covered;
        for (std::int32_t rank = 0; rank < 6; ++rank) {
            const auto c = static_cast<VertexId>(rng.below(40));
            const VertexSet full = ball(g, all, c, 5, Direction::out);
            const VertexSet part = ball(g, all, c, 5, Direction::out, &claims, rank);
            for (VertexId v : part)
                CHECK(full.contains(v));
            for (VertexId v : full)
                if (!part.contains(v))
                    CHECK(covered.count(v) == 1);
            covered.insert(full.begin(), full.end());
        }
    }
}

TEST_CASE("wide integer text round trip") {
    CHECK(to_string(Wide{0}) == "0");
    CHECK(to_string(Wide{-42}) == "-42");
    CHECK(to_string(kWideMin) == "-170141183460469231731687303715884105728");
    CHECK(parse_wide("-170141183460469231731687303715884105728") == kWideMin);
    CHECK(parse_wide("170141183460469231731687303715884105728") == std::nullopt);
    CHECK(parse_wide("12x") == std::nullopt);
    CHECK(parse_wide("+7") == Wide{7});
    CHECK_THROWS_AS(narrow_i64(Wide{1} << 70), std::overflow_error);
}

}  // TEST_SUITE
