#ifndef NEGPATH_TESTS_SUPPORT_HPP_
#define NEGPATH_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "negpath/graph.hpp"
#include "negpath/rng.hpp"

namespace testing {

using namespace negpath;

inline Graph make(VertexId n, std::vector<InputEdge> edges) { return build_graph(n, edges); }

/// Random multigraph with weights in [lo, hi].
inline Graph random_graph(Rng &rng, VertexId n, std::int64_t m, std::int64_t lo, std::int64_t hi) {
    std::vector<InputEdge> edges;
    for (std::int64_t k = 0; k < m; ++k) {
        const auto u = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
        const auto v = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
        edges.push_back({u, v, lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)))});
    }
    return build_graph(n, edges);
}

/// Mixed-sign weights c + pi(v) - pi(u) with c in [0, W]: no negative cycles.
inline Graph planted_potential(Rng &rng, VertexId n, std::int64_t m, std::int64_t W) {
    std::vector<std::int64_t> pi(static_cast<std::size_t>(n));
    for (auto &p : pi)
        p = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W + 1)));
    std::vector<InputEdge> edges;
    for (std::int64_t k = 0; k < m; ++k) {
        const auto u = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
        const auto v = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
        const auto c = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W + 1)));
        edges.push_back({u, v, c + pi[v] - pi[u]});
    }
    return build_graph(n, edges);
}

inline std::vector<VertexId> all_vertices(const Graph &g) {
    std::vector<VertexId> u(static_cast<std::size_t>(g.n()));
    std::iota(u.begin(), u.end(), 0);
    return u;
}

/// Consecutive edges share endpoints and the last one returns to the start.
inline bool is_closed_walk(const Graph &g, const std::vector<EdgeId> &walk) {
    if (walk.empty())
        return false;
    for (std::size_t k = 0; k < walk.size(); ++k)
        if (g.edge(walk[k]).dst != g.edge(walk[(k + 1) % walk.size()]).src)
            return false;
    return true;
}

inline Wide walk_weight(const Graph &g, const std::vector<EdgeId> &walk) {
    Wide total = 0;
    for (EdgeId e : walk)
        total += g.edge(e).w;
    return total;
}

/// All-pairs distances by Floyd-Warshall; kInfinity when unreachable.
inline std::vector<std::vector<Wide>> floyd(const Graph &g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<std::vector<Wide>> d(n, std::vector<Wide>(n, kInfinity));
    for (std::size_t v = 0; v < n; ++v)
        d[v][v] = 0;
    for (const Edge &e : g.edges())
        d[e.src][e.dst] = std::min(d[e.src][e.dst], e.w);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] < kInfinity && d[k][j] < kInfinity)
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

}  // namespace testing

#endif  // NEGPATH_TESTS_SUPPORT_HPP_
