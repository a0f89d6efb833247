#ifndef NEGPATH_SCALE_HPP_
#define NEGPATH_SCALE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "negpath/graph.hpp"
#include "negpath/ldd.hpp"
#include "negpath/rng.hpp"

namespace negpath {

/// Closed walk of edge ids of the graph it was found in.
struct NegativeCycle {
    std::vector<EdgeId> edges;
    Wide total_weight = 0;
};

/// Sum of weights, or nullopt if `edges` is not a closed walk.
std::optional<Wide> closed_walk_weight(const Graph &g, std::span<const EdgeId> edges);

/// Builds a NegativeCycle and checks it; throws std::logic_error if the walk is not closed or not negative.
NegativeCycle make_cycle(const Graph &g, std::vector<EdgeId> edges);

/// A randomized step produced something the exact checks reject (for
/// example a decomposition piece wider than promised). Callers restart.
struct ScaleFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScaleParams {
    LddParams ldd;
    /// Called with the decomposition tree of G'_{>=0} before distances are computed.
    std::function<void(const DecompTree &)> on_tree;
};

struct ScaleStats {
    std::int64_t nodes = 0;
    std::int64_t leaves = 0;
    /// Internal nodes settled by fix_dag alone.
    std::int64_t dag_only = 0;
    std::int64_t bfd_runs = 0;
    std::int64_t bfd_iterations = 0;
    std::int64_t max_bfd_iterations = 0;
    std::int64_t early_exits = 0;
    /// Sum over BFD runs of max cut edges on a shortest path divided by
    /// 2^i * lg lg(1/eps), and the number of runs it sums over.
    double cut_edges_on_paths = 0;
    std::int64_t cut_edge_samples = 0;
    std::int64_t zero_weight_cuts = 0;
    std::uint64_t work = 0;
    /// Processing order of decomposition nodes.
    std::vector<std::int32_t> order;
};

struct ScaleOutcome {
    std::variant<PriceFunction, NegativeCycle> value;
    ScaleStats stats;

    bool is_cycle() const { return std::holds_alternative<NegativeCycle>(value); }
    const PriceFunction &potential() const { return std::get<PriceFunction>(value); }
    const NegativeCycle &cycle() const { return std::get<NegativeCycle>(value); }
};

/**
 * Needs every weight >= -W and W even and positive. Returns a potential
 * phi with w(e) + phi(u) - phi(v) >= -W/2 on every edge, or a negative cycle.
 * Throws ScaleFailure on a rejected randomized step and WorkMeter::Exceeded
 * past the meter's budget.
 */
ScaleOutcome scale(const Graph &g, Wide W, const ScaleParams &params, Rng &rng, WorkMeter *meter = nullptr);

/**
 * Shifts phi by a per-SCC offset so every edge of `h` becomes non-negative,
 * given that edges inside an SCC already are. `sccs` must list components in
 * topological order.
 */
PriceFunction fix_dag(const Graph &h, const SccResult &sccs, PriceFunction phi);

/**
 * Looks for an edge of `g_shift` inside `vertices` with negative weight and
 * closes it into a cycle with a shortest path in `g_nonneg`. All three graphs
 * share vertex and edge ids; the cycle is checked against the weights of `g`.
 * Throws ScaleFailure if no such cycle closes negatively.
 */
std::optional<NegativeCycle> leaf_check(const Graph &g, const Graph &g_shift, const Graph &g_nonneg,
                                        std::span<const VertexId> vertices);

}  // namespace negpath

#endif  // NEGPATH_SCALE_HPP_
