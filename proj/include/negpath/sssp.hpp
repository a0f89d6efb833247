#ifndef NEGPATH_SSSP_HPP_
#define NEGPATH_SSSP_HPP_

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "negpath/graph.hpp"
#include "negpath/scale.hpp"

namespace negpath {

struct SsspOptions {
    std::uint64_t seed = 1;
    /// Scale attempts are cut off at this multiple of the calibrated work.
    int budget_multiplier = 8;
    /// Budgeted restarts per Scale call before falling back to unbudgeted runs.
    int max_restarts = 64;
    /// Only look at the part of the graph reachable from the source.
    bool reachable_only = false;
    ScaleParams scale;
};

struct SsspStats {
    std::int64_t scale_calls = 0;
    std::int64_t halving_steps = 0;
    std::int64_t restarts = 0;
    /// Restarts caused by a rejected randomized step rather than the budget.
    std::int64_t failures = 0;
    std::uint64_t work_budget = 0;
    std::uint64_t work = 0;
    std::int64_t zero_weight_cuts = 0;
    std::int64_t bfd_iterations = 0;
    Wide initial_w = 0;
};

struct Distances {
    /// nullopt marks a vertex the source cannot reach.
    std::vector<std::optional<Wide>> dist;
    /// Last edge of the shortest path tree, kNoEdge for the source and unreachable vertices.
    std::vector<EdgeId> parent;
};

struct SsspResult {
    std::variant<Distances, NegativeCycle> value;
    SsspStats stats;

    bool is_cycle() const { return std::holds_alternative<NegativeCycle>(value); }
    const Distances &distances() const { return std::get<Distances>(value); }
    const NegativeCycle &cycle() const { return std::get<NegativeCycle>(value); }
};

/**
 * Exact distances from `source`, or a negative cycle anywhere in g (only in
 * the reachable part with reachable_only). Weights must satisfy |w| <= 2^40.
 * Throws std::out_of_range for a bad source.
 */
SsspResult sssp(const Graph &g, VertexId source, const SsspOptions &options = {});

/// True iff every reduced weight is at least -bound.
bool verify_potential(const Graph &g, const PriceFunction &phi, Wide bound);

}  // namespace negpath

#endif  // NEGPATH_SSSP_HPP_
