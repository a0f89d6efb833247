#ifndef NEGPATH_ORACLE_HPP_
#define NEGPATH_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "negpath/graph.hpp"
#include "negpath/ldd.hpp"

// Slow, independent references. Nothing here calls into the algorithm
// modules except estimate_cut_prob, which runs ldd and then checks it.
namespace negpath::oracle {

struct BellmanFordResult {
    /// nullopt for unreachable vertices. Meaningless when `cycle` is set.
    std::vector<std::optional<Wide>> dist;
    /// A negative cycle reachable from the source, as a closed edge walk.
    std::optional<std::vector<EdgeId>> cycle;
};

BellmanFordResult bellman_ford_reference(const Graph &g, VertexId source);

/// A negative cycle anywhere in g, found from a virtual source.
std::optional<std::vector<EdgeId>> find_negative_cycle(const Graph &g);

/// dist_i and dist'_i for i = 0..i_max, in original weights from a virtual
/// source at distance 0 to every vertex. Edges with negative reduced weight
/// under phi are the "negative" edges. kInfinity stands for infinity.
struct DistTable {
    std::vector<std::vector<Wide>> dist;
    std::vector<std::vector<Wide>> dist_prime;
};

DistTable dist_i_bruteforce(const Graph &g, const std::vector<Wide> &phi, int i_max);

/// max over u, v in U of d_G(u, v); kInfinity if some pair is unreachable.
/// Weights must be non-negative.
Wide weak_diameter(const Graph &g, std::span<const VertexId> U);
Wide weak_diameter_parallel(const Graph &g, std::span<const VertexId> U);

/// Exact weak diameter if it is at most `bound`, otherwise nullopt. Each
/// search stops past `bound`.
std::optional<Wide> weak_diameter_bounded(const Graph &g, std::span<const VertexId> U, Wide bound);

/// Strongly connected components of g without the edges in `removed` (Kosaraju).
std::vector<std::vector<VertexId>> components_without(const Graph &g, const CutSet &removed);

struct ValidationReport {
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
    Wide delta = 0;
    /// Per edge, the fraction of trials that cut it.
    std::vector<double> cut_frequency;
    double max_frequency = 0;
    double mean_frequency = 0;
    /// Largest weak diameter over the SCCs of each trial.
    std::vector<Wide> trial_max_diameter;
    /// Weak diameters of the SCCs of the first trial, in component order.
    std::vector<Wide> first_trial_diameters;
    Wide max_diameter = 0;
    std::int64_t diameter_violations = 0;
    std::int64_t zero_weight_cuts = 0;

    bool diameter_violation() const { return diameter_violations > 0; }
    bool zero_weight_cut() const { return zero_weight_cuts > 0; }
};

/// Runs ldd `trials` times with per-trial seeds mix_seed(seed, t).
ValidationReport estimate_cut_prob(const Graph &g, Wide delta, std::int64_t trials, std::uint64_t seed,
                                   const LddParams &params = {});
/// Same report, trials spread over OpenMP threads.
ValidationReport estimate_cut_prob_parallel(const Graph &g, Wide delta, std::int64_t trials, std::uint64_t seed,
                                            const LddParams &params = {});

}  // namespace negpath::oracle

#endif  // NEGPATH_ORACLE_HPP_
