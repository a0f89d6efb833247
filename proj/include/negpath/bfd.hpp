#ifndef NEGPATH_BFD_HPP_
#define NEGPATH_BFD_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "negpath/graph.hpp"

namespace negpath {

enum class BfdPhase { after_dijkstra, after_bellman_ford };

/// State handed to the hook after each phase. Distances are in the original
/// weights, from a virtual source joined to every vertex by a zero edge.
struct BfdView {
    int iteration = 0;
    BfdPhase phase = BfdPhase::after_dijkstra;
    std::span<const Wide> d;
    std::span<const Wide> d_aux;
    /// Vertices extracted in this iteration's Dijkstra phase (the set A).
    std::span<const VertexId> extracted;
    /// Vertices queued for the next iteration; empty after the Dijkstra phase.
    std::span<const VertexId> queued;
};

/// Returns a vertex to stop at, or nullopt to continue.
using BfdHook = std::function<std::optional<VertexId>(const BfdView &)>;

struct BfdResult {
    /// Distance from the virtual source; always <= 0 and a valid potential.
    std::vector<Wide> d;
    /// Auxiliary weight of the path that achieved d.
    std::vector<Wide> d_aux;
    /// Last edge of that path, kNoEdge for the empty path.
    std::vector<EdgeId> parent;
    int iterations = 0;
    /// Times a vertex was extracted twice within one Dijkstra phase.
    std::int64_t repeat_extractions = 0;
    std::uint64_t work = 0;
};

/// The hook asked to stop; `path` is the exact walk behind d[vertex], in order.
struct BfdEarlyExit {
    VertexId vertex = kNoVertex;
    int iteration = 0;
    std::vector<EdgeId> path;
    Wide d = 0;
    Wide d_aux = 0;
    std::uint64_t work = 0;
};

/// The iteration budget ran out. `cycle` is a closed walk that is negative
/// under the reduced (equivalently, the original) weights.
struct BfdBudgetExceeded {
    int iterations = 0;
    std::vector<EdgeId> cycle;
    std::uint64_t work = 0;
};

using BfdOutcome = std::variant<BfdResult, BfdEarlyExit, BfdBudgetExceeded>;

/**
 * Lazy Dijkstra with Bellman-Ford rounds over the edges that are negative
 * under `phi`, started from an implicit source joined to every vertex by a
 * zero-weight edge. Heap keys are d - phi, so the Dijkstra phase only sees
 * the non-negative reduced edges. `aux` holds one weight per edge (may be empty, meaning zero).
 * `max_iterations` <= 0 selects n + 1.
 */
BfdOutcome bellman_ford_dijkstra(const Graph &g, const PriceFunction &phi, std::span<const Wide> aux = {},
                                 const BfdHook &hook = {}, int max_iterations = 0);

}  // namespace negpath

#endif  // NEGPATH_BFD_HPP_
