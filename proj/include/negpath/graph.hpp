#ifndef NEGPATH_GRAPH_HPP_
#define NEGPATH_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "negpath/types.hpp"

namespace negpath {

struct Edge {
    VertexId src;
    VertexId dst;
    Wide w;
};

/// Input edge with a 64-bit weight, as read from files or generators.
struct InputEdge {
    VertexId src;
    VertexId dst;
    std::int64_t w;
};

/**
 * Immutable weighted digraph with out- and in-adjacency indexes.
 *
 * Parallel edges and self-loops are kept. Subgraphs produced by
 * induced_subgraph() remember the root vertex and edge ids, so cut sets and
 * cycle witnesses can always be reported against the original input.
 */
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument if an endpoint is out of range or the
    /// label vectors have the wrong length.
    Graph(VertexId n, std::vector<Edge> edges, std::vector<VertexId> vertex_labels = {},
          std::vector<EdgeId> edge_labels = {});

    VertexId n() const { return n_; }
    EdgeId m() const { return static_cast<EdgeId>(edges_.size()); }

    const Edge &edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const EdgeId> out_edges(VertexId v) const {
        return {out_ids_.data() + out_begin_[v], out_ids_.data() + out_begin_[v + 1]};
    }
    std::span<const EdgeId> in_edges(VertexId v) const {
        return {in_ids_.data() + in_begin_[v], in_ids_.data() + in_begin_[v + 1]};
    }
    std::span<const EdgeId> edges_from(VertexId v, Direction dir) const {
        return dir == Direction::out ? out_edges(v) : in_edges(v);
    }

    /// Number of incident edges regardless of direction; a self-loop counts twice.
    std::int64_t degree(VertexId v) const {
        return static_cast<std::int64_t>(out_begin_[v + 1] - out_begin_[v]) + (in_begin_[v + 1] - in_begin_[v]);
    }
    std::int64_t volume(std::span<const VertexId> vertices) const;

    bool has_labels() const { return !vertex_labels_.empty(); }
    /// Vertex id in the graph this one was derived from (identity for root graphs).
    VertexId vertex_label(VertexId v) const { return vertex_labels_.empty() ? v : vertex_labels_[v]; }
    EdgeId edge_label(EdgeId e) const { return edge_labels_.empty() ? e : edge_labels_[e]; }
    std::span<const VertexId> vertex_labels() const { return vertex_labels_; }
    std::span<const EdgeId> edge_labels() const { return edge_labels_; }

    Wide min_weight() const;
    Wide max_weight() const;

private:
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int32_t> out_begin_{0};
    std::vector<std::int32_t> in_begin_{0};
    std::vector<EdgeId> out_ids_;
    std::vector<EdgeId> in_ids_;
    std::vector<VertexId> vertex_labels_;
    std::vector<EdgeId> edge_labels_;
};

/// Subset of 0..n-1 with O(1) membership and insertion-ordered iteration.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(VertexId universe) : in_(static_cast<std::size_t>(universe), 0) {}
    VertexSet(VertexId universe, std::span<const VertexId> members);

    static VertexSet all(VertexId universe);

    /// Returns false if v was already present.
    bool insert(VertexId v);
    bool contains(VertexId v) const { return v >= 0 && static_cast<std::size_t>(v) < in_.size() && in_[v]; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    VertexId universe() const { return static_cast<VertexId>(in_.size()); }

    std::span<const VertexId> members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    std::vector<char> in_;
    std::vector<VertexId> members_;
};

/// Sorted, duplicate-free set of edge ids.
class CutSet {
public:
    CutSet() = default;
    explicit CutSet(std::vector<EdgeId> ids);

    bool contains(EdgeId e) const;
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    std::span<const EdgeId> ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

private:
    std::vector<EdgeId> ids_;
};

/// Vertex potential phi; reduced weights are w(u,v) + phi(u) - phi(v).
using PriceFunction = std::vector<Wide>;

Graph build_graph(VertexId n, std::span<const InputEdge> edges);

/// Same topology with every weight replaced by max(w, 0).
Graph nonneg_projection(const Graph &g);
Graph reduced_graph(const Graph &g, const PriceFunction &phi);
Graph shift_weights(const Graph &g, Wide delta);
Graph reverse_graph(const Graph &g);
Graph scale_weights(const Graph &g, Wide factor);

inline Wide reduced_weight(const Edge &e, const PriceFunction &phi) { return e.w + phi[e.src] - phi[e.dst]; }

/// Graph on the vertices of `subset` (re-indexed in iteration order) holding
/// exactly the edges with both endpoints in the subset. Labels compose, so
/// the result's labels refer to the root of `g`.
Graph induced_subgraph(const Graph &g, std::span<const VertexId> subset);
Graph induced_subgraph(const Graph &g, const VertexSet &subset);

struct SccResult {
    /// Component index per vertex; indexes into `components`.
    std::vector<std::int32_t> component_of;
    /// Components in topological order of the condensation: every edge between
    /// different components goes from a lower to a higher index.
    std::vector<std::vector<VertexId>> components;
};

SccResult scc(const Graph &g);

/**
 * Records, per vertex, the smallest distance at which an earlier source of the
 * current batch already claimed it. A search skips a vertex whose claim is at
 * most its own tentative distance: everything reachable through it is already
 * inside an earlier ball.
 */
class ClaimTable {
public:
    explicit ClaimTable(VertexId n) : best_(static_cast<std::size_t>(n)), owner_(static_cast<std::size_t>(n)), epoch_of_(static_cast<std::size_t>(n), 0) {}

    void reset() { ++epoch_; }
    bool claimed_at_most(VertexId v, Wide dist) const { return epoch_of_[v] == epoch_ && best_[v] <= dist; }
    void record(VertexId v, Wide dist, std::int32_t source_rank);
    std::int32_t owner(VertexId v) const { return epoch_of_[v] == epoch_ ? owner_[v] : -1; }

private:
    std::vector<Wide> best_;
    std::vector<std::int32_t> owner_;
    std::vector<std::uint32_t> epoch_of_;
    std::uint32_t epoch_ = 1;
};

/**
 * Out-ball (direction out) or in-ball (direction in) of `center` within the
 * subgraph induced by `snapshot`. Weights in that subgraph must be
 * non-negative; std::invalid_argument is thrown when a negative edge is met.
 * With a claim table, vertices claimed by earlier sources at no larger
 * distance are skipped and the table is updated with this search's settled
 * vertices.
 */
VertexSet ball(const Graph &g, const VertexSet &snapshot, VertexId center, Wide radius, Direction dir,
               ClaimTable *claims = nullptr, std::int32_t source_rank = 0);

}  // namespace negpath

#endif  // NEGPATH_GRAPH_HPP_
