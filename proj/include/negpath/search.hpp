#ifndef NEGPATH_SEARCH_HPP_
#define NEGPATH_SEARCH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "negpath/graph.hpp"

namespace negpath {

/// Vertex membership over a fixed universe that can be rebuilt in O(|set|).
class Membership {
public:
    explicit Membership(VertexId n) : stamp_(static_cast<std::size_t>(n), 0) {}

    void assign(std::span<const VertexId> vertices) {
        clear();
        for (VertexId v : vertices)
            stamp_[v] = epoch_;
    }
    void clear() { ++epoch_; }
    void add(VertexId v) { stamp_[v] = epoch_; }
    void remove(VertexId v) { stamp_[v] = 0; }
    bool contains(VertexId v) const { return stamp_[v] == epoch_; }

private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 1;
};

/**
 * Reusable truncated Dijkstra over an induced subgraph described by a
 * Membership. Buffers are sized once for the host graph and invalidated by
 * epoch, so each run costs only what it touches.
 */
class BallSearch {
public:
    struct Options {
        Wide radius = 0;
        Direction dir = Direction::out;
        const Membership *scope = nullptr;
        ClaimTable *claims = nullptr;
        std::int32_t source_rank = 0;
        /// When >= 0, the search stops as soon as the ball induces more edges.
        std::int64_t edge_limit = -1;
    };

    explicit BallSearch(const Graph &g);

    /// Returns false iff the search was cut short by `edge_limit`.
    bool run(std::span<const VertexId> sources, const Options &opt);

    std::span<const VertexId> settled() const { return settled_; }
    bool in_ball(VertexId v) const { return settled_stamp_[v] == epoch_; }
    Wide dist(VertexId v) const { return dist_[v]; }
    std::int64_t induced_edges() const { return induced_edges_; }
    std::uint64_t work() const { return work_; }

private:
    const Graph *g_;
    std::vector<Wide> dist_;
    std::vector<std::uint32_t> reached_stamp_;
    std::vector<std::uint32_t> settled_stamp_;
    std::vector<VertexId> settled_;
    std::uint32_t epoch_ = 0;
    std::int64_t induced_edges_ = 0;
    std::uint64_t work_ = 0;
};

struct ShortestPathTree {
    /// kInfinity for unreached vertices.
    std::vector<Wide> dist;
    std::vector<EdgeId> parent;
    std::uint64_t work = 0;
};

/// Plain Dijkstra over non-negative weights; stops early once `target` is settled.
ShortestPathTree dijkstra(const Graph &g, VertexId source, VertexId target = kNoVertex);

/// Edges of the tree path from the source to `target`, in order; empty if unreached.
std::vector<EdgeId> tree_path(const Graph &g, const ShortestPathTree &tree, VertexId target);

}  // namespace negpath

#endif  // NEGPATH_SEARCH_HPP_
