#include "negpath/search.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace negpath {

BallSearch::BallSearch(const Graph &g)
    : g_(&g), dist_(static_cast<std::size_t>(g.n())), reached_stamp_(static_cast<std::size_t>(g.n()), 0),
      settled_stamp_(static_cast<std::size_t>(g.n()), 0) {}

bool BallSearch::run(std::span<const VertexId> sources, const Options &opt) {
    ++epoch_;
    settled_.clear();
    induced_edges_ = 0;

    using Entry = std::pair<Wide, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    const auto in_scope = [&](VertexId v) { return opt.scope == nullptr || opt.scope->contains(v); };

    for (VertexId s : sources) {
        if (!in_scope(s) || reached_stamp_[s] == epoch_)
            continue;
        if (opt.claims != nullptr && opt.claims->claimed_at_most(s, 0))
            continue;
        reached_stamp_[s] = epoch_;
        dist_[s] = 0;
        heap.emplace(0, s);
    }

    const Graph &g = *g_;
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (settled_stamp_[v] == epoch_ || d != dist_[v])
            continue;

        if (opt.edge_limit >= 0) {
            for (EdgeId e : g.out_edges(v)) {
                const VertexId x = g.edge(e).dst;
                if (x == v || (settled_stamp_[x] == epoch_ && in_scope(x)))
                    ++induced_edges_;
            }
            for (EdgeId e : g.in_edges(v)) {
                const VertexId x = g.edge(e).src;
                if (x != v && settled_stamp_[x] == epoch_ && in_scope(x))
                    ++induced_edges_;
            }
            work_ += g.out_edges(v).size() + g.in_edges(v).size();
        }
        settled_stamp_[v] = epoch_;
        settled_.push_back(v);
        if (opt.claims != nullptr)
            opt.claims->record(v, d, opt.source_rank);
        if (opt.edge_limit >= 0 && induced_edges_ > opt.edge_limit)
            return false;

        for (EdgeId e : g.edges_from(v, opt.dir)) {
            ++work_;
            const Edge &edge = g.edge(e);
            const VertexId x = opt.dir == Direction::out ? edge.dst : edge.src;
            if (!in_scope(x) || settled_stamp_[x] == epoch_)
                continue;
            if (edge.w < 0)
                throw std::invalid_argument("ball search met a negative edge weight");
            const Wide nd = d + edge.w;
            if (nd > opt.radius)
                continue;
            if (reached_stamp_[x] == epoch_ && dist_[x] <= nd)
                continue;
            if (opt.claims != nullptr && opt.claims->claimed_at_most(x, nd))
                continue;
            reached_stamp_[x] = epoch_;
            dist_[x] = nd;
            heap.emplace(nd, x);
        }
    }
    return true;
}

ShortestPathTree dijkstra(const Graph &g, VertexId source, VertexId target) {
    if (source < 0 || source >= g.n())
        throw std::out_of_range("dijkstra source out of range");
    ShortestPathTree t;
    t.dist.assign(static_cast<std::size_t>(g.n()), kInfinity);
    t.parent.assign(static_cast<std::size_t>(g.n()), kNoEdge);
    std::vector<char> done(static_cast<std::size_t>(g.n()), 0);
    using Entry = std::pair<Wide, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    t.dist[source] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (done[v])
            continue;
        done[v] = 1;
        if (v == target)
            break;
        for (EdgeId e : g.out_edges(v)) {
            ++t.work;
            const Edge &edge = g.edge(e);
            if (edge.w < 0)
                throw std::invalid_argument("dijkstra met a negative edge weight");
            const Wide nd = d + edge.w;
            if (nd < t.dist[edge.dst]) {
                t.dist[edge.dst] = nd;
                t.parent[edge.dst] = e;
                heap.emplace(nd, edge.dst);
            }
        }
    }
    return t;
}

std::vector<EdgeId> tree_path(const Graph &g, const ShortestPathTree &tree, VertexId target) {
    std::vector<EdgeId> path;
    if (tree.dist[target] >= kInfinity)
        return path;
    for (EdgeId e = tree.parent[target]; e != kNoEdge; e = tree.parent[g.edge(e).src])
        path.push_back(e);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace negpath
