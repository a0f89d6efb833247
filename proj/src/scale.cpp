#include "negpath/scale.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "negpath/bfd.hpp"
#include "negpath/search.hpp"

namespace negpath {

std::optional<Wide> closed_walk_weight(const Graph &g, std::span<const EdgeId> edges) {
    if (edges.empty())
        return std::nullopt;
    Wide total = 0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const EdgeId e = edges[k];
        if (e < 0 || e >= g.m())
            return std::nullopt;
        const EdgeId next = edges[(k + 1) % edges.size()];
        if (next < 0 || next >= g.m() || g.edge(e).dst != g.edge(next).src)
            return std::nullopt;
        total += g.edge(e).w;
    }
    return total;
}

NegativeCycle make_cycle(const Graph &g, std::vector<EdgeId> edges) {
    const auto w = closed_walk_weight(g, edges);
    if (!w)
        throw std::logic_error("cycle witness is not a closed walk");
    if (*w >= 0)
        throw std::logic_error("cycle witness is not negative");
    return {std::move(edges), *w};
}

PriceFunction fix_dag(const Graph &h, const SccResult &sccs, PriceFunction phi) {
    std::vector<Wide> mu(sccs.components.size(), 0);
    for (std::size_t j = 0; j < sccs.components.size(); ++j) {
        for (VertexId v : sccs.components[j]) {
            for (EdgeId e : h.in_edges(v)) {
                const Edge &edge = h.edge(e);
                const auto from = static_cast<std::size_t>(sccs.component_of[edge.src]);
                if (from != j)
                    mu[j] = std::min(mu[j], mu[from] + reduced_weight(edge, phi));
            }
        }
    }
    for (VertexId v = 0; v < h.n(); ++v)
        phi[v] += mu[sccs.component_of[v]];
    return phi;
}

namespace {

std::optional<NegativeCycle> checked(const Graph &g, std::vector<EdgeId> edges) {
    const auto w = closed_walk_weight(g, edges);
    if (!w || *w >= 0)
        return std::nullopt;
    return NegativeCycle{std::move(edges), *w};
}

// First closed segment of a walk, if a vertex repeats.
std::optional<std::vector<EdgeId>> repeated_segment(const Graph &g, std::span<const EdgeId> walk,
                                                    std::vector<std::int32_t> &seen_at) {
    std::optional<std::vector<EdgeId>> out;
    std::vector<VertexId> touched;
    const auto visit = [&](VertexId v, std::size_t pos) {
        if (seen_at[v] >= 0) {
            out.emplace(walk.begin() + seen_at[v], walk.begin() + static_cast<std::ptrdiff_t>(pos));
            return true;
        }
        seen_at[v] = static_cast<std::int32_t>(pos);
        touched.push_back(v);
        return false;
    };
    if (!walk.empty() && !visit(g.edge(walk.front()).src, 0)) {
        for (std::size_t k = 0; k < walk.size(); ++k)
            if (visit(g.edge(walk[k]).dst, k + 1))
                break;
    }
    for (VertexId v : touched)
        seen_at[v] = -1;
    return out;
}

std::optional<NegativeCycle> find_leaf_cycle(const Graph &g, const Graph &gp, const Graph &gnn,
                                             std::span<const VertexId> vertices, Membership &inside,
                                             std::uint64_t &work) {
    inside.assign(vertices);
    for (VertexId u : vertices) {
        for (EdgeId e : gp.out_edges(u)) {
            ++work;
            const Edge &edge = gp.edge(e);
            if (edge.w >= 0 || !inside.contains(edge.dst))
                continue;
            std::vector<EdgeId> cycle;
            if (edge.dst != u) {
                const ShortestPathTree tree = dijkstra(gnn, edge.dst, u);
                work += tree.work;
                cycle = tree_path(gnn, tree, u);
                if (cycle.empty())
                    throw ScaleFailure("leaf vertices are not strongly connected");
            }
            cycle.push_back(e);
            auto out = checked(g, std::move(cycle));
            if (!out)
                throw ScaleFailure("leaf cycle is not negative");
            return out;
        }
    }
    return std::nullopt;
}

class Phase2 {
public:
    Phase2(const Graph &g, Wide W, const ScaleParams &params, WorkMeter *meter)
        : g_(g), meter_(meter), n_(static_cast<std::size_t>(g.n())), gp_(shifted(g, W / 2)),
          gnn_(nonneg_projection(gp_)), phi_(n_, 0), local_(n_, kNoVertex), inside_(g.n()),
          is_cut_(static_cast<std::size_t>(g.m()), 0), seen_at_(n_, -1) {
        const double ln_inv_eps = params.ldd.eps_exp * std::log(std::max(2.0, static_cast<double>(g.m())));
        const double lg = ln_inv_eps / std::log(2.0);
        lglg_ = std::max(1.0, std::log2(std::max(lg, 2.0)));
    }

    const Graph &nonneg() const { return gnn_; }

    ScaleOutcome run(const DecompTree &tree) {
        ScaleOutcome out;
        stats_.zero_weight_cuts = tree.stats.zero_weight_cuts;
        stats_.work = tree.stats.work;
        for (std::int32_t id : tree.post_order()) {
            const DecompNode &node = tree.nodes[id];
            stats_.order.push_back(id);
            ++stats_.nodes;
            std::optional<NegativeCycle> cycle = node.leaf ? leaf(node) : internal(node);
            if (cycle) {
                out.value = std::move(*cycle);
                out.stats = std::move(stats_);
                return out;
            }
        }
        for (const Edge &e : gp_.edges()) {
            if (reduced_weight(e, phi_) < 0)
                throw ScaleFailure("potential leaves a negative shifted edge");
        }
        out.value = std::move(phi_);
        out.stats = std::move(stats_);
        return out;
    }

private:
    static Graph shifted(const Graph &g, Wide half) {
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        for (Edge &e : edges)
            e.w += half;
        return Graph(g.n(), std::move(edges));
    }

    void charge(std::uint64_t amount) {
        stats_.work += amount;
        if (meter_ != nullptr)
            meter_->charge(amount);
    }

    std::optional<NegativeCycle> leaf(const DecompNode &node) {
        ++stats_.leaves;
        std::uint64_t work = 0;
        auto cycle = find_leaf_cycle(g_, gp_, gnn_, node.vertices, inside_, work);
        charge(work);
        if (!cycle) {
            for (VertexId v : node.vertices)
                phi_[v] = 0;
        }
        return cycle;
    }

    std::optional<NegativeCycle> internal(const DecompNode &node) {
        // H = G'[vertices], with labels pointing at root ids.
        const auto &verts = node.vertices;
        for (std::size_t k = 0; k < verts.size(); ++k)
            local_[verts[k]] = static_cast<VertexId>(k);
        std::vector<Edge> edges;
        std::vector<EdgeId> labels;
        std::vector<Edge> kept;
        for (VertexId v : verts) {
            charge(gp_.out_edges(v).size());
            for (EdgeId e : gp_.out_edges(v)) {
                const Edge &edge = gp_.edge(e);
                if (local_[edge.dst] == kNoVertex)
                    continue;
                const Edge le{local_[v], local_[edge.dst], edge.w};
                edges.push_back(le);
                labels.push_back(e);
            }
        }
        for (VertexId v : verts)
            local_[v] = kNoVertex;
        for (EdgeId e : node.cut_edges)
            is_cut_[e] = 1;
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (!is_cut_[labels[k]])
                kept.push_back(edges[k]);
        const auto hn = static_cast<VertexId>(verts.size());
        const Graph h(hn, std::move(edges), {verts.begin(), verts.end()}, std::move(labels));
        const Graph hs(hn, std::move(kept));

        PriceFunction phi0(verts.size());
        for (std::size_t k = 0; k < verts.size(); ++k)
            phi0[k] = phi_[verts[k]];
        phi0 = fix_dag(hs, scc(hs), std::move(phi0));
        charge(static_cast<std::uint64_t>(hs.m() + hs.n()));

        bool negative = false;
        for (const Edge &e : h.edges())
            negative = negative || reduced_weight(e, phi0) < 0;
        std::optional<NegativeCycle> result;
        if (!negative) {
            ++stats_.dag_only;
            for (std::size_t k = 0; k < verts.size(); ++k)
                phi_[verts[k]] = phi0[k];
        } else {
            result = distances(node, h, phi0);
        }
        for (EdgeId e : node.cut_edges)
            is_cut_[e] = 0;
        return result;
    }

    std::optional<NegativeCycle> distances(const DecompNode &node, const Graph &h, const PriceFunction &phi0) {
        std::vector<Wide> aux(static_cast<std::size_t>(h.m()));
        for (EdgeId e = 0; e < h.m(); ++e)
            aux[e] = std::max<Wide>(h.edge(e).w, 0);
        const Wide limit = node.d;
        const BfdHook hook = [limit](const BfdView &view) -> std::optional<VertexId> {
            if (view.phase != BfdPhase::after_bellman_ford)
                return std::nullopt;
            for (auto list : {view.extracted, view.queued})
                for (VertexId v : list)
                    if (view.d_aux[v] > limit)
                        return v;
            return std::nullopt;
        };
        ++stats_.bfd_runs;
        BfdOutcome outcome = bellman_ford_dijkstra(h, phi0, aux, hook);

        if (auto *done = std::get_if<BfdResult>(&outcome)) {
            charge(done->work);
            stats_.bfd_iterations += done->iterations;
            stats_.max_bfd_iterations = std::max<std::int64_t>(stats_.max_bfd_iterations, done->iterations);
            count_cut_edges(node, h, done->parent);
            for (VertexId v = 0; v < h.n(); ++v)
                phi_[h.vertex_label(v)] = done->d[v];
            return std::nullopt;
        }
        if (auto *over = std::get_if<BfdBudgetExceeded>(&outcome)) {
            charge(over->work);
            auto cycle = checked(g_, to_root(h, over->cycle));
            if (!cycle)
                throw std::logic_error("iteration budget cycle is not negative");
            return cycle;
        }
        auto &stop = std::get<BfdEarlyExit>(outcome);
        charge(stop.work);
        ++stats_.early_exits;
        const std::vector<EdgeId> walk = to_root(h, stop.path);
        if (auto segment = repeated_segment(gp_, walk, seen_at_)) {
            auto cycle = checked(g_, std::move(*segment));
            if (!cycle)
                throw std::logic_error("closed segment of a distance walk is not negative");
            return cycle;
        }
        const VertexId start = gp_.edge(walk.front()).src;
        const VertexId end = gp_.edge(walk.back()).dst;
        const ShortestPathTree tree = dijkstra(gnn_, end, start);
        charge(tree.work);
        std::vector<EdgeId> back = tree_path(gnn_, tree, start);
        if (back.empty())
            throw ScaleFailure("no return path for an overlong distance walk");
        std::vector<EdgeId> cycle = walk;
        cycle.insert(cycle.end(), back.begin(), back.end());
        auto out = checked(g_, std::move(cycle));
        if (!out)
            throw ScaleFailure("overlong distance walk does not close into a negative cycle");
        return out;
    }

    static std::vector<EdgeId> to_root(const Graph &h, std::span<const EdgeId> edges) {
        std::vector<EdgeId> out;
        out.reserve(edges.size());
        for (EdgeId e : edges)
            out.push_back(h.edge_label(e));
        return out;
    }

    // Largest number of this node's cut edges on a shortest-path tree path.
    void count_cut_edges(const DecompNode &node, const Graph &h, std::span<const EdgeId> parent) {
        for (EdgeId e : node.cut_edges)
            is_cut_[e] = 1;
        std::vector<std::int32_t> count(static_cast<std::size_t>(h.n()), -1);
        std::vector<VertexId> chain;
        std::int32_t best = 0;
        for (VertexId v = 0; v < h.n(); ++v) {
            VertexId x = v;
            while (count[x] < 0 && parent[x] != kNoEdge) {
                chain.push_back(x);
                x = h.edge(parent[x]).src;
            }
            if (count[x] < 0)
                count[x] = 0;
            while (!chain.empty()) {
                const VertexId y = chain.back();
                chain.pop_back();
                count[y] = count[h.edge(parent[y]).src] + is_cut_[h.edge_label(parent[y])];
            }
            best = std::max(best, count[v]);
        }
        for (EdgeId e : node.cut_edges)
            is_cut_[e] = 0;
        stats_.cut_edges_on_paths += best / (std::ldexp(1.0, node.level) * lglg_);
        ++stats_.cut_edge_samples;
    }

    const Graph &g_;
    WorkMeter *meter_;
    std::size_t n_;
    Graph gp_;
    Graph gnn_;
    PriceFunction phi_;
    std::vector<VertexId> local_;
    Membership inside_;
    std::vector<char> is_cut_;
    std::vector<std::int32_t> seen_at_;
    double lglg_ = 1;
    ScaleStats stats_;
};

}  // namespace

std::optional<NegativeCycle> leaf_check(const Graph &g, const Graph &g_shift, const Graph &g_nonneg,
                                        std::span<const VertexId> vertices) {
    Membership inside(g.n());
    std::uint64_t work = 0;
    return find_leaf_cycle(g, g_shift, g_nonneg, vertices, inside, work);
}

ScaleOutcome scale(const Graph &g, Wide W, const ScaleParams &params, Rng &rng, WorkMeter *meter) {
    if (W <= 0 || W % 2 != 0)
        throw std::invalid_argument("scale needs a positive even W");
    if (g.m() > 0 && g.min_weight() < -W)
        throw std::invalid_argument("edge weight below -W");
    Phase2 phase2(g, W, params, meter);
    const Wide d0 = static_cast<Wide>(g.n()) * (W / 2);
    const DecompTree tree = decompose(phase2.nonneg(), std::max<Wide>(d0, 1), params.ldd, rng, W / 2, meter);
    if (params.on_tree)
        params.on_tree(tree);
    return phase2.run(tree);
}

}  // namespace negpath
