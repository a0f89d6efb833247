#include "negpath/sssp.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "negpath/rng.hpp"
#include "negpath/search.hpp"

namespace negpath {

bool verify_potential(const Graph &g, const PriceFunction &phi, Wide bound) {
    if (phi.size() != static_cast<std::size_t>(g.n()))
        return false;
    for (const Edge &e : g.edges())
        if (reduced_weight(e, phi) < -bound)
            return false;
    return true;
}

namespace {

constexpr Wide kMaxAbsWeight = Wide{1} << 40;

Wide pow2_at_least(Wide x) {
    Wide p = 1;
    while (p < x)
        p <<= 1;
    return p;
}

class Driver {
public:
    Driver(const Graph &g, const SsspOptions &options) : g_(g), options_(options) {}

    SsspResult run(VertexId source) {
        const VertexId n = g_.n();
        const Wide N = pow2_at_least(std::max<Wide>(2 * static_cast<Wide>(n), 2));
        std::vector<Edge> scaled(g_.edges().begin(), g_.edges().end());
        for (Edge &e : scaled)
            e.w *= N;
        const Graph gn(n, std::move(scaled));
        const Wide most_negative = g_.m() > 0 ? std::max<Wide>(0, -g_.min_weight()) : 0;
        Wide W = most_negative > 0 ? pow2_at_least(N * most_negative) : 0;
        stats_.initial_w = W;

        PriceFunction phi(static_cast<std::size_t>(n), 0);
        while (W >= 2 && !verify_potential(gn, phi, 1)) {
            const Graph current = reduced_graph(gn, phi);
            ScaleOutcome outcome = call_scale(current, W);
            ++stats_.halving_steps;
            if (outcome.is_cycle()) {
                SsspResult result;
                result.value = make_cycle(g_, outcome.cycle().edges);
                result.stats = stats_;
                return result;
            }
            const PriceFunction &step = outcome.potential();
            for (VertexId v = 0; v < n; ++v)
                phi[v] += step[v];
            W /= 2;
        }
        if (!verify_potential(gn, phi, 1))
            throw std::logic_error("scaling loop ended above the final bound");

        std::vector<Edge> shifted(gn.edges().begin(), gn.edges().end());
        for (Edge &e : shifted)
            e.w = reduced_weight(e, phi) + 1;
        const Graph gbar(n, std::move(shifted));
        const ShortestPathTree tree = dijkstra(gbar, source);
        stats_.work += tree.work;

        Distances out;
        out.dist.assign(static_cast<std::size_t>(n), std::nullopt);
        out.parent = tree.parent;
        out.dist[source] = 0;
        std::vector<VertexId> chain;
        for (VertexId v = 0; v < n; ++v) {
            if (tree.dist[v] >= kInfinity) {
                out.parent[v] = kNoEdge;
                continue;
            }
            VertexId x = v;
            while (!out.dist[x]) {
                chain.push_back(x);
                x = g_.edge(tree.parent[x]).src;
            }
            while (!chain.empty()) {
                const VertexId y = chain.back();
                chain.pop_back();
                const Edge &e = g_.edge(tree.parent[y]);
                out.dist[y] = *out.dist[e.src] + e.w;
            }
        }
        SsspResult result;
        result.value = std::move(out);
        result.stats = stats_;
        return result;
    }

private:
    struct Attempt {
        std::optional<ScaleOutcome> outcome;
        std::uint64_t work = 0;
        bool failed = false;
    };

    Attempt attempt(const Graph &g, Wide W, std::uint64_t limit) {
        Rng rng(mix_seed(options_.seed, attempt_index_++));
        WorkMeter meter(limit);
        Attempt a;
        try {
            ScaleOutcome outcome = scale(g, W, options_.scale, rng, &meter);
            if (outcome.is_cycle() || verify_potential(g, outcome.potential(), W / 2))
                a.outcome = std::move(outcome);
            else
                a.failed = true;
        } catch (const ScaleFailure &) {
            a.failed = true;
        } catch (const WorkMeter::Exceeded &) {
        }
        a.work = meter.used();
        stats_.work += a.work;
        return a;
    }

    void record(const ScaleOutcome &outcome) {
        stats_.zero_weight_cuts += outcome.stats.zero_weight_cuts;
        stats_.bfd_iterations += outcome.stats.bfd_iterations;
    }

    ScaleOutcome call_scale(const Graph &g, Wide W) {
        ++stats_.scale_calls;
        if (budget_ == 0) {
            // Calibrate on three unbudgeted runs; the first usable one is kept.
            std::array<std::uint64_t, 3> work{};
            std::optional<ScaleOutcome> kept;
            for (std::uint64_t &w : work) {
                Attempt a = attempt(g, W, UINT64_MAX);
                w = a.work;
                if (a.failed)
                    ++stats_.failures;
                if (!kept && a.outcome)
                    kept = std::move(a.outcome);
            }
            std::sort(work.begin(), work.end());
            budget_ = std::max<std::uint64_t>(1, work[1]) * static_cast<std::uint64_t>(options_.budget_multiplier);
            stats_.work_budget = budget_;
            if (kept) {
                record(*kept);
                return std::move(*kept);
            }
        }
        for (int tries = 0;; ++tries) {
            const bool budgeted = tries < options_.max_restarts;
            if (tries >= 2 * options_.max_restarts)
                throw std::logic_error("scale kept failing after repeated restarts");
            Attempt a = attempt(g, W, budgeted ? budget_ : UINT64_MAX);
            if (a.outcome) {
                record(*a.outcome);
                return std::move(*a.outcome);
            }
            ++stats_.restarts;
            if (a.failed)
                ++stats_.failures;
        }
    }

    const Graph &g_;
    const SsspOptions &options_;
    SsspStats stats_;
    std::uint64_t budget_ = 0;
    std::uint64_t attempt_index_ = 0;
};

std::vector<VertexId> reachable_from(const Graph &g, VertexId source) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<VertexId> order{source};
    seen[source] = 1;
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (EdgeId e : g.out_edges(order[k])) {
            const VertexId x = g.edge(e).dst;
            if (!seen[x]) {
                seen[x] = 1;
                order.push_back(x);
            }
        }
    }
    std::sort(order.begin(), order.end());
    return order;
}

}  // namespace

SsspResult sssp(const Graph &g, VertexId source, const SsspOptions &options) {
    if (source < 0 || source >= g.n())
        throw std::out_of_range("source vertex out of range");
    for (const Edge &e : g.edges())
        if (e.w > kMaxAbsWeight || e.w < -kMaxAbsWeight)
            throw std::invalid_argument("edge weight magnitude above 2^40");
    if (!options.reachable_only) {
        Driver driver(g, options);
        return driver.run(source);
    }

    const std::vector<VertexId> keep = reachable_from(g, source);
    const Graph sub = induced_subgraph(g, keep);
    const auto local_source = static_cast<VertexId>(std::lower_bound(keep.begin(), keep.end(), source) - keep.begin());
    // Strip labels so the driver sees a root graph; map back below.
    const Graph plain(sub.n(), {sub.edges().begin(), sub.edges().end()});
    Driver driver(plain, options);
    SsspResult local = driver.run(local_source);
    SsspResult result;
    result.stats = local.stats;
    if (local.is_cycle()) {
        NegativeCycle c = local.cycle();
        for (EdgeId &e : c.edges)
            e = sub.edge_label(e);
        result.value = make_cycle(g, std::move(c.edges));
        return result;
    }
    Distances out;
    out.dist.assign(static_cast<std::size_t>(g.n()), std::nullopt);
    out.parent.assign(static_cast<std::size_t>(g.n()), kNoEdge);
    const Distances &d = local.distances();
    for (VertexId v = 0; v < sub.n(); ++v) {
        out.dist[keep[v]] = d.dist[v];
        if (d.parent[v] != kNoEdge)
            out.parent[keep[v]] = sub.edge_label(d.parent[v]);
    }
    result.value = std::move(out);
    return result;
}

}  // namespace negpath
