#include "negpath/oracle.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>

#include "negpath/rng.hpp"

namespace negpath::oracle {

namespace {

// Parent pointers after strict relaxations never form a non-negative cycle,
// so any cycle among them is a negative one.
std::optional<std::vector<EdgeId>> parent_cycle(const Graph &g, const std::vector<EdgeId> &parent) {
    const VertexId n = g.n();
    std::vector<VertexId> mark(static_cast<std::size_t>(n), kNoVertex);
    for (VertexId start = 0; start < n; ++start) {
        VertexId v = start;
        while (v != kNoVertex && mark[v] == kNoVertex) {
            mark[v] = start;
            v = parent[v] == kNoEdge ? kNoVertex : g.edge(parent[v]).src;
        }
        if (v == kNoVertex || mark[v] != start)
            continue;
        std::vector<EdgeId> cycle;
        VertexId x = v;
        do {
            cycle.push_back(parent[x]);
            x = g.edge(parent[x]).src;
        } while (x != v);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
    }
    return std::nullopt;
}

struct Relaxation {
    std::vector<Wide> dist;
    std::vector<EdgeId> parent;
    bool still_changing = false;
};

Relaxation relax_rounds(const Graph &g, std::vector<Wide> dist, int rounds) {
    Relaxation r;
    r.parent.assign(static_cast<std::size_t>(g.n()), kNoEdge);
    for (int round = 0; round < rounds; ++round) {
        bool changed = false;
        for (EdgeId e = 0; e < g.m(); ++e) {
            const Edge &edge = g.edge(e);
            if (dist[edge.src] >= kInfinity)
                continue;
            if (dist[edge.src] + edge.w < dist[edge.dst]) {
                dist[edge.dst] = dist[edge.src] + edge.w;
                r.parent[edge.dst] = e;
                changed = true;
            }
        }
        if (!changed) {
            r.dist = std::move(dist);
            return r;
        }
    }
    r.still_changing = true;
    r.dist = std::move(dist);
    return r;
}

// Binary-heap Dijkstra from u; stops once the frontier passes `bound`.
std::vector<Wide> distances_from(const Graph &g, VertexId u, Wide bound) {
    std::vector<Wide> dist(static_cast<std::size_t>(g.n()), kInfinity);
    std::vector<std::pair<Wide, VertexId>> heap;
    const auto cmp = [](const auto &a, const auto &b) { return a.first > b.first; };
    dist[u] = 0;
    heap.emplace_back(0, u);
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), cmp);
        const auto [d, v] = heap.back();
        heap.pop_back();
        if (d > dist[v])
            continue;
        if (d > bound)
            break;
        for (EdgeId e : g.out_edges(v)) {
            const Edge &edge = g.edge(e);
            if (edge.w < 0)
                throw std::invalid_argument("weak diameter needs non-negative weights");
            if (d + edge.w < dist[edge.dst]) {
                dist[edge.dst] = d + edge.w;
                heap.emplace_back(dist[edge.dst], edge.dst);
                std::push_heap(heap.begin(), heap.end(), cmp);
            }
        }
    }
    return dist;
}

Wide eccentricity_within(const Graph &g, VertexId u, std::span<const VertexId> U, Wide bound) {
    const std::vector<Wide> dist = distances_from(g, u, bound);
    Wide worst = 0;
    for (VertexId v : U)
        worst = std::max(worst, dist[v]);
    return worst;
}

struct TrialResult {
    std::vector<EdgeId> cut;
    Wide max_diameter = 0;
    std::vector<Wide> diameters;
    std::int64_t violations = 0;
    std::int64_t zero_cuts = 0;
};

TrialResult run_trial(const Graph &g, Wide delta, std::uint64_t seed, std::int64_t t, const LddParams &params,
                      bool keep_diameters) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    const CutSet cut = ldd(g, delta, params, rng);
    TrialResult r;
    r.cut.assign(cut.begin(), cut.end());
    for (EdgeId e : cut)
        if (g.edge(e).w == 0)
            ++r.zero_cuts;
    for (const auto &comp : components_without(g, cut)) {
        Wide diam = 0;
        if (comp.size() > 1) {
            const auto bounded = weak_diameter_bounded(g, comp, delta);
            if (bounded) {
                diam = *bounded;
            } else {
                ++r.violations;
                diam = weak_diameter(g, comp);
            }
        }
        r.max_diameter = std::max(r.max_diameter, diam);
        if (keep_diameters)
            r.diameters.push_back(diam);
    }
    return r;
}

ValidationReport merge(const Graph &g, Wide delta, std::uint64_t seed, std::vector<TrialResult> &trials) {
    ValidationReport report;
    report.seed = seed;
    report.delta = delta;
    report.trials = static_cast<std::int64_t>(trials.size());
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.m()), 0);
    for (TrialResult &t : trials) {
        for (EdgeId e : t.cut)
            ++counts[e];
        report.trial_max_diameter.push_back(t.max_diameter);
        report.max_diameter = std::max(report.max_diameter, t.max_diameter);
        report.diameter_violations += t.violations;
        report.zero_weight_cuts += t.zero_cuts;
    }
    if (!trials.empty())
        report.first_trial_diameters = std::move(trials.front().diameters);
    report.cut_frequency.resize(counts.size());
    double sum = 0;
    for (std::size_t e = 0; e < counts.size(); ++e) {
        const double f = report.trials > 0 ? static_cast<double>(counts[e]) / static_cast<double>(report.trials) : 0;
        report.cut_frequency[e] = f;
        report.max_frequency = std::max(report.max_frequency, f);
        sum += f;
    }
    report.mean_frequency = counts.empty() ? 0 : sum / static_cast<double>(counts.size());
    return report;
}

void check_trials(std::int64_t trials) {
    if (trials < 1)
        throw std::invalid_argument("need at least one trial");
}

}  // namespace

BellmanFordResult bellman_ford_reference(const Graph &g, VertexId source) {
    if (source < 0 || source >= g.n())
        throw std::out_of_range("source vertex out of range");
    std::vector<Wide> init(static_cast<std::size_t>(g.n()), kInfinity);
    init[source] = 0;
    Relaxation r = relax_rounds(g, std::move(init), std::max<VertexId>(g.n() - 1, 0));
    BellmanFordResult out;
    // An improvement past n - 1 rounds means a reachable negative cycle; keep
    // going until it shows up among the parent pointers.
    for (VertexId extra = 0; r.still_changing && extra <= g.n(); ++extra) {
        Relaxation next = relax_rounds(g, r.dist, 1);
        for (VertexId v = 0; v < g.n(); ++v)
            if (next.parent[v] != kNoEdge)
                r.parent[v] = next.parent[v];
        r.dist = std::move(next.dist);
        r.still_changing = next.still_changing;
        if (r.still_changing) {
            out.cycle = parent_cycle(g, r.parent);
            if (out.cycle)
                break;
        }
    }
    if (r.still_changing && !out.cycle)
        throw std::logic_error("reference Bellman-Ford lost its cycle");
    out.dist.assign(static_cast<std::size_t>(g.n()), std::nullopt);
    for (VertexId v = 0; v < g.n(); ++v)
        if (r.dist[v] < kInfinity)
            out.dist[v] = r.dist[v];
    return out;
}

std::optional<std::vector<EdgeId>> find_negative_cycle(const Graph &g) {
    std::vector<Wide> dist(static_cast<std::size_t>(g.n()), 0);
    std::vector<EdgeId> parent(static_cast<std::size_t>(g.n()), kNoEdge);
    for (VertexId round = 0; round <= g.n(); ++round) {
        bool changed = false;
        for (EdgeId e = 0; e < g.m(); ++e) {
            const Edge &edge = g.edge(e);
            if (dist[edge.src] + edge.w < dist[edge.dst]) {
                dist[edge.dst] = dist[edge.src] + edge.w;
                parent[edge.dst] = e;
                changed = true;
            }
        }
        if (!changed)
            return std::nullopt;
        if (auto cycle = parent_cycle(g, parent))
            return cycle;
    }
    throw std::logic_error("relaxation did not settle and no cycle was found");
}

DistTable dist_i_bruteforce(const Graph &g, const std::vector<Wide> &phi, int i_max) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<char> negative(static_cast<std::size_t>(g.m()));
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge &edge = g.edge(e);
        negative[e] = edge.w + phi[edge.src] - phi[edge.dst] < 0;
    }
    // Closure over the non-negative edges; their cycles are non-negative, so
    // plain relaxation to a fixpoint terminates.
    const auto close = [&](std::vector<Wide> d) {
        for (bool changed = true; changed;) {
            changed = false;
            for (EdgeId e = 0; e < g.m(); ++e) {
                const Edge &edge = g.edge(e);
                if (negative[e] || d[edge.src] >= kInfinity)
                    continue;
                if (d[edge.src] + edge.w < d[edge.dst]) {
                    d[edge.dst] = d[edge.src] + edge.w;
                    changed = true;
                }
            }
        }
        return d;
    };
    DistTable t;
    t.dist.emplace_back(n, kInfinity);
    t.dist_prime.emplace_back(n, kInfinity);
    for (int i = 1; i <= i_max; ++i) {
        std::vector<Wide> start = t.dist_prime.back();
        if (i == 1)
            start.assign(n, 0);
        t.dist.push_back(close(std::move(start)));
        std::vector<Wide> prime = t.dist.back();
        const std::vector<Wide> &cur = t.dist.back();
        for (EdgeId e = 0; e < g.m(); ++e) {
            const Edge &edge = g.edge(e);
            if (negative[e] && cur[edge.src] < kInfinity)
                prime[edge.dst] = std::min(prime[edge.dst], cur[edge.src] + edge.w);
        }
        t.dist_prime.push_back(std::move(prime));
    }
    return t;
}

Wide weak_diameter(const Graph &g, std::span<const VertexId> U) {
    Wide worst = 0;
    for (VertexId u : U)
        worst = std::max(worst, eccentricity_within(g, u, U, kInfinity));
    return worst;
}

Wide weak_diameter_parallel(const Graph &g, std::span<const VertexId> U) {
    const auto count = static_cast<std::int64_t>(U.size());
    std::vector<Wide> ecc(U.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k)
        ecc[k] = eccentricity_within(g, U[k], U, kInfinity);
    Wide worst = 0;
    for (Wide e : ecc)
        worst = std::max(worst, e);
    return worst;
}

std::optional<Wide> weak_diameter_bounded(const Graph &g, std::span<const VertexId> U, Wide bound) {
    Wide worst = 0;
    for (VertexId u : U) {
        worst = std::max(worst, eccentricity_within(g, u, U, bound));
        if (worst > bound)
            return std::nullopt;
    }
    return worst;
}

std::vector<std::vector<VertexId>> components_without(const Graph &g, const CutSet &removed) {
    const VertexId n = g.n();
    std::vector<char> skip(static_cast<std::size_t>(g.m()), 0);
    for (EdgeId e : removed)
        skip[e] = 1;
    // First pass: finishing order on g.
    std::vector<VertexId> finish;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
        seen[root] = 1;
        while (!stack.empty()) {
            auto &[v, pos] = stack.back();
            const auto out = g.out_edges(v);
            if (pos < out.size()) {
                const EdgeId e = out[pos++];
                const VertexId x = g.edge(e).dst;
                if (!skip[e] && !seen[x]) {
                    seen[x] = 1;
                    stack.emplace_back(x, 0);
                }
                continue;
            }
            finish.push_back(v);
            stack.pop_back();
        }
    }
    // Second pass on the reverse graph in decreasing finishing time.
    std::vector<std::int32_t> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<VertexId>> comps;
    for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
        if (comp[*it] >= 0)
            continue;
        const auto id = static_cast<std::int32_t>(comps.size());
        comps.emplace_back();
        std::vector<VertexId> stack{*it};
        comp[*it] = id;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (EdgeId e : g.in_edges(v)) {
                const VertexId x = g.edge(e).src;
                if (!skip[e] && comp[x] < 0) {
                    comp[x] = id;
                    stack.push_back(x);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

ValidationReport estimate_cut_prob(const Graph &g, Wide delta, std::int64_t trials, std::uint64_t seed,
                                   const LddParams &params) {
    check_trials(trials);
    std::vector<TrialResult> results;
    results.reserve(static_cast<std::size_t>(trials));
    for (std::int64_t t = 0; t < trials; ++t)
        results.push_back(run_trial(g, delta, seed, t, params, t == 0));
    return merge(g, delta, seed, results);
}

ValidationReport estimate_cut_prob_parallel(const Graph &g, Wide delta, std::int64_t trials, std::uint64_t seed,
                                            const LddParams &params) {
    check_trials(trials);
    std::vector<TrialResult> results(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < trials; ++t)
        results[t] = run_trial(g, delta, seed, t, params, t == 0);
    return merge(g, delta, seed, results);
}

}  // namespace negpath::oracle
