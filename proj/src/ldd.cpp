#include "negpath/ldd.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "negpath/fixed_math.hpp"
#include "negpath/search.hpp"

namespace negpath {

namespace {

constexpr std::int64_t kOne = fixed::kOne;

Wide floor_div(Wide a, Wide b) {
    Wide q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Wide ceil_div(Wide a, Wide b) { return -floor_div(-a, b); }

// Uniform integer radius in [ceil(delta*lo), floor(delta*hi)); a window that
// collapses picks min of the two ends, which never exceeds delta*hi.
Wide window_radius(Rng &rng, Wide delta, Wide lo_num, Wide lo_den, Wide hi_num, Wide hi_den) {
    const Wide lo = ceil_div(delta * lo_num, lo_den);
    const Wide hi = floor_div(delta * hi_num, hi_den);
    if (lo < hi)
        return rng.uniform(lo, hi);
    return std::min(lo, hi);
}

struct EpsTerms {
    std::int64_t ln_inv_eps;
    std::int64_t lnln_inv_eps;
};

EpsTerms eps_terms(std::int64_t m, int eps_exp) {
    const auto mm = static_cast<std::uint64_t>(std::max<std::int64_t>(m, 2));
    EpsTerms t{};
    t.ln_inv_eps = eps_exp * fixed::ln(mm);
    t.lnln_inv_eps = t.ln_inv_eps > kOne ? fixed::ln_of_fixed(static_cast<std::uint64_t>(t.ln_inv_eps)) : 0;
    return t;
}

bool fits(std::int64_t edges, std::int64_t m, std::int64_t num, std::int64_t den) {
    // edges <= (num/den) * m
    return static_cast<Wide>(edges) * den <= static_cast<Wide>(m) * num;
}

enum class Mode { decompose, standalone };

class Engine {
public:
    Engine(const Graph &g, const LddParams &params, Rng &rng, WorkMeter *meter, Mode mode, Wide stop_at)
        : g_(g), params_(params), rng_(rng), meter_(meter), mode_(mode), stop_at_(stop_at),
          eps_(eps_terms(g.m(), params.eps_exp)), n_(static_cast<std::size_t>(g.n())), cut_(static_cast<std::size_t>(g.m()), 0),
          scope_(g.n()), comp_(g.n()), alive_(g.n()), snap_(g.n()), marks_(g.n()), deg_(n_, 0), search_a_(g),
          search_b_(g), probe_(g), claims_out_(g.n()), claims_in_(g.n()), index_(n_, -1), low_(n_, 0), on_stack_(n_, 0) {
        for (const Edge &e : g.edges()) {
            if (e.w < 0)
                throw std::invalid_argument("low-diameter decomposition needs non-negative weights");
        }
    }

    DecompTree run(Wide delta) {
        if (delta < 1)
            throw std::invalid_argument("diameter parameter must be positive");
        DecompNode root;
        root.vertices.resize(n_);
        std::iota(root.vertices.begin(), root.vertices.end(), 0);
        root.d = delta;
        root.level = 0;
        root.m = g_.m();
        root.m0 = root.m;
        root.label = NodeLabel::root;
        root.leaf = is_leaf(root);
        tree_.nodes.push_back(std::move(root));
        std::vector<std::int32_t> stack{0};
        while (!stack.empty()) {
            const std::int32_t id = stack.back();
            stack.pop_back();
            ++tree_.stats.instances;
            process(id);
            const auto &children = tree_.nodes[id].children;
            for (auto it = children.rbegin(); it != children.rend(); ++it)
                if (!tree_.nodes[*it].leaf)
                    stack.push_back(*it);
        }
        return std::move(tree_);
    }

    // Preprocessing on the whole graph, for callers that want the labels.
    PreprocessResult preprocess_all(Wide delta) {
        std::vector<VertexId> all(n_);
        std::iota(all.begin(), all.end(), 0);
        std::vector<EdgeId> cuts;
        PreprocessResult result;
        result.components = preprocess(all, delta, cuts, result.rounds);
        std::sort(cuts.begin(), cuts.end());
        result.cut = CutSet(std::move(cuts));
        return result;
    }

    LddStats stats() const { return tree_.stats; }

private:
    void charge(std::uint64_t amount) {
        tree_.stats.work += amount;
        if (meter_ != nullptr)
            meter_->charge(amount);
    }

    void charge_search(const BallSearch &search, std::uint64_t &last) {
        charge(search.work() - last);
        last = search.work();
    }

    std::int64_t count_edges(std::span<const VertexId> vertices, Membership &m) {
        m.assign(vertices);
        std::int64_t count = 0;
        for (VertexId v : vertices) {
            for (EdgeId e : g_.out_edges(v))
                if (m.contains(g_.edge(e).dst))
                    ++count;
            charge(g_.out_edges(v).size());
        }
        return count;
    }

    bool is_leaf(const DecompNode &node) const {
        if (node.vertices.size() <= 1 || node.m == 0)
            return true;
        if (mode_ == Mode::decompose)
            return node.d <= stop_at_;
        return node.label == NodeLabel::certified;
    }

    std::int32_t add_child(std::int32_t parent, std::vector<VertexId> vertices, Wide d, int level, std::int64_t m0,
                           std::int64_t m, NodeLabel label) {
        DecompNode child;
        child.vertices = std::move(vertices);
        child.d = d;
        child.level = level;
        child.m0 = m0;
        child.m = m;
        child.parent = parent;
        child.label = label;
        child.leaf = is_leaf(child);
        const auto id = static_cast<std::int32_t>(tree_.nodes.size());
        tree_.nodes.push_back(std::move(child));
        tree_.nodes[parent].children.push_back(id);
        return id;
    }

    void cut_edge(EdgeId e, std::vector<EdgeId> &cuts) {
        cut_[e] = 1;
        cuts.push_back(e);
        if (g_.edge(e).w == 0)
            ++tree_.stats.zero_weight_cuts;
    }

    void process(std::int32_t id) {
        if (tree_.nodes[id].leaf)
            return;
        if (tree_.nodes[id].level == 0)
            preprocess_instance(id);
        else
            level_step(id);
    }

    Wide working_delta(Wide d) const { return mode_ == Mode::decompose ? d / 2 : d; }

    void preprocess_instance(std::int32_t id) {
        const Wide d = tree_.nodes[id].d;
        const Wide delta = working_delta(d);
        const std::int64_t m0 = tree_.nodes[id].m0;
        std::vector<EdgeId> cuts;
        std::int64_t rounds = 0;
        auto components = preprocess(tree_.nodes[id].vertices, delta, cuts, rounds);
        tree_.nodes[id].cut_edges = std::move(cuts);

        std::vector<VertexId> light;
        for (LabeledComponent &c : components) {
            switch (c.label) {
            case NodeLabel::certified:
                add_child(id, std::move(c.vertices), mode_ == Mode::decompose ? delta : d, 0, c.m, c.m,
                          NodeLabel::certified);
                break;
            case NodeLabel::light:
                light.insert(light.end(), c.vertices.begin(), c.vertices.end());
                break;
            default:
                add_child(id, std::move(c.vertices), d, 0, c.m, c.m, NodeLabel::small);
                break;
            }
        }
        if (!light.empty()) {
            std::sort(light.begin(), light.end());
            const std::int64_t m = count_edges(light, marks_);
            add_child(id, std::move(light), d, 1, m0, m, NodeLabel::light);
        }
    }

    // ---- preprocessing --------------------------------------------------

    VertexId sample_by_degree(std::span<const EdgeId> edges) {
        const std::uint64_t k = rng_.below(2 * static_cast<std::uint64_t>(edges.size()));
        const Edge &e = g_.edge(edges[k / 2]);
        return k % 2 == 0 ? e.src : e.dst;
    }

    int choose_case() {
        const std::int64_t lnln = eps_.lnln_inv_eps;
        // Cases 2 and 3 each with probability 1 / (2 ln ln(1/eps)), at most 1/2.
        if (lnln <= kOne) {
            return static_cast<int>(rng_.below(2)) + 2;
        }
        const std::uint64_t u = rng_.below(static_cast<std::uint64_t>(2 * lnln));
        if (u < static_cast<std::uint64_t>(kOne))
            return 2;
        if (u < static_cast<std::uint64_t>(2 * kOne))
            return 3;
        return 1;
    }

    // Cuts the boundary of the settled set of `search` inside `scope`,
    // restricted to endpoints that satisfy `keep`. Out-balls lose their
    // leaving edges, in-balls their entering edges.
    template <typename Inside, typename Outside>
    void cut_boundary(std::span<const VertexId> inside, Direction dir, Inside in_ball, Outside outside,
                      std::vector<EdgeId> &cuts) {
        for (VertexId x : inside) {
            const auto edges = g_.edges_from(x, dir);
            charge(edges.size());
            for (EdgeId e : edges) {
                if (cut_[e])
                    continue;
                const Edge &edge = g_.edge(e);
                const VertexId y = dir == Direction::out ? edge.dst : edge.src;
                if (!in_ball(y) && outside(y))
                    cut_edge(e, cuts);
            }
        }
    }

    // Sample with probability c * ln(1/eps) * deg / (2m); mult is c (times 2^(2^i) in the level loop).
    bool sample_vertex(std::int64_t deg, Wide mult, std::int64_t m) {
        const auto num = static_cast<unsigned __int128>(mult) * static_cast<unsigned __int128>(eps_.ln_inv_eps) *
                         static_cast<unsigned __int128>(deg);
        const auto den = static_cast<unsigned __int128>(2 * m) * static_cast<unsigned __int128>(kOne);
        return rng_.bernoulli(num, den);
    }

    // CKR-style carving used by the two inner loops of Cases 2 and 3. Returns
    // false if a cut ball fails the give-up test (only when check_dir is set).
    bool carve(std::span<const VertexId> snapshot, Direction dir, Wide radius, std::int64_t m_c,
               std::vector<EdgeId> &cuts, const Direction *check_dir) {
        snap_.assign(snapshot);
        std::vector<VertexId> sampled;
        for (VertexId v : snapshot)
            if (sample_vertex(deg_[v], params_.c_pre, m_c))
                sampled.push_back(v);
        rng_.shuffle(std::span<VertexId>(sampled));
        ClaimTable &claims = dir == Direction::out ? claims_out_ : claims_in_;
        claims.reset();
        const std::int64_t limit = 3 * m_c / 4;
        std::uint64_t last = search_a_.work();
        for (std::size_t rank = 0; rank < sampled.size(); ++rank) {
            const VertexId v = sampled[rank];
            BallSearch::Options opt;
            opt.radius = radius;
            opt.dir = dir;
            opt.scope = &snap_;
            opt.claims = &claims;
            opt.source_rank = static_cast<std::int32_t>(rank);
            const VertexId src[] = {v};
            search_a_.run(src, opt);
            charge_search(search_a_, last);
            ++tree_.stats.balls;
            std::vector<VertexId> piece;
            for (VertexId x : search_a_.settled())
                if (alive_.contains(x))
                    piece.push_back(x);
            if (piece.empty())
                continue;
            if (check_dir != nullptr) {
                std::uint64_t before = probe_.work();
                BallSearch::Options popt;
                popt.radius = radius;
                popt.dir = *check_dir;
                popt.scope = &snap_;
                popt.edge_limit = limit;
                const bool within = probe_.run(src, popt);
                charge(probe_.work() - before);
                if (!within)
                    return false;
            }
            cut_boundary(piece, dir, [&](VertexId y) { return search_a_.in_ball(y); },
                         [&](VertexId y) { return alive_.contains(y); }, cuts);
            for (VertexId x : piece)
                alive_.remove(x);
        }
        return true;
    }

    std::vector<LabeledComponent> preprocess(std::span<const VertexId> vertices, Wide delta, std::vector<EdgeId> &cuts,
                                             std::int64_t &rounds) {
        std::vector<LabeledComponent> out;
        std::vector<VertexId> residual(vertices.begin(), vertices.end());
        const std::int64_t m_orig = count_edges(residual, marks_);
        for (;;) {
            ++rounds;
            ++tree_.stats.preprocess_rounds;
            comp_.assign(residual);
            std::vector<EdgeId> comp_edges;
            for (VertexId v : residual) {
                deg_[v] = 0;
                charge(g_.out_edges(v).size());
                for (EdgeId e : g_.out_edges(v))
                    if (!cut_[e] && comp_.contains(g_.edge(e).dst))
                        comp_edges.push_back(e);
            }
            for (EdgeId e : comp_edges) {
                ++deg_[g_.edge(e).src];
                ++deg_[g_.edge(e).dst];
            }
            const auto m_c = static_cast<std::int64_t>(comp_edges.size());
            if (m_c == 0) {
                for (VertexId v : residual)
                    out.push_back({{v}, NodeLabel::small, 0});
                break;
            }

            const int which = choose_case();
            ++tree_.stats.case_counts[which - 1];
            bool certify = false;
            bool light = false;
            std::uint64_t last_a = search_a_.work();
            std::uint64_t last_b = search_b_.work();
            if (which == 1) {
                const VertexId t = sample_by_degree(comp_edges);
                const Wide r = window_radius(rng_, delta, 1, 4, 1, 2);
                const VertexId src[] = {t};
                BallSearch::Options opt;
                opt.radius = r;
                opt.scope = &comp_;
                opt.dir = Direction::out;
                search_a_.run(src, opt);
                opt.dir = Direction::in;
                search_b_.run(src, opt);
                charge_search(search_a_, last_a);
                charge_search(search_b_, last_b);
                tree_.stats.balls += 2;
                const auto in_comp = [&](VertexId y) { return comp_.contains(y); };
                cut_boundary(search_a_.settled(), Direction::out, [&](VertexId y) { return search_a_.in_ball(y); },
                             in_comp, cuts);
                cut_boundary(search_b_.settled(), Direction::in, [&](VertexId y) { return search_b_.in_ball(y); },
                             in_comp, cuts);
                certify = true;
            } else {
                const Direction dir = which == 2 ? Direction::out : Direction::in;
                light = case_two(residual, comp_edges, m_c, delta, dir, cuts);
            }

            // Label the SCCs of the component minus the cuts.
            auto sccs = scoped_scc(residual);
            std::vector<VertexId> next;
            for (auto &c : sccs) {
                const std::int64_t mc = count_edges(c, marks_);
                NodeLabel label = NodeLabel::small;
                if (certify && search_a_.in_ball(c.front()) && search_b_.in_ball(c.front()))
                    label = NodeLabel::certified;
                else if (light && alive_.contains(c.front()))
                    label = NodeLabel::light;
                else if (!fits(mc, m_orig, 3, 4)) {
                    next = std::move(c);
                    continue;
                }
                out.push_back({std::move(c), label, mc});
            }
            if (next.empty())
                break;
            residual = std::move(next);
        }
        return out;
    }

    // Cases 2 (dir = out) and 3 (dir = in). Returns true if the remaining
    // vertices (alive_) are to be labeled light.
    bool case_two(std::span<const VertexId> residual, std::span<const EdgeId> comp_edges, std::int64_t m_c, Wide delta,
                  Direction dir, std::vector<EdgeId> &cuts) {
        // k = ceil(8 ln(2 C ln(1/eps))) samples; V^dir membership threshold
        // floor(m / (8 ln(2 C ln(1/eps)))).
        const std::int64_t inner = 2 * params_.c_pre * eps_.ln_inv_eps;
        const std::int64_t ln_inner = std::max<std::int64_t>(fixed::ln_of_fixed(static_cast<std::uint64_t>(inner)), 1);
        const std::int64_t k = (8 * ln_inner + kOne - 1) / kOne;
        const auto threshold = static_cast<std::int64_t>(static_cast<Wide>(m_c) * kOne / (8 * static_cast<Wide>(ln_inner)));
        const Wide probe_radius = delta / 4;

        std::vector<VertexId> contracted;
        for (std::int64_t j = 0; j < k; ++j) {
            const VertexId v = sample_by_degree(comp_edges);
            std::uint64_t before = probe_.work();
            BallSearch::Options popt;
            popt.radius = probe_radius;
            popt.dir = dir;
            popt.scope = &comp_;
            popt.edge_limit = threshold;
            const VertexId src[] = {v};
            const bool light = probe_.run(src, popt);
            charge(probe_.work() - before);
            if (light)
                contracted.push_back(v);
        }
        std::sort(contracted.begin(), contracted.end());
        contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());

        alive_.assign(residual);
        const Wide r = window_radius(rng_, delta, 1, 4, 1, 2);
        if (!contracted.empty()) {
            BallSearch::Options opt;
            opt.radius = r;
            opt.dir = dir;
            opt.scope = &comp_;
            std::uint64_t last = search_b_.work();
            search_b_.run(contracted, opt);
            charge_search(search_b_, last);
            ++tree_.stats.balls;
            cut_boundary(search_b_.settled(), dir, [&](VertexId y) { return search_b_.in_ball(y); },
                         [&](VertexId y) { return comp_.contains(y); }, cuts);
            for (VertexId x : search_b_.settled())
                alive_.remove(x);
        }

        std::vector<VertexId> u1;
        for (VertexId v : residual)
            if (alive_.contains(v))
                u1.push_back(v);
        const std::size_t mark = cuts.size();
        const Wide r1 = window_radius(rng_, delta, 1, 6, 1, 4);
        const Direction check = dir;
        if (!carve(u1, reverse(dir), r1, m_c, cuts, &check)) {
            ++tree_.stats.give_ups;
            for (std::size_t j = mark; j < cuts.size(); ++j) {
                cut_[cuts[j]] = 0;
                if (g_.edge(cuts[j]).w == 0)
                    --tree_.stats.zero_weight_cuts;
            }
            cuts.resize(mark);
            return false;
        }
        std::vector<VertexId> u2;
        for (VertexId v : u1)
            if (alive_.contains(v))
                u2.push_back(v);
        const Wide r2 = window_radius(rng_, delta, 1, 8, 1, 6);
        carve(u2, dir, r2, m_c, cuts, nullptr);
        return true;
    }

    // Tarjan over the subgraph induced by `vertices` without cut edges.
    std::vector<std::vector<VertexId>> scoped_scc(std::span<const VertexId> vertices) {
        scope_.assign(vertices);
        std::vector<std::vector<VertexId>> comps;
        std::vector<VertexId> stack;
        std::vector<std::pair<VertexId, std::size_t>> call;
        std::int32_t next = 0;
        for (VertexId v : vertices)
            index_[v] = -1;
        for (VertexId root : vertices) {
            if (index_[root] != -1)
                continue;
            call.emplace_back(root, 0);
            index_[root] = low_[root] = next++;
            stack.push_back(root);
            on_stack_[root] = 1;
            while (!call.empty()) {
                const VertexId v = call.back().first;
                const auto out = g_.out_edges(v);
                std::size_t &pos = call.back().second;
                if (pos < out.size()) {
                    const EdgeId e = out[pos++];
                    charge(1);
                    const VertexId x = g_.edge(e).dst;
                    if (cut_[e] || !scope_.contains(x))
                        continue;
                    if (index_[x] == -1) {
                        index_[x] = low_[x] = next++;
                        stack.push_back(x);
                        on_stack_[x] = 1;
                        call.emplace_back(x, 0);
                    } else if (on_stack_[x]) {
                        low_[v] = std::min(low_[v], index_[x]);
                    }
                    continue;
                }
                call.pop_back();
                if (!call.empty()) {
                    const VertexId p = call.back().first;
                    low_[p] = std::min(low_[p], low_[v]);
                }
                if (low_[v] == index_[v]) {
                    std::vector<VertexId> comp;
                    VertexId x;
                    do {
                        x = stack.back();
                        stack.pop_back();
                        on_stack_[x] = 0;
                        comp.push_back(x);
                    } while (x != v);
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
            }
        }
        return comps;
    }

    // ---- level loop -----------------------------------------------------

    void level_step(std::int32_t id) {
        const std::vector<VertexId> snapshot = tree_.nodes[id].vertices;
        const Wide d = tree_.nodes[id].d;
        const std::int64_t m0 = tree_.nodes[id].m0;
        const SampleSchedule sched = SampleSchedule::make(m0, working_delta(d));
        const int i = std::min(tree_.nodes[id].level, sched.levels);

        snap_.assign(snapshot);
        alive_.assign(snapshot);
        for (VertexId v : snapshot) {
            std::int64_t deg = 0;
            for (EdgeId e : g_.out_edges(v))
                deg += snap_.contains(g_.edge(e).dst);
            for (EdgeId e : g_.in_edges(v))
                deg += snap_.contains(g_.edge(e).src);
            charge(static_cast<std::uint64_t>(g_.degree(v)));
            deg_[v] = deg;
        }

        if (params_.audit_shrinkage && i > 1)
            audit(snapshot, sched.anchor_floor(i - 1), m0, i);

        std::vector<VertexId> sampled;
        const Wide mult = static_cast<Wide>(params_.c_samp) << (1U << i);
        for (VertexId v : snapshot) {
            if (i == sched.levels || sample_vertex(deg_[v], mult, m0))
                sampled.push_back(v);
        }
        rng_.shuffle(std::span<VertexId>(sampled));
        const auto [lo, hi] = sched.radius_window(i);
        const Wide r = rng_.uniform(lo, hi);

        claims_out_.reset();
        claims_in_.reset();
        std::vector<EdgeId> cuts;
        std::vector<std::vector<VertexId>> pieces;
        std::uint64_t last = search_a_.work();
        for (std::size_t rank = 0; rank < sampled.size(); ++rank) {
            const VertexId src[] = {sampled[rank]};
            for (Direction dir : {Direction::out, Direction::in}) {
                BallSearch::Options opt;
                opt.radius = r;
                opt.dir = dir;
                opt.scope = &snap_;
                opt.claims = dir == Direction::out ? &claims_out_ : &claims_in_;
                opt.source_rank = static_cast<std::int32_t>(rank);
                search_a_.run(src, opt);
                charge_search(search_a_, last);
                ++tree_.stats.balls;
                std::vector<VertexId> piece;
                for (VertexId x : search_a_.settled())
                    if (alive_.contains(x))
                        piece.push_back(x);
                if (piece.empty())
                    continue;
                cut_boundary(piece, dir, [&](VertexId y) { return search_a_.in_ball(y); },
                             [&](VertexId y) { return alive_.contains(y); }, cuts);
                for (VertexId x : piece)
                    alive_.remove(x);
                pieces.push_back(std::move(piece));
            }
        }
        tree_.nodes[id].cut_edges = std::move(cuts);

        // 1.5 m0 / 2^(2^(i-1)) = 3 m0 / 2^(2^(i-1) + 1)
        const int shift = static_cast<int>(1U << (i - 1)) + 1;
        for (auto &piece : pieces) {
            std::sort(piece.begin(), piece.end());
            const std::int64_t m = count_edges(piece, marks_);
            if ((static_cast<Wide>(m) << shift) > 3 * static_cast<Wide>(m0))
                ++tree_.stats.oversized_pieces;
            add_child(id, std::move(piece), d, 0, m, m, NodeLabel::piece);
        }
        std::vector<VertexId> rest;
        for (VertexId v : snapshot)
            if (alive_.contains(v))
                rest.push_back(v);
        if (!rest.empty()) {
            if (i >= sched.levels)
                throw std::logic_error("vertices left after the last level");
            const std::int64_t m = count_edges(rest, marks_);
            add_child(id, std::move(rest), d, i + 1, m0, m, NodeLabel::remainder);
        }
    }

    void audit(std::span<const VertexId> snapshot, Wide radius, std::int64_t m0, int i) {
        // vol > 2 m0 / 2^(2^(i-1))
        const int shift = static_cast<int>(1U << (i - 1));
        for (VertexId u : snapshot) {
            for (Direction dir : {Direction::out, Direction::in}) {
                BallSearch::Options opt;
                opt.radius = radius;
                opt.dir = dir;
                opt.scope = &snap_;
                const VertexId src[] = {u};
                probe_.run(src, opt);
                std::int64_t vol = 0;
                for (VertexId x : probe_.settled())
                    vol += deg_[x];
                ++tree_.stats.shrinkage_checks;
                if ((static_cast<Wide>(vol) << shift) > 2 * static_cast<Wide>(m0)) {
                    ++tree_.stats.shrinkage_flags;
                    break;
                }
            }
        }
    }

    const Graph &g_;
    const LddParams &params_;
    Rng &rng_;
    WorkMeter *meter_;
    Mode mode_;
    Wide stop_at_;
    EpsTerms eps_;
    std::size_t n_;
    std::vector<char> cut_;
    Membership scope_, comp_, alive_, snap_, marks_;
    std::vector<std::int64_t> deg_;
    BallSearch search_a_, search_b_, probe_;
    ClaimTable claims_out_, claims_in_;
    std::vector<std::int32_t> index_, low_;
    std::vector<char> on_stack_;
    DecompTree tree_;
};

}  // namespace

int level_count(std::int64_t m0) {
    return std::max(1, fixed::ceil_lg_lg(static_cast<std::uint64_t>(std::max<std::int64_t>(m0, 1))));
}

SampleSchedule SampleSchedule::make(std::int64_t m0, Wide delta) {
    SampleSchedule s;
    s.levels = level_count(m0);
    Wide lcm = 1;
    for (int j = 1; j <= s.levels; ++j) {
        const Wide step = std::min<Wide>(s.levels, Wide{1} << j);
        lcm = lcm / std::gcd(static_cast<long long>(lcm), static_cast<long long>(step)) * step;
    }
    s.denominator = 16 * lcm;
    s.anchor_num.push_back(delta * (s.denominator / 8));
    for (int j = 1; j <= s.levels; ++j) {
        const Wide step = std::min<Wide>(s.levels, Wide{1} << j);
        s.anchor_num.push_back(s.anchor_num.back() - delta * (s.denominator / (16 * step)));
    }
    return s;
}

Wide SampleSchedule::anchor_ceil(int i) const { return ceil_div(anchor_num[i], denominator); }
Wide SampleSchedule::anchor_floor(int i) const { return floor_div(anchor_num[i], denominator); }

std::pair<Wide, Wide> SampleSchedule::radius_window(int i) const {
    const Wide lo = anchor_ceil(i);
    return {lo, std::max(lo + 1, anchor_floor(i - 1))};
}

const char *to_string(NodeLabel label) {
    switch (label) {
    case NodeLabel::root:
        return "root";
    case NodeLabel::small:
        return "small";
    case NodeLabel::certified:
        return "certified";
    case NodeLabel::light:
        return "light";
    case NodeLabel::piece:
        return "piece";
    case NodeLabel::remainder:
        return "remainder";
    }
    return "unknown";
}

std::vector<std::int32_t> DecompTree::post_order() const {
    std::vector<std::int32_t> order;
    if (nodes.empty())
        return order;
    order.reserve(nodes.size());
    std::vector<std::pair<std::int32_t, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto &[id, pos] = stack.back();
        if (pos < nodes[id].children.size()) {
            const std::int32_t child = nodes[id].children[pos++];
            stack.emplace_back(child, 0);
            continue;
        }
        order.push_back(id);
        stack.pop_back();
    }
    return order;
}

CutSet DecompTree::cuts() const {
    std::vector<EdgeId> all;
    for (const DecompNode &node : nodes)
        all.insert(all.end(), node.cut_edges.begin(), node.cut_edges.end());
    std::sort(all.begin(), all.end());
    return CutSet(std::move(all));
}

DecompTree decompose(const Graph &g, Wide delta, const LddParams &params, Rng &rng, Wide stop_at, WorkMeter *meter) {
    Engine engine(g, params, rng, meter, Mode::decompose, stop_at);
    return engine.run(delta);
}

DecompTree ldd_tree(const Graph &g, Wide delta, const LddParams &params, Rng &rng, WorkMeter *meter) {
    Engine engine(g, params, rng, meter, Mode::standalone, 0);
    return engine.run(delta);
}

CutSet ldd(const Graph &g, Wide delta, const LddParams &params, Rng &rng) {
    return ldd_tree(g, delta, params, rng).cuts();
}

ProbeResult ball_volume_probe(const Graph &g, VertexId v, Direction dir, Wide radius, std::int64_t edge_threshold) {
    BallSearch search(g);
    BallSearch::Options opt;
    opt.radius = radius;
    opt.dir = dir;
    opt.edge_limit = edge_threshold;
    const VertexId src[] = {v};
    ProbeResult out;
    out.exceeds = !search.run(src, opt);
    out.edges = search.induced_edges();
    return out;
}

PreprocessResult preprocess(const Graph &g, Wide delta, const LddParams &params, Rng &rng) {
    Engine engine(g, params, rng, nullptr, Mode::standalone, 0);
    return engine.preprocess_all(delta);
}

}  // namespace negpath
