#include "negpath/bfd.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace negpath {

namespace {

// Every improvement of d[v] appends a record; prev points at the record that
// held d[src] at relaxation time, so any record chain is an exact walk.
struct Record {
    EdgeId edge;
    std::int32_t prev;
    VertexId vertex;
    Wide d;
};

class Runner {
public:
    Runner(const Graph &g, const PriceFunction &phi, std::span<const Wide> aux)
        : g_(g), phi_(phi), aux_(aux), n_(static_cast<std::size_t>(g.n())), negative_(static_cast<std::size_t>(g.m())),
          d_(n_, 0), d_aux_(n_, 0), current_(n_, -1), queued_flag_(n_, 0), extracted_at_(n_, 0) {
        if (phi.size() != n_)
            throw std::invalid_argument("potential size does not match the graph");
        if (!aux.empty() && aux.size() != negative_.size())
            throw std::invalid_argument("auxiliary weight count does not match the graph");
        for (EdgeId e = 0; e < g.m(); ++e)
            negative_[e] = reduced_weight(g.edge(e), phi) < 0;
        for (VertexId v = 0; v < g.n(); ++v) {
            queued_flag_[v] = 1;
            queued_.push_back(v);
        }
    }

    BfdOutcome run(const BfdHook &hook, int max_iterations) {
        if (max_iterations <= 0)
            max_iterations = static_cast<int>(n_) + 1;
        int iteration = 0;
        while (!queued_.empty()) {
            if (iteration == max_iterations)
                return budget_exceeded(iteration);
            ++iteration;
            dijkstra_phase(iteration);
            if (hook) {
                if (auto stop = hook(view(iteration, BfdPhase::after_dijkstra)))
                    return early_exit(*stop, iteration);
            }
            bellman_ford_phase();
            if (hook) {
                if (auto stop = hook(view(iteration, BfdPhase::after_bellman_ford)))
                    return early_exit(*stop, iteration);
            }
        }
        BfdResult result;
        result.d = std::move(d_);
        result.d_aux = std::move(d_aux_);
        result.parent.assign(n_, kNoEdge);
        for (std::size_t v = 0; v < n_; ++v) {
            if (current_[v] >= 0)
                result.parent[v] = records_[current_[v]].edge;
        }
        result.iterations = iteration;
        result.repeat_extractions = repeat_extractions_;
        result.work = work_;
        return result;
    }

private:
    Wide aux_of(EdgeId e) const { return aux_.empty() ? 0 : aux_[e]; }

    void improve(VertexId x, Wide d, Wide d_aux, EdgeId e, std::int32_t prev) {
        d_[x] = d;
        d_aux_[x] = d_aux;
        current_[x] = static_cast<std::int32_t>(records_.size());
        records_.push_back({e, prev, x, d});
    }

    void dijkstra_phase(int iteration) {
        using Entry = std::pair<Wide, VertexId>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        for (VertexId v : queued_)
            heap.emplace(d_[v] - phi_[v], v);
        queued_.clear();
        extracted_.clear();
        while (!heap.empty()) {
            const auto [key, v] = heap.top();
            heap.pop();
            if (!queued_flag_[v] || key != d_[v] - phi_[v])
                continue;
            queued_flag_[v] = 0;
            if (extracted_at_[v] == iteration)
                ++repeat_extractions_;
            extracted_at_[v] = iteration;
            extracted_.push_back(v);
            for (EdgeId e : g_.out_edges(v)) {
                ++work_;
                if (negative_[e])
                    continue;
                const Edge &edge = g_.edge(e);
                const Wide nd = d_[v] + edge.w;
                if (nd < d_[edge.dst]) {
                    improve(edge.dst, nd, d_aux_[v] + aux_of(e), e, current_[v]);
                    queued_flag_[edge.dst] = 1;
                    heap.emplace(nd - phi_[edge.dst], edge.dst);
                }
            }
        }
    }

    void bellman_ford_phase() {
        // Relaxations read the values left by the Dijkstra phase, so each
        // round adds exactly one negative edge to the paths it extends.
        sources_.clear();
        for (VertexId v : extracted_)
            sources_.push_back({d_[v], d_aux_[v], current_[v]});
        for (std::size_t k = 0; k < extracted_.size(); ++k) {
            const VertexId v = extracted_[k];
            const SourceSnapshot &s = sources_[k];
            for (EdgeId e : g_.out_edges(v)) {
                ++work_;
                if (!negative_[e])
                    continue;
                const VertexId x = g_.edge(e).dst;
                const Wide nd = s.d + g_.edge(e).w;
                if (nd < d_[x]) {
                    improve(x, nd, s.d_aux + aux_of(e), e, s.record);
                    if (!queued_flag_[x]) {
                        queued_flag_[x] = 1;
                        queued_.push_back(x);
                    }
                }
            }
        }
    }

    BfdView view(int iteration, BfdPhase phase) const {
        BfdView v;
        v.iteration = iteration;
        v.phase = phase;
        v.d = d_;
        v.d_aux = d_aux_;
        v.extracted = extracted_;
        if (phase == BfdPhase::after_bellman_ford)
            v.queued = queued_;
        return v;
    }

    std::vector<EdgeId> walk(std::int32_t record) const {
        std::vector<EdgeId> path;
        for (std::int32_t r = record; r >= 0; r = records_[r].prev)
            path.push_back(records_[r].edge);
        std::reverse(path.begin(), path.end());
        return path;
    }

    BfdOutcome early_exit(VertexId v, int iteration) const {
        if (v < 0 || static_cast<std::size_t>(v) >= n_)
            throw std::out_of_range("early-exit vertex out of range");
        BfdEarlyExit out;
        out.vertex = v;
        out.iteration = iteration;
        out.path = walk(current_[v]);
        out.d = d_[v];
        out.d_aux = d_aux_[v];
        out.work = work_;
        return out;
    }

    // A vertex still queued after n + 1 rounds has a record walk with more
    // than n edges. Some vertex repeats on it; the records of a vertex only
    // ever decrease, so the walk segment between the repeats is negative.
    BfdOutcome budget_exceeded(int iterations) const {
        BfdBudgetExceeded out;
        out.iterations = iterations;
        out.work = work_;
        std::vector<std::int32_t> seen_at(n_, -1);
        std::vector<std::int32_t> chain;
        for (std::int32_t r = current_[queued_.front()]; r >= 0; r = records_[r].prev) {
            const VertexId x = records_[r].vertex;
            if (seen_at[x] >= 0) {
                // chain[seen_at[x]] is the later record of x; r is the earlier one.
                for (std::size_t k = chain.size(); k-- > static_cast<std::size_t>(seen_at[x]);)
                    out.cycle.push_back(records_[chain[k]].edge);
                return out;
            }
            seen_at[x] = static_cast<std::int32_t>(chain.size());
            chain.push_back(r);
            // The walk also starts at the virtual source's neighbour: the
            // source side of the first edge counts as visited.
            if (records_[r].prev < 0) {
                const VertexId start = g_.edge(records_[r].edge).src;
                if (seen_at[start] >= 0) {
                    for (std::size_t k = chain.size(); k-- > static_cast<std::size_t>(seen_at[start]);)
                        out.cycle.push_back(records_[chain[k]].edge);
                    return out;
                }
            }
        }
        throw std::logic_error("iteration budget exceeded without a repeated vertex");
    }

    const Graph &g_;
    const PriceFunction &phi_;
    std::span<const Wide> aux_;
    std::size_t n_;
    std::vector<char> negative_;
    std::vector<Wide> d_;
    std::vector<Wide> d_aux_;
    std::vector<std::int32_t> current_;
    std::vector<char> queued_flag_;
    std::vector<int> extracted_at_;
    std::vector<VertexId> queued_;
    std::vector<VertexId> extracted_;
    std::vector<Record> records_;
    struct SourceSnapshot {
        Wide d;
        Wide d_aux;
        std::int32_t record;
    };
    std::vector<SourceSnapshot> sources_;
    std::int64_t repeat_extractions_ = 0;
    std::uint64_t work_ = 0;
};

}  // namespace

BfdOutcome bellman_ford_dijkstra(const Graph &g, const PriceFunction &phi, std::span<const Wide> aux,
                                 const BfdHook &hook, int max_iterations) {
    Runner runner(g, phi, aux);
    return runner.run(hook, max_iterations);
}

}  // namespace negpath
