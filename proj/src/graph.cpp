#include "negpath/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "negpath/search.hpp"

namespace negpath {

std::string to_string(Wide value) {
    if (value == 0)
        return "0";
    const bool negative = value < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1 : static_cast<unsigned __int128>(value);
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative)
        digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::optional<Wide> parse_wide(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size())
        return std::nullopt;
    const unsigned __int128 limit = static_cast<unsigned __int128>(kWideMax) + (negative ? 1 : 0);
    unsigned __int128 mag = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9')
            return std::nullopt;
        const unsigned digit = static_cast<unsigned>(c - '0');
        if (mag > (limit - digit) / 10)
            return std::nullopt;
        mag = mag * 10 + digit;
    }
    if (negative)
        return mag == limit ? kWideMin : -static_cast<Wide>(mag);
    return static_cast<Wide>(mag);
}

std::int64_t narrow_i64(Wide value) {
    if (!fits_i64(value))
        throw std::overflow_error("value " + to_string(value) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(value);
}

Graph::Graph(VertexId n, std::vector<Edge> edges, std::vector<VertexId> vertex_labels, std::vector<EdgeId> edge_labels)
    : n_(n), edges_(std::move(edges)), vertex_labels_(std::move(vertex_labels)), edge_labels_(std::move(edge_labels)) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    if (edges_.size() > static_cast<std::size_t>(std::numeric_limits<EdgeId>::max()))
        throw std::invalid_argument("too many edges");
    if (!vertex_labels_.empty() && vertex_labels_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("vertex label count does not match n");
    if (!edge_labels_.empty() && edge_labels_.size() != edges_.size())
        throw std::invalid_argument("edge label count does not match m");

    out_begin_.assign(static_cast<std::size_t>(n) + 1, 0);
    in_begin_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge &e : edges_) {
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.src) + ", " +
                                        std::to_string(e.dst) + ") with n = " + std::to_string(n));
        ++out_begin_[e.src + 1];
        ++in_begin_[e.dst + 1];
    }
    for (VertexId v = 0; v < n; ++v) {
        out_begin_[v + 1] += out_begin_[v];
        in_begin_[v + 1] += in_begin_[v];
    }
    out_ids_.resize(edges_.size());
    in_ids_.resize(edges_.size());
    std::vector<std::int32_t> out_fill(out_begin_.begin(), out_begin_.end() - 1);
    std::vector<std::int32_t> in_fill(in_begin_.begin(), in_begin_.end() - 1);
    for (EdgeId id = 0; id < m(); ++id) {
        const Edge &e = edges_[id];
        out_ids_[out_fill[e.src]++] = id;
        in_ids_[in_fill[e.dst]++] = id;
    }
}

std::int64_t Graph::volume(std::span<const VertexId> vertices) const {
    std::int64_t vol = 0;
    for (VertexId v : vertices)
        vol += degree(v);
    return vol;
}

Wide Graph::min_weight() const {
    Wide best = 0;
    bool first = true;
    for (const Edge &e : edges_) {
        if (first || e.w < best)
            best = e.w;
        first = false;
    }
    return best;
}

Wide Graph::max_weight() const {
    Wide best = 0;
    bool first = true;
    for (const Edge &e : edges_) {
        if (first || e.w > best)
            best = e.w;
        first = false;
    }
    return best;
}

VertexSet::VertexSet(VertexId universe, std::span<const VertexId> members) : VertexSet(universe) {
    for (VertexId v : members)
        insert(v);
}

VertexSet VertexSet::all(VertexId universe) {
    VertexSet s(universe);
    for (VertexId v = 0; v < universe; ++v)
        s.insert(v);
    return s;
}

bool VertexSet::insert(VertexId v) {
    if (v < 0 || static_cast<std::size_t>(v) >= in_.size())
        throw std::out_of_range("vertex outside the set's universe");
    if (in_[v])
        return false;
    in_[v] = 1;
    members_.push_back(v);
    return true;
}

CutSet::CutSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool CutSet::contains(EdgeId e) const { return std::binary_search(ids_.begin(), ids_.end(), e); }

void ClaimTable::record(VertexId v, Wide dist, std::int32_t source_rank) {
    if (epoch_of_[v] != epoch_ || dist < best_[v]) {
        epoch_of_[v] = epoch_;
        best_[v] = dist;
        owner_[v] = source_rank;
    }
}

Graph build_graph(VertexId n, std::span<const InputEdge> edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const InputEdge &e : edges)
        out.push_back({e.src, e.dst, e.w});
    return Graph(n, std::move(out));
}

namespace {

template <typename Fn>
Graph map_weights(const Graph &g, Fn fn) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge &e : edges)
        e.w = fn(e);
    return Graph(g.n(), std::move(edges), {g.vertex_labels().begin(), g.vertex_labels().end()},
                 {g.edge_labels().begin(), g.edge_labels().end()});
}

}  // namespace

Graph nonneg_projection(const Graph &g) {
    return map_weights(g, [](const Edge &e) { return e.w < 0 ? Wide{0} : e.w; });
}

Graph reduced_graph(const Graph &g, const PriceFunction &phi) {
    if (phi.size() != static_cast<std::size_t>(g.n()))
        throw std::invalid_argument("price function size does not match graph");
    return map_weights(g, [&](const Edge &e) { return reduced_weight(e, phi); });
}

Graph shift_weights(const Graph &g, Wide delta) {
    return map_weights(g, [delta](const Edge &e) { return e.w + delta; });
}

Graph scale_weights(const Graph &g, Wide factor) {
    return map_weights(g, [factor](const Edge &e) { return e.w * factor; });
}

Graph reverse_graph(const Graph &g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge &e : edges)
        std::swap(e.src, e.dst);
    return Graph(g.n(), std::move(edges), {g.vertex_labels().begin(), g.vertex_labels().end()},
                 {g.edge_labels().begin(), g.edge_labels().end()});
}

Graph induced_subgraph(const Graph &g, std::span<const VertexId> subset) {
    std::vector<VertexId> local(static_cast<std::size_t>(g.n()), kNoVertex);
    std::vector<VertexId> labels;
    labels.reserve(subset.size());
    for (VertexId v : subset) {
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("subset vertex out of range");
        if (local[v] != kNoVertex)
            continue;
        local[v] = static_cast<VertexId>(labels.size());
        labels.push_back(g.vertex_label(v));
    }
    std::vector<Edge> edges;
    std::vector<EdgeId> edge_labels;
    for (VertexId v : subset) {
        for (EdgeId e : g.out_edges(v)) {
            const Edge &edge = g.edge(e);
            if (local[edge.dst] == kNoVertex)
                continue;
            edges.push_back({local[edge.src], local[edge.dst], edge.w});
            edge_labels.push_back(g.edge_label(e));
        }
    }
    // Keep the root's relative edge order so subgraphs are canonical.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edge_labels[a] < edge_labels[b]; });
    std::vector<Edge> sorted_edges;
    std::vector<EdgeId> sorted_labels;
    sorted_edges.reserve(edges.size());
    sorted_labels.reserve(edges.size());
    for (std::size_t i : order) {
        sorted_edges.push_back(edges[i]);
        sorted_labels.push_back(edge_labels[i]);
    }
    const auto n = static_cast<VertexId>(labels.size());
    return Graph(n, std::move(sorted_edges), std::move(labels), std::move(sorted_labels));
}

Graph induced_subgraph(const Graph &g, const VertexSet &subset) { return induced_subgraph(g, subset.members()); }

SccResult scc(const Graph &g) {
    // Iterative Tarjan. Components pop in reverse topological order.
    const VertexId n = g.n();
    std::vector<std::int32_t> index(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> stack;
    std::vector<std::pair<VertexId, std::size_t>> call;
    std::vector<std::vector<VertexId>> reversed;
    std::int32_t next_index = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto &[v, pos] = call.back();
            const auto out = g.out_edges(v);
            if (pos < out.size()) {
                const VertexId x = g.edge(out[pos++]).dst;
                if (index[x] == -1) {
                    index[x] = low[x] = next_index++;
                    stack.push_back(x);
                    on_stack[x] = 1;
                    call.emplace_back(x, 0);
                } else if (on_stack[x]) {
                    low[v] = std::min(low[v], index[x]);
                }
                continue;
            }
            const VertexId done = v;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<VertexId> comp;
                VertexId x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = 0;
                    comp.push_back(x);
                } while (x != done);
                std::sort(comp.begin(), comp.end());
                reversed.push_back(std::move(comp));
            }
        }
    }

    SccResult result;
    result.components.assign(std::make_move_iterator(reversed.rbegin()), std::make_move_iterator(reversed.rend()));
    result.component_of.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < result.components.size(); ++c)
        for (VertexId v : result.components[c])
            result.component_of[v] = static_cast<std::int32_t>(c);
    return result;
}

VertexSet ball(const Graph &g, const VertexSet &snapshot, VertexId center, Wide radius, Direction dir, ClaimTable *claims,
               std::int32_t source_rank) {
    if (!snapshot.contains(center))
        throw std::invalid_argument("ball center outside the snapshot");
    if (radius < 0)
        throw std::invalid_argument("negative ball radius");
    Membership scope(g.n());
    scope.assign(snapshot.members());
    BallSearch search(g);
    BallSearch::Options opt;
    opt.radius = radius;
    opt.dir = dir;
    opt.scope = &scope;
    opt.claims = claims;
    opt.source_rank = source_rank;
    const VertexId source[] = {center};
    search.run(source, opt);
    return VertexSet(g.n(), search.settled());
}

}  // namespace negpath
