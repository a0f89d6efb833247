#include "negpath/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "negpath/rng.hpp"

namespace negpath::gen {

namespace {

std::int64_t draw(Rng &rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

void require(bool ok, const char *what) {
    if (!ok)
        throw std::invalid_argument(what);
}

}  // namespace

GrFile potential(VertexId n, std::int64_t m, std::int64_t W, std::uint64_t seed) {
    require(n >= 1 && m >= 0 && W >= 0, "potential family needs n >= 1, m >= 0, W >= 0");
    Rng rng(seed);
    std::vector<std::int64_t> pi(static_cast<std::size_t>(n));
    for (auto &p : pi)
        p = draw(rng, 0, W);
    GrFile f;
    f.n = n;
    f.comments.push_back("potential n=" + std::to_string(n) + " m=" + std::to_string(m) + " W=" +
                         std::to_string(W) + " seed=" + std::to_string(seed));
    for (std::int64_t k = 0; k < m; ++k) {
        const auto u = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
        const auto v = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
        const std::int64_t c = draw(rng, 0, W);
        f.arcs.push_back({u, v, c + pi[v] - pi[u]});
    }
    return f;
}

GrFile cycle_planted(VertexId n, std::int64_t m, std::int64_t W, std::uint64_t seed) {
    require(n >= 2 && W >= 1, "cycle-planted family needs n >= 2 and W >= 1");
    GrFile f = potential(n, m, W, seed);
    f.comments.front().replace(0, 9, "cycle-planted");
    Rng rng(mix_seed(seed, 1));
    const auto len = static_cast<VertexId>(draw(rng, 2, std::min<VertexId>(n, 8)));
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<VertexId>(order));
    // Arc weights in [-W, W] summing to at most -1.
    std::vector<std::int64_t> w(static_cast<std::size_t>(len));
    std::int64_t total = 0;
    for (auto &x : w) {
        x = draw(rng, -W, W);
        total += x;
    }
    for (std::size_t k = 0; total >= 0; k = (k + 1) % w.size()) {
        const std::int64_t cut = std::min(w[k] + W, total + 1);
        w[k] -= cut;
        total -= cut;
    }
    for (VertexId k = 0; k < len; ++k)
        f.arcs.push_back({order[k], order[(k + 1) % len], w[k]});
    return f;
}

GrFile erdos_renyi(VertexId n, double p, std::int64_t W, std::uint64_t seed) {
    require(n >= 1 && p >= 0 && p <= 1 && W >= 0, "er family needs n >= 1, 0 <= p <= 1, W >= 0");
    Rng rng(seed);
    const auto num = static_cast<std::uint64_t>(p * 4294967296.0);
    GrFile f;
    f.n = n;
    f.comments.push_back("er n=" + std::to_string(n) + " p=" + std::to_string(p) + " W=" + std::to_string(W) +
                         " seed=" + std::to_string(seed));
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && rng.bernoulli(num, std::uint64_t{1} << 32))
                f.arcs.push_back({u, v, draw(rng, 0, W)});
    return f;
}

GrFile dicycle(VertexId n) {
    require(n >= 1, "dicycle needs n >= 1");
    GrFile f;
    f.n = n;
    f.comments.push_back("dicycle n=" + std::to_string(n));
    for (VertexId v = 0; v < n; ++v)
        f.arcs.push_back({v, static_cast<VertexId>((v + 1) % n), 1});
    return f;
}

GrFile grid(VertexId rows, VertexId cols, std::int64_t W, std::uint64_t seed) {
    require(rows >= 1 && cols >= 1 && W >= 1, "grid needs rows, cols, W >= 1");
    Rng rng(seed);
    GrFile f;
    f.n = rows * cols;
    f.comments.push_back("grid " + std::to_string(rows) + "x" + std::to_string(cols) + " W=" + std::to_string(W) +
                         " seed=" + std::to_string(seed));
    const auto id = [cols](VertexId r, VertexId c) { return r * cols + c; };
    for (VertexId r = 0; r < rows; ++r) {
        for (VertexId c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                f.arcs.push_back({id(r, c), id(r, c + 1), draw(rng, 1, W)});
                f.arcs.push_back({id(r, c + 1), id(r, c), draw(rng, 1, W)});
            }
            if (r + 1 < rows) {
                f.arcs.push_back({id(r, c), id(r + 1, c), draw(rng, 1, W)});
                f.arcs.push_back({id(r + 1, c), id(r, c), draw(rng, 1, W)});
            }
        }
    }
    return f;
}

}  // namespace negpath::gen
