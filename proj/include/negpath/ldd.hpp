#ifndef NEGPATH_LDD_HPP_
#define NEGPATH_LDD_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "negpath/graph.hpp"
#include "negpath/rng.hpp"

namespace negpath {

struct LddParams {
    /// eps = m0^(-eps_exp).
    int eps_exp = 5;
    int c_pre = 4;
    int c_samp = 2;
    /// Audits ball volumes at the start of every level i > 1 (costly).
    bool audit_shrinkage = false;
};

/// Deterministic edge-scan budget shared by a run; charge() throws once exceeded.
class WorkMeter {
public:
    struct Exceeded : std::runtime_error {
        Exceeded() : std::runtime_error("work budget exceeded") {}
    };

    explicit WorkMeter(std::uint64_t limit = UINT64_MAX) : limit_(limit) {}
    void charge(std::uint64_t amount) {
        used_ += amount;
        if (used_ > limit_)
            throw Exceeded();
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t used_ = 0;
    std::uint64_t limit_;
};

/// Radii schedule of the level loop for one (m0, delta) pair.
struct SampleSchedule {
    int levels = 1;
    /// Anchors a_0..a_L as exact fractions anchor_num[i] / denominator.
    std::vector<Wide> anchor_num;
    Wide denominator = 1;

    static SampleSchedule make(std::int64_t m0, Wide delta);

    Wide anchor_ceil(int i) const;
    Wide anchor_floor(int i) const;
    /// Integer radius window [lo, hi) for level i >= 1.
    std::pair<Wide, Wide> radius_window(int i) const;
};

/// L = max(1, ceil(lg lg m0)).
int level_count(std::int64_t m0);

enum class NodeLabel { root, small, certified, light, piece, remainder };

const char *to_string(NodeLabel label);

struct DecompNode {
    std::vector<VertexId> vertices;
    Wide d = 0;
    int level = 0;
    std::int64_t m0 = 0;
    std::int64_t m = 0;
    std::vector<EdgeId> cut_edges;
    std::vector<std::int32_t> children;
    std::int32_t parent = -1;
    bool leaf = false;
    NodeLabel label = NodeLabel::root;
};

struct LddStats {
    std::int64_t instances = 0;
    std::int64_t preprocess_rounds = 0;
    std::int64_t case_counts[3] = {0, 0, 0};
    std::int64_t give_ups = 0;
    std::int64_t balls = 0;
    std::int64_t zero_weight_cuts = 0;
    /// Level-loop pieces above 1.5 m0 / 2^(2^(i-1)) edges.
    std::int64_t oversized_pieces = 0;
    /// Vertices failing the volume audit (only with audit_shrinkage).
    std::int64_t shrinkage_flags = 0;
    std::int64_t shrinkage_checks = 0;
    std::uint64_t work = 0;
};

struct DecompTree {
    std::vector<DecompNode> nodes;
    LddStats stats;

    const DecompNode &root() const { return nodes.front(); }
    /// Children before parents.
    std::vector<std::int32_t> post_order() const;
    CutSet cuts() const;
};

/**
 * Recursive Decompose(H, delta, 0, m) on `g`, which must have non-negative
 * weights. Preprocessing and the level loop run with floor(delta / 2);
 * certified components recurse with that halved diameter. A node becomes a
 * leaf when its diameter is at most `stop_at`, it has one vertex, or it has
 * no edges.
 */
DecompTree decompose(const Graph &g, Wide delta, const LddParams &params, Rng &rng, Wide stop_at,
                     WorkMeter *meter = nullptr);

/// Standalone decomposition: every SCC of g - S has weak diameter <= delta.
DecompTree ldd_tree(const Graph &g, Wide delta, const LddParams &params, Rng &rng, WorkMeter *meter = nullptr);
CutSet ldd(const Graph &g, Wide delta, const LddParams &params, Rng &rng);

struct ProbeResult {
    bool exceeds = false;
    std::int64_t edges = 0;
};

/// Truncated Dijkstra that stops once the ball induces more than `edge_threshold` edges.
ProbeResult ball_volume_probe(const Graph &g, VertexId v, Direction dir, Wide radius, std::int64_t edge_threshold);

struct LabeledComponent {
    std::vector<VertexId> vertices;
    NodeLabel label = NodeLabel::small;
    std::int64_t m = 0;
};

struct PreprocessResult {
    CutSet cut;
    std::vector<LabeledComponent> components;
    std::int64_t rounds = 0;
};

/// One preprocessing run on all of `g` with diameter parameter `delta`.
PreprocessResult preprocess(const Graph &g, Wide delta, const LddParams &params, Rng &rng);

}  // namespace negpath

#endif  // NEGPATH_LDD_HPP_
