#include "report.hpp"

#include <algorithm>

namespace negpath::report {

json wide(Wide value) {
    if (fits_i64(value))
        return static_cast<std::int64_t>(value);
    return to_string(value);
}

json envelope(const std::string &command, std::uint64_t seed, json params, json results,
              const std::vector<std::string> &flags) {
    json doc;
    doc["command"] = command;
    doc["seed"] = seed;
    doc["params"] = std::move(params);
    doc["results"] = std::move(results);
    doc["invariant_flags"] = flags;
    return doc;
}

std::vector<VertexId> cycle_vertices(const Graph &g, const NegativeCycle &cycle) {
    std::vector<VertexId> out;
    if (cycle.edges.empty())
        return out;
    out.push_back(g.edge(cycle.edges.front()).src + 1);
    for (EdgeId e : cycle.edges)
        out.push_back(g.edge(e).dst + 1);
    return out;
}

json sssp_results(const Graph &g, const SsspResult &result) {
    json r;
    const SsspStats &s = result.stats;
    r["stats"] = {{"scale_calls", s.scale_calls},
                  {"halving_steps", s.halving_steps},
                  {"restarts", s.restarts},
                  {"failures", s.failures},
                  {"work", s.work},
                  {"work_budget", s.work_budget},
                  {"zero_weight_cuts", s.zero_weight_cuts},
                  {"bfd_iterations", s.bfd_iterations},
                  {"initial_w", wide(s.initial_w)}};
    if (result.is_cycle()) {
        const NegativeCycle &c = result.cycle();
        std::vector<EdgeId> arcs;
        for (EdgeId e : c.edges)
            arcs.push_back(e + 1);
        r["negative_cycle"] = {{"vertices", cycle_vertices(g, c)}, {"arcs", arcs}, {"weight", wide(c.total_weight)}};
        return r;
    }
    json dist = json::array();
    for (const auto &d : result.distances().dist)
        dist.push_back(d ? wide(*d) : json(nullptr));
    r["distances"] = std::move(dist);
    return r;
}

json ldd_results(const Graph &g, const CutSet &cut) {
    std::vector<Edge> kept;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!cut.contains(e))
            kept.push_back(g.edge(e));
    const SccResult sccs = scc(Graph(g.n(), std::move(kept)));
    json arcs = json::array();
    for (EdgeId e : cut) {
        const Edge &edge = g.edge(e);
        arcs.push_back({{"arc", e + 1}, {"from", edge.src + 1}, {"to", edge.dst + 1}, {"weight", wide(edge.w)}});
    }
    std::vector<std::size_t> sizes;
    for (const auto &c : sccs.components)
        sizes.push_back(c.size());
    std::sort(sizes.rbegin(), sizes.rend());
    json r;
    r["cut"] = std::move(arcs);
    r["cut_size"] = cut.size();
    r["scc_count"] = sizes.size();
    r["scc_sizes"] = sizes;
    return r;
}

json validation_results(const oracle::ValidationReport &report) {
    json r;
    r["trials"] = report.trials;
    r["delta"] = wide(report.delta);
    r["cut_frequency"] = report.cut_frequency;
    r["max_frequency"] = report.max_frequency;
    r["mean_frequency"] = report.mean_frequency;
    json diam = json::array();
    for (Wide d : report.trial_max_diameter)
        diam.push_back(d >= kInfinity ? json("inf") : wide(d));
    r["trial_max_diameter"] = std::move(diam);
    json first = json::array();
    for (Wide d : report.first_trial_diameters)
        first.push_back(d >= kInfinity ? json("inf") : wide(d));
    r["first_trial_scc_diameters"] = std::move(first);
    r["max_diameter"] = report.max_diameter >= kInfinity ? json("inf") : wide(report.max_diameter);
    r["diameter_violations"] = report.diameter_violations;
    r["zero_weight_cuts"] = report.zero_weight_cuts;
    return r;
}

std::vector<std::string> validation_flags(const oracle::ValidationReport &report) {
    std::vector<std::string> flags;
    if (report.diameter_violation())
        flags.emplace_back("diameter_violation");
    if (report.zero_weight_cut())
        flags.emplace_back("zero_weight_edge_cut");
    return flags;
}

std::vector<std::string> schema_problems(const json &doc) {
    std::vector<std::string> problems;
    if (!doc.is_object())
        return {"document is not an object"};
    const auto need = [&](const char *key, bool ok) {
        if (!doc.contains(key))
            problems.push_back(std::string("missing ") + key);
        else if (!ok)
            problems.push_back(std::string("wrong type for ") + key);
    };
    need("command", doc.contains("command") && doc["command"].is_string());
    need("seed", doc.contains("seed") && doc["seed"].is_number_unsigned());
    need("params", doc.contains("params") && doc["params"].is_object());
    need("results", doc.contains("results") && doc["results"].is_object());
    need("invariant_flags", doc.contains("invariant_flags") && doc["invariant_flags"].is_array());
    if (doc.contains("invariant_flags") && doc["invariant_flags"].is_array())
        for (const auto &f : doc["invariant_flags"])
            if (!f.is_string())
                problems.emplace_back("non-string invariant flag");
    return problems;
}

}  // namespace negpath::report
