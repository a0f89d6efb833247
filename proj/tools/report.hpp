#ifndef NEGPATH_TOOLS_REPORT_HPP_
#define NEGPATH_TOOLS_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "negpath/graph.hpp"
#include "negpath/oracle.hpp"
#include "negpath/scale.hpp"
#include "negpath/sssp.hpp"

namespace negpath::report {

using json = nlohmann::json;

/// Integer if it fits in 64 bits, decimal string otherwise.
json wide(Wide value);

/// {command, seed, params, results, invariant_flags}
json envelope(const std::string &command, std::uint64_t seed, json params, json results,
              const std::vector<std::string> &flags);

/// Vertex sequence (1-indexed) of a closed walk, starting and ending at the same vertex.
std::vector<VertexId> cycle_vertices(const Graph &g, const NegativeCycle &cycle);

json sssp_results(const Graph &g, const SsspResult &result);
json ldd_results(const Graph &g, const CutSet &cut);
json validation_results(const oracle::ValidationReport &report);
std::vector<std::string> validation_flags(const oracle::ValidationReport &report);

/// Checks the envelope keys and their types; returns a list of problems.
std::vector<std::string> schema_problems(const json &doc);

}  // namespace negpath::report

#endif  // NEGPATH_TOOLS_REPORT_HPP_
