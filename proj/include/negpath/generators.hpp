#ifndef NEGPATH_GENERATORS_HPP_
#define NEGPATH_GENERATORS_HPP_

#include <cstdint>
#include <string>

#include "negpath/io.hpp"

namespace negpath::gen {

/// Random arcs with costs c in [0, W] and a random potential pi in [0, W];
/// w(u, v) = c + pi(v) - pi(u), so no cycle is negative.
GrFile potential(VertexId n, std::int64_t m, std::int64_t W, std::uint64_t seed);

/// potential() plus a directed cycle on 2..8 distinct vertices whose total weight is negative.
GrFile cycle_planted(VertexId n, std::int64_t m, std::int64_t W, std::uint64_t seed);

/// Directed G(n, p) with weights uniform in [0, W]; no self-loops.
GrFile erdos_renyi(VertexId n, double p, std::int64_t W, std::uint64_t seed);

/// Unit-weight directed cycle 1 -> 2 -> ... -> n -> 1.
GrFile dicycle(VertexId n);

/// rows x cols grid with arcs both ways between neighbours, weights uniform in [1, W].
GrFile grid(VertexId rows, VertexId cols, std::int64_t W, std::uint64_t seed);

}  // namespace negpath::gen

#endif  // NEGPATH_GENERATORS_HPP_
