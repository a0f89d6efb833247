#ifndef NEGPATH_IO_HPP_
#define NEGPATH_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "negpath/graph.hpp"

namespace negpath {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

/// DIMACS shortest-path file: `c` comments, one `p sp n m`, then m `a u v w` arcs (1-indexed).
struct GrFile {
    VertexId n = 0;
    std::vector<InputEdge> arcs;
    std::vector<std::string> comments;
};

GrFile parse_gr(std::istream &in);
GrFile read_gr(const std::string &path);
void write_gr(std::ostream &out, const GrFile &file);

Graph to_graph(const GrFile &file);

}  // namespace negpath

#endif  // NEGPATH_IO_HPP_
