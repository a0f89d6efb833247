#include "negpath/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>

namespace negpath {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T number(std::string_view token, std::size_t line, const char *what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
    return value;
}

}  // namespace

GrFile parse_gr(std::istream &in) {
    GrFile file;
    bool have_problem = false;
    std::int64_t m = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = split(line);
        if (tokens.empty())
            continue;
        if (tokens[0] == "c") {
            const auto pos = line.find('c');
            std::string rest = line.substr(pos + 1);
            if (!rest.empty() && rest.front() == ' ')
                rest.erase(0, 1);
            file.comments.push_back(rest);
            continue;
        }
        if (tokens[0] == "p") {
            if (have_problem)
                throw ParseError(lineno, "second problem line");
            if (tokens.size() != 4 || tokens[1] != "sp")
                throw ParseError(lineno, "expected 'p sp <n> <m>'");
            const auto n = number<std::int64_t>(tokens[2], lineno, "vertex count");
            m = number<std::int64_t>(tokens[3], lineno, "arc count");
            if (n < 0 || n > INT32_MAX - 1 || m < 0 || m > INT32_MAX)
                throw ParseError(lineno, "sizes out of range");
            file.n = static_cast<VertexId>(n);
            file.arcs.reserve(static_cast<std::size_t>(std::min<std::int64_t>(m, 1 << 24)));
            have_problem = true;
            continue;
        }
        if (tokens[0] == "a") {
            if (!have_problem)
                throw ParseError(lineno, "arc before problem line");
            if (tokens.size() != 4)
                throw ParseError(lineno, "expected 'a <u> <v> <w>'");
            const auto u = number<std::int64_t>(tokens[1], lineno, "endpoint");
            const auto v = number<std::int64_t>(tokens[2], lineno, "endpoint");
            const auto w = number<std::int64_t>(tokens[3], lineno, "weight");
            if (u < 1 || u > file.n || v < 1 || v > file.n)
                throw ParseError(lineno, "endpoint out of range");
            if (static_cast<std::int64_t>(file.arcs.size()) == m)
                throw ParseError(lineno, "more arcs than announced");
            file.arcs.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), w});
            continue;
        }
        throw ParseError(lineno, "unknown line type '" + std::string(tokens[0]) + "'");
    }
    if (!have_problem)
        throw ParseError(lineno, "missing problem line");
    if (static_cast<std::int64_t>(file.arcs.size()) != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " arcs, found " + std::to_string(file.arcs.size()));
    return file;
}

GrFile read_gr(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open " + path);
    return parse_gr(in);
}

void write_gr(std::ostream &out, const GrFile &file) {
    for (const std::string &c : file.comments)
        out << (c.empty() ? "c" : "c " + c) << '\n';
    out << "p sp " << file.n << ' ' << file.arcs.size() << '\n';
    for (const InputEdge &a : file.arcs)
        out << "a " << a.src + 1 << ' ' << a.dst + 1 << ' ' << a.w << '\n';
}

Graph to_graph(const GrFile &file) { return build_graph(file.n, file.arcs); }

}  // namespace negpath
