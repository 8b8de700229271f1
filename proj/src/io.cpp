#include "rmc/io.hpp"

#include <fstream>
#include <sstream>

namespace rmc {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

ParsedGraph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw IoError("empty edge-list input");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) throw IoError("bad header line, expected 'n m'");

    ParsedGraph out;
    out.graph = Graph(static_cast<int>(n));
    std::vector<int> colors;
    std::optional<bool> colored;

    for (long long e = 0; e < m; ++e) {
        if (!next_data_line(in, line)) throw IoError("edge list ended early");
        std::istringstream row(line);
        long long u, v;
        if (!(row >> u >> v)) throw IoError("bad edge line: " + line);
        long long c;
        bool has_color = static_cast<bool>(row >> c);
        if (colored.has_value() && *colored != has_color)
            throw IoError("mixed colored and uncolored edge lines");
        colored = has_color;
        std::string trailing;
        if (row >> trailing) throw IoError("trailing tokens on edge line: " + line);
        try {
            out.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::invalid_argument& ex) {
            throw IoError(std::string(ex.what()) + " in line: " + line);
        }
        if (has_color) {
            if (c < 1) throw IoError("color labels must be positive: " + line);
            colors.push_back(static_cast<int>(c));
        }
    }
    if (colored.value_or(false)) out.coloring = EdgeColoring(std::move(colors));
    return out;
}

ParsedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

std::string write_edge_list(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.color.size()) != g.m())
        throw IoError("coloring does not match the edge count");
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (int e = 0; e < g.m(); ++e)
        out << g.edges[e].first << ' ' << g.edges[e].second << ' ' << c.color[e] << '\n';
    return out.str();
}

}  // namespace rmc
