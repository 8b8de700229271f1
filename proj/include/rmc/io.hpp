#ifndef RMC_IO_HPP
#define RMC_IO_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "rmc/coloring.hpp"
#include "rmc/graph.hpp"

namespace rmc {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// The colored variant appends a third integer column. Lines starting with
// '#' are comments.
struct ParsedGraph {
    Graph graph;
    std::optional<EdgeColoring> coloring;
};

ParsedGraph read_edge_list(std::istream& in);
ParsedGraph read_edge_list_file(const std::string& path);

std::string write_edge_list(const Graph& g);
std::string write_edge_list(const Graph& g, const EdgeColoring& c);

}  // namespace rmc

#endif
