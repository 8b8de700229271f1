#ifndef RMC_COLORING_HPP
#define RMC_COLORING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rmc/graph.hpp"

namespace rmc {

// Total mapping edge id -> color label (positive integer). Labels need not
// be contiguous; canonicalize() renumbers 1..t by first appearance in
// edge-id order.
struct EdgeColoring {
    std::vector<int> color;  // indexed by edge id

    EdgeColoring() = default;
    explicit EdgeColoring(std::vector<int> c) : color(std::move(c)) {}

    int colors_used() const;
};

EdgeColoring canonicalize(const EdgeColoring& c);

struct ColorClass {
    int label = 0;
    std::vector<int> edge_ids;
    std::vector<int> vertices;
    int components = 0;
    bool is_tree = false;
    bool is_trivial = false;  // exactly one edge
};

struct ColorClassSummary {
    std::vector<ColorClass> classes;  // ascending by label
    int colors_used = 0;
    int waste = 0;                            // m - colors_used
    std::vector<int> nontrivial_color_degree;  // per vertex, distinct nontrivial colors
};

// Throws when the coloring is not total on E(g) or uses labels < 1.
ColorClassSummary color_classes(const Graph& g, const EdgeColoring& c);

struct RmcCheck {
    bool ok = false;
    std::optional<std::pair<int, int>> failing_pair;  // lexicographically first
    int failing_coverage = 0;
};

// A pair (u,v) is covered by color i when u and v lie in one component of
// the i-class. k monochromatic paths of pairwise distinct colors are
// automatically edge-disjoint (each edge has one color) and one path per
// color is all a color can contribute, so the coloring is valid iff every
// pair is covered by at least k colors.
RmcCheck is_rmc_k(const Graph& g, const EdgeColoring& c, int k);

int pair_coverage(const Graph& g, const EdgeColoring& c, int u, int v);

// k spanning-tree classes colored 1..k, every leftover edge a fresh
// singleton color; exactly m - k(n-2) colors total. Throws InfeasibleError
// with the violating partition when no packing exists.
EdgeColoring baseline_coloring(const Graph& g, int k);

// The hub-and-parts coloring: class i = first tree of part i plus its hub
// edge (i in 1..s); class s+j-1 = the union over parts of tree j plus hub
// edge j (j in 2..k); everything else trivial. Uses m - k(n-2) + s - 1
// colors.
EdgeColoring perfectly_connected_coloring(const PerfectlyConnectedGraph& pg);

// Repeatedly split disconnected classes and break class cycles (fresh
// colors) until every class is a tree. Deterministic move order: ascending
// color label; component to recolor = second-smallest min vertex id; cycle
// edge to recolor = highest edge id on the cycle. Preserves validity,
// never decreases the color count; output is canonicalized.
EdgeColoring improve_coloring(const Graph& g, const EdgeColoring& c, int k);

// Every vertex must meet at least k distinct nontrivial colors. Holds for
// any valid coloring of a simple graph with k >= 2; exposed as a verifier
// cross-check.
bool nontrivial_color_degree_check(const Graph& g, const EdgeColoring& c, int k);

}  // namespace rmc

#endif
