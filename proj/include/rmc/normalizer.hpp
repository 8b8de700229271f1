#ifndef RMC_NORMALIZER_HPP
#define RMC_NORMALIZER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rmc/coloring.hpp"
#include "rmc/graph.hpp"

namespace rmc {

// Two classes cross when their vertex sets have nonempty intersection and
// nonempty differences on both sides. Requires every class connected;
// returns the lexicographically smallest pair of canonical labels.
std::optional<std::pair<int, int>> find_crossing_pair(const Graph& g, const EdgeColoring& c);

// Replace crossing classes i, j by two fresh star trees: T1 spanning
// V_i u V_j colored i, T2 spanning V_i n V_j colored j, both centered at
// their minimum vertex id. New edges get fresh ids (parallel edges arise);
// vertex and edge counts are preserved. When the replaced classes carried
// cycles the deficit is made up with extra parallel copies of T1 edges,
// colored i.
std::pair<Graph, EdgeColoring> merge_step(const Graph& g, const EdgeColoring& c, int i, int j);

struct NormalizeStep {
    int color_i = 0;
    int color_j = 0;
    std::vector<int> order_before;  // class orders, descending
    std::vector<int> order_after;
};

struct NormalizationTrace {
    std::vector<NormalizeStep> steps;
    Graph final_graph;
    EdgeColoring final_coloring;
    std::vector<int> spanning_classes;  // labels whose class spans as a tree
};

// Sequence order per descending-sorted class orders: a precedes b when they
// differ first at an index where a is smaller, or a is a proper prefix of b.
bool class_order_precedes(const std::vector<int>& a, const std::vector<int>& b);

// Run merge steps until no crossing pair remains. Requires a valid RMC_k
// coloring whose classes are all trees (improve_coloring produces one).
// Vertex/edge counts stay constant, the class-order sequence strictly
// increases each step, and at the end at least k classes are spanning
// trees, certifying e(G) >= k(n-1). With verify_each_step the RMC_k
// property is rechecked after every merge (O(t n) per step).
NormalizationTrace normalize(const Graph& g, const EdgeColoring& c, int k,
                             bool verify_each_step = true);

}  // namespace rmc

#endif
