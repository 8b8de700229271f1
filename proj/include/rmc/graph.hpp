#ifndef RMC_GRAPH_HPP
#define RMC_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rmc {

// Loopless multigraph. Vertices are dense 0-based ids; edge ids are dense
// integers in insertion order. Parallel edges are allowed and counted with
// multiplicity; loops are rejected at construction.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    explicit Graph(int vertex_count) : n(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("vertex count must be >= 0");
    }

    int m() const { return static_cast<int>(edges.size()); }

    int add_edge(int u, int v) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        edges.emplace_back(u, v);
        return m() - 1;
    }

    // v -> list of (neighbor, edge id); parallel edges appear once per copy.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;

    // Degree counts edge multiplicity.
    std::vector<int> degrees() const;

    bool is_connected() const;
    bool has_edge(int u, int v) const;  // any parallel copy counts
};

struct VertexPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

// Throws if p is not a partition of {0..n-1} into disjoint nonempty blocks.
void validate_partition(const Graph& g, const VertexPartition& p);

// Structural metrics backing the exact-value predicates. All fields are
// recomputable from the graph alone.
struct GraphMetrics {
    int n = 0;
    int m = 0;
    int min_degree = 0;
    std::optional<int> diameter;  // empty = infinite (disconnected)
    std::vector<int> cut_vertices;
    int edge_connectivity = 0;
    bool triangle_free = true;
    int common_neighbor_min = 0;  // min over unordered vertex pairs of |N(u) n N(v)|
    int max_degree = 0;
};

GraphMetrics metrics(const Graph& g);

// Exact vertex connectivity (min vertex cut size; n-1 for complete graphs,
// 0 when disconnected or n <= 1).
int vertex_connectivity(const Graph& g);

// Simple complement; parallel edges in g collapse to a single adjacency.
Graph complement(const Graph& g);

Graph gen_complete(int n);
Graph gen_cycle(int n);   // n >= 3
Graph gen_path(int n);    // n >= 1
Graph gen_petersen();

// Contract every block of p to a single vertex; intra-block edges are
// deleted, cross edges kept with multiplicity. Vertex i of the result is
// block i of p.
Graph shrink(const Graph& g, const VertexPartition& p);

// Construction record for a hub-and-parts graph: parts V_1..V_s occupy
// consecutive vertex ranges, the hub is the last vertex, all cross-part
// pairs are adjacent, and the hub attaches to exactly k designated
// vertices per part. Each part must pack k edge-disjoint spanning trees.
struct PerfectlyConnectedData {
    int k = 0;
    int s = 0;
    int hub = 0;
    std::vector<std::pair<int, int>> part_ranges;         // [begin, end) vertex ids
    std::vector<std::vector<std::vector<int>>> part_trees;  // part -> tree j -> edge ids
    std::vector<std::vector<int>> hub_edges;              // part -> k hub edge ids
};

struct PerfectlyConnectedGraph {
    Graph graph;
    PerfectlyConnectedData data;
};

// Parts are given as standalone graphs; the hub's k neighbors in each part
// are that part's first k vertices. Throws naming the failing part when a
// part cannot pack k spanning trees or has fewer than k vertices.
PerfectlyConnectedGraph gen_perfectly_connected(int k, int s, const std::vector<Graph>& parts);

}  // namespace rmc

#endif
