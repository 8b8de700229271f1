#include "rmc/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "rmc/dsu.hpp"
#include "rmc/tree_packing.hpp"

namespace rmc {

std::vector<std::vector<std::pair<int, int>>> Graph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e = 0; e < m(); ++e) {
        adj[edges[e].first].emplace_back(edges[e].second, e);
        adj[edges[e].second].emplace_back(edges[e].first, e);
    }
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool Graph::is_connected() const {
    if (n <= 1) return true;
    DisjointSets dsu(n);
    for (const auto& [u, v] : edges) dsu.unite(u, v);
    return dsu.components == 1;
}

bool Graph::has_edge(int u, int v) const {
    for (const auto& [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

void validate_partition(const Graph& g, const VertexPartition& p) {
    if (p.blocks.empty()) throw std::invalid_argument("partition needs at least one block");
    std::vector<int> seen(g.n, 0);
    for (const auto& block : p.blocks) {
        if (block.empty()) throw std::invalid_argument("partition block is empty");
        for (int v : block) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("partition vertex out of range");
            if (seen[v]++) throw std::invalid_argument("partition blocks overlap");
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (!seen[v]) throw std::invalid_argument("partition misses a vertex");
}

namespace {

std::vector<int> bfs_distances(const std::vector<std::vector<std::pair<int, int>>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const auto& [w, e] : adj[u]) {
            (void)e;
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

// Articulation points; edge-id skipping handles parallel edges.
void articulation_dfs(const std::vector<std::vector<std::pair<int, int>>>& adj, int u,
                      int parent_edge, int& timer, std::vector<int>& tin, std::vector<int>& low,
                      std::vector<bool>& is_cut) {
    tin[u] = low[u] = timer++;
    int children = 0;
    for (const auto& [w, e] : adj[u]) {
        if (e == parent_edge) continue;
        if (tin[w] >= 0) {
            low[u] = std::min(low[u], tin[w]);
        } else {
            articulation_dfs(adj, w, e, timer, tin, low, is_cut);
            low[u] = std::min(low[u], low[w]);
            if (low[w] >= tin[u] && parent_edge != -1) is_cut[u] = true;
            ++children;
        }
    }
    if (parent_edge == -1 && children > 1) is_cut[u] = true;
}

// Unit-capacity max flow (BFS augmentation); good enough for the small
// connectivity queries the predicates need.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit FlowNetwork(int nodes) : out(nodes) {}

    void add_arc(int from, int to, int cap) {
        out[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        out[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (true) {
            std::vector<int> pred_arc(out.size(), -1);
            std::queue<int> q;
            q.push(s);
            pred_arc[s] = -2;
            while (!q.empty() && pred_arc[t] == -1) {
                int u = q.front();
                q.pop();
                for (int a : out[u]) {
                    if (arcs[a].cap > 0 && pred_arc[arcs[a].to] == -1) {
                        pred_arc[arcs[a].to] = a;
                        q.push(arcs[a].to);
                    }
                }
            }
            if (pred_arc[t] == -1) return flow;
            for (int v = t; v != s;) {
                int a = pred_arc[v];
                --arcs[a].cap;
                ++arcs[a ^ 1].cap;
                v = arcs[a ^ 1].to;
            }
            ++flow;
        }
    }
};

int edge_connectivity_exact(const Graph& g) {
    if (g.n <= 1) return 0;
    if (!g.is_connected()) return 0;
    int best = g.m() + 1;
    for (int t = 1; t < g.n; ++t) {
        FlowNetwork net(g.n);
        for (const auto& [u, v] : g.edges) {
            net.add_arc(u, v, 1);
            net.add_arc(v, u, 1);
        }
        best = std::min(best, net.max_flow(0, t));
    }
    return best;
}

}  // namespace

GraphMetrics metrics(const Graph& g) {
    GraphMetrics out;
    out.n = g.n;
    out.m = g.m();
    auto deg = g.degrees();
    out.min_degree = g.n ? *std::min_element(deg.begin(), deg.end()) : 0;
    out.max_degree = g.n ? *std::max_element(deg.begin(), deg.end()) : 0;

    auto adj = g.adjacency();

    if (g.is_connected()) {
        int diam = 0;
        for (int v = 0; v < g.n; ++v) {
            auto dist = bfs_distances(adj, v);
            for (int w = 0; w < g.n; ++w) diam = std::max(diam, dist[w]);
        }
        out.diameter = diam;
    }

    if (g.n > 0) {
        std::vector<int> tin(g.n, -1), low(g.n, -1);
        std::vector<bool> is_cut(g.n, false);
        int timer = 0;
        for (int v = 0; v < g.n; ++v)
            if (tin[v] < 0) articulation_dfs(adj, v, -1, timer, tin, low, is_cut);
        for (int v = 0; v < g.n; ++v)
            if (is_cut[v]) out.cut_vertices.push_back(v);
    }

    out.edge_connectivity = edge_connectivity_exact(g);

    // Neighbor sets (multiplicity collapsed) for triangles and common
    // neighbors.
    std::vector<std::set<int>> nb(g.n);
    for (const auto& [u, v] : g.edges) {
        nb[u].insert(v);
        nb[v].insert(u);
    }
    out.triangle_free = true;
    for (const auto& [u, v] : g.edges) {
        for (int w : nb[u]) {
            if (w != v && nb[v].count(w)) {
                out.triangle_free = false;
                break;
            }
        }
        if (!out.triangle_free) break;
    }

    out.common_neighbor_min = g.n >= 2 ? g.n : 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int common = 0;
            for (int w : nb[u])
                if (w != v && nb[v].count(w)) ++common;
            out.common_neighbor_min = std::min(out.common_neighbor_min, common);
        }
    if (g.n < 2) out.common_neighbor_min = 0;

    return out;
}

int vertex_connectivity(const Graph& g) {
    if (g.n <= 1) return 0;
    if (!g.is_connected()) return 0;
    std::vector<std::set<int>> nb(g.n);
    for (const auto& [u, v] : g.edges) {
        nb[u].insert(v);
        nb[v].insert(u);
    }
    bool complete = true;
    for (int u = 0; u < g.n && complete; ++u)
        if (static_cast<int>(nb[u].size()) != g.n - 1) complete = false;
    if (complete) return g.n - 1;

    // Vertex-split network: v_in = 2v, v_out = 2v+1.
    int best = g.n;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            if (nb[u].count(v)) continue;
            FlowNetwork net(2 * g.n);
            for (int w = 0; w < g.n; ++w)
                net.add_arc(2 * w, 2 * w + 1, (w == u || w == v) ? g.n : 1);
            for (int w = 0; w < g.n; ++w)
                for (int x : nb[w]) net.add_arc(2 * w + 1, 2 * x, g.n);
            best = std::min(best, net.max_flow(2 * u, 2 * v + 1));
        }
    }
    return best;
}

Graph complement(const Graph& g) {
    std::vector<std::set<int>> nb(g.n);
    for (const auto& [u, v] : g.edges) {
        nb[u].insert(v);
        nb[v].insert(u);
    }
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!nb[u].count(v)) out.add_edge(u, v);
    return out;
}

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph gen_petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);          // outer C5
    for (int v = 0; v < 5; ++v) g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    for (int v = 0; v < 5; ++v) g.add_edge(v, 5 + v);                // spokes
    return g;
}

Graph shrink(const Graph& g, const VertexPartition& p) {
    validate_partition(g, p);
    std::vector<int> block_of(g.n, -1);
    for (int b = 0; b < p.block_count(); ++b)
        for (int v : p.blocks[b]) block_of[v] = b;
    Graph out(p.block_count());
    for (const auto& [u, v] : g.edges)
        if (block_of[u] != block_of[v]) out.add_edge(block_of[u], block_of[v]);
    return out;
}

PerfectlyConnectedGraph gen_perfectly_connected(int k, int s, const std::vector<Graph>& parts) {
    if (k < 1) throw std::invalid_argument("perfectly-connected construction needs k >= 1");
    if (s < 2) throw std::invalid_argument("perfectly-connected construction needs s >= 2");
    if (static_cast<int>(parts.size()) != s)
        throw std::invalid_argument("expected exactly s part graphs");

    std::vector<std::vector<std::vector<int>>> local_trees(s);
    for (int i = 0; i < s; ++i) {
        if (parts[i].n < k)
            throw std::invalid_argument("part " + std::to_string(i + 1) +
                                        " has fewer than k vertices");
        if (!parts[i].is_connected())
            throw std::invalid_argument("part " + std::to_string(i + 1) + " is disconnected");
        auto packing = spanning_tree_packing(parts[i], k);
        if (!packing.success)
            throw std::invalid_argument("part " + std::to_string(i + 1) +
                                        " cannot pack " + std::to_string(k) +
                                        " edge-disjoint spanning trees");
        local_trees[i] = std::move(packing.trees);
    }

    int total = 1;
    for (const auto& part : parts) total += part.n;

    PerfectlyConnectedGraph out;
    out.graph = Graph(total);
    out.data.k = k;
    out.data.s = s;
    out.data.hub = total - 1;
    out.data.part_trees.resize(s);
    out.data.hub_edges.resize(s);

    std::vector<int> offset(s, 0);
    {
        int base = 0;
        for (int i = 0; i < s; ++i) {
            offset[i] = base;
            out.data.part_ranges.emplace_back(base, base + parts[i].n);
            base += parts[i].n;
        }
    }

    // Part-internal edges first: local edge e of part i becomes a global
    // edge at a fixed offset, so local tree ids translate directly.
    std::vector<int> edge_base(s, 0);
    for (int i = 0; i < s; ++i) {
        edge_base[i] = out.graph.m();
        for (const auto& [u, v] : parts[i].edges)
            out.graph.add_edge(offset[i] + u, offset[i] + v);
    }
    for (int i = 0; i < s; ++i) {
        out.data.part_trees[i].resize(k);
        for (int j = 0; j < k; ++j)
            for (int e : local_trees[i][j])
                out.data.part_trees[i][j].push_back(edge_base[i] + e);
    }

    // Complete connections between distinct parts.
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            for (int u = 0; u < parts[i].n; ++u)
                for (int v = 0; v < parts[j].n; ++v)
                    out.graph.add_edge(offset[i] + u, offset[j] + v);

    // Hub edges: k designated neighbors per part (its first k vertices).
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < k; ++j)
            out.data.hub_edges[i].push_back(out.graph.add_edge(out.data.hub, offset[i] + j));

    return out;
}

}  // namespace rmc
