#include "rmc/tree_packing.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "rmc/dsu.hpp"

namespace rmc {

namespace {

// One forest of the packing: component structure plus adjacency for
// fundamental-path queries. Exchange moves swap edges without changing the
// component partition, so the DSU only ever sees the final insertions.
struct Forest {
    DisjointSets comps;
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge id)

    explicit Forest(int n) : comps(n), adj(n) {}

    void add(int u, int v, int e) {
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }

    void remove(int u, int v, int e) {
        auto strip = [&](int x) {
            auto& list = adj[x];
            for (size_t i = 0; i < list.size(); ++i)
                if (list[i].second == e) {
                    list.erase(list.begin() + i);
                    return;
                }
        };
        strip(u);
        strip(v);
        (void)v;
    }

    // Edge ids on the tree path between u and v; empty when disconnected.
    std::vector<int> path(int u, int v) const {
        if (u == v) return {};
        std::vector<int> pred_edge(adj.size(), -1), pred_vertex(adj.size(), -1);
        std::vector<bool> seen(adj.size(), false);
        std::queue<int> q;
        q.push(u);
        seen[u] = true;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (x == v) break;
            for (const auto& [w, e] : adj[x]) {
                if (!seen[w]) {
                    seen[w] = true;
                    pred_edge[w] = e;
                    pred_vertex[w] = x;
                    q.push(w);
                }
            }
        }
        if (!seen[v]) return {};
        std::vector<int> out;
        for (int x = v; x != u; x = pred_vertex[x]) out.push_back(pred_edge[x]);
        return out;
    }
};

}  // namespace

PackingOutcome spanning_tree_packing(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("packing needs k >= 1");
    if (!g.is_connected()) throw std::invalid_argument("packing needs a connected graph");

    PackingOutcome out;
    if (g.n <= 1) {
        out.success = true;
        out.trees.assign(k, {});
        return out;
    }

    const int n = g.n;
    const int m = g.m();
    const long long target = static_cast<long long>(k) * (n - 1);

    // Certified quick absences: too few edges overall, or a vertex too poor
    // to feed k spanning trees. Both are violating partitions.
    if (m < target) {
        out.success = false;
        for (int v = 0; v < n; ++v) out.witness.blocks.push_back({v});
        return out;
    }
    auto deg = g.degrees();
    for (int v = 0; v < n; ++v) {
        if (deg[v] < k) {
            out.success = false;
            std::vector<int> rest;
            for (int w = 0; w < n; ++w)
                if (w != v) rest.push_back(w);
            out.witness.blocks.push_back({v});
            out.witness.blocks.push_back(rest);
            return out;
        }
    }

    std::vector<Forest> forests;
    forests.reserve(k);
    for (int i = 0; i < k; ++i) forests.emplace_back(n);
    std::vector<int> in_forest(m, -1);
    long long placed = 0;

    auto augment = [&](int e0) -> bool {
        std::vector<int> pred(m, -2);  // -2 unlabeled, -1 root
        std::queue<int> q;
        pred[e0] = -1;
        q.push(e0);
        while (!q.empty()) {
            int e = q.front();
            q.pop();
            auto [u, v] = g.edges[e];
            for (int i = 0; i < k; ++i) {
                if (in_forest[e] == i) continue;
                if (!forests[i].comps.same(u, v)) {
                    // Execute the exchange chain back to the root edge.
                    int cur = e, dest = i;
                    bool first = true;
                    while (cur != -1) {
                        int src = in_forest[cur];
                        auto [a, b] = g.edges[cur];
                        if (src != -1) forests[src].remove(a, b, cur);
                        forests[dest].add(a, b, cur);
                        if (first) forests[dest].comps.unite(a, b);
                        first = false;
                        in_forest[cur] = dest;
                        dest = src;
                        cur = pred[cur];
                    }
                    return true;
                }
                for (int f : forests[i].path(u, v)) {
                    if (pred[f] == -2) {
                        pred[f] = e;
                        q.push(f);
                    }
                }
            }
        }
        return false;
    };

    for (int e = 0; e < m && placed < target; ++e)
        if (augment(e)) ++placed;

    if (placed == target) {
        out.success = true;
        out.trees.assign(k, {});
        for (int e = 0; e < m; ++e)
            if (in_forest[e] >= 0) out.trees[in_forest[e]].push_back(e);
        return out;
    }

    // Violating partition from the final state: the edges that cannot reach
    // a free slot in the exchange digraph form a closed set A; each forest
    // restricted to A spans every component of (V, A), so contracting those
    // components certifies e(G/P) < k(|P|-1).
    std::vector<char> reaches_free(m, 0);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        for (int i = 0; i < k && !reaches_free[e]; ++i)
            if (in_forest[e] != i && !forests[i].comps.same(u, v)) reaches_free[e] = 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < m; ++e) {
            if (reaches_free[e]) continue;
            auto [u, v] = g.edges[e];
            for (int i = 0; i < k && !reaches_free[e]; ++i) {
                if (in_forest[e] == i) continue;
                for (int f : forests[i].path(u, v)) {
                    if (reaches_free[f]) {
                        reaches_free[e] = 1;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    DisjointSets comps(n);
    for (int e = 0; e < m; ++e)
        if (!reaches_free[e]) comps.unite(g.edges[e].first, g.edges[e].second);
    std::vector<std::vector<int>> blocks(n);
    for (int v = 0; v < n; ++v) blocks[comps.find(v)].push_back(v);
    out.success = false;
    for (auto& b : blocks)
        if (!b.empty()) out.witness.blocks.push_back(std::move(b));

    if (!verify_nwt_certificate(g, k, out.witness))
        throw std::logic_error("packing failure produced a non-violating partition");
    return out;
}

int stp_number(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("packing number needs n >= 2");
    if (!g.is_connected()) throw std::invalid_argument("packing number needs a connected graph");
    auto deg = g.degrees();
    int delta = *std::min_element(deg.begin(), deg.end());
    int hint = std::min(delta, g.m() / (g.n - 1));  // both are certified upper bounds
    for (int k = std::max(hint, 1); k >= 1; --k)
        if (spanning_tree_packing(g, k).success) return k;
    throw std::logic_error("connected graph must pack one spanning tree");
}

TauResult tau_exact(const Graph& g, int budget) {
    if (g.n < 2) throw std::invalid_argument("tau needs n >= 2");
    if (!g.is_connected()) throw std::invalid_argument("tau needs a connected graph");
    if (g.n > budget)
        throw std::invalid_argument("tau enumeration budget exceeded (n = " +
                                    std::to_string(g.n) + " > " + std::to_string(budget) + ")");

    const int n = g.n;
    std::vector<int> best_assign;
    long long best_num = -1, best_den = 1;

    // Odometer over restricted-growth strings (digit[v] <= 1 + max of the
    // prefix), i.e. all set partitions of the vertices.
    std::vector<int> digit(n, 0);
    while (true) {
        int blocks = 0;
        for (int v = 0; v < n; ++v) blocks = std::max(blocks, digit[v] + 1);
        if (blocks >= 2) {
            long long cross = 0;
            for (const auto& [u, v] : g.edges)
                if (digit[u] != digit[v]) ++cross;
            long long den = blocks - 1;
            if (best_num < 0 || cross * best_den < best_num * den) {
                best_num = cross;
                best_den = den;
                best_assign = digit;
            }
        }
        int pos = n - 1;
        while (pos >= 1) {
            int cap = 0;
            for (int v = 0; v < pos; ++v) cap = std::max(cap, digit[v]);
            if (digit[pos] <= cap) {
                ++digit[pos];
                for (int v = pos + 1; v < n; ++v) digit[v] = 0;
                break;
            }
            --pos;
        }
        if (pos < 1) break;
    }

    TauResult out;
    long long gg = std::gcd(best_num, best_den);
    if (gg == 0) gg = 1;
    out.num = best_num / gg;
    out.den = best_den / gg;
    int blocks = 1 + *std::max_element(best_assign.begin(), best_assign.end());
    out.witness.blocks.resize(blocks);
    for (int v = 0; v < n; ++v) out.witness.blocks[best_assign[v]].push_back(v);
    return out;
}

bool verify_nwt_certificate(const Graph& g, int k, const VertexPartition& p) {
    validate_partition(g, p);
    std::vector<int> block_of(g.n, -1);
    for (int b = 0; b < p.block_count(); ++b)
        for (int v : p.blocks[b]) block_of[v] = b;
    long long cross = 0;
    for (const auto& [u, v] : g.edges)
        if (block_of[u] != block_of[v]) ++cross;
    return cross < static_cast<long long>(k) * (p.block_count() - 1);
}

PackingResult analyze_packing(const Graph& g, int tau_budget) {
    PackingResult out;
    out.t_number = stp_number(g);
    out.trees = spanning_tree_packing(g, out.t_number).trees;
    if (g.n <= tau_budget) {
        auto tau = tau_exact(g, tau_budget);
        out.tau_num = tau.num;
        out.tau_den = tau.den;
        out.tau_witness = tau.witness;
    }
    return out;
}

}  // namespace rmc
