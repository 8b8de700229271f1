// Shared test-only machinery: independent oracles (exhaustive partition
// enumeration, literal path-search verification, brute-force profiles) and
// small-graph enumeration up to isomorphism. Everything here is kept
// independent of the implementation paths it cross-checks.
#ifndef RMC_TEST_SUPPORT_HPP
#define RMC_TEST_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "rmc/coloring.hpp"
#include "rmc/graph.hpp"
#include "rmc/random_lab.hpp"

namespace rmc_test {

using rmc::EdgeColoring;
using rmc::Graph;

// ---- set partitions -------------------------------------------------------

// Calls fn(digits) for every restricted-growth string over `items` elements
// whose block count is at most max_blocks (0 = unlimited).
template <typename Fn>
void for_each_partition(int items, int max_blocks, Fn&& fn) {
    std::vector<int> digit(items, 0);
    if (items == 0) {
        fn(digit);
        return;
    }
    while (true) {
        fn(digit);
        int pos = items - 1;
        while (pos >= 1) {
            int cap = 0;
            for (int i = 0; i < pos; ++i) cap = std::max(cap, digit[i]);
            if (digit[pos] <= cap && (max_blocks == 0 || digit[pos] + 1 < max_blocks)) {
                ++digit[pos];
                for (int i = pos + 1; i < items; ++i) digit[i] = 0;
                break;
            }
            --pos;
        }
        if (pos < 1) break;
    }
}

// ---- exhaustive color-maximum oracle ---------------------------------------

// Maximum block count over ALL partitions of the edge set whose induced
// coloring verifies, with no tree restriction at all. Returns -1 when no
// partition verifies.
inline int brute_force_rmc(const Graph& g, int k) {
    int best = -1;
    for_each_partition(g.m(), 0, [&](const std::vector<int>& digit) {
        int blocks = 0;
        for (int d : digit) blocks = std::max(blocks, d + 1);
        if (blocks <= best) return;
        EdgeColoring c;
        c.color.reserve(digit.size());
        for (int d : digit) c.color.push_back(d + 1);
        if (rmc::is_rmc_k(g, c, k).ok) best = blocks;
    });
    return best;
}

// ---- literal path-search verifier ------------------------------------------

// Extracts one monochromatic u-v path per color by depth-first search on the
// class subgraph, then checks the definition clauses directly: k paths,
// pairwise distinct colors, pairwise edge-disjoint, each monochromatic with
// matching endpoints. Throws when an extracted witness violates a clause.
inline bool literal_path_verifier(const Graph& g, const EdgeColoring& c, int k) {
    std::map<int, std::vector<int>> by;
    for (int e = 0; e < g.m(); ++e) by[c.color[e]].push_back(e);

    auto path_in_class = [&](const std::vector<int>& eids, int u, int v) -> std::vector<int> {
        std::vector<std::vector<std::pair<int, int>>> adj(g.n);
        for (int e : eids) {
            adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
            adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
        }
        std::vector<int> pred_edge(g.n, -1), pred_vertex(g.n, -1);
        std::vector<bool> seen(g.n, false);
        std::vector<int> stack{u};
        seen[u] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x == v) break;
            for (auto [w, e] : adj[x])
                if (!seen[w]) {
                    seen[w] = true;
                    pred_edge[w] = e;
                    pred_vertex[w] = x;
                    stack.push_back(w);
                }
        }
        if (!seen[v]) return {};
        std::vector<int> path;
        for (int x = v; x != u; x = pred_vertex[x]) path.push_back(pred_edge[x]);
        return path;
    };

    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            std::vector<std::pair<int, std::vector<int>>> found;  // (color, path)
            for (const auto& [label, eids] : by) {
                auto path = path_in_class(eids, u, v);
                if (!path.empty()) found.emplace_back(label, std::move(path));
                if (static_cast<int>(found.size()) == k) break;
            }
            if (static_cast<int>(found.size()) < k) return false;
            // validate every clause of the definition on the witnesses
            std::set<int> used_edges;
            std::set<int> used_colors;
            for (const auto& [label, path] : found) {
                if (!used_colors.insert(label).second)
                    throw std::logic_error("duplicate color in path witness");
                for (int e : path) {
                    if (c.color[e] != label)
                        throw std::logic_error("non-monochromatic path witness");
                    if (!used_edges.insert(e).second)
                        throw std::logic_error("path witnesses share an edge");
                }
            }
        }
    }
    return true;
}

// ---- brute-force profile oracle --------------------------------------------

// Enumerates {3..domain_max}^t directly.
struct BruteProfile {
    long long best_g = -1;
    std::vector<int> best_x;
};

inline BruteProfile brute_force_profile(long long d, int domain_max, int t) {
    BruteProfile out;
    std::vector<int> x(t, 3);
    auto c2 = [](long long v) { return v < 2 ? 0 : v * (v - 1) / 2; };
    while (true) {
        long long f = 0, gval = 0;
        for (int xi : x) {
            f += c2(xi - 1);
            gval += xi - 2;
        }
        if (f >= d && (out.best_g < 0 || gval < out.best_g)) {
            out.best_g = gval;
            out.best_x = x;
        }
        int pos = t - 1;
        while (pos >= 0 && x[pos] == domain_max) --pos;
        if (pos < 0) break;
        ++x[pos];
        for (int i = pos + 1; i < t; ++i) x[i] = 3;
    }
    return out;
}

// ---- seeded random connected graphs ----------------------------------------

// Random labeled tree from a seeded Pruefer-like draw plus extra distinct
// non-tree edges; always connected and simple.
inline Graph random_connected_graph(int n, int extra_edges, std::uint64_t seed) {
    Graph g(n);
    if (n == 1) return g;
    std::set<std::pair<int, int>> present;
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (u == v || present.count({u, v})) return false;
        present.insert({u, v});
        g.add_edge(u, v);
        return true;
    };
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rmc::splitmix64(seed ^ (0x100 + v)) % v);
        add(u, v);
    }
    int attempts = 0, added = 0;
    const int max_extra = n * (n - 1) / 2 - (n - 1);
    while (added < std::min(extra_edges, max_extra) && attempts < 40 * (extra_edges + 1)) {
        std::uint64_t h = rmc::splitmix64(seed ^ (0x9000 + attempts));
        int u = static_cast<int>(h % n);
        int v = static_cast<int>((h >> 17) % n);
        if (add(u, v)) ++added;
        ++attempts;
    }
    return g;
}

// ---- enumeration up to isomorphism -----------------------------------------

inline std::vector<std::pair<int, int>> pair_table(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

inline std::uint64_t canonical_mask(int n, std::uint64_t mask,
                                    const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (size_t i = 0; i < pairs.size(); ++i)
        pair_index[pairs[i].first][pairs[i].second] =
            pair_index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t relabeled = 0;
        for (size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1)
                relabeled |= std::uint64_t{1} << pair_index[perm[pairs[i].first]][perm[pairs[i].second]];
        best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph graph_from_mask(int n, std::uint64_t mask,
                             const std::vector<std::pair<int, int>>& pairs) {
    Graph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

// All connected graphs on exactly n vertices up to isomorphism (one
// representative per class: the minimal adjacency mask). Practical for
// n <= 6.
inline std::vector<Graph> connected_graphs_upto_iso(int n, int max_m = 64) {
    std::vector<Graph> out;
    if (n == 1) {
        out.emplace_back(1);
        return out;
    }
    auto pairs = pair_table(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        int m = 0;
        for (size_t i = 0; i < pairs.size(); ++i) m += (mask >> i) & 1;
        if (m < n - 1 || m > max_m) continue;
        Graph g = graph_from_mask(n, mask, pairs);
        if (!g.is_connected()) continue;
        if (canonical_mask(n, mask, pairs) == mask) out.push_back(std::move(g));
    }
    return out;
}

// All labeled trees on n vertices deduplicated up to isomorphism via a
// canonical rooted encoding (rooted at the tree center).
inline std::string ahu_encode(const std::vector<std::vector<int>>& adj, int root, int parent) {
    std::vector<std::string> children;
    for (int w : adj[root])
        if (w != parent) children.push_back(ahu_encode(adj, w, root));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (const auto& c : children) s += c;
    s += ")";
    return s;
}

inline std::vector<Graph> trees_upto_iso(int n) {
    std::vector<Graph> out;
    if (n == 1) {
        out.emplace_back(1);
        return out;
    }
    if (n == 2) {
        Graph g(2);
        g.add_edge(0, 1);
        out.push_back(std::move(g));
        return out;
    }
    std::set<std::string> seen;
    std::vector<int> pruefer(n - 2, 0);
    while (true) {
        // decode
        std::vector<int> degree(n, 1);
        for (int x : pruefer) ++degree[x];
        Graph g(n);
        std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) leaves.push(v);
        std::vector<int> seq = pruefer;
        for (int x : seq) {
            int leaf = leaves.top();
            leaves.pop();
            g.add_edge(leaf, x);
            if (--degree[x] == 1) leaves.push(x);
            --degree[leaf];
        }
        int a = leaves.top();
        leaves.pop();
        int b = leaves.top();
        g.add_edge(a, b);

        // canonical form: root at the center (one or two)
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : g.edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        // peel leaves to find center
        std::vector<int> deg(n);
        for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
        std::vector<int> layer;
        std::vector<bool> removed(n, false);
        for (int v = 0; v < n; ++v)
            if (deg[v] <= 1) layer.push_back(v);
        int left = n;
        while (left > 2) {
            std::vector<int> next;
            for (int v : layer) {
                removed[v] = true;
                --left;
                for (int w : adj[v])
                    if (!removed[w] && --deg[w] == 1) next.push_back(w);
            }
            layer = std::move(next);
        }
        std::string enc;
        for (int v : layer) {
            std::string e = ahu_encode(adj, v, -1);
            if (enc.empty() || e < enc) enc = e;
        }
        if (seen.insert(enc).second) out.push_back(std::move(g));

        // next pruefer sequence
        int pos = n - 3;
        while (pos >= 0 && pruefer[pos] == n - 1) --pos;
        if (pos < 0) break;
        ++pruefer[pos];
        for (int i = pos + 1; i < n - 2; ++i) pruefer[i] = 0;
    }
    return out;
}

}  // namespace rmc_test

#endif
