#include "rmc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>

#include "rmc/dsu.hpp"

namespace rmc {

namespace {

void require_simple_connected(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("operation needs a connected graph");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second)
            throw std::invalid_argument("operation needs a simple graph");
    }
}

long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// Branch and bound over partitions of the edge set into acyclic classes
// that must each end up connected (a tree). Classes are created in edge
// order and edges only join earlier classes or open the next one, which
// kills label permutations.
struct TreePartitionSearch {
    const Graph& g;
    int k;
    int n, m;
    std::vector<int> order;  // processing order: descending endpoint degree sum

    struct Cls {
        std::uint64_t verts = 0;
        int comps = 0;
        int edge_count = 0;
    };
    std::vector<Cls> classes;
    std::vector<std::vector<int>> parent;  // per class, DSU without compression
    std::vector<int> assignment;           // order position -> class index
    std::vector<int> unassigned_at;        // per vertex
    std::vector<std::vector<int>> both_in;  // pairs of vertices together in a class
    std::vector<std::vector<int>> cov;      // pairs same-component counts
    int total_deficit = 0;                  // sum over classes of comps-1

    int incumbent_value;
    std::vector<int> incumbent_assignment;
    bool have_incumbent_assignment = false;

    long long nodes = 0;
    bool timed_out = false;
    std::chrono::steady_clock::time_point deadline;

    TreePartitionSearch(const Graph& graph, int kk, int seed_value)
        : g(graph), k(kk), n(graph.n), m(graph.m()), incumbent_value(seed_value) {
        auto deg = g.degrees();
        order.resize(m);
        for (int e = 0; e < m; ++e) order[e] = e;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int da = deg[g.edges[a].first] + deg[g.edges[a].second];
            int db = deg[g.edges[b].first] + deg[g.edges[b].second];
            if (da != db) return da > db;
            return a < b;
        });
        assignment.assign(m, -1);
        unassigned_at = deg;
        both_in.assign(n, std::vector<int>(n, 0));
        cov.assign(n, std::vector<int>(n, 0));
    }

    int find_root(int c, int v) {
        const auto& par = parent[c];
        while (par[v] != v) v = par[v];
        return v;
    }

    struct Undo {
        int cls;
        bool new_class;
        int united_root = -1;  // child root attached, -1 if no union
        int united_into = -1;
        std::vector<int> added_verts;
        std::vector<std::pair<int, int>> both_pairs;
        std::vector<std::pair<int, int>> cov_pairs;
        int comps_delta = 0;    // change to the class component count
        int deficit_delta = 0;  // change to sum over classes of comps-1
    };

    // Try to place edge (by order position) into class c (or a new class
    // when c == classes.size()). Returns undo info, or nullopt when the
    // edge would close a cycle.
    std::optional<Undo> apply(int pos, int c) {
        int e = order[pos];
        auto [u, v] = g.edges[e];
        Undo undo;
        undo.cls = c;
        undo.new_class = c == static_cast<int>(classes.size());
        if (undo.new_class) {
            classes.push_back({});
            if (static_cast<int>(parent.size()) < static_cast<int>(classes.size())) {
                parent.emplace_back(n);
                for (int x = 0; x < n; ++x) parent.back()[x] = x;
            }
        }
        Cls& cls = classes[c];
        bool u_in = (cls.verts >> u) & 1;
        bool v_in = (cls.verts >> v) & 1;
        if (u_in && v_in) {
            int ru = find_root(c, u), rv = find_root(c, v);
            if (ru == rv) {
                if (undo.new_class) classes.pop_back();
                return std::nullopt;  // cycle
            }
            // merging two components: coverage grows for cross pairs
            std::vector<int> side_a, side_b;
            for (int x = 0; x < n; ++x) {
                if (!((cls.verts >> x) & 1)) continue;
                int r = find_root(c, x);
                if (r == ru) side_a.push_back(x);
                else if (r == rv) side_b.push_back(x);
            }
            for (int a : side_a)
                for (int b : side_b) {
                    ++cov[a][b];
                    ++cov[b][a];
                    undo.cov_pairs.emplace_back(a, b);
                }
            parent[c][rv] = ru;
            undo.united_root = rv;
            undo.united_into = ru;
            cls.comps -= 1;
            undo.comps_delta = -1;
            undo.deficit_delta = -1;
        } else {
            auto add_vertex = [&](int w) {
                for (int x = 0; x < n; ++x)
                    if ((cls.verts >> x) & 1) {
                        ++both_in[w][x];
                        ++both_in[x][w];
                        undo.both_pairs.emplace_back(w, x);
                    }
                cls.verts |= std::uint64_t{1} << w;
                undo.added_verts.push_back(w);
            };
            if (u_in && !v_in) {
                add_vertex(v);
                int ru = find_root(c, u);
                parent[c][v] = ru;
                undo.united_root = v;
                undo.united_into = ru;
                // v joins u's component: coverage with that component
                for (int x = 0; x < n; ++x)
                    if (x != v && ((cls.verts >> x) & 1) && find_root(c, x) == ru) {
                        ++cov[v][x];
                        ++cov[x][v];
                        undo.cov_pairs.emplace_back(v, x);
                    }
            } else if (!u_in && v_in) {
                add_vertex(u);
                int rv = find_root(c, v);
                parent[c][u] = rv;
                undo.united_root = u;
                undo.united_into = rv;
                for (int x = 0; x < n; ++x)
                    if (x != u && ((cls.verts >> x) & 1) && find_root(c, x) == rv) {
                        ++cov[u][x];
                        ++cov[x][u];
                        undo.cov_pairs.emplace_back(u, x);
                    }
            } else {
                add_vertex(u);
                add_vertex(v);
                parent[c][v] = u;
                undo.united_root = v;
                undo.united_into = u;
                cls.comps += 1;
                undo.comps_delta = 1;
                // a brand-new class starts at comps=1, which owes nothing
                undo.deficit_delta = undo.new_class ? 0 : 1;
                ++cov[u][v];
                ++cov[v][u];
                undo.cov_pairs.emplace_back(u, v);
            }
        }
        cls.edge_count += 1;
        total_deficit += undo.deficit_delta;
        assignment[pos] = c;
        --unassigned_at[u];
        --unassigned_at[v];
        return undo;
    }

    void revert(int pos, const Undo& undo) {
        int e = order[pos];
        auto [u, v] = g.edges[e];
        ++unassigned_at[u];
        ++unassigned_at[v];
        assignment[pos] = -1;
        total_deficit -= undo.deficit_delta;
        Cls& cls = classes[undo.cls];
        cls.edge_count -= 1;
        cls.comps -= undo.comps_delta;
        for (auto [a, b] : undo.cov_pairs) {
            --cov[a][b];
            --cov[b][a];
        }
        for (auto [a, b] : undo.both_pairs) {
            --both_in[a][b];
            --both_in[b][a];
        }
        if (undo.united_root >= 0) parent[undo.cls][undo.united_root] = undo.united_root;
        for (int w : undo.added_verts) cls.verts &= ~(std::uint64_t{1} << w);
        if (undo.new_class) classes.pop_back();
    }

    // Coverage can only be lost for pairs touching u or v, so the bound
    // final_cov(a,b) <= both_in[a][b] + unassigned(a) + unassigned(b) only
    // needs rechecking there.
    bool coverage_feasible_around(int u, int v) {
        for (int x = 0; x < n; ++x) {
            if (x != u && both_in[u][x] + unassigned_at[u] + unassigned_at[x] < k) return false;
            if (x != v && both_in[v][x] + unassigned_at[v] + unassigned_at[x] < k) return false;
        }
        return true;
    }

    bool coverage_feasible_everywhere() {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (both_in[a][b] + unassigned_at[a] + unassigned_at[b] < k) return false;
        return true;
    }

    void dfs(int pos) {
        if (timed_out) return;
        if ((++nodes & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return;
        }
        if (pos == m) {
            if (total_deficit != 0) return;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (cov[a][b] < k) return;
            int value = static_cast<int>(classes.size());
            if (value > incumbent_value) {
                incumbent_value = value;
                incumbent_assignment = assignment;
                have_incumbent_assignment = true;
            }
            return;
        }
        int remaining_after = m - pos - 1;
        int e = order[pos];
        auto [u, v] = g.edges[e];
        int upper = static_cast<int>(classes.size()) + 1;  // may open one new class here
        for (int c = 0; c < upper; ++c) {
            auto undo = apply(pos, c);
            if (!undo) continue;
            bool ok = total_deficit <= remaining_after;
            if (ok) {
                int optimistic = static_cast<int>(classes.size()) + remaining_after - total_deficit;
                ok = optimistic > incumbent_value;
            }
            if (ok) ok = coverage_feasible_around(u, v);
            if (ok) dfs(pos + 1);
            revert(pos, *undo);
            if (timed_out) return;
        }
    }
};

}  // namespace

SolveResult rmc_exact(const Graph& g, int k, std::int64_t budget_ms) {
    require_simple_connected(g);
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (g.n > 62) throw std::invalid_argument("exact solver is limited to n <= 62");

    SolveResult out;
    if (g.n <= 1) {
        out.exact = 0;
        out.best_value = 0;
        return out;
    }

    auto packing = spanning_tree_packing(g, k);
    if (!packing.success)
        throw InfeasibleError("no valid coloring exists: fewer than k spanning trees pack",
                              packing.witness);

    EdgeColoring seed = baseline_coloring(g, k);
    int seed_value = seed.colors_used();
    if (k == 1) {
        EdgeColoring greedy = mc_heuristic(g);
        if (greedy.colors_used() > seed_value) {
            seed = greedy;
            seed_value = greedy.colors_used();
        }
    }

    TreePartitionSearch search(g, k, seed_value);
    search.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
    if (search.coverage_feasible_everywhere()) search.dfs(0);

    out.nodes = search.nodes;
    out.timed_out = search.timed_out;
    out.best_value = search.incumbent_value;
    if (search.have_incumbent_assignment) {
        EdgeColoring witness;
        witness.color.assign(g.m(), 0);
        for (int pos = 0; pos < g.m(); ++pos)
            witness.color[search.order[pos]] = search.incumbent_assignment[pos] + 1;
        out.witness = canonicalize(witness);
    } else {
        out.witness = canonicalize(seed);
    }
    if (!search.timed_out) out.exact = search.incumbent_value;
    return out;
}

BoundsReport bounds(const Graph& g, int k) {
    require_simple_connected(g);
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    BoundsReport out;
    out.k = k;
    auto packing = spanning_tree_packing(g, k);
    out.feasible = packing.success;
    if (!out.feasible) {
        out.infeasibility_witness = packing.witness;
        return out;
    }
    const int n = g.n;
    const int m = g.m();
    auto met = metrics(g);
    out.lower = BoundValue{m - k * (n - 2), "spanning-tree-baseline"};
    out.uppers.push_back({m - k * (n - 2) + met.common_neighbor_min, "common-neighbor-minimum"});
    out.uppers.push_back({m - k * (n - 2) + vertex_connectivity(g), "vertex-connectivity"});
    out.uppers.push_back({m - (k - 1) * (n - 2), "coarse-waste"});
    if (auto cls = classify_exact(g, k))
        out.exact = BoundValue{cls->value, cls->predicate};
    return out;
}

std::optional<ExactClass> classify_exact(const Graph& g, int k) {
    require_simple_connected(g);
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    auto packing = spanning_tree_packing(g, k);
    if (!packing.success)
        throw InfeasibleError("exact classification needs k spanning trees", packing.witness);

    const int n = g.n;
    const int m = g.m();
    auto met = metrics(g);

    if (k == 1) {
        if (n < 3) return std::nullopt;
        int value = m - n + 2;
        if (met.triangle_free) return ExactClass{value, "triangle-free"};
        if (met.diameter && *met.diameter >= 3) return ExactClass{value, "diameter>=3"};
        if (!met.cut_vertices.empty()) return ExactClass{value, "cut-vertex"};
        if (vertex_connectivity(complement(g)) >= 4)
            return ExactClass{value, "complement-4-connected"};
        if (n >= 4 && static_cast<long long>(n - met.max_degree) * (n - 3) >
                          2LL * m - 3LL * (n - 1))
            return ExactClass{value, "max-degree-inequality"};
        return std::nullopt;
    }

    int value = m - k * (n - 2);
    if (met.triangle_free) return ExactClass{value, "triangle-free"};
    if (met.diameter && *met.diameter >= 3) return ExactClass{value, "diameter>=3"};
    if (!met.cut_vertices.empty()) return ExactClass{value, "cut-vertex"};
    if (met.edge_connectivity <= k) return ExactClass{value, "edge-connectivity-k"};
    return std::nullopt;
}

std::pair<int, int> k_range(const Graph& g) {
    require_simple_connected(g);
    if (g.n < 2) throw std::invalid_argument("k range needs n >= 2");
    int t = stp_number(g);
    if (t > g.n / 2)
        throw std::logic_error("packing number exceeded n/2 on a simple graph");
    return {1, t};
}

ProfileSolution extremal_profile(const ProfileProblem& p) {
    if (p.domain_max < 3) throw std::invalid_argument("domain_max must be >= 3");
    if (p.t < 1) throw std::invalid_argument("t must be >= 1");
    if (p.d >= static_cast<long long>(p.t) * choose2(p.domain_max))
        throw std::invalid_argument("problem shape requires d < t*C(domain_max,2)");
    long long f_max = static_cast<long long>(p.t) * choose2(p.domain_max - 1);
    if (p.d > f_max)
        throw std::invalid_argument("infeasible: constraint unreachable even at all-domain_max");

    long long target = std::max(p.d, 0LL);
    if (target > 5'000'000)
        throw std::invalid_argument("constraint bound too large for the profile DP");

    const long long INF = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> dp(target + 1, INF);
    dp[0] = 0;
    for (int i = 0; i < p.t; ++i) {
        std::vector<long long> next(target + 1, INF);
        for (long long f = 0; f <= target; ++f) {
            if (dp[f] == INF) continue;
            for (int x = 3; x <= p.domain_max; ++x) {
                long long nf = std::min(target, f + choose2(x - 1));
                next[nf] = std::min(next[nf], dp[f] + (x - 2));
            }
        }
        dp = std::move(next);
    }
    if (dp[target] == INF) throw std::logic_error("profile DP missed a feasible solution");

    ProfileSolution out;
    out.optimum = dp[target];

    // A canonical witness of the same value exists in the shape family
    // (full entries, one middle value, then threes).
    for (int r = 1; r <= p.t && out.witness.empty(); ++r) {
        for (int x = 3; x <= p.domain_max; ++x) {
            long long gval = static_cast<long long>(r - 1) * (p.domain_max - 2) + (x - 2) +
                             (p.t - r);
            long long fval = static_cast<long long>(r - 1) * choose2(p.domain_max - 1) +
                             choose2(x - 1) + (p.t - r);
            if (gval == out.optimum && fval >= p.d) {
                out.witness.assign(r - 1, p.domain_max);
                out.witness.push_back(x);
                out.witness.insert(out.witness.end(), p.t - r, 3);
                break;
            }
        }
    }
    if (static_cast<int>(out.witness.size()) != p.t)
        throw std::logic_error("no canonical-shape witness matched the optimum");
    return out;
}

bool profile_monotone_check(long long d, int domain_max, int t, int r) {
    if (t < r) throw std::invalid_argument("monotone check needs t >= r");
    auto at_t = extremal_profile({d, domain_max, t});
    auto at_r = extremal_profile({d, domain_max, r});
    return at_r.optimum <= at_t.optimum;
}

bool binomial_gap_check(long long a, long long b, long long c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("arguments must be positive");
    if (a + b != c) throw std::invalid_argument("check needs a + b = c");
    if (c + a - 1 < 2) throw std::invalid_argument("check needs c + a - 1 >= 2");
    return choose2(c) - choose2(a) >= b;
}

EdgeColoring mc_heuristic(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("heuristic needs a connected graph");
    EdgeColoring coloring;
    coloring.color.resize(g.m());
    for (int e = 0; e < g.m(); ++e) coloring.color[e] = e + 1;

    auto adj = g.adjacency();
    for (auto& list : adj) std::sort(list.begin(), list.end());

    while (true) {
        auto check = is_rmc_k(g, coloring, 1);
        if (check.ok) break;
        auto [u, v] = *check.failing_pair;
        // shortest u-v path, neighbors in ascending order
        std::vector<int> pred_edge(g.n, -1), pred_vertex(g.n, -1);
        std::vector<bool> seen(g.n, false);
        std::queue<int> q;
        q.push(u);
        seen[u] = true;
        while (!q.empty() && !seen[v]) {
            int x = q.front();
            q.pop();
            for (const auto& [w, e] : adj[x])
                if (!seen[w]) {
                    seen[w] = true;
                    pred_edge[w] = e;
                    pred_vertex[w] = x;
                    q.push(w);
                }
        }
        std::set<int> labels;
        for (int x = v; x != u; x = pred_vertex[x]) labels.insert(coloring.color[pred_edge[x]]);
        int target = *labels.begin();
        for (int e = 0; e < g.m(); ++e)
            if (labels.count(coloring.color[e])) coloring.color[e] = target;
    }
    return canonicalize(coloring);
}

}  // namespace rmc
