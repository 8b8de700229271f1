#include "rmc/normalizer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rmc/dsu.hpp"

namespace rmc {

namespace {

struct ClassView {
    int label;
    std::vector<int> edge_ids;
    std::set<int> vertices;
    bool connected;
    bool tree;
};

std::vector<ClassView> class_views(const Graph& g, const EdgeColoring& c) {
    std::map<int, std::vector<int>> by;
    for (int e = 0; e < g.m(); ++e) by[c.color[e]].push_back(e);
    std::vector<ClassView> out;
    for (auto& [label, eids] : by) {
        ClassView cv;
        cv.label = label;
        cv.edge_ids = eids;
        for (int e : eids) {
            cv.vertices.insert(g.edges[e].first);
            cv.vertices.insert(g.edges[e].second);
        }
        DisjointSets dsu(g.n);
        bool acyclic = true;
        for (int e : eids)
            if (!dsu.unite(g.edges[e].first, g.edges[e].second)) acyclic = false;
        int root = dsu.find(*cv.vertices.begin());
        cv.connected = true;
        for (int v : cv.vertices)
            if (dsu.find(v) != root) {
                cv.connected = false;
                break;
            }
        cv.tree = cv.connected && acyclic;
        out.push_back(std::move(cv));
    }
    return out;
}

bool crosses(const ClassView& a, const ClassView& b) {
    bool a_minus_b = false, b_minus_a = false, common = false;
    for (int v : a.vertices)
        (b.vertices.count(v) ? common : a_minus_b) = true;
    for (int v : b.vertices)
        if (!a.vertices.count(v)) {
            b_minus_a = true;
            break;
        }
    return a_minus_b && b_minus_a && common;
}

}  // namespace

std::optional<std::pair<int, int>> find_crossing_pair(const Graph& g, const EdgeColoring& c) {
    auto views = class_views(g, c);
    for (const auto& cv : views)
        if (!cv.connected)
            throw std::invalid_argument("crossing-pair search needs connected classes (class " +
                                        std::to_string(cv.label) + " is not)");
    for (size_t a = 0; a < views.size(); ++a)
        for (size_t b = a + 1; b < views.size(); ++b)
            if (crosses(views[a], views[b])) return std::make_pair(views[a].label, views[b].label);
    return std::nullopt;
}

std::pair<Graph, EdgeColoring> merge_step(const Graph& g, const EdgeColoring& c, int i, int j) {
    auto views = class_views(g, c);
    const ClassView* ci = nullptr;
    const ClassView* cj = nullptr;
    for (const auto& cv : views) {
        if (cv.label == i) ci = &cv;
        if (cv.label == j) cj = &cv;
    }
    if (!ci || !cj || i == j) throw std::invalid_argument("merge_step needs two existing classes");
    if (!ci->connected || !cj->connected)
        throw std::invalid_argument("merge_step needs connected classes");
    if (!crosses(*ci, *cj)) throw std::invalid_argument("classes do not form a crossing pair");

    std::vector<int> uni, inter;
    std::set_union(ci->vertices.begin(), ci->vertices.end(), cj->vertices.begin(),
                   cj->vertices.end(), std::back_inserter(uni));
    std::set_intersection(ci->vertices.begin(), ci->vertices.end(), cj->vertices.begin(),
                          cj->vertices.end(), std::back_inserter(inter));

    Graph out(g.n);
    EdgeColoring coloring;
    std::set<int> dropped(ci->edge_ids.begin(), ci->edge_ids.end());
    dropped.insert(cj->edge_ids.begin(), cj->edge_ids.end());
    for (int e = 0; e < g.m(); ++e) {
        if (dropped.count(e)) continue;
        out.add_edge(g.edges[e].first, g.edges[e].second);
        coloring.color.push_back(c.color[e]);
    }

    // Replacement trees are stars centered at the minimum vertex id (the
    // breadth-first tree of the complete graph on the set).
    std::vector<std::pair<int, int>> t1_edges;
    for (size_t x = 1; x < uni.size(); ++x) t1_edges.emplace_back(uni[0], uni[x]);
    for (const auto& [u, v] : t1_edges) {
        out.add_edge(u, v);
        coloring.color.push_back(i);
    }
    for (size_t x = 1; x < inter.size(); ++x) {
        out.add_edge(inter[0], inter[x]);
        coloring.color.push_back(j);
    }

    // Edge-count preservation: tree classes always balance exactly
    // (|V_i| + |V_j| = |union| + |intersection|); classes that carried
    // cycles leave a deficit, covered by parallel copies of T1 edges.
    long long before = static_cast<long long>(ci->edge_ids.size()) + cj->edge_ids.size();
    long long after = static_cast<long long>(uni.size()) - 1 +
                      (inter.size() > 1 ? static_cast<long long>(inter.size()) - 1 : 0);
    for (long long surplus = before - after, t = 0; t < surplus; ++t) {
        const auto& [u, v] = t1_edges[t % t1_edges.size()];
        out.add_edge(u, v);
        coloring.color.push_back(i);
    }

    if (out.m() != g.m()) throw std::logic_error("merge step changed the edge count");
    return {std::move(out), std::move(coloring)};
}

bool class_order_precedes(const std::vector<int>& a, const std::vector<int>& b) {
    size_t h = 0;
    while (h < a.size() && h < b.size() && a[h] == b[h]) ++h;
    if (h < a.size() && h < b.size()) return a[h] < b[h];
    return a.size() < b.size();  // proper prefix precedes the longer sequence
}

namespace {

std::vector<int> class_orders(const Graph& g, const EdgeColoring& c) {
    std::map<int, std::set<int>> verts;
    for (int e = 0; e < g.m(); ++e) {
        verts[c.color[e]].insert(g.edges[e].first);
        verts[c.color[e]].insert(g.edges[e].second);
    }
    std::vector<int> orders;
    for (const auto& [label, vs] : verts) orders.push_back(static_cast<int>(vs.size()));
    std::sort(orders.rbegin(), orders.rend());
    return orders;
}

}  // namespace

NormalizationTrace normalize(const Graph& g, const EdgeColoring& c, int k, bool verify_each_step) {
    auto check = is_rmc_k(g, c, k);
    if (!check.ok) throw std::invalid_argument("normalize needs a valid coloring");
    // Tree classes (not merely connected) are required for the spanning-tree
    // guarantee: a cyclic class that never crosses anything would survive as
    // a non-tree. improve_coloring establishes this.
    for (const auto& cv : class_views(g, c))
        if (!cv.tree)
            throw std::invalid_argument(
                "normalize needs tree classes; run improve_coloring first");

    NormalizationTrace trace;
    Graph cur = g;
    EdgeColoring coloring = canonicalize(c);
    const long long step_cap = 4LL * (g.m() + 1) * (g.n + 1);

    while (true) {
        auto pair = find_crossing_pair(cur, coloring);
        if (!pair) break;

        NormalizeStep step;
        step.color_i = pair->first;
        step.color_j = pair->second;
        step.order_before = class_orders(cur, coloring);

        auto [next_graph, next_coloring] = merge_step(cur, coloring, pair->first, pair->second);
        if (next_graph.n != cur.n || next_graph.m() != cur.m())
            throw std::logic_error("normalize step changed vertex or edge count");
        cur = std::move(next_graph);
        coloring = canonicalize(next_coloring);

        step.order_after = class_orders(cur, coloring);
        if (!class_order_precedes(step.order_before, step.order_after))
            throw std::logic_error("class-order sequence failed to increase at step " +
                                   std::to_string(trace.steps.size()));
        if (verify_each_step && !is_rmc_k(cur, coloring, k).ok)
            throw std::logic_error("coloring lost validity at step " +
                                   std::to_string(trace.steps.size()));
        trace.steps.push_back(std::move(step));
        if (static_cast<long long>(trace.steps.size()) > step_cap)
            throw std::logic_error("normalize exceeded its step bound");
    }

    auto views = class_views(cur, coloring);
    for (const auto& cv : views)
        if (cv.tree && static_cast<int>(cv.vertices.size()) == cur.n)
            trace.spanning_classes.push_back(cv.label);
    if (static_cast<int>(trace.spanning_classes.size()) < k)
        throw std::logic_error("normalize ended with fewer than k spanning tree classes");

    trace.final_graph = std::move(cur);
    trace.final_coloring = std::move(coloring);
    return trace;
}

}  // namespace rmc
