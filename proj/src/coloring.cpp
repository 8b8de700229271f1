#include "rmc/coloring.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "rmc/dsu.hpp"
#include "rmc/tree_packing.hpp"

namespace rmc {

int EdgeColoring::colors_used() const {
    std::set<int> labels(color.begin(), color.end());
    return static_cast<int>(labels.size());
}

EdgeColoring canonicalize(const EdgeColoring& c) {
    std::map<int, int> remap;
    EdgeColoring out;
    out.color.reserve(c.color.size());
    int next = 1;
    for (int label : c.color) {
        auto it = remap.find(label);
        if (it == remap.end()) it = remap.emplace(label, next++).first;
        out.color.push_back(it->second);
    }
    return out;
}

namespace {

void check_total(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.color.size()) != g.m())
        throw std::invalid_argument("coloring is not total on the edge set");
    for (int label : c.color)
        if (label < 1) throw std::invalid_argument("color labels must be positive");
}

std::map<int, std::vector<int>> edges_by_color(const EdgeColoring& c) {
    std::map<int, std::vector<int>> by;
    for (int e = 0; e < static_cast<int>(c.color.size()); ++e) by[c.color[e]].push_back(e);
    return by;
}

}  // namespace

ColorClassSummary color_classes(const Graph& g, const EdgeColoring& c) {
    check_total(g, c);
    ColorClassSummary out;
    out.nontrivial_color_degree.assign(g.n, 0);

    for (auto& [label, eids] : edges_by_color(c)) {
        ColorClass cls;
        cls.label = label;
        cls.edge_ids = eids;
        std::set<int> verts;
        for (int e : eids) {
            verts.insert(g.edges[e].first);
            verts.insert(g.edges[e].second);
        }
        cls.vertices.assign(verts.begin(), verts.end());

        std::map<int, int> local;
        for (int v : cls.vertices) local.emplace(v, static_cast<int>(local.size()));
        DisjointSets dsu(static_cast<int>(local.size()));
        bool acyclic = true;
        for (int e : eids)
            if (!dsu.unite(local[g.edges[e].first], local[g.edges[e].second])) acyclic = false;
        cls.components = dsu.components;
        cls.is_tree = acyclic && cls.components == 1;
        cls.is_trivial = eids.size() == 1;

        if (!cls.is_trivial)
            for (int v : cls.vertices) ++out.nontrivial_color_degree[v];
        out.classes.push_back(std::move(cls));
    }

    out.colors_used = static_cast<int>(out.classes.size());
    out.waste = g.m() - out.colors_used;
    return out;
}

namespace {

// Component id of every vertex within each color class; vertices not in
// the class get -1. Component ids are usable for same-component tests only.
std::vector<std::vector<int>> per_color_components(const Graph& g, const EdgeColoring& c,
                                                   std::vector<int>& labels) {
    auto by = edges_by_color(c);
    std::vector<std::vector<int>> comp;
    comp.reserve(by.size());
    labels.clear();
    for (auto& [label, eids] : by) {
        DisjointSets dsu(g.n);
        for (int e : eids) dsu.unite(g.edges[e].first, g.edges[e].second);
        std::vector<int> ids(g.n, -1);
        std::vector<char> touched(g.n, 0);
        for (int e : eids) {
            touched[g.edges[e].first] = 1;
            touched[g.edges[e].second] = 1;
        }
        for (int v = 0; v < g.n; ++v)
            if (touched[v]) ids[v] = dsu.find(v);
        comp.push_back(std::move(ids));
        labels.push_back(label);
    }
    return comp;
}

}  // namespace

RmcCheck is_rmc_k(const Graph& g, const EdgeColoring& c, int k) {
    check_total(g, c);
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    std::vector<int> labels;
    auto comp = per_color_components(g, c, labels);

    std::vector<int> coverage(static_cast<size_t>(g.n) * g.n, 0);
    for (const auto& ids : comp) {
        // group vertices of this class by component
        std::map<int, std::vector<int>> groups;
        for (int v = 0; v < g.n; ++v)
            if (ids[v] >= 0) groups[ids[v]].push_back(v);
        for (const auto& [root, verts] : groups) {
            (void)root;
            for (size_t a = 0; a < verts.size(); ++a)
                for (size_t b = a + 1; b < verts.size(); ++b)
                    ++coverage[static_cast<size_t>(verts[a]) * g.n + verts[b]];
        }
    }

    RmcCheck out;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int cov = coverage[static_cast<size_t>(u) * g.n + v];
            if (cov < k) {
                out.ok = false;
                out.failing_pair = {u, v};
                out.failing_coverage = cov;
                return out;
            }
        }
    out.ok = true;
    return out;
}

int pair_coverage(const Graph& g, const EdgeColoring& c, int u, int v) {
    check_total(g, c);
    if (u == v) throw std::invalid_argument("pair coverage needs distinct vertices");
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw std::invalid_argument("vertex out of range");
    std::vector<int> labels;
    auto comp = per_color_components(g, c, labels);
    int cov = 0;
    for (const auto& ids : comp)
        if (ids[u] >= 0 && ids[u] == ids[v]) ++cov;
    return cov;
}

EdgeColoring baseline_coloring(const Graph& g, int k) {
    if (!g.is_connected()) throw std::invalid_argument("baseline coloring needs a connected graph");
    auto packing = spanning_tree_packing(g, k);
    if (!packing.success)
        throw InfeasibleError("no " + std::to_string(k) + " edge-disjoint spanning trees",
                              packing.witness);
    EdgeColoring out;
    out.color.assign(g.m(), 0);
    for (int i = 0; i < k; ++i)
        for (int e : packing.trees[i]) out.color[e] = i + 1;
    int next = k + 1;
    for (int e = 0; e < g.m(); ++e)
        if (out.color[e] == 0) out.color[e] = next++;
    return out;
}

EdgeColoring perfectly_connected_coloring(const PerfectlyConnectedGraph& pg) {
    const auto& d = pg.data;
    if (d.k < 1 || d.s < 2 || static_cast<int>(d.part_trees.size()) != d.s ||
        static_cast<int>(d.hub_edges.size()) != d.s)
        throw std::invalid_argument("construction data missing or malformed");
    EdgeColoring out;
    out.color.assign(pg.graph.m(), 0);
    // class i: first tree of part i plus hub edge 1 of part i
    for (int i = 0; i < d.s; ++i) {
        for (int e : d.part_trees[i][0]) out.color[e] = i + 1;
        out.color[d.hub_edges[i][0]] = i + 1;
    }
    // class s+j-1: all parts' tree j plus their hub edges j
    for (int j = 2; j <= d.k; ++j) {
        int label = d.s + j - 1;
        for (int i = 0; i < d.s; ++i) {
            for (int e : d.part_trees[i][j - 1]) out.color[e] = label;
            out.color[d.hub_edges[i][j - 1]] = label;
        }
    }
    int next = d.s + d.k;
    for (int e = 0; e < pg.graph.m(); ++e)
        if (out.color[e] == 0) out.color[e] = next++;
    return out;
}

EdgeColoring improve_coloring(const Graph& g, const EdgeColoring& c, int k) {
    auto check = is_rmc_k(g, c, k);
    if (!check.ok) throw std::invalid_argument("improve_coloring needs a valid input coloring");

    EdgeColoring work = c;
    int next_label = 0;
    for (int label : work.color) next_label = std::max(next_label, label);
    ++next_label;

    bool moved = true;
    while (moved) {
        moved = false;
        auto by = edges_by_color(work);
        for (auto& [label, eids] : by) {
            if (eids.size() <= 1) continue;

            // component split: keep the component with the smallest minimum
            // vertex id, recolor the next one
            DisjointSets dsu(g.n);
            for (int e : eids) dsu.unite(g.edges[e].first, g.edges[e].second);
            std::map<int, std::vector<int>> comp_edges;
            for (int e : eids) comp_edges[dsu.find(g.edges[e].first)].push_back(e);
            if (comp_edges.size() > 1) {
                std::vector<std::pair<int, const std::vector<int>*>> comps;
                for (const auto& [root, edges_in] : comp_edges) {
                    int mn = g.n;
                    for (int e : edges_in)
                        mn = std::min({mn, g.edges[e].first, g.edges[e].second});
                    comps.emplace_back(mn, &edges_in);
                }
                std::sort(comps.begin(), comps.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                for (int e : *comps[1].second) work.color[e] = next_label;
                ++next_label;
                moved = true;
                break;
            }

            // cycle break: recolor the highest edge id lying on a cycle,
            // i.e. the highest non-bridge edge (class is connected here, so
            // a cycle exists iff |E| >= |V|)
            std::set<int> verts;
            for (int e : eids) {
                verts.insert(g.edges[e].first);
                verts.insert(g.edges[e].second);
            }
            if (eids.size() >= verts.size()) {
                for (auto it = eids.rbegin(); it != eids.rend(); ++it) {
                    DisjointSets probe(g.n);
                    for (int e : eids)
                        if (e != *it) probe.unite(g.edges[e].first, g.edges[e].second);
                    int root = probe.find(*verts.begin());
                    bool still_connected = true;
                    for (int v : verts)
                        if (probe.find(v) != root) {
                            still_connected = false;
                            break;
                        }
                    if (still_connected) {
                        work.color[*it] = next_label;
                        ++next_label;
                        moved = true;
                        break;
                    }
                }
                if (moved) break;
            }
        }
    }
    return canonicalize(work);
}

bool nontrivial_color_degree_check(const Graph& g, const EdgeColoring& c, int k) {
    if (k < 2) throw std::invalid_argument("nontrivial color degree check needs k >= 2");
    auto check = is_rmc_k(g, c, k);
    if (!check.ok) throw std::invalid_argument("check needs a valid coloring");
    auto summary = color_classes(g, c);
    for (int v = 0; v < g.n; ++v)
        if (summary.nontrivial_color_degree[v] < k) return false;
    return true;
}

}  // namespace rmc
