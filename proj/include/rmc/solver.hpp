#ifndef RMC_SOLVER_HPP
#define RMC_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmc/coloring.hpp"
#include "rmc/graph.hpp"
#include "rmc/tree_packing.hpp"

namespace rmc {

struct BoundValue {
    int value = 0;
    std::string source;
};

struct BoundsReport {
    int k = 0;
    bool feasible = false;          // k spanning trees pack
    std::optional<BoundValue> lower;
    std::vector<BoundValue> uppers;
    std::optional<BoundValue> exact;
    std::optional<VertexPartition> infeasibility_witness;
};

// lower: m - k(n-2) from the spanning-tree baseline. uppers: common-neighbor
// bound m - k(n-2) + min_uv |N(u) n N(v)|, connectivity bound
// m - k(n-2) + kappa(G), and the coarse bound m - (k-1)(n-2).
BoundsReport bounds(const Graph& g, int k);

// Exact-value predicates: when one holds (and k spanning trees pack), the
// maximum color count is exactly m - k(n-2).
// k == 1 (n >= 3): complement 4-connected; triangle-free; the max-degree
// inequality (n-Delta)(n-3) > 2m - 3(n-1) for n >= 4; diameter >= 3; cut
// vertex. k >= 2: triangle-free; diameter >= 3; cut vertex; edge
// connectivity exactly k.
struct ExactClass {
    int value = 0;
    std::string predicate;
};
std::optional<ExactClass> classify_exact(const Graph& g, int k);

// Feasible k interval (1, T(G)) for connected simple graphs; checks
// T(G) <= floor(n/2).
std::pair<int, int> k_range(const Graph& g);

struct SolveResult {
    std::optional<int> exact;
    EdgeColoring witness;           // best coloring found (valid even on timeout)
    int best_value = 0;             // certified lower bound = colors of witness
    bool timed_out = false;
    long long nodes = 0;
};

// Exact maximum number of colors over partitions of E into tree classes
// covering every pair at least k times, by branch and bound. Any valid
// coloring converts to tree-class form without losing colors (split a
// disconnected class / recolor one cycle edge with a fresh color), so the
// tree-partition optimum is the true optimum. Classes may pass through
// disconnected forest states during the search and must be connected when
// complete. Requires g connected, simple, n <= 62, and a k-packing to
// exist (throws InfeasibleError with witness otherwise).
SolveResult rmc_exact(const Graph& g, int k, std::int64_t budget_ms = 60000);

// Integer-profile optimizer: minimize sum(x_i - 2) subject to
// sum C(x_i - 1, 2) >= d with x_i in {3..domain_max}, solved by dynamic
// programming; the reported witness has the canonical shape
// (domain_max x (r-1), x, 3 x (t-r)).
struct ProfileProblem {
    long long d = 0;
    int domain_max = 0;  // >= 3
    int t = 0;           // sequence length, >= 1
};

struct ProfileSolution {
    long long optimum = 0;          // minimal g
    std::vector<int> witness;       // length t, canonical shape
};

ProfileSolution extremal_profile(const ProfileProblem& p);

// True iff the optimum at length r is <= the optimum at length t (t >= r,
// both feasible). Must always hold.
bool profile_monotone_check(long long d, int domain_max, int t, int r);

// C(c,2) - C(a,2) >= b for positive a,b,c with a+b=c and c+a-1 >= 2.
bool binomial_gap_check(long long a, long long b, long long c);

// Greedy single-cover coloring: start all-trivial, repeatedly merge the
// classes along a shortest path of the first uncovered pair. Valid by
// construction; the color count is reported as-is and seeds the solver
// incumbent for k = 1.
EdgeColoring mc_heuristic(const Graph& g);

}  // namespace rmc

#endif
