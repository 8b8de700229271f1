#ifndef RMC_TREE_PACKING_HPP
#define RMC_TREE_PACKING_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "rmc/graph.hpp"

namespace rmc {

// Thrown when an operation needs k edge-disjoint spanning trees that the
// graph cannot provide; carries the violating partition P with
// e(G/P) < k(|G/P|-1).
struct InfeasibleError : std::runtime_error {
    VertexPartition witness;
    InfeasibleError(const std::string& what, VertexPartition w)
        : std::runtime_error(what), witness(std::move(w)) {}
};

struct PackingOutcome {
    bool success = false;
    std::vector<std::vector<int>> trees;  // k edge-id sets when success
    VertexPartition witness;              // violating partition otherwise
};

// Matroid-union augmentation: maintain k edge-disjoint forests, insert edges
// in ascending id order via exchange-chain searches, preferring the
// lowest-index forest. On failure the closure of the non-augmenting edges
// yields the violating partition. g must be connected, k >= 1. A one-vertex
// graph packs k empty trees.
PackingOutcome spanning_tree_packing(const Graph& g, int k);

// Largest k with a packing; certified by a successful pack at k (n >= 2,
// connected). The search starts from the counting/degree upper bound
// min(delta, floor(m/(n-1))) and walks down until a pack succeeds.
int stp_number(const Graph& g);

struct TauResult {
    long long num = 0;
    long long den = 1;  // reduced, den >= 1
    VertexPartition witness;
};

// Exact min over all vertex partitions with >= 2 blocks of
// e(G/P)/(|G/P|-1), by full partition enumeration. Requires 2 <= n <=
// budget (Bell numbers grow fast; 12 is about 4.2M partitions).
TauResult tau_exact(const Graph& g, int budget = 12);

// True iff p certifies that no k edge-disjoint spanning trees exist,
// i.e. e(G/P) < k(|G/P|-1).
bool verify_nwt_certificate(const Graph& g, int k, const VertexPartition& p);

struct PackingResult {
    int t_number = 0;
    std::vector<std::vector<int>> trees;
    std::optional<long long> tau_num;
    std::optional<long long> tau_den;
    std::optional<VertexPartition> tau_witness;
};

// Aggregate used by the CLI: T(G) with a witness packing, plus exact tau
// when n fits in the enumeration budget.
PackingResult analyze_packing(const Graph& g, int tau_budget = 12);

}  // namespace rmc

#endif
