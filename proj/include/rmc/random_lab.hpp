#ifndef RMC_RANDOM_LAB_HPP
#define RMC_RANDOM_LAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmc/graph.hpp"

namespace rmc {

std::uint64_t splitmix64(std::uint64_t x);

// G(n,p) with counter-based per-edge randomness: each of the C(n,2)
// candidate edges draws from a hash of (seed, edge index), so samples are
// reproducible under any evaluation order.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// Seed for trial i of a batch keyed by base_seed.
std::uint64_t trial_seed(std::uint64_t base_seed, int trial_index);

struct TrialRecord {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int m = 0;
    int min_degree = 0;
    int t_number = 0;  // 0 when disconnected
    bool has_rmc_k = false;
    std::optional<int> baseline_colors;  // m - k(n-2) when feasible
    bool stp_formula_agrees = false;     // T == min(delta, floor(m/(n-1)))
};

// T is computed by the packing module; the min(delta, floor(m/(n-1)))
// formula only enters as the agreement flag under test.
TrialRecord run_trial(int n, double p, int k, std::uint64_t seed);

// Fraction of trials whose packing number matches the degree/count formula.
double check_stp_formula(int n, double p, int trials, std::uint64_t seed);

enum class ThresholdRegime {
    large_f,     // f(n) on the n log n scale or above, k = o(n)
    small_f,     // f(n) = o(n log n), k = o(n)
    degenerate,  // k on the n scale: every p works only at p = 1
};

// Published threshold scales: (f + kn)/n^2, min(k/n, log n/n), and 1.
// f_value is required for the large_f case. Throws when the parameters
// match no case (k >= floor(n/2) outside the degenerate regime).
double predicted_threshold(int n, int k, ThresholdRegime regime,
                           std::optional<double> f_value = std::nullopt);

struct SweepPoint {
    double p = 0.0;
    int trials = 0;
    int successes = 0;
    double frequency = 0.0;
};

struct SweepReport {
    int n = 0;
    int k = 0;
    std::string property = "has-rmc-k";
    std::vector<SweepPoint> points;
    std::optional<double> crossing_p;  // interpolated 50% crossing
    std::optional<double> predicted_p;
    double beta = 0.0;  // 2/(log e - log 2)
};

// Empirical frequency of "k spanning trees pack" over a p grid; success is
// decided by the tree-packing module per trial. Grid must be strictly
// increasing.
SweepReport sweep(int n, int k, const std::vector<double>& p_grid, int trials_per_p,
                  std::uint64_t seed, std::optional<double> predicted_p = std::nullopt);

std::vector<double> geometric_grid(double lo, double hi, int points);

}  // namespace rmc

#endif
