#include "rmc/random_lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rmc/tree_packing.hpp"

namespace rmc {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

namespace {

double unit_double(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    Graph g(n);
    std::uint64_t idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx) {
            std::uint64_t h = splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (idx + 1)));
            if (unit_double(h) < p) g.add_edge(u, v);
        }
    return g;
}

std::uint64_t trial_seed(std::uint64_t base_seed, int trial_index) {
    return splitmix64(base_seed ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(trial_index) + 1)));
}

TrialRecord run_trial(int n, double p, int k, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("trials need n >= 2");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    TrialRecord rec;
    rec.n = n;
    rec.p = p;
    rec.seed = seed;

    Graph g = sample_gnp(n, p, seed);
    rec.m = g.m();
    auto deg = g.degrees();
    rec.min_degree = *std::min_element(deg.begin(), deg.end());
    rec.t_number = g.is_connected() ? stp_number(g) : 0;
    rec.has_rmc_k = rec.t_number >= k;
    if (rec.has_rmc_k) rec.baseline_colors = rec.m - k * (n - 2);
    rec.stp_formula_agrees = rec.t_number == std::min(rec.min_degree, rec.m / (n - 1));
    return rec;
}

double check_stp_formula(int n, double p, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    int agree = 0;
    for (int t = 0; t < trials; ++t)
        if (run_trial(n, p, 1, trial_seed(seed, t)).stp_formula_agrees) ++agree;
    return static_cast<double>(agree) / trials;
}

double predicted_threshold(int n, int k, ThresholdRegime regime, std::optional<double> f_value) {
    if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2 and k >= 1");
    switch (regime) {
        case ThresholdRegime::large_f: {
            if (!f_value)
                throw std::invalid_argument("the n log n regime needs the f(n) value");
            if (k >= n / 2)
                throw std::invalid_argument("parameters match no case: k is not small next to n");
            return (*f_value + static_cast<double>(k) * n) / (static_cast<double>(n) * n);
        }
        case ThresholdRegime::small_f:
            if (k >= n / 2)
                throw std::invalid_argument("parameters match no case: k is not small next to n");
            return std::min(static_cast<double>(k) / n, std::log(static_cast<double>(n)) / n);
        case ThresholdRegime::degenerate:
            return 1.0;
    }
    throw std::invalid_argument("unknown regime");
}

SweepReport sweep(int n, int k, const std::vector<double>& p_grid, int trials_per_p,
                  std::uint64_t seed, std::optional<double> predicted_p) {
    if (p_grid.empty()) throw std::invalid_argument("empty p grid");
    for (size_t i = 0; i + 1 < p_grid.size(); ++i)
        if (!(p_grid[i] < p_grid[i + 1]))
            throw std::invalid_argument("p grid must be strictly increasing");
    if (trials_per_p < 1) throw std::invalid_argument("need at least one trial per point");

    SweepReport rep;
    rep.n = n;
    rep.k = k;
    rep.predicted_p = predicted_p;
    rep.beta = 2.0 / (1.0 - std::log(2.0));  // log e - log 2, natural logs

    for (size_t i = 0; i < p_grid.size(); ++i) {
        std::uint64_t point_seed = splitmix64(seed ^ (0x5851F42D4C957F2DULL * (i + 1)));
        SweepPoint pt;
        pt.p = p_grid[i];
        pt.trials = trials_per_p;
        for (int t = 0; t < trials_per_p; ++t) {
            Graph g = sample_gnp(n, pt.p, trial_seed(point_seed, t));
            if (!g.is_connected()) continue;
            if (spanning_tree_packing(g, k).success) ++pt.successes;
        }
        pt.frequency = static_cast<double>(pt.successes) / trials_per_p;
        rep.points.push_back(pt);
    }

    // First 50% crossing, linearly interpolated.
    if (!rep.points.empty() && rep.points.front().frequency >= 0.5) {
        rep.crossing_p = rep.points.front().p;
    } else {
        for (size_t i = 0; i + 1 < rep.points.size(); ++i) {
            double f0 = rep.points[i].frequency, f1 = rep.points[i + 1].frequency;
            if (f0 < 0.5 && f1 >= 0.5) {
                double w = (0.5 - f0) / (f1 - f0);
                rep.crossing_p = rep.points[i].p + w * (rep.points[i + 1].p - rep.points[i].p);
                break;
            }
        }
    }
    return rep;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
    if (points < 2 || lo <= 0 || hi <= lo)
        throw std::invalid_argument("grid needs points >= 2 and 0 < lo < hi");
    std::vector<double> out;
    out.reserve(points);
    double ratio = hi / lo;
    for (int i = 0; i < points; ++i)
        out.push_back(lo * std::pow(ratio, static_cast<double>(i) / (points - 1)));
    return out;
}

}  // namespace rmc
