// rmclab: command-line laboratory for rainbow monochromatic k-edge-connection
// colorings. Subcommands cover graph generation, structural metrics, exact
// spanning-tree packing (Nash-Williams / Tutte), coloring construction and
// verification, the merge normalizer, the exact solver with bounds, and
// seeded random-graph experiments.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmc/coloring.hpp"
#include "rmc/graph.hpp"
#include "rmc/io.hpp"
#include "rmc/normalizer.hpp"
#include "rmc/random_lab.hpp"
#include "rmc/solver.hpp"
#include "rmc/tree_packing.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

rmc::ParsedGraph load_input(const std::string& path) {
    if (path.empty() || path == "-") return rmc::read_edge_list(std::cin);
    return rmc::read_edge_list_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw rmc::IoError("cannot open " + out_path + " for writing");
    out << text;
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

json partition_json(const rmc::VertexPartition& p) {
    json arr = json::array();
    for (const auto& block : p.blocks) arr.push_back(block);
    return arr;
}

json colored_edges_json(const rmc::Graph& g, const rmc::EdgeColoring& c) {
    json arr = json::array();
    for (int e = 0; e < g.m(); ++e)
        arr.push_back({g.edges[e].first, g.edges[e].second, c.color[e]});
    return arr;
}

rmc::EdgeColoring require_coloring(const rmc::ParsedGraph& parsed) {
    if (!parsed.coloring)
        throw std::invalid_argument("input must be a colored edge list (third column)");
    return *parsed.coloring;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "rmclab - spanning-tree packings, rainbow monochromatic k-edge-connection\n"
        "colorings, exact color maxima, and random-graph threshold experiments"};
    app.require_subcommand(1);

    std::string in_path, out_path, csv_path;
    int k = 1;

    auto* gen = app.add_subcommand(
        "gen", "generate a graph family (complete, cycle, path, petersen, gnp) as an edge list");
    std::string family;
    int gen_n = 0;
    double gen_p = 0.0;
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("--family", family, "complete|cycle|path|petersen|gnp")->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--p", gen_p, "edge probability for gnp");
    gen->add_option("--seed", gen_seed, "seed for gnp (required; no entropy default)");
    gen->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* met_cmd = app.add_subcommand(
        "metrics", "n, m, degrees, diameter, cut vertices, exact edge connectivity,"
                   " triangle-freeness, minimum common-neighbor count");
    met_cmd->add_option("input", in_path, "edge-list file (default stdin)");
    met_cmd->add_option("-o,--out", out_path, "output path");

    auto* tau_cmd = app.add_subcommand(
        "tau", "exact tau(G) = min over vertex partitions of e(G/P)/(|G/P|-1); its floor is"
               " the spanning tree packing number (Nash-Williams / Tutte)");
    int tau_budget = 12;
    tau_cmd->add_option("input", in_path, "edge-list file (default stdin)");
    tau_cmd->add_option("--budget", tau_budget, "max n for exact partition enumeration");
    tau_cmd->add_option("-o,--out", out_path, "output path");

    auto* pack_cmd = app.add_subcommand(
        "pack", "k edge-disjoint spanning trees by matroid-union augmentation, or a violating"
                " partition with e(G/P) < k(|G/P|-1)");
    pack_cmd->add_option("input", in_path, "edge-list file (default stdin)");
    pack_cmd->add_option("--k", k, "number of trees")->required();
    pack_cmd->add_option("-o,--out", out_path, "output path");

    auto* color_cmd = app.add_subcommand(
        "color", "construct a coloring: baseline = k spanning trees plus trivial leftovers"
                 " (m - k(n-2) colors); improve = split/break classes into trees; perfect ="
                 " hub-and-parts construction with m - k(n-2) + s - 1 colors");
    std::string color_mode = "baseline";
    int perfect_s = 2;
    std::vector<int> part_sizes;
    color_cmd->add_option("input", in_path, "edge-list file (default stdin; unused for perfect)");
    color_cmd->add_option("--k", k, "connection requirement")->required();
    color_cmd->add_option("--mode", color_mode, "baseline|improve|perfect");
    color_cmd->add_option("--s", perfect_s, "number of parts for perfect mode");
    color_cmd->add_option("--part-sizes", part_sizes,
                          "complete-part sizes for perfect mode (default 2k each)");
    color_cmd->add_option("-o,--out", out_path, "output path");

    auto* verify_cmd = app.add_subcommand(
        "verify", "check that every vertex pair is connected inside at least k color classes");
    verify_cmd->add_option("input", in_path, "colored edge-list file (default stdin)");
    verify_cmd->add_option("--k", k, "connection requirement")->required();
    verify_cmd->add_option("-o,--out", out_path, "output path");

    auto* norm_cmd = app.add_subcommand(
        "normalize", "merge crossing classes into star trees until at least k classes span,"
                     " certifying e(G) >= k(n-1); runs the tree-forming moves first");
    bool no_step_verify = false;
    norm_cmd->add_option("input", in_path, "colored edge-list file (default stdin)");
    norm_cmd->add_option("--k", k, "connection requirement")->required();
    norm_cmd->add_flag("--no-verify-steps", no_step_verify, "skip per-step revalidation");
    norm_cmd->add_option("-o,--out", out_path, "output path");

    auto* solve_cmd = app.add_subcommand(
        "solve", "exact maximum color count by branch and bound over tree partitions,"
                 " with certified bounds on timeout");
    std::int64_t budget_ms = 60000;
    solve_cmd->add_option("input", in_path, "edge-list file (default stdin)");
    solve_cmd->add_option("--k", k, "connection requirement")->required();
    solve_cmd->add_option("--budget-ms", budget_ms, "search budget in milliseconds");
    solve_cmd->add_option("-o,--out", out_path, "output path");

    auto* bounds_cmd = app.add_subcommand(
        "bounds", "certified bounds: baseline lower m - k(n-2); uppers from the minimum"
                  " common-neighbor count, vertex connectivity, and the coarse bound"
                  " m - (k-1)(n-2); exact value when a predicate fires");
    bounds_cmd->add_option("input", in_path, "edge-list file (default stdin)");
    bounds_cmd->add_option("--k", k, "connection requirement")->required();
    bounds_cmd->add_option("-o,--out", out_path, "output path");

    auto* exp_cmd = app.add_subcommand("experiment", "seeded G(n,p) studies");
    exp_cmd->require_subcommand(1);
    int exp_n = 60, exp_trials = 200, p_steps = 12;
    double exp_p = 0.3, p_min = 0.0, p_max = 0.0;
    std::optional<std::uint64_t> exp_seed;
    std::string fn_desc = "small";

    auto* stp_cmd = exp_cmd->add_subcommand(
        "stp-formula", "agreement of T(G(n,p)) with min(delta, floor(m/(n-1)))");
    stp_cmd->add_option("--n", exp_n, "vertices")->required();
    stp_cmd->add_option("--p", exp_p, "edge probability")->required();
    stp_cmd->add_option("--trials", exp_trials, "trial count")->required();
    stp_cmd->add_option("--seed", exp_seed, "base seed")->required();
    stp_cmd->add_option("--csv", csv_path, "per-trial CSV path");
    stp_cmd->add_option("-o,--out", out_path, "JSON summary path");

    auto* sweep_cmd = exp_cmd->add_subcommand(
        "sweep", "frequency of packing k spanning trees across a p grid, with the predicted"
                 " threshold scale and interpolated 50% crossing");
    sweep_cmd->add_option("--n", exp_n, "vertices")->required();
    sweep_cmd->add_option("--k", k, "connection requirement")->required();
    sweep_cmd->add_option("--p-min", p_min, "grid start")->required();
    sweep_cmd->add_option("--p-max", p_max, "grid end")->required();
    sweep_cmd->add_option("--p-steps", p_steps, "geometric grid points");
    sweep_cmd->add_option("--trials", exp_trials, "trials per grid point")->required();
    sweep_cmd->add_option("--seed", exp_seed, "base seed")->required();
    sweep_cmd->add_option("--fn", fn_desc,
                          "threshold regime: small | nlogn:<value> | degenerate");
    sweep_cmd->add_option("--csv", csv_path, "per-point CSV path");
    sweep_cmd->add_option("-o,--out", out_path, "JSON summary path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitIo;
    }

    try {
        if (gen->parsed()) {
            rmc::Graph g;
            if (family == "complete") g = rmc::gen_complete(gen_n);
            else if (family == "cycle") g = rmc::gen_cycle(gen_n);
            else if (family == "path") g = rmc::gen_path(gen_n);
            else if (family == "petersen") g = rmc::gen_petersen();
            else if (family == "gnp") {
                if (!gen_seed) throw std::invalid_argument("gnp requires --seed");
                g = rmc::sample_gnp(gen_n, gen_p, *gen_seed);
            } else {
                throw std::invalid_argument("unknown family: " + family);
            }
            emit(rmc::write_edge_list(g), out_path);
            return kExitOk;
        }

        if (met_cmd->parsed()) {
            auto parsed = load_input(in_path);
            auto met = rmc::metrics(parsed.graph);
            json j{{"schema", 1},
                   {"n", met.n},
                   {"m", met.m},
                   {"min_degree", met.min_degree},
                   {"max_degree", met.max_degree},
                   {"diameter", met.diameter ? json(*met.diameter) : json(nullptr)},
                   {"cut_vertices", met.cut_vertices},
                   {"edge_connectivity", met.edge_connectivity},
                   {"triangle_free", met.triangle_free},
                   {"common_neighbor_min", met.common_neighbor_min}};
            emit_json(j, out_path);
            return kExitOk;
        }

        if (tau_cmd->parsed()) {
            auto parsed = load_input(in_path);
            auto res = rmc::analyze_packing(parsed.graph, tau_budget);
            json j{{"schema", 1}};
            if (res.tau_num)
                j["tau"] = std::to_string(*res.tau_num) + "/" + std::to_string(*res.tau_den);
            else
                j["tau"] = nullptr;
            j["T"] = res.t_number;
            j["trees"] = res.trees;
            j["witness_partition"] =
                res.tau_witness ? partition_json(*res.tau_witness) : json(nullptr);
            emit_json(j, out_path);
            return kExitOk;
        }

        if (pack_cmd->parsed()) {
            auto parsed = load_input(in_path);
            auto outcome = rmc::spanning_tree_packing(parsed.graph, k);
            json j{{"schema", 1}, {"k", k}, {"packed", outcome.success}};
            if (outcome.success) {
                j["trees"] = outcome.trees;
                j["witness_partition"] = nullptr;
            } else {
                j["trees"] = nullptr;
                j["witness_partition"] = partition_json(outcome.witness);
            }
            emit_json(j, out_path);
            return outcome.success ? kExitOk : kExitDomain;
        }

        if (color_cmd->parsed()) {
            if (color_mode == "perfect") {
                std::vector<rmc::Graph> parts;
                if (part_sizes.empty()) part_sizes.assign(perfect_s, 2 * k);
                if (static_cast<int>(part_sizes.size()) != perfect_s)
                    throw std::invalid_argument("--part-sizes must list s sizes");
                for (int size : part_sizes) parts.push_back(rmc::gen_complete(size));
                auto pc = rmc::gen_perfectly_connected(k, perfect_s, parts);
                auto coloring = rmc::perfectly_connected_coloring(pc);
                emit(rmc::write_edge_list(pc.graph, rmc::canonicalize(coloring)), out_path);
                return kExitOk;
            }
            auto parsed = load_input(in_path);
            rmc::EdgeColoring coloring;
            if (color_mode == "baseline") {
                coloring = rmc::baseline_coloring(parsed.graph, k);
            } else if (color_mode == "improve") {
                coloring = rmc::improve_coloring(parsed.graph, require_coloring(parsed), k);
            } else {
                throw std::invalid_argument("unknown mode: " + color_mode);
            }
            emit(rmc::write_edge_list(parsed.graph, rmc::canonicalize(coloring)), out_path);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            auto parsed = load_input(in_path);
            auto coloring = require_coloring(parsed);
            auto check = rmc::is_rmc_k(parsed.graph, coloring, k);
            auto summary = rmc::color_classes(parsed.graph, coloring);
            json j{{"schema", 1},
                   {"rmc_k", check.ok},
                   {"k", k},
                   {"colors", summary.colors_used},
                   {"waste", summary.waste},
                   {"failing_pair",
                    check.failing_pair
                        ? json({check.failing_pair->first, check.failing_pair->second})
                        : json(nullptr)}};
            emit_json(j, out_path);
            return check.ok ? kExitOk : kExitDomain;
        }

        if (norm_cmd->parsed()) {
            auto parsed = load_input(in_path);
            auto coloring = rmc::improve_coloring(parsed.graph, require_coloring(parsed), k);
            auto trace = rmc::normalize(parsed.graph, coloring, k, !no_step_verify);
            json steps = json::array();
            for (const auto& step : trace.steps)
                steps.push_back({{"i", step.color_i},
                                 {"j", step.color_j},
                                 {"orders_before", step.order_before},
                                 {"orders_after", step.order_after}});
            json j{{"schema", 1},
                   {"k", k},
                   {"steps", steps},
                   {"n", trace.final_graph.n},
                   {"m", trace.final_graph.m()},
                   {"spanning_classes", trace.spanning_classes},
                   {"final_edges", colored_edges_json(trace.final_graph, trace.final_coloring)}};
            emit_json(j, out_path);
            return kExitOk;
        }

        if (solve_cmd->parsed() || bounds_cmd->parsed()) {
            auto parsed = load_input(in_path);
            auto report = rmc::bounds(parsed.graph, k);
            json j{{"schema", 1}, {"k", k}, {"feasible", report.feasible}};
            if (!report.feasible) {
                j["witness_partition"] = partition_json(*report.infeasibility_witness);
                emit_json(j, out_path);
                std::cerr << "no valid coloring: the graph lacks " << k
                          << " edge-disjoint spanning trees (tau(G) >= k fails); see"
                             " witness_partition\n";
                return kExitDomain;
            }
            j["lower"] = report.lower->value;
            j["lower_source"] = report.lower->source;
            json uppers = json::array();
            for (const auto& ub : report.uppers)
                uppers.push_back({{"value", ub.value}, {"source", ub.source}});
            j["uppers"] = uppers;
            j["predicate"] = report.exact ? json(report.exact->source) : json(nullptr);
            if (bounds_cmd->parsed()) {
                j["exact"] = report.exact ? json(report.exact->value) : json(nullptr);
                emit_json(j, out_path);
                return kExitOk;
            }
            auto t0 = std::chrono::steady_clock::now();
            auto res = rmc::rmc_exact(parsed.graph, k, budget_ms);
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
            j["exact"] = res.exact ? json(*res.exact) : json(nullptr);
            j["certified_lower"] = res.best_value;
            j["timed_out"] = res.timed_out;
            j["nodes"] = res.nodes;
            j["elapsed_ms"] = elapsed;  // runtime stat, not part of the deterministic payload
            j["witness_coloring"] = colored_edges_json(parsed.graph, res.witness);
            emit_json(j, out_path);
            return kExitOk;
        }

        if (stp_cmd->parsed()) {
            std::ostringstream csv;
            csv << "trial,seed,n,p,m,min_degree,T,agrees\n";
            int agree = 0;
            for (int t = 0; t < exp_trials; ++t) {
                auto rec = rmc::run_trial(exp_n, exp_p, 1, rmc::trial_seed(*exp_seed, t));
                agree += rec.stp_formula_agrees;
                csv << t << ',' << rec.seed << ',' << rec.n << ',' << rec.p << ',' << rec.m
                    << ',' << rec.min_degree << ',' << rec.t_number << ','
                    << rec.stp_formula_agrees << '\n';
            }
            if (!csv_path.empty()) emit(csv.str(), csv_path);
            json j{{"schema", 1},
                   {"n", exp_n},
                   {"p", exp_p},
                   {"trials", exp_trials},
                   {"seed", *exp_seed},
                   {"agreement", static_cast<double>(agree) / exp_trials}};
            emit_json(j, out_path);
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            std::optional<double> predicted;
            if (fn_desc == "small")
                predicted = rmc::predicted_threshold(exp_n, k, rmc::ThresholdRegime::small_f);
            else if (fn_desc.rfind("nlogn:", 0) == 0)
                predicted = rmc::predicted_threshold(exp_n, k, rmc::ThresholdRegime::large_f,
                                                     std::stod(fn_desc.substr(6)));
            else if (fn_desc == "degenerate")
                predicted = rmc::predicted_threshold(exp_n, k, rmc::ThresholdRegime::degenerate);
            else
                throw std::invalid_argument("unknown --fn descriptor: " + fn_desc);

            auto grid = rmc::geometric_grid(p_min, p_max, p_steps);
            auto rep = rmc::sweep(exp_n, k, grid, exp_trials, *exp_seed, predicted);
            std::ostringstream csv;
            csv << "p,trials,successes,frequency\n";
            for (const auto& pt : rep.points)
                csv << pt.p << ',' << pt.trials << ',' << pt.successes << ',' << pt.frequency
                    << '\n';
            if (!csv_path.empty()) emit(csv.str(), csv_path);
            json points = json::array();
            for (const auto& pt : rep.points)
                points.push_back({{"p", pt.p},
                                  {"trials", pt.trials},
                                  {"successes", pt.successes},
                                  {"frequency", pt.frequency}});
            json j{{"schema", 1},
                   {"n", rep.n},
                   {"k", rep.k},
                   {"property", rep.property},
                   {"beta", rep.beta},
                   {"predicted_p", rep.predicted_p ? json(*rep.predicted_p) : json(nullptr)},
                   {"crossing_p", rep.crossing_p ? json(*rep.crossing_p) : json(nullptr)},
                   {"points", points}};
            if (k >= exp_n / 2)
                j["note"] = "degenerate regime: property holds only at p = 1, no crossing expected";
            emit_json(j, out_path);
            return kExitOk;
        }
    } catch (const rmc::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        json w = json::array();
        for (const auto& block : e.witness.blocks) w.push_back(block);
        std::cerr << "witness partition: " << w.dump() << "\n";
        return kExitDomain;
    } catch (const rmc::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
