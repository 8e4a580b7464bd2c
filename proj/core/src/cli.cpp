// SPDX-License-Identifier: Apache-2.0
//
// seabeam - robust downlink beamforming for integrated satellite-terrestrial
// maritime communication systems
// Copyright (C) 2026 seabeam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "seabeam/cli.hpp"

#include "seabeam/config.hpp"
#include "seabeam/experiment.hpp"
#include "seabeam/rng.hpp"
#include "seabeam/scenario.hpp"
#include "seabeam/solver.hpp"
#include "seabeam/units.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace seabeam {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failed = 2;

struct CommonOptions {
    std::string config_path;
    std::string output_dir = ".";
    std::uint64_t seed = 0;
    bool exact_channel = false;
    bool gnuplot = false;
    CLI::Option *seed_opt = nullptr;
};

void add_common_options(CLI::App *cmd, CommonOptions &opt) {
    cmd->add_option("-c,--config", opt.config_path,
                    "Config file path, or 'default' for built-in defaults");
    cmd->add_option("-o,--output", opt.output_dir, "Directory for result files")
        ->capture_default_str();
    opt.seed_opt = cmd->add_option("-s,--seed", opt.seed, "Override the config seed");
    cmd->add_flag("--exact-channel", opt.exact_channel,
                  "Evaluate sampled errors on rebuilt channels instead of the "
                  "first-order model");
    cmd->add_flag("--gnuplot", opt.gnuplot, "Emit a gnuplot script next to the CSV");
}

ExperimentConfig load_effective_config(const CommonOptions &opt) {
    ExperimentConfig cfg;
    if (opt.config_path.empty() || opt.config_path == "default")
        cfg = parse_config(default_config_json());
    else
        cfg = load_config(opt.config_path);
    if (opt.seed_opt != nullptr && opt.seed_opt->count() > 0) cfg.seed = opt.seed;
    if (opt.exact_channel) cfg.exact_channel = true;
    return cfg;
}

std::filesystem::path prepare_output(const CommonOptions &opt) {
    std::filesystem::path dir(opt.output_dir);
    if (!dir.empty()) std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
}

std::string power_line(const char *label, double watts) {
    std::ostringstream os;
    os << label << ": " << format_csv_number(watts) << " W";
    if (watts > 0.0) os << " (" << format_csv_number(watts_to_dbm(watts)) << " dBm)";
    os << "\n";
    return os.str();
}

int report_failure(const SolveReport &report) {
    std::cerr << "solve failed: status=" << (report.status == SolveStatus::infeasible
                                                 ? "infeasible"
                                                 : "numerical_failure");
    if (!report.detail.empty()) std::cerr << " (" << report.detail << ")";
    std::cerr << "\n";
    return exit_failed;
}

int cmd_solve(const CommonOptions &opt) {
    ExperimentConfig cfg = load_effective_config(opt);
    ClarabelSolver solver;
    ConvergenceResult result = run_convergence(cfg, solver);
    const SolveReport &report = result.outcome.report;
    if (report.status != SolveStatus::optimal) return report_failure(report);

    const RobustSolution &sol = result.outcome.solution;
    std::cout << "status: optimal\n";
    std::cout << "termination: " << report.termination << " after "
              << report.iterations.size() << " iterations\n";
    std::cout << power_line("total power", sol.total_power_w);
    std::cout << power_line("shore power", sol.tbs_power_w);
    std::cout << power_line("satellite power", sol.sat_power_w);
    double max_gap = 0.0;
    for (double g : sol.rank_gaps_tbs) max_gap = std::max(max_gap, g);
    for (double g : sol.rank_gaps_sat) max_gap = std::max(max_gap, g);
    std::cout << "max rank gap: " << format_csv_number(max_gap) << "\n";
    std::cout << "rank-one certified: " << (report.rank_one_certified ? "yes" : "no")
              << "\n";
    if (!result.worst_case.near_rates.empty()) {
        double worst = *std::min_element(result.worst_case.near_rates.begin(),
                                         result.worst_case.near_rates.end());
        std::cout << "worst-case near rate: " << format_csv_number(worst)
                  << " (target " << format_csv_number(cfg.system.rate_near_bps_hz)
                  << ")\n";
    }
    if (!result.worst_case.off_rates.empty()) {
        double worst = *std::min_element(result.worst_case.off_rates.begin(),
                                         result.worst_case.off_rates.end());
        std::cout << "worst-case off rate: " << format_csv_number(worst) << " (target "
                  << format_csv_number(cfg.system.rate_off_bps_hz) << ")\n";
    }
    return exit_ok;
}

int cmd_converge(const CommonOptions &opt) {
    ExperimentConfig cfg = load_effective_config(opt);
    ClarabelSolver solver;
    ConvergenceResult result = run_convergence(cfg, solver);

    auto dir = prepare_output(opt);
    std::ostringstream csv;
    write_convergence_csv(result, csv);
    write_file(dir / "convergence.csv", csv.str());
    if (opt.gnuplot)
        write_file(dir / "convergence.gp",
                   "set datafile separator ','\n"
                   "set key autotitle columnhead\n"
                   "set xlabel 'iteration'\n"
                   "set ylabel 'objective [W]'\n"
                   "set grid\n"
                   "plot 'convergence.csv' using 1:2 with linespoints\n");

    const SolveReport &report = result.outcome.report;
    std::cout << "wrote " << (dir / "convergence.csv").string() << " (status="
              << (report.status == SolveStatus::optimal
                      ? "optimal"
                      : (report.status == SolveStatus::infeasible ? "infeasible"
                                                                  : "numerical_failure"))
              << ", " << report.iterations.size() << " iterations)\n";
    if (report.status != SolveStatus::optimal) return report_failure(report);
    return exit_ok;
}

int cmd_sweep(const CommonOptions &opt) {
    ExperimentConfig cfg = load_effective_config(opt);
    ClarabelSolver solver;
    std::vector<SweepPoint> points = run_sweep(cfg, solver);

    auto dir = prepare_output(opt);
    std::ostringstream csv;
    write_sweep_csv(points, csv);
    write_file(dir / "sweep.csv", csv.str());
    if (opt.gnuplot)
        write_file(dir / "sweep.gp",
                   "set datafile separator ','\n"
                   "set key autotitle columnhead\n"
                   "set xlabel 'sweep value'\n"
                   "set ylabel 'mean power [W]'\n"
                   "set grid\n"
                   "plot 'sweep.csv' using 2:3 with linespoints\n");

    int failures = 0;
    for (const SweepPoint &pt : points) failures += pt.failures;
    std::cout << "wrote " << (dir / "sweep.csv").string() << " (" << points.size()
              << " points, " << failures << " failed trials)\n";
    return exit_ok;
}

int cmd_outage(const CommonOptions &opt) {
    ExperimentConfig cfg = load_effective_config(opt);
    ClarabelSolver solver;
    std::vector<OutageRow> rows = run_outage(cfg, solver);

    auto dir = prepare_output(opt);
    std::ostringstream csv;
    write_outage_csv(rows, csv);
    write_file(dir / "outage.csv", csv.str());
    if (opt.gnuplot)
        write_file(dir / "outage.gp",
                   "set datafile separator ','\n"
                   "set key autotitle columnhead\n"
                   "set style fill solid 0.5\n"
                   "set ylabel 'outage probability'\n"
                   "set yrange [0:1]\n"
                   "plot 'outage.csv' using 6:xtic(1) with boxes\n");

    std::cout << "wrote " << (dir / "outage.csv").string() << "\n";
    for (const OutageRow &row : rows)
        std::cout << row.algorithm << " outage: " << format_csv_number(row.outage_prob)
                  << " over " << row.trials << " realizations (" << row.failures
                  << " skipped)\n";
    return exit_ok;
}

int cmd_complexity(int k1, int m1, int k2, int m2, double eta) {
    ComplexityEstimate est = complexity_estimate(k1, m1, k2, m2, eta);
    std::cout << "k1=" << k1 << " m1=" << m1 << " k2=" << k2 << " m2=" << m2
              << " eta=" << format_csv_number(eta) << "\n";
    std::cout << "n1=" << format_csv_number(est.n1) << "\n";
    std::cout << "n2=" << format_csv_number(est.n2) << "\n";
    std::cout << "c1=" << format_csv_number(est.c1) << "\n";
    std::cout << "c2=" << format_csv_number(est.c2) << "\n";
    std::cout << "total=" << format_csv_number(est.total) << "\n";
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char *const *argv) {
    // The solver links a threaded BLAS; single-threaded kernels keep runs
    // reproducible and avoid oversubscription in batch experiments.
    setenv("OPENBLAS_NUM_THREADS", "1", 0);

    CLI::App app{"Robust downlink beamforming experiments for an integrated "
                 "satellite-terrestrial maritime system"};
    app.require_subcommand(1);

    // Each subcommand owns its options; sharing one struct would leave the
    // stored option pointers referring to whichever subcommand registered
    // last, so seed overrides would be dropped for the others.
    CommonOptions solve_opt, converge_opt, sweep_opt, outage_opt;
    CLI::App *solve = app.add_subcommand("solve", "Solve one scenario and print the power budget");
    add_common_options(solve, solve_opt);
    CLI::App *converge =
        app.add_subcommand("converge", "Record the per-iteration convergence trace");
    add_common_options(converge, converge_opt);
    CLI::App *sweep = app.add_subcommand("sweep", "Average transmit power along a parameter sweep");
    add_common_options(sweep, sweep_opt);
    CLI::App *outage = app.add_subcommand(
        "outage", "Compare robust and non-robust designs under sampled angle errors");
    add_common_options(outage, outage_opt);

    int k1 = 4, m1 = 8, k2 = 6, m2 = 8;
    double eta = 0.1;
    CLI::App *complexity =
        app.add_subcommand("complexity", "Print the interior-point cost model");
    complexity->add_option("--k1", k1, "Near-shore users")->capture_default_str();
    complexity->add_option("--m1", m1, "Shore antennas")->capture_default_str();
    complexity->add_option("--k2", k2, "Off-shore users")->capture_default_str();
    complexity->add_option("--m2", m2, "Satellite antennas")->capture_default_str();
    complexity->add_option("--eta", eta, "Target accuracy")->capture_default_str();

    CLI::App *print_config =
        app.add_subcommand("print-config", "Print the default config document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_opt);
        if (converge->parsed()) return cmd_converge(converge_opt);
        if (sweep->parsed()) return cmd_sweep(sweep_opt);
        if (outage->parsed()) return cmd_outage(outage_opt);
        if (complexity->parsed()) return cmd_complexity(k1, m1, k2, m2, eta);
        if (print_config->parsed()) {
            std::cout << default_config_json();
            return exit_ok;
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::runtime_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace seabeam
