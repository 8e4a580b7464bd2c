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

#include "seabeam/experiment.hpp"

#include "seabeam/rng.hpp"
#include "seabeam/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace seabeam {

namespace {

// Seed-derivation tags keep the scenario streams of the different drivers
// disjoint even when they share a base seed.
constexpr std::uint64_t tag_convergence = 0;
constexpr std::uint64_t tag_sweep = 1;
constexpr std::uint64_t tag_outage_scenario = 2;
constexpr std::uint64_t tag_outage_errors = 3;

const char *status_name(SolveStatus s) {
    switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    default: return "numerical_failure";
    }
}

// Slack applied when comparing achieved rates against the target, so that
// a design sitting exactly on its QoS boundary does not register as outage
// through rounding alone.
constexpr double rate_slack = 1e-9;

bool any_rate_below(const std::vector<double> &rates, double target) {
    for (double r : rates)
        if (r < target - rate_slack) return true;
    return false;
}

} // namespace

std::string format_csv_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

// --- convergence trace ---------------------------------------------------

ConvergenceResult run_convergence(const ExperimentConfig &cfg, ConicSolver &solver) {
    RandomStream rng(derive_seed(cfg.seed, tag_convergence, 0));
    Scenario sc = make_scenario(cfg.system, rng);
    ConvergenceResult result;
    result.outcome = penalty_sca_solve(sc.channels, sc.qos, sc.uncertainty, solver, cfg.penalty);
    if (result.outcome.report.status == SolveStatus::optimal) {
        const auto model = cfg.exact_channel ? PerturbationModel::exact
                                             : PerturbationModel::first_order;
        result.worst_case =
            verify_worst_case(result.outcome.solution, sc.channels, sc.near_links,
                              sc.off_links, sc.uncertainty, cfg.angle_grid, model);
    }
    return result;
}

void write_convergence_csv(const ConvergenceResult &result, std::ostream &os) {
    const SolveReport &report = result.outcome.report;
    os << "# status=" << status_name(report.status) << "\n";
    os << "# termination=" << report.termination << "\n";
    if (!report.detail.empty()) os << "# detail=" << report.detail << "\n";
    os << "# sdr_objective_w=" << format_csv_number(report.sdr_objective_w) << "\n";
    os << "iteration,objective_w,rank_gap\n";
    for (const IterationRecord &rec : report.iterations) {
        os << rec.iteration << ',' << format_csv_number(rec.objective_w) << ','
           << format_csv_number(rec.max_rank_gap) << "\n";
    }
}

// --- parameter sweeps ----------------------------------------------------

SystemConfig apply_axis(const SystemConfig &base, const std::string &axis, double value) {
    SystemConfig cfg = base;
    if (axis == "rate") {
        cfg.rate_near_bps_hz = value;
        cfg.rate_off_bps_hz = value;
    } else if (axis == "users_near") {
        cfg.users_near = static_cast<int>(std::llround(value));
    } else if (axis == "users_off") {
        cfg.users_off = static_cast<int>(std::llround(value));
    } else if (axis == "antennas_tbs") {
        cfg.antennas_tbs = static_cast<int>(std::llround(value));
    } else if (axis == "antennas_sat") {
        cfg.antennas_sat = static_cast<int>(std::llround(value));
    } else if (axis == "tidal_near") {
        cfg.tidal_factor_near = value;
    } else if (axis == "tidal_off") {
        cfg.tidal_factor_sat = value;
    } else {
        throw std::invalid_argument("unknown sweep axis: " + axis);
    }
    return cfg;
}

std::vector<SweepPoint> run_sweep(const ExperimentConfig &cfg, ConicSolver &solver) {
    std::vector<SweepPoint> points;
    points.reserve(cfg.sweep_values.size());
    for (double value : cfg.sweep_values) {
        const SystemConfig sys = apply_axis(cfg.system, cfg.sweep_axis, value);
        validate_config(sys);

        SweepPoint pt;
        pt.axis = cfg.sweep_axis;
        pt.value = value;
        pt.trials = cfg.trials;
        double sum_total = 0.0, sum_tbs = 0.0, sum_sat = 0.0, sum_iters = 0.0;
        int ok = 0;
        for (int trial = 0; trial < cfg.trials; ++trial) {
            // Same trial, same randomness at every sweep point: points then
            // differ only through the swept parameter, which makes the
            // reported trends paired comparisons instead of independent
            // Monte Carlo estimates.
            RandomStream rng(derive_seed(cfg.seed, tag_sweep,
                                         static_cast<std::uint64_t>(trial)));
            Scenario sc = make_scenario(sys, rng);
            SolveOutcome out =
                penalty_sca_solve(sc.channels, sc.qos, sc.uncertainty, solver, cfg.penalty);
            if (out.report.status == SolveStatus::optimal) {
                ++ok;
                sum_total += out.solution.total_power_w;
                sum_tbs += out.solution.tbs_power_w;
                sum_sat += out.solution.sat_power_w;
                sum_iters += static_cast<double>(out.report.iterations.size());
            } else {
                ++pt.failures;
            }
        }
        if (ok > 0) {
            pt.mean_power_w = sum_total / ok;
            pt.tbs_power_w = sum_tbs / ok;
            pt.sat_power_w = sum_sat / ok;
            pt.mean_iters = sum_iters / ok;
        }
        points.push_back(std::move(pt));
    }
    return points;
}

void write_sweep_csv(const std::vector<SweepPoint> &points, std::ostream &os) {
    os << "axis,value,mean_power_w,tbs_power_w,sat_power_w,mean_iters,failures\n";
    for (const SweepPoint &pt : points) {
        os << pt.axis << ',' << format_csv_number(pt.value) << ','
           << format_csv_number(pt.mean_power_w) << ','
           << format_csv_number(pt.tbs_power_w) << ','
           << format_csv_number(pt.sat_power_w) << ','
           << format_csv_number(pt.mean_iters) << ',' << pt.failures << "\n";
    }
}

// --- outage comparison ---------------------------------------------------

std::vector<OutageRow> run_outage(const ExperimentConfig &cfg, ConicSolver &solver) {
    const double gamma_near = cfg.system.rate_near_bps_hz;
    const double gamma_off = cfg.system.rate_off_bps_hz;
    const auto model = cfg.exact_channel ? PerturbationModel::exact
                                         : PerturbationModel::first_order;

    int evaluated = 0;
    int skipped = 0;
    int outage_robust = 0;
    int outage_nonrobust = 0;
    std::vector<double> near_rates, off_rates;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        RandomStream rng(derive_seed(cfg.seed, tag_outage_scenario,
                                     static_cast<std::uint64_t>(trial)));
        Scenario sc = make_scenario(cfg.system, rng);
        SolveOutcome robust =
            penalty_sca_solve(sc.channels, sc.qos, sc.uncertainty, solver, cfg.penalty);
        SolveOutcome plain = nonrobust_solve(sc.channels, sc.qos, solver, cfg.penalty);
        if (robust.report.status != SolveStatus::optimal ||
            plain.report.status != SolveStatus::optimal) {
            ++skipped;
            continue;
        }
        ++evaluated;

        const double eps1 = sc.uncertainty.angle_bound_tbs;
        const double eps2 = sc.uncertainty.angle_bound_sat;
        RandomStream err(derive_seed(cfg.seed, tag_outage_errors,
                                     static_cast<std::uint64_t>(trial)));
        bool robust_fail = false;
        bool plain_fail = false;
        for (int s = 0; s < cfg.error_samples; ++s) {
            double d1, d2;
            if (s < 4) {
                // Corner combinations first: the boundary of the error
                // interval is where violations concentrate.
                d1 = (s & 1) ? eps1 : -eps1;
                d2 = (s & 2) ? eps2 : -eps2;
            } else {
                d1 = err.uniform(-eps1, eps1);
                d2 = err.uniform(-eps2, eps2);
            }
            if (!robust_fail) {
                rates_at(robust.solution.beams, sc.channels, sc.near_links, sc.off_links,
                         d1, d2, model, near_rates, off_rates);
                robust_fail = any_rate_below(near_rates, gamma_near) ||
                              any_rate_below(off_rates, gamma_off);
            }
            if (!plain_fail) {
                rates_at(plain.solution.beams, sc.channels, sc.near_links, sc.off_links,
                         d1, d2, model, near_rates, off_rates);
                plain_fail = any_rate_below(near_rates, gamma_near) ||
                             any_rate_below(off_rates, gamma_off);
            }
            if (robust_fail && plain_fail) break;
        }
        if (robust_fail) ++outage_robust;
        if (plain_fail) ++outage_nonrobust;
    }

    OutageRow robust_row;
    robust_row.algorithm = "robust";
    robust_row.delta1 = cfg.system.tidal_factor_near;
    robust_row.delta2 = cfg.system.tidal_factor_sat;
    robust_row.gamma = gamma_near;
    robust_row.trials = evaluated;
    robust_row.outage_prob =
        evaluated > 0 ? static_cast<double>(outage_robust) / evaluated : 0.0;
    robust_row.failures = skipped;

    OutageRow plain_row = robust_row;
    plain_row.algorithm = "nonrobust";
    plain_row.outage_prob =
        evaluated > 0 ? static_cast<double>(outage_nonrobust) / evaluated : 0.0;
    return {robust_row, plain_row};
}

void write_outage_csv(const std::vector<OutageRow> &rows, std::ostream &os) {
    os << "algorithm,delta1,delta2,gamma,trials,outage_prob\n";
    for (const OutageRow &row : rows) {
        os << row.algorithm << ',' << format_csv_number(row.delta1) << ','
           << format_csv_number(row.delta2) << ',' << format_csv_number(row.gamma)
           << ',' << row.trials << ',' << format_csv_number(row.outage_prob) << "\n";
    }
}

} // namespace seabeam
