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

#ifndef SEABEAM_EXPERIMENT_HPP
#define SEABEAM_EXPERIMENT_HPP

#include "seabeam/beamformer.hpp"
#include "seabeam/config.hpp"
#include "seabeam/conic.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace seabeam {

// Formats a double with enough digits to round-trip typical experiment
// outputs while keeping files byte-stable across runs.
std::string format_csv_number(double value);

// --- convergence trace ---------------------------------------------------

struct ConvergenceResult {
    SolveOutcome outcome;
    WorstCaseRates worst_case; // empty vectors when the solve failed
};

// Synthesizes the configured scenario and runs the full solve, recording
// every iteration. The scenario draw depends only on the config seed.
ConvergenceResult run_convergence(const ExperimentConfig &cfg, ConicSolver &solver);

// Columns: iteration,objective_w,rank_gap. Run metadata (status,
// termination, detail) travels in '#' comment lines before the header.
void write_convergence_csv(const ConvergenceResult &result, std::ostream &os);

// --- parameter sweeps ----------------------------------------------------

struct SweepPoint {
    std::string axis;
    double value = 0.0;
    double mean_power_w = 0.0; // averaged over successful trials
    double tbs_power_w = 0.0;
    double sat_power_w = 0.0;
    double mean_iters = 0.0;
    int trials = 0;
    int failures = 0; // infeasible or failed solves at this point
};

// Applies one sweep-axis override to a base configuration.
SystemConfig apply_axis(const SystemConfig &base, const std::string &axis, double value);

// Runs `trials` independent scenario draws per sweep value, serially and
// with per-(point, trial) derived seeds, so results do not depend on
// execution order.
std::vector<SweepPoint> run_sweep(const ExperimentConfig &cfg, ConicSolver &solver);

// Columns: axis,value,mean_power_w,tbs_power_w,sat_power_w,mean_iters,failures.
void write_sweep_csv(const std::vector<SweepPoint> &points, std::ostream &os);

// --- outage comparison ---------------------------------------------------

struct OutageRow {
    std::string algorithm; // robust | nonrobust
    double delta1 = 0.0;
    double delta2 = 0.0;
    double gamma = 0.0; // near-shore rate target, bps/Hz
    int trials = 0;     // realizations where both designs solved
    double outage_prob = 0.0;
    int failures = 0; // realizations skipped because a design failed
};

// For every realization solves both the robust and the zero-radius design,
// then replays the same sampled angle errors through both beam sets. A
// realization counts as outage for a design if any user rate falls below
// its target. Corner errors (all sign combinations of the two bounds) are
// always evaluated before the uniform draws.
std::vector<OutageRow> run_outage(const ExperimentConfig &cfg, ConicSolver &solver);

// Columns: algorithm,delta1,delta2,gamma,trials,outage_prob.
void write_outage_csv(const std::vector<OutageRow> &rows, std::ostream &os);

} // namespace seabeam

#endif // SEABEAM_EXPERIMENT_HPP
