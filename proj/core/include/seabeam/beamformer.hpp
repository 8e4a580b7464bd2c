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
//
// Worst-case power minimization for the two-transmitter downlink. The
// quadratic QoS constraints are lifted to covariance matrices, each
// bounded channel-error ball is absorbed through an S-procedure slack
// into a linear matrix inequality, and rank-one covariances are recovered
// with a penalized successive convex approximation loop. All channel
// powers, noise floors and transmit caps enter in watts; the program is
// rescaled internally so the solver only sees O(1) data.

#ifndef SEABEAM_BEAMFORMER_HPP
#define SEABEAM_BEAMFORMER_HPP

#include "seabeam/channel.hpp"
#include "seabeam/conic.hpp"
#include "seabeam/csi.hpp"

#include <string>
#include <vector>

namespace seabeam {

// Per-user QoS targets, objective weights and transmit power caps.
struct QosSpec {
    double rate_near = 0.1; // gamma_1, bps/Hz
    double rate_off = 0.1;  // gamma_2, bps/Hz
    std::vector<double> weight_near; // alpha_1i; empty means all ones
    std::vector<double> weight_off;  // alpha_2m; empty means all ones
    double tbs_power_cap_w = 0.0;    // total shore transmit power
    double sat_antenna_cap_w = 0.0;  // per-antenna satellite power
};

// Knobs of the penalized successive convex approximation loop.
struct PenaltyConfig {
    double initial_penalty = 1.0;
    double penalty_increment = 5.0;
    int max_iterations = 50;
    double rank_gap_tol = 1e-3;
    double objective_rel_tol = 1e-4;
    double solver_tol = 1e-7;
    int solver_max_iterations = 200;
    bool verbose = false;
};

struct IterationRecord {
    int iteration = 0;
    double objective_w = 0.0; // weighted transmit power of the iterate
    double penalty = 0.0;
    double max_rank_gap = 0.0;
    int solver_iterations = 0;
};

// Iteration history of one solve. The objective sequence is non-increasing
// within solver tolerance across the iterates whose rank gap is certified;
// an uncertified early iterate may sit below the first certified one.
struct SolveReport {
    SolveStatus status = SolveStatus::numerical_failure;
    std::string detail;
    std::string termination; // converged | max_iterations | <error>
    bool rank_one_certified = false;
    double sdr_objective_w = 0.0;
    std::vector<IterationRecord> iterations;
};

struct RobustSolution {
    std::vector<Eigen::MatrixXcd> lifted_tbs; // W_i, watts
    std::vector<Eigen::MatrixXcd> lifted_sat; // V_m, watts
    BeamSet beams;
    std::vector<double> rank_gaps_tbs; // 1 - lambda_max/trace
    std::vector<double> rank_gaps_sat;
    std::vector<double> slack_near; // S-procedure multipliers
    std::vector<double> slack_off;
    double objective_w = 0.0;   // weighted power of the final iterate
    double total_power_w = 0.0; // trace power, both transmitters
    double tbs_power_w = 0.0;
    double sat_power_w = 0.0;
};

struct SolveOutcome {
    RobustSolution solution;
    SolveReport report;
};

struct SdrResult {
    SolveStatus status = SolveStatus::numerical_failure;
    std::string detail;
    std::vector<Eigen::MatrixXcd> lifted_tbs;
    std::vector<Eigen::MatrixXcd> lifted_sat;
    std::vector<double> slack_near;
    std::vector<double> slack_off;
    double objective_w = 0.0;
    int solver_iterations = 0;
};

// Robust QoS block for near-shore user i at given covariance values: the
// worst-case rate constraint over the channel ball of the given radius
// holds iff this Hermitian block of size M1+1 is positive semidefinite for
// some slack >= 0. The satellite interference term uses the nominal
// satellite-to-near channels.
Eigen::MatrixXcd lmi_near(int i, const std::vector<Eigen::MatrixXcd> &lifted_tbs,
                          const std::vector<Eigen::MatrixXcd> &lifted_sat,
                          const ChannelSet &ch, double rate_near, double radius,
                          double slack);

// Robust QoS block for off-shore user m, size M2+1, noise-only constant.
Eigen::MatrixXcd lmi_off(int m, const std::vector<Eigen::MatrixXcd> &lifted_sat,
                         const ChannelSet &ch, double rate_off, double radius,
                         double slack);

// Plain semidefinite relaxation: QoS blocks plus power caps, no rank
// handling. On infeasibility the detail field names the binding constraint
// class (power_caps | near_shore_qos | off_shore_qos).
SdrResult sdr_initialize(const ChannelSet &ch, const QosSpec &qos, const UncertaintyModel &unc,
                         ConicSolver &solver, const PenaltyConfig &cfg);

// Full pipeline: relaxation, penalized iterations driving every covariance
// to rank one, eigenvector beam extraction.
SolveOutcome penalty_sca_solve(const ChannelSet &ch, const QosSpec &qos,
                               const UncertaintyModel &unc, ConicSolver &solver,
                               const PenaltyConfig &cfg);

// Same pipeline with all uncertainty radii forced to zero.
SolveOutcome nonrobust_solve(const ChannelSet &ch, const QosSpec &qos, ConicSolver &solver,
                             const PenaltyConfig &cfg);

struct WorstCaseRates {
    std::vector<double> near_rates; // per-user minimum achieved rate
    std::vector<double> off_rates;
};

// Achieved rates at one realization of the shared per-transmitter angle
// errors. Near-shore rates depend on the shore error only, off-shore rates
// on the satellite error only; satellite-to-near interference stays at its
// nominal value.
void rates_at(const BeamSet &beams, const ChannelSet &ch,
              const std::vector<LinkModel> &near_links, const std::vector<LinkModel> &off_links,
              double dtheta_near, double dtheta_off, PerturbationModel model,
              std::vector<double> &near_rates, std::vector<double> &off_rates);

// Per-user minimum rates over a uniform grid of n_grid angle errors per
// transmitter, always including both interval endpoints.
WorstCaseRates verify_worst_case(const RobustSolution &sol, const ChannelSet &ch,
                                 const std::vector<LinkModel> &near_links,
                                 const std::vector<LinkModel> &off_links,
                                 const UncertaintyModel &unc, int n_grid,
                                 PerturbationModel model = PerturbationModel::first_order);

struct ComplexityEstimate {
    double barrier_near = 0.0; // beta_1
    double n1 = 0.0;           // K1 M1^2
    double n2 = 0.0;           // K2 M2^2
    double c1 = 0.0;           // shore part, scaled by ln(1/eta)
    double c2 = 0.0;           // satellite part, scaled by ln(1/eta)
    double total = 0.0;
};

// Interior-point iteration cost model of the two solve stages.
ComplexityEstimate complexity_estimate(int k1, int m1, int k2, int m2, double eta);

} // namespace seabeam

#endif // SEABEAM_BEAMFORMER_HPP
