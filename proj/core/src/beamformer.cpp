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

#include "seabeam/beamformer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace seabeam {

namespace {

// Channel-error radii below this fraction of the channel norm degenerate the
// S-procedure block (the slack multiplier diverges), so such constraints are
// emitted as plain nominal inequality rows instead.
constexpr double zero_radius_rel = 1e-10;

double weight_at(const std::vector<double> &w, std::size_t i) {
    return w.empty() ? 1.0 : w.at(i);
}

double mean_sq_norm(const std::vector<Eigen::VectorXcd> &hs) {
    if (hs.empty())
        return 0.0;
    double acc = 0.0;
    for (const auto &h : hs)
        acc += h.squaredNorm();
    return acc / static_cast<double>(hs.size());
}

double mean_value(const std::vector<double> &xs) {
    if (xs.empty())
        return 0.0;
    double acc = 0.0;
    for (double x : xs)
        acc += x;
    return acc / static_cast<double>(xs.size());
}

// Internal change of units keeping every solver datum O(1): covariances are
// expressed in multiples of u_t (shore) and u_s (satellite), both chosen as
// noise power over mean squared channel norm.
struct Scaling {
    double u_t = 1.0;
    double u_s = 1.0;
};

Scaling make_scaling(const ChannelSet &ch) {
    Scaling s;
    const double hn = mean_sq_norm(ch.tbs_to_near);
    const double nn = mean_value(ch.noise_var_near);
    if (hn > 0.0 && nn > 0.0)
        s.u_t = nn / hn;
    const double gn = mean_sq_norm(ch.sat_to_off);
    const double no = mean_value(ch.noise_var_off);
    if (gn > 0.0 && no > 0.0)
        s.u_s = no / gn;
    return s;
}

struct BuildOptions {
    bool include_near = true;
    bool include_off = true;
    bool include_caps = true;
    double penalty = 0.0;
    const std::vector<Eigen::VectorXcd> *evecs_w = nullptr;
    const std::vector<Eigen::VectorXcd> *evecs_v = nullptr;
};

struct BuiltProgram {
    ConicProgram prog;
    Scaling scale;
    std::vector<int> w_vars;
    std::vector<int> v_vars;
    std::vector<int> near_slack; // scalar variable id or -1
    std::vector<int> off_slack;
};

BuiltProgram build_program(const ChannelSet &ch, const QosSpec &qos,
                           const std::vector<double> &radius_near,
                           const std::vector<double> &radius_off, const BuildOptions &opt) {
    const int k1 = static_cast<int>(ch.tbs_to_near.size());
    const int k2 = static_cast<int>(ch.sat_to_off.size());
    const int m1 = k1 > 0 ? static_cast<int>(ch.tbs_to_near[0].size()) : 0;
    const int m2 = k2 > 0 ? static_cast<int>(ch.sat_to_off[0].size()) : 0;

    BuiltProgram bp;
    bp.scale = make_scaling(ch);
    const double u_t = bp.scale.u_t;
    const double u_s = bp.scale.u_s;
    const double u_obj = k1 > 0 ? u_t : (k2 > 0 ? u_s : 1.0);
    ConicProgram &p = bp.prog;

    for (int i = 0; i < k1; ++i)
        bp.w_vars.push_back(p.add_matrix_variable("W" + std::to_string(i), m1, true));
    for (int m = 0; m < k2; ++m)
        bp.v_vars.push_back(p.add_matrix_variable("V" + std::to_string(m), m2, true));
    bp.near_slack.assign(static_cast<std::size_t>(std::max(k1, 0)), -1);
    bp.off_slack.assign(static_cast<std::size_t>(std::max(k2, 0)), -1);

    const double g1 = std::exp2(qos.rate_near) - 1.0;
    const double g2 = std::exp2(qos.rate_off) - 1.0;

    // Weighted power objective plus, when eigenvector references are given,
    // the trace-minus-top-eigenvalue penalty on each covariance.
    for (int i = 0; i < k1; ++i) {
        Eigen::MatrixXcd c = weight_at(qos.weight_near, i) * (u_t / u_obj) *
                             Eigen::MatrixXcd::Identity(m1, m1);
        if (opt.evecs_w != nullptr) {
            const Eigen::VectorXcd &e = opt.evecs_w->at(i);
            c += opt.penalty * (Eigen::MatrixXcd::Identity(m1, m1) - e * e.adjoint());
        }
        p.add_objective_trace(bp.w_vars[i], c);
    }
    for (int m = 0; m < k2; ++m) {
        Eigen::MatrixXcd c = weight_at(qos.weight_off, m) * (u_s / u_obj) *
                             Eigen::MatrixXcd::Identity(m2, m2);
        if (opt.evecs_v != nullptr) {
            const Eigen::VectorXcd &e = opt.evecs_v->at(m);
            c += opt.penalty * (Eigen::MatrixXcd::Identity(m2, m2) - e * e.adjoint());
        }
        p.add_objective_trace(bp.v_vars[m], c);
    }

    // Near-shore QoS. Each block is normalized by the channel norm and the
    // shore power unit so its entries are O(1).
    if (opt.include_near && g1 > 0.0) {
        for (int i = 0; i < k1; ++i) {
            const Eigen::VectorXcd &h = ch.tbs_to_near[i];
            const double norm = h.norm();
            const std::string label = "near_qos_" + std::to_string(i);
            if (!(norm > 0.0)) {
                LinearConstraint bad;
                bad.name = label;
                bad.lhs.constant = 1.0;
                bad.rhs = 0.0;
                p.add_inequality(std::move(bad));
                continue;
            }
            const Eigen::VectorXcd hhat = h / norm;
            const double t_i = ch.noise_var_near[i] / (u_t * norm * norm);
            const double cv = g1 * u_s / (u_t * norm * norm);
            const double r = radius_near[i] / norm;

            if (r < zero_radius_rel) {
                LinearConstraint row;
                row.name = label;
                const Eigen::MatrixXcd hh = hhat * hhat.adjoint();
                for (int j = 0; j < k1; ++j)
                    row.lhs.traces.push_back({bp.w_vars[j], (j == i ? -1.0 : g1) * hh});
                if (k2 > 0) {
                    const Eigen::VectorXcd &h2 = ch.sat_to_near.at(i);
                    const Eigen::MatrixXcd h2h2 = cv * (h2 * h2.adjoint());
                    for (int m = 0; m < k2; ++m)
                        row.lhs.traces.push_back({bp.v_vars[m], h2h2});
                }
                row.rhs = -g1 * t_i;
                p.add_inequality(std::move(row));
                continue;
            }

            const int slack = p.add_scalar_variable("lam1_" + std::to_string(i), true);
            bp.near_slack[i] = slack;

            LmiBlock blk;
            blk.name = label;
            blk.dim = m1 + 1;
            blk.constant = Eigen::MatrixXcd::Zero(m1 + 1, m1 + 1);
            blk.constant(m1, m1) = -g1 * t_i;

            Eigen::MatrixXcd lw = Eigen::MatrixXcd::Zero(m1 + 1, m1);
            lw.topRows(m1) = Eigen::MatrixXcd::Identity(m1, m1);
            lw.row(m1) = hhat.adjoint();
            for (int j = 0; j < k1; ++j)
                blk.congruences.push_back({bp.w_vars[j], j == i ? 1.0 : -g1, lw});
            if (k2 > 0) {
                const Eigen::VectorXcd &h2 = ch.sat_to_near.at(i);
                Eigen::MatrixXcd lv = Eigen::MatrixXcd::Zero(m1 + 1, m2);
                lv.row(m1) = h2.adjoint();
                for (int m = 0; m < k2; ++m)
                    blk.congruences.push_back({bp.v_vars[m], -cv, lv});
            }
            Eigen::MatrixXcd sl = Eigen::MatrixXcd::Identity(m1 + 1, m1 + 1);
            sl(m1, m1) = -r * r;
            blk.scalars.push_back({slack, sl});
            p.add_lmi(std::move(blk));
        }
    }

    // Off-shore QoS, same construction in satellite units with a noise-only
    // constant term.
    if (opt.include_off && g2 > 0.0) {
        for (int m = 0; m < k2; ++m) {
            const Eigen::VectorXcd &g = ch.sat_to_off[m];
            const double norm = g.norm();
            const std::string label = "off_qos_" + std::to_string(m);
            if (!(norm > 0.0)) {
                LinearConstraint bad;
                bad.name = label;
                bad.lhs.constant = 1.0;
                bad.rhs = 0.0;
                p.add_inequality(std::move(bad));
                continue;
            }
            const Eigen::VectorXcd ghat = g / norm;
            const double t_m = ch.noise_var_off[m] / (u_s * norm * norm);
            const double r = radius_off[m] / norm;

            if (r < zero_radius_rel) {
                LinearConstraint row;
                row.name = label;
                const Eigen::MatrixXcd gg = ghat * ghat.adjoint();
                for (int k = 0; k < k2; ++k)
                    row.lhs.traces.push_back({bp.v_vars[k], (k == m ? -1.0 : g2) * gg});
                row.rhs = -g2 * t_m;
                p.add_inequality(std::move(row));
                continue;
            }

            const int slack = p.add_scalar_variable("lam2_" + std::to_string(m), true);
            bp.off_slack[m] = slack;

            LmiBlock blk;
            blk.name = label;
            blk.dim = m2 + 1;
            blk.constant = Eigen::MatrixXcd::Zero(m2 + 1, m2 + 1);
            blk.constant(m2, m2) = -g2 * t_m;

            Eigen::MatrixXcd lv = Eigen::MatrixXcd::Zero(m2 + 1, m2);
            lv.topRows(m2) = Eigen::MatrixXcd::Identity(m2, m2);
            lv.row(m2) = ghat.adjoint();
            for (int k = 0; k < k2; ++k)
                blk.congruences.push_back({bp.v_vars[k], k == m ? 1.0 : -g2, lv});

            Eigen::MatrixXcd sl = Eigen::MatrixXcd::Identity(m2 + 1, m2 + 1);
            sl(m2, m2) = -r * r;
            blk.scalars.push_back({slack, sl});
            p.add_lmi(std::move(blk));
        }
    }

    if (opt.include_caps) {
        if (k1 > 0 && qos.tbs_power_cap_w > 0.0) {
            LinearConstraint cap;
            cap.name = "tbs_power";
            const Eigen::MatrixXcd c =
                (u_t / qos.tbs_power_cap_w) * Eigen::MatrixXcd::Identity(m1, m1);
            for (int i = 0; i < k1; ++i)
                cap.lhs.traces.push_back({bp.w_vars[i], c});
            cap.rhs = 1.0;
            p.add_inequality(std::move(cap));
        }
        if (k2 > 0 && qos.sat_antenna_cap_w > 0.0) {
            for (int a = 0; a < m2; ++a) {
                LinearConstraint cap;
                cap.name = "sat_power_" + std::to_string(a);
                Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(m2, m2);
                c(a, a) = u_s / qos.sat_antenna_cap_w;
                for (int m = 0; m < k2; ++m)
                    cap.lhs.traces.push_back({bp.v_vars[m], c});
                cap.rhs = 1.0;
                p.add_inequality(std::move(cap));
            }
        }
    }

    return bp;
}

struct StageResult {
    SolveStatus status = SolveStatus::numerical_failure;
    std::string detail;
    std::vector<Eigen::MatrixXcd> w_scaled;
    std::vector<Eigen::MatrixXcd> v_scaled;
    std::vector<double> near_slack;
    std::vector<double> off_slack;
    double objective_w = 0.0;
    int solver_iterations = 0;
    Scaling scale;
};

double weighted_power(const QosSpec &qos, const Scaling &sc,
                      const std::vector<Eigen::MatrixXcd> &w_scaled,
                      const std::vector<Eigen::MatrixXcd> &v_scaled) {
    double obj = 0.0;
    for (std::size_t i = 0; i < w_scaled.size(); ++i)
        obj += weight_at(qos.weight_near, i) * sc.u_t * w_scaled[i].trace().real();
    for (std::size_t m = 0; m < v_scaled.size(); ++m)
        obj += weight_at(qos.weight_off, m) * sc.u_s * v_scaled[m].trace().real();
    return obj;
}

StageResult solve_stage_built(const ChannelSet &ch, const QosSpec &qos,
                              const std::vector<double> &radius_near,
                              const std::vector<double> &radius_off, const BuildOptions &opt,
                              ConicSolver &solver, const PenaltyConfig &cfg) {
    const BuiltProgram bp = build_program(ch, qos, radius_near, radius_off, opt);
    const ConicSolution cs =
        solve(bp.prog, solver, cfg.solver_tol, cfg.solver_max_iterations, cfg.verbose);

    StageResult r;
    r.status = cs.status;
    r.detail = cs.diagnostics;
    r.solver_iterations = cs.solver_iterations;
    r.scale = bp.scale;
    r.near_slack.assign(bp.near_slack.size(), 0.0);
    r.off_slack.assign(bp.off_slack.size(), 0.0);
    if (cs.status != SolveStatus::optimal) {
        for (int id : bp.w_vars)
            r.w_scaled.push_back(Eigen::MatrixXcd::Zero(bp.prog.matrix_variables()[id].dim,
                                                        bp.prog.matrix_variables()[id].dim));
        for (int id : bp.v_vars)
            r.v_scaled.push_back(Eigen::MatrixXcd::Zero(bp.prog.matrix_variables()[id].dim,
                                                        bp.prog.matrix_variables()[id].dim));
        return r;
    }
    for (int id : bp.w_vars)
        r.w_scaled.push_back(cs.matrix_values.at(id));
    for (int id : bp.v_vars)
        r.v_scaled.push_back(cs.matrix_values.at(id));
    for (std::size_t i = 0; i < bp.near_slack.size(); ++i)
        if (bp.near_slack[i] >= 0)
            r.near_slack[i] = cs.scalar_values.at(bp.near_slack[i]);
    for (std::size_t m = 0; m < bp.off_slack.size(); ++m)
        if (bp.off_slack[m] >= 0)
            r.off_slack[m] = cs.scalar_values.at(bp.off_slack[m]);
    r.objective_w = weighted_power(qos, bp.scale, r.w_scaled, r.v_scaled);
    return r;
}

// True when the iterate keeps a clear margin to every configured power cap.
bool caps_interior(const StageResult &r, const QosSpec &qos) {
    constexpr double margin = 1e-6;
    if (!r.w_scaled.empty() && qos.tbs_power_cap_w > 0.0) {
        double used = 0.0;
        for (const auto &w : r.w_scaled)
            used += r.scale.u_t * w.trace().real();
        if (used > (1.0 - margin) * qos.tbs_power_cap_w)
            return false;
    }
    if (!r.v_scaled.empty() && qos.sat_antenna_cap_w > 0.0) {
        const int m2 = static_cast<int>(r.v_scaled.front().rows());
        for (int a = 0; a < m2; ++a) {
            double used = 0.0;
            for (const auto &v : r.v_scaled)
                used += r.scale.u_s * v(a, a).real();
            if (used > (1.0 - margin) * qos.sat_antenna_cap_w)
                return false;
        }
    }
    return true;
}

StageResult solve_stage(const ChannelSet &ch, const QosSpec &qos,
                        const std::vector<double> &radius_near,
                        const std::vector<double> &radius_off, const BuildOptions &opt,
                        ConicSolver &solver, const PenaltyConfig &cfg) {
    const bool caps_configured =
        (!ch.tbs_to_near.empty() && qos.tbs_power_cap_w > 0.0) ||
        (!ch.sat_to_off.empty() && qos.sat_antenna_cap_w > 0.0);
    if (!opt.include_caps || !caps_configured)
        return solve_stage_built(ch, qos, radius_near, radius_off, opt, solver, cfg);

    // Typical scenarios use a vanishing fraction of the power budget, so
    // the cap rows are wildly out of scale with the QoS data and only hurt
    // conditioning. Solve without them first; that answer is optimal for
    // the capped problem whenever it respects the caps, and an infeasible
    // relaxation certifies the capped problem infeasible as well.
    BuildOptions relaxed = opt;
    relaxed.include_caps = false;
    const StageResult free_run =
        solve_stage_built(ch, qos, radius_near, radius_off, relaxed, solver, cfg);
    if (free_run.status == SolveStatus::infeasible ||
        (free_run.status == SolveStatus::optimal && caps_interior(free_run, qos)))
        return free_run;
    return solve_stage_built(ch, qos, radius_near, radius_off, opt, solver, cfg);
}

double rank_gap(const Eigen::MatrixXcd &x) {
    const double tr = x.trace().real();
    if (tr <= 1e-11)
        return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x, Eigen::EigenvaluesOnly);
    const double lmax = es.eigenvalues().maxCoeff();
    return std::clamp(1.0 - lmax / tr, 0.0, 1.0);
}

Eigen::VectorXcd top_eigenvector(const Eigen::MatrixXcd &x) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x);
    return es.eigenvectors().col(x.rows() - 1);
}

// Principal-component beam with a deterministic phase: the entry of largest
// magnitude is rotated onto the positive real axis.
Eigen::VectorXcd extract_beam(const Eigen::MatrixXcd &x) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x);
    const Eigen::Index last = x.rows() - 1;
    const double lam = std::max(es.eigenvalues()(last), 0.0);
    Eigen::VectorXcd v = es.eigenvectors().col(last);
    Eigen::Index k0 = 0;
    v.cwiseAbs().maxCoeff(&k0);
    const std::complex<double> lead = v(k0);
    if (std::abs(lead) > 0.0)
        v *= std::conj(lead) / std::abs(lead);
    return std::sqrt(lam) * v;
}

std::vector<double> padded_radii(const std::vector<double> &r, std::size_t k) {
    std::vector<double> out = r;
    out.resize(k, 0.0);
    return out;
}

RobustSolution assemble_solution(const StageResult &st, const QosSpec &qos) {
    RobustSolution s;
    for (const auto &w : st.w_scaled) {
        Eigen::MatrixXcd phys = st.scale.u_t * w;
        s.rank_gaps_tbs.push_back(rank_gap(phys));
        s.beams.tbs_beams.push_back(extract_beam(phys));
        s.tbs_power_w += phys.trace().real();
        s.lifted_tbs.push_back(std::move(phys));
    }
    for (const auto &v : st.v_scaled) {
        Eigen::MatrixXcd phys = st.scale.u_s * v;
        s.rank_gaps_sat.push_back(rank_gap(phys));
        s.beams.sat_beams.push_back(extract_beam(phys));
        s.sat_power_w += phys.trace().real();
        s.lifted_sat.push_back(std::move(phys));
    }
    for (double lam : st.near_slack)
        s.slack_near.push_back(st.scale.u_t * lam);
    for (double lam : st.off_slack)
        s.slack_off.push_back(st.scale.u_s * lam);
    s.total_power_w = s.tbs_power_w + s.sat_power_w;
    s.objective_w = weighted_power(qos, st.scale, st.w_scaled, st.v_scaled);
    return s;
}

// Narrows an infeasible scenario down to the constraint family that blocks
// it by re-solving relaxed variants.
std::string classify_infeasibility(const ChannelSet &ch, const QosSpec &qos,
                                   const std::vector<double> &rn, const std::vector<double> &ro,
                                   ConicSolver &solver, const PenaltyConfig &cfg) {
    BuildOptions no_caps;
    no_caps.include_caps = false;
    const StageResult uncapped = solve_stage(ch, qos, rn, ro, no_caps, solver, cfg);
    if (uncapped.status == SolveStatus::optimal)
        return "power_caps";
    if (uncapped.status != SolveStatus::infeasible)
        return "infeasible";
    BuildOptions near_only;
    near_only.include_caps = false;
    near_only.include_off = false;
    const StageResult near = solve_stage(ch, qos, rn, ro, near_only, solver, cfg);
    if (near.status == SolveStatus::infeasible)
        return "near_shore_qos";
    if (near.status == SolveStatus::optimal)
        return "off_shore_qos";
    return "infeasible";
}

} // namespace

Eigen::MatrixXcd lmi_near(int i, const std::vector<Eigen::MatrixXcd> &lifted_tbs,
                          const std::vector<Eigen::MatrixXcd> &lifted_sat, const ChannelSet &ch,
                          double rate_near, double radius, double slack) {
    if (i < 0 || static_cast<std::size_t>(i) >= ch.tbs_to_near.size())
        throw std::invalid_argument("lmi_near: user index out of range");
    if (lifted_tbs.size() != ch.tbs_to_near.size())
        throw std::invalid_argument("lmi_near: covariance count mismatch");
    const Eigen::VectorXcd &h = ch.tbs_to_near[i];
    const int m1 = static_cast<int>(h.size());
    const double gp = std::exp2(rate_near) - 1.0;

    Eigen::MatrixXcd n = lifted_tbs[i];
    if (n.rows() != m1 || n.cols() != m1)
        throw std::invalid_argument("lmi_near: covariance dimension mismatch");
    for (std::size_t j = 0; j < lifted_tbs.size(); ++j)
        if (static_cast<int>(j) != i)
            n -= gp * lifted_tbs[j];

    double c1 = ch.noise_var_near.at(i);
    if (!lifted_sat.empty()) {
        const Eigen::VectorXcd &h2 = ch.sat_to_near.at(i);
        for (const auto &v : lifted_sat)
            c1 += (h2.adjoint() * v * h2).value().real();
    }

    Eigen::MatrixXcd block(m1 + 1, m1 + 1);
    block.topLeftCorner(m1, m1) = n + slack * Eigen::MatrixXcd::Identity(m1, m1);
    const Eigen::VectorXcd nh = n * h;
    block.topRightCorner(m1, 1) = nh;
    block.bottomLeftCorner(1, m1) = nh.adjoint();
    block(m1, m1) = (h.adjoint() * n * h).value().real() - gp * c1 - slack * radius * radius;
    return block;
}

Eigen::MatrixXcd lmi_off(int m, const std::vector<Eigen::MatrixXcd> &lifted_sat,
                         const ChannelSet &ch, double rate_off, double radius, double slack) {
    if (m < 0 || static_cast<std::size_t>(m) >= ch.sat_to_off.size())
        throw std::invalid_argument("lmi_off: user index out of range");
    if (lifted_sat.size() != ch.sat_to_off.size())
        throw std::invalid_argument("lmi_off: covariance count mismatch");
    const Eigen::VectorXcd &g = ch.sat_to_off[m];
    const int m2 = static_cast<int>(g.size());
    const double gp = std::exp2(rate_off) - 1.0;

    Eigen::MatrixXcd n = lifted_sat[m];
    if (n.rows() != m2 || n.cols() != m2)
        throw std::invalid_argument("lmi_off: covariance dimension mismatch");
    for (std::size_t k = 0; k < lifted_sat.size(); ++k)
        if (static_cast<int>(k) != m)
            n -= gp * lifted_sat[k];

    Eigen::MatrixXcd block(m2 + 1, m2 + 1);
    block.topLeftCorner(m2, m2) = n + slack * Eigen::MatrixXcd::Identity(m2, m2);
    const Eigen::VectorXcd ng = n * g;
    block.topRightCorner(m2, 1) = ng;
    block.bottomLeftCorner(1, m2) = ng.adjoint();
    block(m2, m2) = (g.adjoint() * n * g).value().real() - gp * ch.noise_var_off.at(m) -
                    slack * radius * radius;
    return block;
}

SdrResult sdr_initialize(const ChannelSet &ch, const QosSpec &qos, const UncertaintyModel &unc,
                         ConicSolver &solver, const PenaltyConfig &cfg) {
    const std::vector<double> rn = padded_radii(unc.channel_radius_tbs, ch.tbs_to_near.size());
    const std::vector<double> ro = padded_radii(unc.channel_radius_sat, ch.sat_to_off.size());

    const StageResult st = solve_stage(ch, qos, rn, ro, BuildOptions{}, solver, cfg);
    SdrResult out;
    out.status = st.status;
    out.detail = st.detail;
    out.solver_iterations = st.solver_iterations;
    if (st.status == SolveStatus::infeasible)
        out.detail = classify_infeasibility(ch, qos, rn, ro, solver, cfg);
    if (st.status != SolveStatus::optimal)
        return out;

    for (const auto &w : st.w_scaled)
        out.lifted_tbs.push_back(st.scale.u_t * w);
    for (const auto &v : st.v_scaled)
        out.lifted_sat.push_back(st.scale.u_s * v);
    for (double lam : st.near_slack)
        out.slack_near.push_back(st.scale.u_t * lam);
    for (double lam : st.off_slack)
        out.slack_off.push_back(st.scale.u_s * lam);
    out.objective_w = st.objective_w;
    return out;
}

SolveOutcome penalty_sca_solve(const ChannelSet &ch, const QosSpec &qos,
                               const UncertaintyModel &unc, ConicSolver &solver,
                               const PenaltyConfig &cfg) {
    const int k1 = static_cast<int>(ch.tbs_to_near.size());
    const int k2 = static_cast<int>(ch.sat_to_off.size());
    const int m1 = k1 > 0 ? static_cast<int>(ch.tbs_to_near[0].size()) : 0;
    const int m2 = k2 > 0 ? static_cast<int>(ch.sat_to_off[0].size()) : 0;
    const std::vector<double> rn = padded_radii(unc.channel_radius_tbs, ch.tbs_to_near.size());
    const std::vector<double> ro = padded_radii(unc.channel_radius_sat, ch.sat_to_off.size());
    const Scaling sc = make_scaling(ch);

    SolveOutcome out;
    const SdrResult sdr = sdr_initialize(ch, qos, unc, solver, cfg);
    out.report.sdr_objective_w = sdr.objective_w;
    if (sdr.status == SolveStatus::infeasible) {
        out.report.status = SolveStatus::infeasible;
        out.report.detail = sdr.detail;
        out.report.termination = "infeasible";
        return out;
    }

    std::vector<Eigen::MatrixXcd> w_prev;
    std::vector<Eigen::MatrixXcd> v_prev;
    double prev_obj = 0.0;
    if (sdr.status == SolveStatus::optimal) {
        for (const auto &w : sdr.lifted_tbs)
            w_prev.push_back(w / sc.u_t);
        for (const auto &v : sdr.lifted_sat)
            v_prev.push_back(v / sc.u_s);
        prev_obj = sdr.objective_w;
    } else {
        // Relaxation failed numerically; start from cap-tight scaled
        // identities instead.
        for (int i = 0; i < k1; ++i)
            w_prev.push_back(qos.tbs_power_cap_w / (std::max(k1 * m1, 1) * sc.u_t) *
                             Eigen::MatrixXcd::Identity(m1, m1));
        for (int m = 0; m < k2; ++m)
            v_prev.push_back(qos.sat_antenna_cap_w / (std::max(k2, 1) * sc.u_s) *
                             Eigen::MatrixXcd::Identity(m2, m2));
        prev_obj = weighted_power(qos, sc, w_prev, v_prev);
        out.report.detail = "relaxation failed (" + sdr.detail + "); identity restart";
    }

    // The penalty competes with the scaled power objective, so its natural
    // unit is the starting objective in scaled form. Starting with a boosted
    // penalty snaps the first iterate to (near) rank one on most instances,
    // making the whole recorded trace non-increasing; when certification
    // needs a re-linearization the objective may tick up once before the
    // certified descent begins. A large penalty also acts as an implicit
    // trust region on the eigenvector linearization, so once an iterate is
    // certified with margin the penalty is halved toward a floor, releasing
    // the beams to descend quickly.
    const double u_obj = k1 > 0 ? sc.u_t : (k2 > 0 ? sc.u_s : 1.0);
    const double penalty_unit = std::max(std::abs(prev_obj) / u_obj, 1.0);
    constexpr double snap_margin = 10.0;
    const double penalty_floor = cfg.initial_penalty;
    double penalty = snap_margin * cfg.initial_penalty * penalty_unit;
    StageResult last;
    bool have_last = false;
    std::string termination;
    SolveStatus final_status = SolveStatus::numerical_failure;
    double final_gap = 1.0;

    for (int t = 1; t <= cfg.max_iterations; ++t) {
        std::vector<Eigen::VectorXcd> ew;
        std::vector<Eigen::VectorXcd> ev;
        for (const auto &w : w_prev)
            ew.push_back(top_eigenvector(w));
        for (const auto &v : v_prev)
            ev.push_back(top_eigenvector(v));
        BuildOptions opt;
        opt.evecs_w = &ew;
        opt.evecs_v = &ev;

        // A stiff penalty row can tip a borderline-conditioned instance into
        // numerical failure; softening the penalty and retrying restores it.
        // Infeasibility is penalty-independent and passes through.
        StageResult st;
        for (;;) {
            opt.penalty = penalty;
            st = solve_stage(ch, qos, rn, ro, opt, solver, cfg);
            if (st.status == SolveStatus::optimal || st.status == SolveStatus::infeasible ||
                penalty <= penalty_floor)
                break;
            penalty = std::max(0.25 * penalty, penalty_floor);
        }
        if (st.status != SolveStatus::optimal) {
            final_status = st.status;
            out.report.detail = "iteration " + std::to_string(t) + ": " + st.detail;
            termination = st.status == SolveStatus::infeasible ? "infeasible" : "solver_failure";
            break;
        }

        double max_gap = 0.0;
        for (const auto &w : st.w_scaled)
            max_gap = std::max(max_gap, rank_gap(w));
        for (const auto &v : st.v_scaled)
            max_gap = std::max(max_gap, rank_gap(v));
        if (cfg.verbose) {
            std::fprintf(stderr, "sca it %d: obj=%.9e penalty=%.3g\n", t, st.objective_w,
                         penalty);
            for (std::size_t i = 0; i < st.w_scaled.size(); ++i)
                std::fprintf(stderr, "  W%zu scaled tr=%.3e gap=%.3e\n", i,
                             st.w_scaled[i].trace().real(), rank_gap(st.w_scaled[i]));
            for (std::size_t m = 0; m < st.v_scaled.size(); ++m) {
                const double tr = st.v_scaled[m].trace().real();
                const double pen_term =
                    tr - (ev[m].adjoint() * st.v_scaled[m] * ev[m]).value().real();
                std::fprintf(stderr, "  V%zu scaled tr=%.3e gap=%.3e pen_term=%.3e\n", m, tr,
                             rank_gap(st.v_scaled[m]), pen_term);
            }
        }

        out.report.iterations.push_back(
            {t, st.objective_w, penalty, max_gap, st.solver_iterations});
        last = st;
        have_last = true;
        final_status = SolveStatus::optimal;
        final_gap = max_gap;

        const bool small_change = std::abs(st.objective_w - prev_obj) <=
                                  cfg.objective_rel_tol * std::max(std::abs(prev_obj), 1e-12);
        if (max_gap <= cfg.rank_gap_tol && small_change) {
            termination = "converged";
            break;
        }
        if (max_gap > cfg.rank_gap_tol)
            penalty += cfg.penalty_increment * penalty_unit;
        else if (max_gap <= 0.01 * cfg.rank_gap_tol)
            penalty = std::max(0.5 * penalty, penalty_floor);
        w_prev = st.w_scaled;
        v_prev = st.v_scaled;
        prev_obj = st.objective_w;
    }
    if (termination.empty())
        termination = "max_iterations";

    out.report.status = final_status;
    out.report.termination = termination;
    out.report.rank_one_certified =
        final_status == SolveStatus::optimal && final_gap <= cfg.rank_gap_tol;
    if (!out.report.rank_one_certified && out.report.status == SolveStatus::optimal &&
        termination == "max_iterations")
        out.report.detail = "rank-one not certified";
    if (have_last)
        out.solution = assemble_solution(last, qos);
    return out;
}

SolveOutcome nonrobust_solve(const ChannelSet &ch, const QosSpec &qos, ConicSolver &solver,
                             const PenaltyConfig &cfg) {
    UncertaintyModel none;
    none.channel_radius_tbs.assign(ch.tbs_to_near.size(), 0.0);
    none.channel_radius_sat.assign(ch.sat_to_off.size(), 0.0);
    return penalty_sca_solve(ch, qos, none, solver, cfg);
}

void rates_at(const BeamSet &beams, const ChannelSet &ch,
              const std::vector<LinkModel> &near_links, const std::vector<LinkModel> &off_links,
              double dtheta_near, double dtheta_off, PerturbationModel model,
              std::vector<double> &near_rates, std::vector<double> &off_rates) {
    if (near_links.size() != ch.tbs_to_near.size() || off_links.size() != ch.sat_to_off.size())
        throw std::invalid_argument("rates_at: link models do not match channel set");
    ChannelSet pert = ch;
    for (std::size_t i = 0; i < near_links.size(); ++i)
        pert.tbs_to_near[i] = channel_at(near_links[i], dtheta_near, model);
    for (std::size_t m = 0; m < off_links.size(); ++m)
        pert.sat_to_off[m] = channel_at(off_links[m], dtheta_off, model);
    near_rates.resize(near_links.size());
    off_rates.resize(off_links.size());
    for (std::size_t i = 0; i < near_links.size(); ++i)
        near_rates[i] = rate(sinr_near(static_cast<int>(i), pert, beams));
    for (std::size_t m = 0; m < off_links.size(); ++m)
        off_rates[m] = rate(sinr_off(static_cast<int>(m), pert, beams));
}

WorstCaseRates verify_worst_case(const RobustSolution &sol, const ChannelSet &ch,
                                 const std::vector<LinkModel> &near_links,
                                 const std::vector<LinkModel> &off_links,
                                 const UncertaintyModel &unc, int n_grid,
                                 PerturbationModel model) {
    const int n = std::max(n_grid, 2);
    WorstCaseRates out;
    out.near_rates.assign(ch.tbs_to_near.size(), std::numeric_limits<double>::infinity());
    out.off_rates.assign(ch.sat_to_off.size(), std::numeric_limits<double>::infinity());
    std::vector<double> nr;
    std::vector<double> ofr;
    for (int k = 0; k < n; ++k) {
        const double frac = 2.0 * static_cast<double>(k) / (n - 1) - 1.0;
        rates_at(sol.beams, ch, near_links, off_links, frac * unc.angle_bound_tbs, 0.0, model,
                 nr, ofr);
        for (std::size_t i = 0; i < nr.size(); ++i)
            out.near_rates[i] = std::min(out.near_rates[i], nr[i]);
    }
    for (int k = 0; k < n; ++k) {
        const double frac = 2.0 * static_cast<double>(k) / (n - 1) - 1.0;
        rates_at(sol.beams, ch, near_links, off_links, 0.0, frac * unc.angle_bound_sat, model,
                 nr, ofr);
        for (std::size_t m = 0; m < ofr.size(); ++m)
            out.off_rates[m] = std::min(out.off_rates[m], ofr[m]);
    }
    return out;
}

ComplexityEstimate complexity_estimate(int k1, int m1, int k2, int m2, double eta) {
    if (k1 < 1 || m1 < 1 || k2 < 1 || m2 < 1)
        throw std::domain_error("complexity_estimate: sizes must be positive");
    if (!(eta > 0.0 && eta < 1.0))
        throw std::domain_error("complexity_estimate: eta must lie in (0, 1)");
    const double K1 = k1, M1 = m1, K2 = k2, M2 = m2;
    const double lg = std::log(1.0 / eta);

    ComplexityEstimate est;
    est.barrier_near = K1 * (M1 + 1.0) + K1 * M1 + K1 + 1.0;
    est.n1 = K1 * M1 * M1;
    est.n2 = K2 * M2 * M2;
    const double p1 = std::pow(M1 + 1.0, 3) + M1 * M1 * M1 + 1.0;
    const double q1 = std::pow(M1 + 1.0, 2) + M1 * M1 + 1.0;
    est.c1 = std::sqrt(2.0 * K1 * (M1 + 1.0)) * est.n1 *
             (K1 * p1 + K1 * est.n1 * q1 + est.n1 * est.n1) * lg;
    const double p2 = std::pow(M2 + 1.0, 3) + M2 * M2 * M2 + 2.0;
    const double q2 = std::pow(M2 + 1.0, 2) + M2 * M2 + 2.0;
    est.c2 = std::sqrt(K2 * (2.0 * M2 + 3.0)) * est.n2 *
             (K2 * p2 + K2 * est.n2 * q2 + est.n2 * est.n2) * lg;
    est.total = est.c1 + est.c2;
    return est;
}

} // namespace seabeam
