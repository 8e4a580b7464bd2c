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

#include <doctest.h>

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

#include "seabeam/rng.hpp"
#include "seabeam/solver.hpp"

using namespace seabeam;

namespace {

Eigen::MatrixXcd random_hermitian(int d, RandomStream &rng) {
    Eigen::MatrixXcd a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            a(i, j) = rng.cnormal();
    return 0.5 * (a + a.adjoint()).eval();
}

Eigen::VectorXcd random_vector(int d, RandomStream &rng) {
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i)
        v[i] = rng.cnormal();
    return v;
}

} // namespace

TEST_CASE("scalar linear program solves to the bound") {
    ConicProgram prog;
    const int x = prog.add_scalar_variable("x");
    prog.add_objective_scalar(x, 1.0);
    LinearConstraint lc;
    lc.name = "x >= 3";
    lc.lhs.scalars.push_back({x, -1.0});
    lc.rhs = -3.0;
    prog.add_inequality(lc);
    prog.validate();

    ClarabelSolver solver;
    const ConicSolution sol = solve(prog, solver, 1e-9);
    REQUIRE(sol.status == SolveStatus::optimal);
    CHECK(sol.scalar_values[x] == doctest::Approx(3.0).epsilon(1e-7));
    CHECK(sol.objective_value == doctest::Approx(3.0).epsilon(1e-7));
}

TEST_CASE("objective constant is carried through") {
    ConicProgram prog;
    const int x = prog.add_scalar_variable("x");
    prog.add_objective_scalar(x, 2.0);
    prog.add_objective_constant(5.0);
    LinearConstraint lc;
    lc.name = "x >= 1";
    lc.lhs.scalars.push_back({x, -1.0});
    lc.rhs = -1.0;
    prog.add_inequality(lc);

    ClarabelSolver solver;
    const ConicSolution sol = solve(prog, solver, 1e-9);
    REQUIRE(sol.status == SolveStatus::optimal);
    CHECK(sol.objective_value == doctest::Approx(7.0).epsilon(1e-7));
}

TEST_CASE("conflicting scalar bounds report infeasible") {
    ConicProgram prog;
    const int x = prog.add_scalar_variable("x");
    prog.add_objective_scalar(x, 1.0);
    LinearConstraint ge;
    ge.name = "x >= 1";
    ge.lhs.scalars.push_back({x, -1.0});
    ge.rhs = -1.0;
    prog.add_inequality(ge);
    LinearConstraint le;
    le.name = "x <= 0";
    le.lhs.scalars.push_back({x, 1.0});
    le.rhs = 0.0;
    prog.add_inequality(le);

    ClarabelSolver solver;
    const ConicSolution sol = solve(prog, solver);
    CHECK(sol.status == SolveStatus::infeasible);
}

TEST_CASE("matched-beam trace minimum has the closed form c/|h|^2") {
    RandomStream rng(31);
    const int m = 4;
    const Eigen::VectorXcd h = random_vector(m, rng);
    const double c = 2.0;

    ConicProgram prog;
    const int w = prog.add_matrix_variable("W", m);
    prog.add_objective_trace(w, Eigen::MatrixXcd::Identity(m, m));
    // tr(h h' W) >= c, written as -tr(h h' W) <= -c.
    LinearConstraint lc;
    lc.name = "qos";
    lc.lhs.traces.push_back({w, (-(h * h.adjoint())).eval()});
    lc.rhs = -c;
    prog.add_inequality(lc);
    prog.validate();

    ClarabelSolver solver;
    const ConicSolution sol = solve(prog, solver, 1e-9);
    REQUIRE(sol.status == SolveStatus::optimal);
    const double expect = c / h.squaredNorm();
    CHECK(sol.objective_value == doctest::Approx(expect).epsilon(1e-6));

    // The optimizer is rank one along h.
    const Eigen::MatrixXcd w_star = sol.matrix_values[w];
    CHECK((w_star - w_star.adjoint()).norm() < 1e-8);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(w_star);
    CHECK(es.eigenvalues().maxCoeff() ==
          doctest::Approx(w_star.trace().real()).epsilon(1e-5));
    // Recovered complex solution satisfies the constraint it was given.
    CHECK((h.adjoint() * w_star * h).real()(0, 0) >= c - 1e-6);
}

TEST_CASE("LMI eigenvalue bound reproduces lambda_max") {
    RandomStream rng(17);
    const int d = 3;
    const Eigen::MatrixXcd c = random_hermitian(d, rng);

    ConicProgram prog;
    const int t = prog.add_scalar_variable("t", /*nonneg=*/false);
    prog.add_objective_scalar(t, 1.0);
    LmiBlock block;
    block.name = "tI - C >= 0";
    block.dim = d;
    block.constant = -c;
    block.scalars.push_back({t, Eigen::MatrixXcd::Identity(d, d)});
    prog.add_lmi(std::move(block));
    prog.validate();

    ClarabelSolver solver;
    const ConicSolution sol = solve(prog, solver, 1e-9);
    REQUIRE(sol.status == SolveStatus::optimal);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c);
    CHECK(sol.scalar_values[t] ==
          doctest::Approx(es.eigenvalues().maxCoeff()).epsilon(1e-6));
}

TEST_CASE("congruence terms transform matrix variables inside LMIs") {
    // Smallest t with t I >= B X B' where X is itself pinned by tr(X) >= 1
    // and X is PSD of dim 2: at the optimum t = lambda_max(B X* B').
    RandomStream rng(23);
    const int d = 2;
    Eigen::MatrixXcd bmap(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            bmap(i, j) = rng.cnormal();

    ConicProgram prog;
    const int x = prog.add_matrix_variable("X", d);
    const int t = prog.add_scalar_variable("t", false);
    prog.add_objective_scalar(t, 1.0);

    LinearConstraint lc;
    lc.name = "tr X >= 1";
    lc.lhs.traces.push_back({x, (-Eigen::MatrixXcd::Identity(d, d)).eval()});
    lc.rhs = -1.0;
    prog.add_inequality(lc);

    LmiBlock block;
    block.name = "tI - BXB'";
    block.dim = d;
    block.constant = Eigen::MatrixXcd::Zero(d, d);
    block.scalars.push_back({t, Eigen::MatrixXcd::Identity(d, d)});
    block.congruences.push_back({x, -1.0, bmap});
    prog.add_lmi(std::move(block));
    prog.validate();

    ClarabelSolver solver;
    const ConicSolution sol = solve(prog, solver, 1e-9);
    REQUIRE(sol.status == SolveStatus::optimal);

    // The reported t matches the eigenvalue bound at the returned X.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        (bmap * sol.matrix_values[x] * bmap.adjoint()).eval());
    CHECK(sol.scalar_values[t] ==
          doctest::Approx(es.eigenvalues().maxCoeff()).epsilon(1e-5));
    // X stays PSD with unit trace at the optimum.
    CHECK(sol.matrix_values[x].trace().real() == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("realify produces the documented embedding sizes") {
    ConicProgram prog;
    prog.add_matrix_variable("W", 2);
    const StandardForm form = prog.realify();
    // A Hermitian 2x2 matrix has 4 real degrees of freedom.
    CHECK(form.num_vars == 4);
    bool has_psd4 = false;
    for (const auto &cone : form.cones)
        has_psd4 = has_psd4 || (cone.kind == ConeKind::psd_triangle && cone.dim == 4);
    CHECK(has_psd4);
}

TEST_CASE("degenerate programs resolve without a backend call") {
    // Empty program: trivially optimal at objective zero.
    ConicProgram empty;
    ClarabelSolver solver;
    const ConicSolution sol = solve(empty, solver);
    CHECK(sol.status == SolveStatus::optimal);
    CHECK(sol.objective_value == 0.0);

    // A free scalar with an objective and no constraints is unbounded and
    // reported as a failure rather than a fake optimum.
    ConicProgram unbounded;
    const int t = unbounded.add_scalar_variable("t", false);
    unbounded.add_objective_scalar(t, 1.0);
    const ConicSolution sol2 = solve(unbounded, solver);
    CHECK(sol2.status == SolveStatus::numerical_failure);
}

TEST_CASE("validate names the offending block") {
    ConicProgram prog;
    const int w = prog.add_matrix_variable("W", 2);
    Eigen::MatrixXcd bad(2, 2);
    bad << 1.0, std::complex<double>(0.0, 1.0), std::complex<double>(0.0, 1.0), 1.0;
    LmiBlock block;
    block.name = "bad-block";
    block.dim = 2;
    block.constant = bad; // not Hermitian
    block.congruences.push_back({w, 1.0, Eigen::MatrixXcd::Identity(2, 2)});
    prog.add_lmi(std::move(block));
    try {
        prog.validate();
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument &e) {
        CHECK(std::string(e.what()).find("bad-block") != std::string::npos);
    }
}

TEST_CASE("validate rejects dimension mismatches") {
    ConicProgram prog;
    const int w = prog.add_matrix_variable("W", 3);
    LmiBlock block;
    block.name = "mismatch";
    block.dim = 2;
    block.constant = Eigen::MatrixXcd::Zero(2, 2);
    // Map has 2 columns but W has dimension 3.
    block.congruences.push_back({w, 1.0, Eigen::MatrixXcd::Identity(2, 2)});
    prog.add_lmi(std::move(block));
    CHECK_THROWS_AS(prog.validate(), std::invalid_argument);
}

TEST_CASE("evaluate helpers reproduce direct algebra") {
    RandomStream rng(41);
    const int d = 3;
    ConicProgram prog;
    const int x = prog.add_matrix_variable("X", d);
    const int s = prog.add_scalar_variable("s");

    const Eigen::MatrixXcd cmat = random_hermitian(d, rng);
    const Eigen::MatrixXcd smat = random_hermitian(d, rng);
    Eigen::MatrixXcd map(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            map(i, j) = rng.cnormal();

    LmiBlock block;
    block.name = "eval";
    block.dim = d;
    block.constant = cmat;
    block.congruences.push_back({x, 2.0, map});
    block.scalars.push_back({s, smat});

    Eigen::MatrixXcd xval = random_hermitian(d, rng);
    xval = (xval * xval.adjoint()).eval(); // make it PSD for realism
    const double sval = 1.7;

    const Eigen::MatrixXcd got = prog.evaluate_lmi(block, {xval}, {sval});
    const Eigen::MatrixXcd expect = cmat + 2.0 * map * xval * map.adjoint() + sval * smat;
    CHECK((got - expect).norm() < 1e-12 * std::max(1.0, expect.norm()));

    LinearExpr expr;
    expr.traces.push_back({x, cmat});
    expr.scalars.push_back({s, -3.0});
    expr.constant = 0.25;
    const double got_e = prog.evaluate_expr(expr, {xval}, {sval});
    const double expect_e = (cmat * xval).trace().real() - 3.0 * sval + 0.25;
    CHECK(got_e == doctest::Approx(expect_e).epsilon(1e-12));
}

namespace {

// Backend double that reports success while returning an infeasible point;
// the independent post-check must refuse it.
class LyingSolver final : public ConicSolver {
  public:
    RawSolution solve(const StandardForm &form, double, int, bool) override {
        RawSolution out;
        out.status = SolveStatus::optimal;
        out.x.assign(static_cast<std::size_t>(form.num_vars), 0.0);
        // Claim a wildly indefinite PSD variable.
        if (!out.x.empty())
            out.x[0] = -1e6;
        out.objective = -1e6;
        return out;
    }
};

} // namespace

TEST_CASE("post-check downgrades solutions that violate the cones") {
    ConicProgram prog;
    const int w = prog.add_matrix_variable("W", 2);
    prog.add_objective_trace(w, Eigen::MatrixXcd::Identity(2, 2));
    LinearConstraint lc;
    lc.name = "tr >= 1";
    lc.lhs.traces.push_back({w, (-Eigen::MatrixXcd::Identity(2, 2)).eval()});
    lc.rhs = -1.0;
    prog.add_inequality(lc);

    LyingSolver liar;
    const ConicSolution sol = solve(prog, liar);
    CHECK(sol.status == SolveStatus::numerical_failure);
}
