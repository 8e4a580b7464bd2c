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
// Solver-neutral representation of the convex subproblems: Hermitian PSD
// matrix variables, nonnegative scalars, a linear objective, scalar
// inequality rows and affine Hermitian LMI blocks.
//
// Adapter contract. A backend receives the program lowered to the standard
// conic form
//
//     minimize    q' x
//     subject to  A x + s = b,   s in K,
//
// where A is handed over as sparse triplets in deterministic order and K is
// an ordered product of {zero, nonnegative, second-order, PSD-triangle}
// cones. Complex Hermitian data is lowered losslessly before the backend is
// invoked: a Hermitian X of dimension d becomes the real symmetric
// [[Re X, -Im X], [Im X, Re X]] of dimension 2d, whose PSD-triangle cone
// block is parameterized by the d^2 real degrees of freedom of X, so the
// embedding is bijective and the recovered complex solution is exact up to
// solver accuracy. PSD-triangle cone rows use column-major upper-triangle
// scaled vectorization (off-diagonal entries multiplied by sqrt(2)).

#ifndef SEABEAM_CONIC_HPP
#define SEABEAM_CONIC_HPP

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace seabeam {

enum class ConeKind { zero, nonneg, second_order, psd_triangle };

struct ConeSpec {
    ConeKind kind = ConeKind::nonneg;
    int dim = 0; // side length for psd_triangle, row count otherwise
};

// Lowered program in the standard conic form described above.
struct StandardForm {
    int num_vars = 0;
    int num_rows = 0;
    std::vector<int> a_rows;
    std::vector<int> a_cols;
    std::vector<double> a_vals;
    std::vector<double> b;
    std::vector<double> q;
    double objective_constant = 0.0;
    std::vector<ConeSpec> cones;
};

enum class SolveStatus { optimal, infeasible, numerical_failure };

struct RawSolution {
    SolveStatus status = SolveStatus::numerical_failure;
    std::vector<double> x;
    std::vector<double> z;
    std::vector<double> s;
    double objective = 0.0;
    int iterations = 0;
    std::string detail;
};

// Backend seam. Implementations must report infeasibility and numerical
// failure through the status field, never by throwing.
class ConicSolver {
  public:
    virtual ~ConicSolver() = default;
    virtual RawSolution solve(const StandardForm &form, double tolerance, int max_iterations,
                              bool verbose) = 0;
};

// coeff * map * X * map^H contribution of matrix variable `var` to a block.
struct CongruenceTerm {
    int var = 0;
    double coeff = 1.0;
    Eigen::MatrixXcd map;
};

// scalar variable times a constant Hermitian matrix.
struct ScalarMatrixTerm {
    int var = 0;
    Eigen::MatrixXcd coeff;
};

// Affine Hermitian expression required positive semidefinite.
struct LmiBlock {
    std::string name;
    int dim = 0;
    Eigen::MatrixXcd constant;
    std::vector<CongruenceTerm> congruences;
    std::vector<ScalarMatrixTerm> scalars;
};

// tr(C X) with Hermitian C.
struct TraceTerm {
    int var = 0;
    Eigen::MatrixXcd coeff;
};

struct LinearExpr {
    std::vector<TraceTerm> traces;
    std::vector<std::pair<int, double>> scalars;
    double constant = 0.0;
};

// lhs <= rhs.
struct LinearConstraint {
    std::string name;
    LinearExpr lhs;
    double rhs = 0.0;
};

struct MatrixVariable {
    std::string name;
    int dim = 0;
    bool psd = true;
};

struct ScalarVariable {
    std::string name;
    bool nonneg = true;
};

class ConicProgram {
  public:
    int add_matrix_variable(std::string name, int dim, bool psd = true);
    int add_scalar_variable(std::string name, bool nonneg = true);

    void add_objective_trace(int var, const Eigen::MatrixXcd &coeff);
    void add_objective_scalar(int var, double coeff);
    void add_objective_constant(double value);

    void add_lmi(LmiBlock block);
    void add_inequality(LinearConstraint constraint);

    // Validates dimensions and Hermiticity of every matrix datum. Throws
    // std::invalid_argument with the offending block name on failure.
    void validate() const;

    const std::vector<MatrixVariable> &matrix_variables() const { return matrix_vars_; }
    const std::vector<ScalarVariable> &scalar_variables() const { return scalar_vars_; }
    const LinearExpr &objective() const { return objective_; }
    const std::vector<LmiBlock> &lmis() const { return lmis_; }
    const std::vector<LinearConstraint> &inequalities() const { return inequalities_; }

    // Lowers the validated program to the standard conic form.
    StandardForm realify() const;

    // Evaluates an LMI block or linear expression at given variable values.
    Eigen::MatrixXcd evaluate_lmi(const LmiBlock &block,
                                  const std::vector<Eigen::MatrixXcd> &matrix_values,
                                  const std::vector<double> &scalar_values) const;
    double evaluate_expr(const LinearExpr &expr,
                         const std::vector<Eigen::MatrixXcd> &matrix_values,
                         const std::vector<double> &scalar_values) const;

  private:
    std::vector<MatrixVariable> matrix_vars_;
    std::vector<ScalarVariable> scalar_vars_;
    LinearExpr objective_;
    std::vector<LmiBlock> lmis_;
    std::vector<LinearConstraint> inequalities_;
};

struct ConicSolution {
    SolveStatus status = SolveStatus::numerical_failure;
    std::vector<Eigen::MatrixXcd> matrix_values;
    std::vector<double> scalar_values;
    double objective_value = 0.0;
    int solver_iterations = 0;
    std::string diagnostics;
};

// Solves the program through the given backend and re-checks feasibility of
// the returned point independently of the solver's own report: eigenvalues
// of PSD variables and LMI blocks and the residuals of linear rows must
// stay within a slack proportional to the requested tolerance and to the
// magnitude of the block, otherwise the status is downgraded to
// numerical_failure.
ConicSolution solve(const ConicProgram &program, ConicSolver &solver, double tolerance = 1e-7,
                    int max_iterations = 200, bool verbose = false);

} // namespace seabeam

#endif
