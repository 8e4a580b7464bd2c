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

#include "seabeam/conic.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace seabeam {

namespace {

constexpr double hermitian_tol = 1e-12;
const double sqrt2 = std::sqrt(2.0);

// Hermitian X of dimension d is parameterized by d^2 reals in column-major
// upper-triangle order: column j holds (Re, Im) pairs for rows i < j followed
// by the real diagonal entry, so column j starts at parameter j^2.
int param_diag(int j) { return j * j + 2 * j; }
int param_re(int i, int j) { return j * j + 2 * i; }
int param_im(int i, int j) { return j * j + 2 * i + 1; }

// Column-major upper-triangle slot of entry (a, b), a <= b.
int svec_slot(int a, int b) { return b * (b + 1) / 2 + a; }

void check_hermitian(const Eigen::MatrixXcd &m, const std::string &where) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(where + ": matrix is not square");
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(dev <= hermitian_tol))
        throw std::invalid_argument(where + ": matrix is not Hermitian");
    if (!m.allFinite())
        throw std::invalid_argument(where + ": matrix has non-finite entries");
}

struct Layout {
    std::vector<int> matrix_offset;
    std::vector<int> scalar_offset;
    int num_vars = 0;
};

Layout make_layout(const ConicProgram &p) {
    Layout lay;
    int off = 0;
    for (const auto &v : p.matrix_variables()) {
        lay.matrix_offset.push_back(off);
        off += v.dim * v.dim;
    }
    for (std::size_t q = 0; q < p.scalar_variables().size(); ++q) {
        lay.scalar_offset.push_back(off);
        ++off;
    }
    lay.num_vars = off;
    return lay;
}

// Accumulates the coefficients of a linear expression over the parameter
// vector; sign lets the same routine emit +lhs rows and -objective entries.
void scatter_expr(const LinearExpr &expr, const Layout &lay, double sign,
                  const std::vector<MatrixVariable> &mvars,
                  std::vector<double> &dense) {
    for (const auto &t : expr.traces) {
        const int base = lay.matrix_offset.at(t.var);
        const int d = mvars.at(t.var).dim;
        for (int j = 0; j < d; ++j) {
            dense[base + param_diag(j)] += sign * t.coeff(j, j).real();
            for (int i = 0; i < j; ++i) {
                dense[base + param_re(i, j)] += sign * 2.0 * t.coeff(i, j).real();
                dense[base + param_im(i, j)] += sign * 2.0 * t.coeff(i, j).imag();
            }
        }
    }
    for (const auto &s : expr.scalars)
        dense[lay.scalar_offset.at(s.first)] += sign * s.second;
}

// Writes the scaled upper triangle of the realified image of a complex
// matrix into rows [row0, row0 + p(2p+1)) at a fixed column.
void scatter_block_column(const Eigen::MatrixXcd &db, int row0, int col, double sign,
                          std::vector<Eigen::Triplet<double>> &trips) {
    const int p = static_cast<int>(db.rows());
    const int bigd = 2 * p;
    for (int b = 0; b < bigd; ++b) {
        for (int a = 0; a <= b; ++a) {
            double val;
            if (b < p)
                val = db(a, b).real();
            else if (a < p)
                val = -db(a, b - p).imag();
            else
                val = db(a - p, b - p).real();
            if (val == 0.0)
                continue;
            const double w = (a == b) ? 1.0 : sqrt2;
            trips.emplace_back(row0 + svec_slot(a, b), col, sign * w * val);
        }
    }
}

} // namespace

int ConicProgram::add_matrix_variable(std::string name, int dim, bool psd) {
    if (dim < 1)
        throw std::invalid_argument("add_matrix_variable: dimension must be >= 1");
    matrix_vars_.push_back({std::move(name), dim, psd});
    return static_cast<int>(matrix_vars_.size()) - 1;
}

int ConicProgram::add_scalar_variable(std::string name, bool nonneg) {
    scalar_vars_.push_back({std::move(name), nonneg});
    return static_cast<int>(scalar_vars_.size()) - 1;
}

void ConicProgram::add_objective_trace(int var, const Eigen::MatrixXcd &coeff) {
    objective_.traces.push_back({var, coeff});
}

void ConicProgram::add_objective_scalar(int var, double coeff) {
    objective_.scalars.emplace_back(var, coeff);
}

void ConicProgram::add_objective_constant(double value) { objective_.constant += value; }

void ConicProgram::add_lmi(LmiBlock block) { lmis_.push_back(std::move(block)); }

void ConicProgram::add_inequality(LinearConstraint constraint) {
    inequalities_.push_back(std::move(constraint));
}

void ConicProgram::validate() const {
    const int nm = static_cast<int>(matrix_vars_.size());
    const int ns = static_cast<int>(scalar_vars_.size());
    auto check_expr = [&](const LinearExpr &expr, const std::string &where) {
        for (const auto &t : expr.traces) {
            if (t.var < 0 || t.var >= nm)
                throw std::invalid_argument(where + ": trace term references unknown variable");
            if (t.coeff.rows() != matrix_vars_[t.var].dim)
                throw std::invalid_argument(where + ": trace coefficient dimension mismatch");
            check_hermitian(t.coeff, where);
        }
        for (const auto &s : expr.scalars)
            if (s.first < 0 || s.first >= ns)
                throw std::invalid_argument(where + ": scalar term references unknown variable");
    };
    check_expr(objective_, "objective");
    for (const auto &c : inequalities_)
        check_expr(c.lhs, "inequality " + c.name);
    for (const auto &blk : lmis_) {
        const std::string where = "lmi " + blk.name;
        if (blk.dim < 1)
            throw std::invalid_argument(where + ": dimension must be >= 1");
        if (blk.constant.rows() != blk.dim)
            throw std::invalid_argument(where + ": constant dimension mismatch");
        check_hermitian(blk.constant, where);
        for (const auto &ct : blk.congruences) {
            if (ct.var < 0 || ct.var >= nm)
                throw std::invalid_argument(where + ": congruence references unknown variable");
            if (ct.map.rows() != blk.dim || ct.map.cols() != matrix_vars_[ct.var].dim)
                throw std::invalid_argument(where + ": congruence map dimension mismatch");
            if (!ct.map.allFinite())
                throw std::invalid_argument(where + ": congruence map has non-finite entries");
        }
        for (const auto &st : blk.scalars) {
            if (st.var < 0 || st.var >= ns)
                throw std::invalid_argument(where + ": scalar term references unknown variable");
            if (st.coeff.rows() != blk.dim)
                throw std::invalid_argument(where + ": scalar coefficient dimension mismatch");
            check_hermitian(st.coeff, where);
        }
    }
}

StandardForm ConicProgram::realify() const {
    validate();
    const Layout lay = make_layout(*this);

    StandardForm form;
    form.num_vars = lay.num_vars;
    form.objective_constant = objective_.constant;
    form.q.assign(lay.num_vars, 0.0);
    {
        std::vector<double> dense(lay.num_vars, 0.0);
        scatter_expr(objective_, lay, 1.0, matrix_vars_, dense);
        form.q = dense;
    }

    std::vector<Eigen::Triplet<double>> trips;
    int row = 0;

    // Nonnegative section: scalar sign rows, then inequality rows.
    int nonneg_rows = 0;
    for (std::size_t q = 0; q < scalar_vars_.size(); ++q) {
        if (!scalar_vars_[q].nonneg)
            continue;
        trips.emplace_back(row, lay.scalar_offset[q], -1.0);
        form.b.push_back(0.0);
        ++row;
        ++nonneg_rows;
    }
    for (const auto &c : inequalities_) {
        std::vector<double> dense(lay.num_vars, 0.0);
        scatter_expr(c.lhs, lay, 1.0, matrix_vars_, dense);
        for (int col = 0; col < lay.num_vars; ++col)
            if (dense[col] != 0.0)
                trips.emplace_back(row, col, dense[col]);
        form.b.push_back(c.rhs - c.lhs.constant);
        ++row;
        ++nonneg_rows;
    }
    if (nonneg_rows > 0)
        form.cones.push_back({ConeKind::nonneg, nonneg_rows});

    // PSD sections for matrix variables: s = realified X.
    for (std::size_t v = 0; v < matrix_vars_.size(); ++v) {
        if (!matrix_vars_[v].psd)
            continue;
        const int d = matrix_vars_[v].dim;
        const int bigd = 2 * d;
        const int base = lay.matrix_offset[v];
        for (int b = 0; b < bigd; ++b) {
            for (int a = 0; a <= b; ++a) {
                const double w = (a == b) ? 1.0 : sqrt2;
                int col = -1;
                double coeff = 1.0;
                if (b < d) {
                    col = (a == b) ? param_diag(b) : param_re(a, b);
                } else if (a >= d) {
                    const int i = a - d, j = b - d;
                    col = (i == j) ? param_diag(j) : param_re(i, j);
                } else {
                    const int i = a, j = b - d;
                    if (i == j)
                        continue; // diagonal imaginary part is structurally zero
                    if (i < j) {
                        col = param_im(i, j);
                        coeff = -1.0;
                    } else {
                        col = param_im(j, i);
                        coeff = 1.0;
                    }
                }
                trips.emplace_back(row + svec_slot(a, b), base + col, -w * coeff);
            }
        }
        const int rows_here = bigd * (bigd + 1) / 2;
        for (int k = 0; k < rows_here; ++k)
            form.b.push_back(0.0);
        form.cones.push_back({ConeKind::psd_triangle, bigd});
        row += rows_here;
    }

    // LMI sections: s = realified block value.
    for (const auto &blk : lmis_) {
        const int p = blk.dim;
        const int bigd = 2 * p;
        for (const auto &ct : blk.congruences) {
            const int d = matrix_vars_[ct.var].dim;
            const int base = lay.matrix_offset[ct.var];
            const std::complex<double> j_unit(0.0, 1.0);
            for (int j = 0; j < d; ++j) {
                const Eigen::VectorXcd lj = ct.map.col(j);
                scatter_block_column(Eigen::MatrixXcd(ct.coeff * lj * lj.adjoint()), row,
                                     base + param_diag(j), -1.0, trips);
                for (int i = 0; i < j; ++i) {
                    const Eigen::VectorXcd li = ct.map.col(i);
                    const Eigen::MatrixXcd outer_ij = li * lj.adjoint();
                    const Eigen::MatrixXcd outer_ji = lj * li.adjoint();
                    scatter_block_column(Eigen::MatrixXcd(ct.coeff * (outer_ij + outer_ji)),
                                         row, base + param_re(i, j), -1.0, trips);
                    scatter_block_column(
                        Eigen::MatrixXcd(ct.coeff * (j_unit * outer_ij - j_unit * outer_ji)),
                        row, base + param_im(i, j), -1.0, trips);
                }
            }
        }
        for (const auto &st : blk.scalars)
            scatter_block_column(st.coeff, row, lay.scalar_offset.at(st.var), -1.0, trips);

        for (int b = 0; b < bigd; ++b) {
            for (int a = 0; a <= b; ++a) {
                const double w = (a == b) ? 1.0 : sqrt2;
                double val;
                if (b < p)
                    val = blk.constant(a, b).real();
                else if (a < p)
                    val = -blk.constant(a, b - p).imag();
                else
                    val = blk.constant(a - p, b - p).real();
                form.b.push_back(w * val);
            }
        }
        form.cones.push_back({ConeKind::psd_triangle, bigd});
        row += bigd * (bigd + 1) / 2;
    }

    form.num_rows = row;

    Eigen::SparseMatrix<double> a(form.num_rows, form.num_vars);
    a.setFromTriplets(trips.begin(), trips.end());
    a.makeCompressed();
    form.a_rows.reserve(a.nonZeros());
    form.a_cols.reserve(a.nonZeros());
    form.a_vals.reserve(a.nonZeros());
    for (int col = 0; col < a.outerSize(); ++col) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(a, col); it; ++it) {
            form.a_rows.push_back(static_cast<int>(it.row()));
            form.a_cols.push_back(col);
            form.a_vals.push_back(it.value());
        }
    }
    return form;
}

Eigen::MatrixXcd ConicProgram::evaluate_lmi(const LmiBlock &block,
                                            const std::vector<Eigen::MatrixXcd> &matrix_values,
                                            const std::vector<double> &scalar_values) const {
    Eigen::MatrixXcd out = block.constant;
    for (const auto &ct : block.congruences)
        out += ct.coeff * ct.map * matrix_values.at(ct.var) * ct.map.adjoint();
    for (const auto &st : block.scalars)
        out += scalar_values.at(st.var) * st.coeff;
    return out;
}

double ConicProgram::evaluate_expr(const LinearExpr &expr,
                                   const std::vector<Eigen::MatrixXcd> &matrix_values,
                                   const std::vector<double> &scalar_values) const {
    double out = expr.constant;
    for (const auto &t : expr.traces)
        out += (t.coeff * matrix_values.at(t.var)).trace().real();
    for (const auto &s : expr.scalars)
        out += s.second * scalar_values.at(s.first);
    return out;
}

namespace {

void extract_values(const ConicProgram &p, const std::vector<double> &x,
                    std::vector<Eigen::MatrixXcd> &mats, std::vector<double> &scals) {
    const Layout lay = make_layout(p);
    mats.clear();
    scals.clear();
    for (std::size_t v = 0; v < p.matrix_variables().size(); ++v) {
        const int d = p.matrix_variables()[v].dim;
        const int base = lay.matrix_offset[v];
        Eigen::MatrixXcd m(d, d);
        for (int j = 0; j < d; ++j) {
            m(j, j) = x.at(base + param_diag(j));
            for (int i = 0; i < j; ++i) {
                const std::complex<double> val(x.at(base + param_re(i, j)),
                                               x.at(base + param_im(i, j)));
                m(i, j) = val;
                m(j, i) = std::conj(val);
            }
        }
        mats.push_back(std::move(m));
    }
    for (std::size_t q = 0; q < p.scalar_variables().size(); ++q)
        scals.push_back(x.at(lay.scalar_offset[q]));
}

std::string post_check(const ConicProgram &p, const std::vector<Eigen::MatrixXcd> &mats,
                       const std::vector<double> &scals, double tolerance) {
    // Feasibility audit independent of the solver's own residual report.
    // The thresholds scale with the requested accuracy and with the size of
    // the checked quantity, so "Solved" answers carrying eigenvalue dust a
    // couple of orders above machine precision are not rejected.
    const double base = 100.0 * std::max(tolerance, 1e-12);
    std::ostringstream oss;
    for (std::size_t v = 0; v < p.matrix_variables().size(); ++v) {
        if (!p.matrix_variables()[v].psd)
            continue;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mats[v],
                                                           Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        const double hi = es.eigenvalues().maxCoeff();
        if (lo < -base * std::max(1.0, std::abs(hi))) {
            oss << "variable " << p.matrix_variables()[v].name << " min eigenvalue " << lo;
            return oss.str();
        }
    }
    for (const auto &blk : p.lmis()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            p.evaluate_lmi(blk, mats, scals), Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        const double hi = es.eigenvalues().maxCoeff();
        if (lo < -base * std::max(1.0, std::abs(hi))) {
            oss << "lmi " << blk.name << " min eigenvalue " << lo;
            return oss.str();
        }
    }
    for (const auto &c : p.inequalities()) {
        const double lhs = p.evaluate_expr(c.lhs, mats, scals);
        const double span = std::max({1.0, std::abs(lhs), std::abs(c.rhs)});
        if (lhs > c.rhs + base * span) {
            oss << "inequality " << c.name << " violated by " << (lhs - c.rhs);
            return oss.str();
        }
    }
    for (std::size_t q = 0; q < p.scalar_variables().size(); ++q) {
        if (p.scalar_variables()[q].nonneg && scals[q] < -base) {
            oss << "scalar " << p.scalar_variables()[q].name << " negative: " << scals[q];
            return oss.str();
        }
    }
    return {};
}

} // namespace

ConicSolution solve(const ConicProgram &program, ConicSolver &solver, double tolerance,
                    int max_iterations, bool verbose) {
    const StandardForm form = program.realify();

    ConicSolution sol;
    if (form.num_rows == 0) {
        bool zero_objective = true;
        for (double qi : form.q)
            if (qi != 0.0)
                zero_objective = false;
        for (const auto &v : program.matrix_variables())
            sol.matrix_values.push_back(Eigen::MatrixXcd::Zero(v.dim, v.dim));
        sol.scalar_values.assign(program.scalar_variables().size(), 0.0);
        if (zero_objective) {
            sol.status = SolveStatus::optimal;
            sol.objective_value = form.objective_constant;
        } else {
            sol.status = SolveStatus::numerical_failure;
            sol.diagnostics = "unconstrained program with nonzero objective";
        }
        return sol;
    }

    const RawSolution raw = solver.solve(form, tolerance, max_iterations, verbose);
    sol.status = raw.status;
    sol.solver_iterations = raw.iterations;
    sol.diagnostics = raw.detail;
    if (raw.status != SolveStatus::optimal) {
        for (const auto &v : program.matrix_variables())
            sol.matrix_values.push_back(Eigen::MatrixXcd::Zero(v.dim, v.dim));
        sol.scalar_values.assign(program.scalar_variables().size(), 0.0);
        return sol;
    }

    extract_values(program, raw.x, sol.matrix_values, sol.scalar_values);
    sol.objective_value =
        program.evaluate_expr(program.objective(), sol.matrix_values, sol.scalar_values);

    const std::string violation =
        post_check(program, sol.matrix_values, sol.scalar_values, tolerance);
    if (!violation.empty()) {
        sol.status = SolveStatus::numerical_failure;
        sol.diagnostics = "post-check: " + violation;
    }
    return sol;
}

} // namespace seabeam
