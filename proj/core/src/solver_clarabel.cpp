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

#include "seabeam/solver.hpp"

#include <Eigen/SparseCore>
#include <cstddef>
#include <vector>

extern "C" int clarabel_ffi_solve(std::size_t n, std::size_t m, std::size_t a_nnz,
                                  const std::size_t *a_colptr, const std::size_t *a_rowidx,
                                  const double *a_values, const double *b, const double *q,
                                  std::size_t num_cones, const int *cone_kinds,
                                  const std::size_t *cone_dims, double tol, unsigned max_iter,
                                  int verbose, double *x_out, double *z_out, double *s_out,
                                  double *obj_out, unsigned *iters_out);

namespace seabeam {

namespace {

int cone_code(ConeKind kind) {
    switch (kind) {
    case ConeKind::zero:
        return 0;
    case ConeKind::nonneg:
        return 1;
    case ConeKind::second_order:
        return 2;
    case ConeKind::psd_triangle:
        return 3;
    }
    return -1;
}

} // namespace

RawSolution ClarabelSolver::solve(const StandardForm &form, double tolerance,
                                  int max_iterations, bool verbose) {
    RawSolution out;

    Eigen::SparseMatrix<double> a(form.num_rows, form.num_vars);
    {
        std::vector<Eigen::Triplet<double>> trips;
        trips.reserve(form.a_vals.size());
        for (std::size_t k = 0; k < form.a_vals.size(); ++k)
            trips.emplace_back(form.a_rows[k], form.a_cols[k], form.a_vals[k]);
        a.setFromTriplets(trips.begin(), trips.end());
        a.makeCompressed();
    }

    const std::size_t n = static_cast<std::size_t>(form.num_vars);
    const std::size_t m = static_cast<std::size_t>(form.num_rows);
    const std::size_t nnz = static_cast<std::size_t>(a.nonZeros());

    std::vector<std::size_t> colptr(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        colptr[j] = static_cast<std::size_t>(a.outerIndexPtr()[j]);
    std::vector<std::size_t> rowidx(nnz);
    for (std::size_t k = 0; k < nnz; ++k)
        rowidx[k] = static_cast<std::size_t>(a.innerIndexPtr()[k]);

    std::vector<int> kinds;
    std::vector<std::size_t> dims;
    for (const auto &c : form.cones) {
        kinds.push_back(cone_code(c.kind));
        dims.push_back(static_cast<std::size_t>(c.dim));
    }

    out.x.assign(n, 0.0);
    out.z.assign(m, 0.0);
    out.s.assign(m, 0.0);
    double obj = 0.0;
    unsigned iters = 0;
    const int code = clarabel_ffi_solve(
        n, m, nnz, colptr.data(), rowidx.data(), a.valuePtr(), form.b.data(), form.q.data(),
        kinds.size(), kinds.data(), dims.data(), tolerance,
        static_cast<unsigned>(max_iterations), verbose ? 1 : 0, out.x.data(), out.z.data(),
        out.s.data(), &obj, &iters);

    out.objective = obj + form.objective_constant;
    out.iterations = static_cast<int>(iters);
    switch (code) {
    case 0:
        out.status = SolveStatus::optimal;
        out.detail = "solved";
        break;
    case 1:
        out.status = SolveStatus::optimal;
        out.detail = "solved to reduced accuracy";
        break;
    case 2:
        out.status = SolveStatus::infeasible;
        out.detail = "primal infeasible";
        break;
    case 3:
        out.status = SolveStatus::numerical_failure;
        out.detail = "dual infeasible (objective unbounded below)";
        break;
    case 4:
        out.status = SolveStatus::numerical_failure;
        out.detail = "iteration limit reached";
        break;
    case 5:
        out.status = SolveStatus::numerical_failure;
        out.detail = "insufficient numerical progress";
        break;
    case -1:
        out.status = SolveStatus::numerical_failure;
        out.detail = "malformed problem data";
        break;
    default:
        out.status = SolveStatus::numerical_failure;
        out.detail = "internal solver error";
        break;
    }
    return out;
}

} // namespace seabeam
