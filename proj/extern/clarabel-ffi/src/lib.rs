// C ABI around the Clarabel interior-point solver.
//
// Problem form:  minimize q'x  subject to  A x + s = b,  s in K,
// where K is an ordered product of {zero, nonnegative, second-order,
// PSD-triangle} cones.  PSD cones use the scaled upper-triangular
// column-major vectorization (off-diagonals multiplied by sqrt(2)), and
// their `dim` is the matrix side length.

use clarabel::algebra::CscMatrix;
use clarabel::solver::{
    DefaultSettings, DefaultSolver, IPSolver, SolverStatus, SupportedConeT,
};
use std::panic::catch_unwind;
use std::slice;

pub const CONE_ZERO: i32 = 0;
pub const CONE_NONNEGATIVE: i32 = 1;
pub const CONE_SECOND_ORDER: i32 = 2;
pub const CONE_PSD_TRIANGLE: i32 = 3;

pub const STATUS_SOLVED: i32 = 0;
pub const STATUS_ALMOST_SOLVED: i32 = 1;
pub const STATUS_PRIMAL_INFEASIBLE: i32 = 2;
pub const STATUS_DUAL_INFEASIBLE: i32 = 3;
pub const STATUS_MAX_ITERATIONS: i32 = 4;
pub const STATUS_NUMERICAL_ERROR: i32 = 5;
pub const STATUS_BAD_INPUT: i32 = -1;
pub const STATUS_PANIC: i32 = -2;

fn cone_rows(kind: i32, dim: usize) -> Option<usize> {
    match kind {
        CONE_ZERO | CONE_NONNEGATIVE | CONE_SECOND_ORDER => Some(dim),
        CONE_PSD_TRIANGLE => Some(dim * (dim + 1) / 2),
        _ => None,
    }
}

/// Solves one conic program.  All matrix data is CSC with 0-based indices.
/// Writes the primal solution to `x_out` (length n), the dual to `z_out` and
/// slacks to `s_out` (length m, may be null), the objective to `obj_out` and
/// the iteration count to `iters_out`.  Returns a STATUS_* code.
///
/// # Safety
/// Pointers must reference buffers of the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn clarabel_ffi_solve(
    n: usize,
    m: usize,
    a_nnz: usize,
    a_colptr: *const usize,
    a_rowidx: *const usize,
    a_values: *const f64,
    b: *const f64,
    q: *const f64,
    num_cones: usize,
    cone_kinds: *const i32,
    cone_dims: *const usize,
    tol: f64,
    max_iter: u32,
    verbose: i32,
    x_out: *mut f64,
    z_out: *mut f64,
    s_out: *mut f64,
    obj_out: *mut f64,
    iters_out: *mut u32,
) -> i32 {
    if a_colptr.is_null() || b.is_null() || q.is_null() || x_out.is_null() {
        return STATUS_BAD_INPUT;
    }
    let colptr = slice::from_raw_parts(a_colptr, n + 1).to_vec();
    if colptr[n] != a_nnz || colptr[0] != 0 {
        return STATUS_BAD_INPUT;
    }
    let rowidx = if a_nnz > 0 {
        slice::from_raw_parts(a_rowidx, a_nnz).to_vec()
    } else {
        Vec::new()
    };
    let values = if a_nnz > 0 {
        slice::from_raw_parts(a_values, a_nnz).to_vec()
    } else {
        Vec::new()
    };
    if rowidx.iter().any(|&r| r >= m) {
        return STATUS_BAD_INPUT;
    }
    let b = slice::from_raw_parts(b, m).to_vec();
    let q = slice::from_raw_parts(q, n).to_vec();

    let kinds = slice::from_raw_parts(cone_kinds, num_cones);
    let dims = slice::from_raw_parts(cone_dims, num_cones);
    let mut cones: Vec<SupportedConeT<f64>> = Vec::with_capacity(num_cones);
    let mut rows = 0usize;
    for i in 0..num_cones {
        let nrows = match cone_rows(kinds[i], dims[i]) {
            Some(r) => r,
            None => return STATUS_BAD_INPUT,
        };
        rows += nrows;
        cones.push(match kinds[i] {
            CONE_ZERO => SupportedConeT::ZeroConeT(dims[i]),
            CONE_NONNEGATIVE => SupportedConeT::NonnegativeConeT(dims[i]),
            CONE_SECOND_ORDER => SupportedConeT::SecondOrderConeT(dims[i]),
            CONE_PSD_TRIANGLE => SupportedConeT::PSDTriangleConeT(dims[i]),
            _ => return STATUS_BAD_INPUT,
        });
    }
    if rows != m {
        return STATUS_BAD_INPUT;
    }

    let result = catch_unwind(move || {
        let a = CscMatrix::new(m, n, colptr, rowidx, values);
        let p = CscMatrix::<f64>::zeros((n, n));

        let settings = DefaultSettings {
            verbose: verbose != 0,
            max_iter,
            tol_gap_abs: tol,
            tol_gap_rel: tol,
            tol_feas: (tol * 0.1).max(1e-12),
            ..DefaultSettings::default()
        };

        let mut solver = DefaultSolver::new(&p, &q, &a, &b, &cones, settings);
        solver.solve();
        (
            solver.solution.x,
            solver.solution.z,
            solver.solution.s,
            solver.solution.obj_val,
            solver.solution.iterations,
            solver.solution.status,
        )
    });

    match result {
        Ok((x, z, s, obj, iters, status)) => {
            let xs = slice::from_raw_parts_mut(x_out, n);
            xs.copy_from_slice(&x);
            if !z_out.is_null() {
                slice::from_raw_parts_mut(z_out, m).copy_from_slice(&z);
            }
            if !s_out.is_null() {
                slice::from_raw_parts_mut(s_out, m).copy_from_slice(&s);
            }
            if !obj_out.is_null() {
                *obj_out = obj;
            }
            if !iters_out.is_null() {
                *iters_out = iters;
            }
            match status {
                SolverStatus::Solved => STATUS_SOLVED,
                SolverStatus::AlmostSolved => STATUS_ALMOST_SOLVED,
                SolverStatus::PrimalInfeasible | SolverStatus::AlmostPrimalInfeasible => {
                    STATUS_PRIMAL_INFEASIBLE
                }
                SolverStatus::DualInfeasible | SolverStatus::AlmostDualInfeasible => {
                    STATUS_DUAL_INFEASIBLE
                }
                SolverStatus::MaxIterations | SolverStatus::MaxTime => STATUS_MAX_ITERATIONS,
                _ => STATUS_NUMERICAL_ERROR,
            }
        }
        Err(_) => STATUS_PANIC,
    }
}
