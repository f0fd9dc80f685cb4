use degibbs_fourier::{RealSignal, SpectralData};
use degibbs_linalg::{min_eig_estimate, spd_factor, spd_solve, DenseMatrix};
use degibbs_reprojection::OperatorSet;

use crate::types::{BcdConfig, HyperParams, MapResult, DEFAULT_RATE, DEFAULT_SHAPE};
use crate::{domain, InferenceError};

/// The BSR data vector: the Gegenbauer reconstruction of the Fourier data.
/// Identical to `OperatorSet::gegenbauer_reconstruct`; re-exposed because it
/// is the observable the BSR likelihood compares against.
pub fn bsr_observable(
    ops: &OperatorSet,
    data: &SpectralData,
) -> Result<RealSignal, InferenceError> {
    Ok(ops.gegenbauer_reconstruct(data)?)
}

fn check_positive(hyper: &HyperParams, op: &'static str) -> Result<(), InferenceError> {
    if hyper.likelihood_precision <= 0.0 || hyper.prior_precision <= 0.0 {
        return Err(domain(
            op,
            format!(
                "precisions must be positive, got ({}, {})",
                hyper.likelihood_precision, hyper.prior_precision
            ),
        ));
    }
    Ok(())
}

fn check_shape_rate(shape: f64, rate: f64, op: &'static str) -> Result<(), InferenceError> {
    if shape <= 0.0 || !shape.is_finite() {
        return Err(domain(op, format!("shape must be positive, got {shape}")));
    }
    if rate < 0.0 || !rate.is_finite() {
        return Err(domain(op, format!("rate must be non-negative, got {rate}")));
    }
    Ok(())
}

fn sq_norm_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Negative log posterior of the BSR model:
///
///   −(c+N/2−1)(log γ + log β) + (γ/2)‖y − A f‖² + (β/2)‖(I−A) f‖² + dγ + dβ
///
/// with y the reprojected data and A the discrete Gegenbauer projection.
pub fn bsr_objective(
    f: &RealSignal,
    hyper: &HyperParams,
    observable: &RealSignal,
    ops: &OperatorSet,
) -> Result<f64, InferenceError> {
    check_positive(hyper, "bsr_objective")?;
    let af = ops.geg_partial_sum(f)?;
    let data_sq = sq_norm_diff(&observable.values, &af.values);
    let prior_sq = sq_norm_diff(&f.values, &af.values);
    let n = ops.n() as f64;
    let (gamma, beta) = (hyper.likelihood_precision, hyper.prior_precision);
    Ok(-(hyper.shape + n / 2.0 - 1.0) * (gamma.ln() + beta.ln())
        + 0.5 * gamma * data_sq
        + 0.5 * beta * prior_sq
        + hyper.rate * (gamma + beta))
}

/// Exact f-block minimizer: solves (γ AᵀA + β MᵀM) f = γ Aᵀ y.
pub fn bsr_update_f(
    hyper: &HyperParams,
    observable: &RealSignal,
    ops: &OperatorSet,
) -> Result<RealSignal, InferenceError> {
    check_positive(hyper, "bsr_update_f")?;
    let sys = ProjectionSystem::build(ops);
    sys.solve_f(
        hyper.likelihood_precision,
        hyper.prior_precision,
        &observable.values,
    )
}

/// Exact γ-block minimizer: (2c+N−2)/(‖y − A f‖² + 2d).
pub fn bsr_update_gamma(
    f: &RealSignal,
    observable: &RealSignal,
    ops: &OperatorSet,
    shape: f64,
    rate: f64,
) -> Result<f64, InferenceError> {
    check_shape_rate(shape, rate, "bsr_update_gamma")?;
    let af = ops.geg_partial_sum(f)?;
    let residual = sq_norm_diff(&observable.values, &af.values);
    precision_update(ops.n(), shape, rate, residual, "bsr_update_gamma")
}

/// Exact β-block minimizer: (2c+N−2)/(‖(I−A) f‖² + 2d). Shared by the GBSR
/// sweep, whose prior block is identical.
pub fn bsr_update_beta(
    f: &RealSignal,
    ops: &OperatorSet,
    shape: f64,
    rate: f64,
) -> Result<f64, InferenceError> {
    check_shape_rate(shape, rate, "bsr_update_beta")?;
    let af = ops.geg_partial_sum(f)?;
    let residual = sq_norm_diff(&f.values, &af.values);
    precision_update(ops.n(), shape, rate, residual, "bsr_update_beta")
}

fn precision_update(
    n: usize,
    shape: f64,
    rate: f64,
    residual_sq: f64,
    op: &'static str,
) -> Result<f64, InferenceError> {
    let value = (2.0 * shape + n as f64 - 2.0) / (residual_sq + 2.0 * rate);
    if !value.is_finite() || value <= 0.0 {
        return Err(domain(
            op,
            format!("degenerate update: residual² = {residual_sq}, rate = {rate}"),
        ));
    }
    Ok(value)
}

/// Smallest eigenvalue of AᵀA + MᵀM. Positive iff A and I−A share only the
/// zero kernel vector, which makes every f-update uniquely solvable.
pub fn common_kernel_min_eig(ops: &OperatorSet) -> Result<f64, InferenceError> {
    let sys = ProjectionSystem::build(ops);
    let combined = sys.ata.linear_comb(1.0, &sys.mtm, 1.0)?;
    Ok(min_eig_estimate(&combined)?.value)
}

/// MAP estimation by block-coordinate descent over (f, γ, β).
///
/// Starts from f = 0 and the configured precisions, sweeps the three exact
/// block minimizers, and stops when either the objective or the iterate
/// changes by less than `rel_tol` relatively. Identically zero observables
/// short-circuit to f = 0 with both precisions at their rate-capped maxima.
pub fn bsr_map(
    data: &SpectralData,
    ops: &OperatorSet,
    cfg: &BcdConfig,
) -> Result<MapResult, InferenceError> {
    let observable = bsr_observable(ops, data)?;
    let n = ops.n();
    let cap = (2.0 * DEFAULT_SHAPE + n as f64 - 2.0) / (2.0 * DEFAULT_RATE);
    if observable.values.iter().all(|&v| v == 0.0) {
        let hyper = HyperParams::new(cap, cap)?;
        let f = RealSignal::from_values(vec![0.0; n]);
        let trace = vec![bsr_objective(&f, &hyper, &observable, ops)?];
        return Ok(MapResult {
            estimate: f,
            hyper,
            objective_trace: trace,
            iterations: 0,
            converged: true,
        });
    }

    let sys = ProjectionSystem::build(ops);
    let y = &observable.values;
    let objective = |f: &[f64], gamma: f64, beta: f64| {
        let af = sys.a.matvec(f).expect("square system");
        let data_sq = sq_norm_diff(y, &af);
        let prior_sq = sq_norm_diff(f, &af);
        let half_dof = DEFAULT_SHAPE + n as f64 / 2.0 - 1.0;
        -half_dof * (gamma.ln() + beta.ln())
            + 0.5 * gamma * data_sq
            + 0.5 * beta * prior_sq
            + DEFAULT_RATE * (gamma + beta)
    };

    let (mut gamma, mut beta) = cfg.init_precisions;
    let mut f = vec![0.0; n];
    let mut trace = vec![objective(&f, gamma, beta)];
    let mut iterations = 0;
    let mut converged = false;
    for _ in 0..cfg.max_iter {
        let f_next = sys.solve_f(gamma, beta, y)?.values;
        let af = sys.a.matvec(&f_next)?;
        gamma = precision_update(
            n,
            DEFAULT_SHAPE,
            DEFAULT_RATE,
            sq_norm_diff(y, &af),
            "bsr_map",
        )?;
        beta = precision_update(
            n,
            DEFAULT_SHAPE,
            DEFAULT_RATE,
            sq_norm_diff(&f_next, &af),
            "bsr_map",
        )?;
        iterations += 1;
        trace.push(objective(&f_next, gamma, beta));
        let obj_prev = trace[trace.len() - 2];
        let obj_now = trace[trace.len() - 1];
        let obj_small = (obj_prev - obj_now).abs() <= cfg.rel_tol * obj_prev.abs().max(1.0);
        let f_small = sq_norm_diff(&f_next, &f).sqrt()
            <= cfg.rel_tol * f.iter().map(|v| v * v).sum::<f64>().sqrt().max(1.0);
        f = f_next;
        if obj_small || f_small {
            converged = true;
            break;
        }
    }

    Ok(MapResult {
        estimate: RealSignal::from_values(f),
        hyper: HyperParams::new(gamma, beta)?,
        objective_trace: trace,
        iterations,
        converged,
    })
}

/// Materialized normal-equation blocks shared by the BSR loop and the
/// posterior constructors.
pub(crate) struct ProjectionSystem {
    pub(crate) a: DenseMatrix,
    pub(crate) ata: DenseMatrix,
    pub(crate) mtm: DenseMatrix,
}

impl ProjectionSystem {
    pub(crate) fn build(ops: &OperatorSet) -> Self {
        let a = ops.projection_matrix();
        let m = DenseMatrix::identity(a.rows())
            .linear_comb(1.0, &a, -1.0)
            .expect("same shape");
        ProjectionSystem {
            ata: a.gram(),
            mtm: m.gram(),
            a,
        }
    }

    /// Solves (γ AᵀA + β MᵀM) f = γ Aᵀ y.
    pub(crate) fn solve_f(
        &self,
        gamma: f64,
        beta: f64,
        y: &[f64],
    ) -> Result<RealSignal, InferenceError> {
        let normal = self.ata.linear_comb(gamma, &self.mtm, beta)?;
        let mut rhs = self.a.matvec_transposed(y)?;
        for v in &mut rhs {
            *v *= gamma;
        }
        let factor = spd_factor(&normal)?;
        Ok(RealSignal::from_values(spd_solve(&factor, &rhs)?))
    }
}
