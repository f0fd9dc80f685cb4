use degibbs_fourier::{dft_forward, dft_matrix, fourier_partial_sum, RealSignal, SpectralData};
use degibbs_linalg::{norm2_sq_complex, spd_factor, spd_solve, DenseMatrix};
use degibbs_reprojection::OperatorSet;

use crate::bsr::ProjectionSystem;
use crate::types::{BcdConfig, HyperParams, MapResult, DEFAULT_RATE, DEFAULT_SHAPE};
use crate::{domain, InferenceError};

fn spectral_misfit(f: &RealSignal, data: &SpectralData, ops: &OperatorSet) -> Result<f64, InferenceError> {
    let ff = dft_forward(f, ops.grid())?;
    let diff: Vec<_> = data
        .coeffs
        .iter()
        .zip(&ff.coeffs)
        .map(|(b, c)| b - c)
        .collect();
    Ok(norm2_sq_complex(&diff))
}

/// Negative log posterior of the GBSR model, which keeps the raw Fourier
/// coefficients as the data:
///
///   −(c+N−1) log γ̃ − (c+N/2−1) log β + γ̃‖b̂ − F f‖² + (β/2)‖(I−A) f‖² + dγ̃ + dβ
///
/// The γ̃ terms differ from BSR because the complex likelihood has N real
/// degrees of freedom per grid point pair and no 1/2 factor.
pub fn gbsr_objective(
    f: &RealSignal,
    hyper: &HyperParams,
    data: &SpectralData,
    ops: &OperatorSet,
) -> Result<f64, InferenceError> {
    if hyper.likelihood_precision <= 0.0 || hyper.prior_precision <= 0.0 {
        return Err(domain(
            "gbsr_objective",
            format!(
                "precisions must be positive, got ({}, {})",
                hyper.likelihood_precision, hyper.prior_precision
            ),
        ));
    }
    let n = ops.n() as f64;
    let (gamma, beta) = (hyper.likelihood_precision, hyper.prior_precision);
    let misfit = spectral_misfit(f, data, ops)?;
    let af = ops.geg_partial_sum(f)?;
    let prior_sq: f64 = f
        .values
        .iter()
        .zip(&af.values)
        .map(|(x, y)| (x - y) * (x - y))
        .sum();
    Ok(-(hyper.shape + n - 1.0) * gamma.ln() - (hyper.shape + n / 2.0 - 1.0) * beta.ln()
        + gamma * misfit
        + 0.5 * beta * prior_sq
        + hyper.rate * (gamma + beta))
}

/// Exact f-block minimizer. Because Re(F̂*F) = I/N for this grid, the normal
/// equations collapse to ((2γ̃/N) I + β MᵀM) f = (2γ̃/N) f_N with f_N the
/// Fourier partial sum of the data.
pub fn gbsr_update_f(
    hyper: &HyperParams,
    data: &SpectralData,
    ops: &OperatorSet,
) -> Result<RealSignal, InferenceError> {
    if hyper.likelihood_precision <= 0.0 || hyper.prior_precision <= 0.0 {
        return Err(domain(
            "gbsr_update_f",
            "precisions must be positive".to_string(),
        ));
    }
    let sys = GbsrSystem::build(data, ops, false)?;
    sys.solve_f(hyper.likelihood_precision, hyper.prior_precision)
}

/// Exact γ̃-block minimizer: (c+N−1)/(‖b̂ − F f‖² + d).
pub fn gbsr_update_gamma(
    f: &RealSignal,
    data: &SpectralData,
    ops: &OperatorSet,
    shape: f64,
    rate: f64,
) -> Result<f64, InferenceError> {
    if shape <= 0.0 || !shape.is_finite() {
        return Err(domain(
            "gbsr_update_gamma",
            format!("shape must be positive, got {shape}"),
        ));
    }
    if rate < 0.0 || !rate.is_finite() {
        return Err(domain(
            "gbsr_update_gamma",
            format!("rate must be non-negative, got {rate}"),
        ));
    }
    let misfit = spectral_misfit(f, data, ops)?;
    let value = (shape + ops.n() as f64 - 1.0) / (misfit + rate);
    if !value.is_finite() || value <= 0.0 {
        return Err(domain(
            "gbsr_update_gamma",
            format!("degenerate update: misfit = {misfit}, rate = {rate}"),
        ));
    }
    Ok(value)
}

/// GBSR MAP estimation by block-coordinate descent over (f, γ̃, β), using the
/// collapsed identity form of the normal equations.
pub fn gbsr_map(
    data: &SpectralData,
    ops: &OperatorSet,
    cfg: &BcdConfig,
) -> Result<MapResult, InferenceError> {
    gbsr_map_impl(data, ops, cfg, false)
}

/// Same estimator, but assembles the dense Gram matrix Re(FᴴF) and adjoint
/// right-hand side Re(Fᴴ b̂) instead of the collapsed identity form. Exists
/// to cross-check the algebraic shortcut; results agree to solver precision.
pub fn gbsr_map_dense_adjoint(
    data: &SpectralData,
    ops: &OperatorSet,
    cfg: &BcdConfig,
) -> Result<MapResult, InferenceError> {
    gbsr_map_impl(data, ops, cfg, true)
}

fn gbsr_map_impl(
    data: &SpectralData,
    ops: &OperatorSet,
    cfg: &BcdConfig,
    dense: bool,
) -> Result<MapResult, InferenceError> {
    if data.n() != ops.n() {
        return Err(domain(
            "gbsr_map",
            format!("data length {} does not match grid size {}", data.n(), ops.n()),
        ));
    }
    let n = ops.n();
    if data.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0) {
        let gamma_cap = (DEFAULT_SHAPE + n as f64 - 1.0) / DEFAULT_RATE;
        let beta_cap = (2.0 * DEFAULT_SHAPE + n as f64 - 2.0) / (2.0 * DEFAULT_RATE);
        let hyper = HyperParams::new(gamma_cap, beta_cap)?;
        let f = RealSignal::from_values(vec![0.0; n]);
        let trace = vec![gbsr_objective(&f, &hyper, data, ops)?];
        return Ok(MapResult {
            estimate: f,
            hyper,
            objective_trace: trace,
            iterations: 0,
            converged: true,
        });
    }

    let sys = GbsrSystem::build(data, ops, dense)?;
    let half_dof_beta = DEFAULT_SHAPE + n as f64 / 2.0 - 1.0;
    let dof_gamma = DEFAULT_SHAPE + n as f64 - 1.0;
    let objective = |f: &RealSignal, gamma: f64, beta: f64| -> Result<f64, InferenceError> {
        let misfit = spectral_misfit(f, data, ops)?;
        let af = sys.proj.a.matvec(&f.values)?;
        let prior_sq: f64 = f
            .values
            .iter()
            .zip(&af)
            .map(|(x, y)| (x - y) * (x - y))
            .sum();
        Ok(-dof_gamma * gamma.ln() - half_dof_beta * beta.ln()
            + gamma * misfit
            + 0.5 * beta * prior_sq
            + DEFAULT_RATE * (gamma + beta))
    };

    let (mut gamma, mut beta) = cfg.init_precisions;
    let mut f = RealSignal::from_values(vec![0.0; n]);
    let mut trace = vec![objective(&f, gamma, beta)?];
    let mut iterations = 0;
    let mut converged = false;
    for _ in 0..cfg.max_iter {
        let f_next = sys.solve_f(gamma, beta)?;
        let misfit = spectral_misfit(&f_next, data, ops)?;
        gamma = dof_gamma / (misfit + DEFAULT_RATE);
        let af = sys.proj.a.matvec(&f_next.values)?;
        let prior_sq: f64 = f_next
            .values
            .iter()
            .zip(&af)
            .map(|(x, y)| (x - y) * (x - y))
            .sum();
        beta = (2.0 * DEFAULT_SHAPE + n as f64 - 2.0) / (prior_sq + 2.0 * DEFAULT_RATE);
        iterations += 1;
        trace.push(objective(&f_next, gamma, beta)?);
        let obj_prev = trace[trace.len() - 2];
        let obj_now = trace[trace.len() - 1];
        let obj_small = (obj_prev - obj_now).abs() <= cfg.rel_tol * obj_prev.abs().max(1.0);
        let prev_norm = f.values.iter().map(|v| v * v).sum::<f64>().sqrt();
        let step: f64 = f_next
            .values
            .iter()
            .zip(&f.values)
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt();
        let f_small = step <= cfg.rel_tol * prev_norm.max(1.0);
        f = f_next;
        if obj_small || f_small {
            converged = true;
            break;
        }
    }

    Ok(MapResult {
        estimate: f,
        hyper: HyperParams::new(gamma, beta)?,
        objective_trace: trace,
        iterations,
        converged,
    })
}

/// Normal-equation pieces for the GBSR f-update. `gram`/`rhs_base` hold
/// either the collapsed identity form scaled by 1/N or the dense adjoint
/// assembly; `solve_f` is oblivious to which.
struct GbsrSystem {
    proj: ProjectionSystem,
    gram: DenseMatrix,
    rhs_base: Vec<f64>,
}

impl GbsrSystem {
    fn build(data: &SpectralData, ops: &OperatorSet, dense: bool) -> Result<Self, InferenceError> {
        let n = ops.n();
        let proj = ProjectionSystem::build(ops);
        if dense {
            let fmat = dft_matrix(ops.grid());
            let adj = fmat.adjoint();
            let gram = adj.matmul(&fmat)?.re_part();
            let rhs_base: Vec<f64> = adj.matvec(&data.coeffs)?.iter().map(|z| z.re).collect();
            Ok(GbsrSystem { proj, gram, rhs_base })
        } else {
            let scale = 1.0 / n as f64;
            let gram = DenseMatrix::identity(n).scale(scale);
            let partial = fourier_partial_sum(data, ops.grid())?;
            let rhs_base = partial.values.iter().map(|v| v * scale).collect();
            Ok(GbsrSystem { proj, gram, rhs_base })
        }
    }

    /// Solves (2γ̃ G + β MᵀM) f = 2γ̃ r with G and r from `build`.
    fn solve_f(&self, gamma: f64, beta: f64) -> Result<RealSignal, InferenceError> {
        let normal = self.gram.linear_comb(2.0 * gamma, &self.proj.mtm, beta)?;
        let rhs: Vec<f64> = self.rhs_base.iter().map(|v| 2.0 * gamma * v).collect();
        let factor = spd_factor(&normal)?;
        Ok(RealSignal::from_values(spd_solve(&factor, &rhs)?))
    }
}
