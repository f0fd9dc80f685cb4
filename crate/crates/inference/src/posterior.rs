use degibbs_fourier::{fourier_partial_sum, RealSignal, SpectralData};
use degibbs_linalg::{spd_factor, spd_solve, DenseMatrix, SpdFactorization};
use degibbs_reprojection::OperatorSet;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bsr::{bsr_observable, ProjectionSystem};
use crate::types::HyperParams;
use crate::{domain, InferenceError};

/// Which likelihood the conditional posterior is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Bsr,
    Gbsr,
}

/// Gaussian conditional posterior f | γ, β, data ~ N(μ, P⁻¹), stored through
/// the precision matrix P and its Cholesky factor.
pub struct PosteriorGaussian {
    mean: Vec<f64>,
    precision: DenseMatrix,
    factor: SpdFactorization,
}

impl PosteriorGaussian {
    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    pub fn precision(&self) -> &DenseMatrix {
        &self.precision
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }
}

/// Componentwise credible band around the posterior mean.
#[derive(Debug, Clone)]
pub struct CredibleBand {
    pub lower: RealSignal,
    pub upper: RealSignal,
    pub level: f64,
}

/// Builds the Gaussian posterior for fixed hyperparameters. The mean solves
/// the same normal equations as the corresponding f-block update, so the MAP
/// estimate is recovered by passing the final hyperparameters back in.
pub fn fixed_posterior(
    method: Method,
    hyper: &HyperParams,
    data: &SpectralData,
    ops: &OperatorSet,
) -> Result<PosteriorGaussian, InferenceError> {
    hyper.validate()?;
    if data.n() != ops.n() {
        return Err(domain(
            "fixed_posterior",
            format!("data length {} does not match grid size {}", data.n(), ops.n()),
        ));
    }
    let n = ops.n();
    let sys = ProjectionSystem::build(ops);
    let (gamma, beta) = (hyper.likelihood_precision, hyper.prior_precision);
    let (precision, rhs) = match method {
        Method::Bsr => {
            let y = bsr_observable(ops, data)?;
            let precision = sys.ata.linear_comb(gamma, &sys.mtm, beta)?;
            let mut rhs = sys.a.matvec_transposed(&y.values)?;
            for v in &mut rhs {
                *v *= gamma;
            }
            (precision, rhs)
        }
        Method::Gbsr => {
            let scale = 2.0 * gamma / n as f64;
            let precision = DenseMatrix::identity(n)
                .scale(scale)
                .linear_comb(1.0, &sys.mtm, beta)?;
            let partial = fourier_partial_sum(data, ops.grid())?;
            let rhs = partial.values.iter().map(|v| v * scale).collect();
            (precision, rhs)
        }
    };
    let factor = spd_factor(&precision)?;
    let mean = spd_solve(&factor, &rhs)?;
    Ok(PosteriorGaussian {
        mean,
        precision,
        factor,
    })
}

/// Draws `n_samples` posterior samples, one per row. With P = LLᵀ, the draw
/// is x = μ + L⁻ᵀ z for z standard normal, which has covariance P⁻¹.
pub fn sample_posterior(
    post: &PosteriorGaussian,
    n_samples: usize,
    seed: u64,
) -> Result<DenseMatrix, InferenceError> {
    if n_samples < 2 {
        return Err(domain(
            "sample_posterior",
            format!("need at least 2 samples, got {n_samples}"),
        ));
    }
    let n = post.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut data = Vec::with_capacity(n_samples * n);
    let mut z = vec![0.0; n];
    for _ in 0..n_samples {
        for zi in &mut z {
            *zi = rng.sample(StandardNormal);
        }
        let shift = post.factor.solve_upper(&z)?;
        data.extend(post.mean.iter().zip(&shift).map(|(m, s)| m + s));
    }
    Ok(DenseMatrix::from_vec(n_samples, n, data)?)
}

/// Componentwise empirical credible band at the given level, using linearly
/// interpolated order statistics for the two tail quantiles.
pub fn credible_band(samples: &DenseMatrix, level: f64) -> Result<CredibleBand, InferenceError> {
    check_level(level, "credible_band")?;
    if samples.rows() < 2 {
        return Err(domain(
            "credible_band",
            format!("need at least 2 samples, got {}", samples.rows()),
        ));
    }
    let tail = (1.0 - level) / 2.0;
    let n = samples.cols();
    let mut lower = vec![0.0; n];
    let mut upper = vec![0.0; n];
    let mut column = vec![0.0; samples.rows()];
    for j in 0..n {
        for (i, v) in column.iter_mut().enumerate() {
            *v = samples.get(i, j);
        }
        column.sort_by(|a, b| a.total_cmp(b));
        lower[j] = sorted_quantile(&column, tail);
        upper[j] = sorted_quantile(&column, 1.0 - tail);
    }
    Ok(CredibleBand {
        lower: RealSignal::from_values(lower),
        upper: RealSignal::from_values(upper),
        level,
    })
}

/// Exact Gaussian band μ ± z·σ with σ² the diagonal of P⁻¹, extracted one
/// column at a time from the Cholesky factor.
pub fn analytic_band(post: &PosteriorGaussian, level: f64) -> Result<CredibleBand, InferenceError> {
    check_level(level, "analytic_band")?;
    let z = normal_quantile(1.0 - (1.0 - level) / 2.0);
    let n = post.dim();
    let mut lower = vec![0.0; n];
    let mut upper = vec![0.0; n];
    let mut unit = vec![0.0; n];
    for i in 0..n {
        unit[i] = 1.0;
        let col = post.factor.solve_lower(&unit)?;
        unit[i] = 0.0;
        let sigma = col.iter().map(|v| v * v).sum::<f64>().sqrt();
        lower[i] = post.mean[i] - z * sigma;
        upper[i] = post.mean[i] + z * sigma;
    }
    Ok(CredibleBand {
        lower: RealSignal::from_values(lower),
        upper: RealSignal::from_values(upper),
        level,
    })
}

fn check_level(level: f64, op: &'static str) -> Result<(), InferenceError> {
    if !level.is_finite() || level <= 0.0 || level >= 1.0 {
        return Err(domain(op, format!("level must lie in (0, 1), got {level}")));
    }
    Ok(())
}

fn sorted_quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Standard normal quantile via Acklam's rational approximation, accurate to
/// about 1e-9 relative error over (0, 1).
fn normal_quantile(p: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969683028665376e1,
        2.209460984245205e2,
        -2.759285104469687e2,
        1.38357751867269e2,
        -3.066479806614716e1,
        2.506628277459239e0,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e1,
        1.615858368580409e2,
        -1.556989798598866e2,
        6.680131188771972e1,
        -1.328068155288572e1,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-3,
        -3.223964580411365e-1,
        -2.400758277161838e0,
        -2.549732539343734e0,
        4.374664141464968e0,
        2.938163982698783e0,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-3,
        3.224671290700398e-1,
        2.445134137142996e0,
        3.754408661907416e0,
    ];
    const P_LOW: f64 = 0.02425;

    let tail = |p: f64| {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };
    if p < P_LOW {
        tail(p)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        -tail(1.0 - p)
    }
}
