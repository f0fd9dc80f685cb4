use degibbs_fourier::{Grid, RealSignal, SpectralData};
use degibbs_linalg::{min_eig_estimate, spd_factor, ComplexMatrix, DenseMatrix};
use degibbs_specfun::{
    bessel_j_orders_ln, gegenbauer_eval_batch, geg_norm_h, ln_gamma, GegParams,
};
use num_complex::Complex64;

use crate::{config, ReprojError};

/// Gegenbauer coefficient vector, length m+1. Holds exact projections,
/// quadrature approximations, and reprojected Fourier data alike.
#[derive(Debug, Clone, PartialEq)]
pub struct GegCoeffs {
    pub values: Vec<f64>,
}

impl GegCoeffs {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The materialized Gegenbauer operator stack for one (grid, λ, m) choice.
///
/// Immutable after construction; building distinct sets for a λ sweep is
/// embarrassingly parallel.
#[derive(Debug, Clone)]
pub struct OperatorSet {
    geg_synthesis: DenseMatrix,
    geg_analysis: DenseMatrix,
    bessel_projection: ComplexMatrix,
    norm_diag: Vec<f64>,
    weight_diag: Vec<f64>,
    params: GegParams,
    grid: Grid,
}

/// Builds the operator stack on the uniform grid.
///
/// Requires λ ≥ 1/2: the quadrature weight (1−x_j²)^{λ−1/2} is evaluated at
/// the x = −1 grid point, where it is unbounded for smaller λ. Requires
/// m+1 ≤ N so the analysis system is not underdetermined.
pub fn build_operators(grid: &Grid, params: GegParams) -> Result<OperatorSet, ReprojError> {
    let n = grid.n();
    let m = params.m;
    let lambda = params.lambda;
    if lambda < 0.5 {
        return Err(config(format!(
            "lambda must be >= 1/2 for the boundary weight to stay bounded, got {lambda}"
        )));
    }
    if m + 1 > n {
        return Err(config(format!(
            "m+1 = {} Gegenbauer modes exceed the {} grid points",
            m + 1,
            n
        )));
    }

    let mut geg_synthesis = DenseMatrix::zeros(n, m + 1);
    for (j, &x) in grid.points().iter().enumerate() {
        let row = gegenbauer_eval_batch(m, lambda, x)?;
        for (l, v) in row.into_iter().enumerate() {
            geg_synthesis.set(j, l, v);
        }
    }

    // (1-x²)^{λ-1/2}; powf(0, 0) = 1 covers λ = 1/2 at x = -1.
    let weight_diag: Vec<f64> = grid
        .points()
        .iter()
        .map(|&x| (1.0 - x * x).powf(lambda - 0.5))
        .collect();

    let mut norm_diag = Vec::with_capacity(m + 1);
    for l in 0..=m {
        norm_diag.push(1.0 / geg_norm_h(l, lambda)?);
    }

    // Exactly (2/N)·H·Sᵀ·W by construction.
    let scale = 2.0 / n as f64;
    let geg_analysis = DenseMatrix::from_fn(m + 1, n, |l, j| {
        scale * norm_diag[l] * geg_synthesis.get(j, l) * weight_diag[j]
    });

    let bessel_projection = build_bessel_projection(n, m, lambda)?;

    Ok(OperatorSet {
        geg_synthesis,
        geg_analysis,
        bessel_projection,
        norm_diag,
        weight_diag,
        params,
        grid: grid.clone(),
    })
}

/// Projection of the Fourier mode e^{ikπx} onto C_l^λ/h_l^λ:
///
///   Γ(λ) iˡ (l+λ) J_{l+λ}(πk) (2/(πk))^λ,   k ≠ 0,
///
/// with the k = 0 column the first unit vector. J_{l+λ}(z)(2/z)^λ extends to
/// an entire function of z with the parity of zˡ, so negative k reuse |k| and
/// a (−1)ˡ flip. The Γ·J·power product is assembled in log-magnitude form;
/// the individual factors overflow f64 long before the product does.
fn build_bessel_projection(
    n: usize,
    m: usize,
    lambda: f64,
) -> Result<ComplexMatrix, ReprojError> {
    let ln_gamma_lambda = ln_gamma(lambda)?;
    let mut out = ComplexMatrix::zeros(m + 1, n);
    // One Bessel evaluation per distinct |k|; ±k columns share it.
    let mut cache: Vec<Option<Vec<degibbs_specfun::LogMagnitude>>> = vec![None; n / 2 + 1];
    let half = n as i64 / 2;
    for idx in 0..n {
        let k = idx as i64 - half;
        if k == 0 {
            out.set(0, idx, Complex64::new(1.0, 0.0));
            continue;
        }
        let abs_k = k.unsigned_abs() as usize;
        if cache[abs_k].is_none() {
            let arg = std::f64::consts::PI * abs_k as f64;
            cache[abs_k] = Some(bessel_j_orders_ln(lambda, m + 1, arg)?);
        }
        let js = cache[abs_k].as_ref().unwrap();
        let ln_power = lambda * (2.0 / (std::f64::consts::PI * abs_k as f64)).ln();
        for (l, j) in js.iter().enumerate() {
            let ln_mag = ln_gamma_lambda + j.ln_abs + ln_power + (l as f64 + lambda).ln();
            let mut mag = j.sign * ln_mag.exp();
            if k < 0 && l % 2 == 1 {
                mag = -mag;
            }
            // iˡ cycles (1, i, -1, -i).
            let entry = match l % 4 {
                0 => Complex64::new(mag, 0.0),
                1 => Complex64::new(0.0, mag),
                2 => Complex64::new(-mag, 0.0),
                _ => Complex64::new(0.0, -mag),
            };
            out.set(l, idx, entry);
        }
    }
    Ok(out)
}

impl OperatorSet {
    pub fn n(&self) -> usize {
        self.grid.n()
    }

    pub fn degree(&self) -> usize {
        self.params.m
    }

    pub fn params(&self) -> GegParams {
        self.params
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Synthesis matrix S, N×(m+1), S[j][l] = C_l^λ(x_j).
    pub fn geg_synthesis(&self) -> &DenseMatrix {
        &self.geg_synthesis
    }

    /// Analysis matrix (2/N)·H·Sᵀ·W, (m+1)×N.
    pub fn geg_analysis(&self) -> &DenseMatrix {
        &self.geg_analysis
    }

    /// Bessel projection matrix, (m+1)×N complex.
    pub fn bessel_projection(&self) -> &ComplexMatrix {
        &self.bessel_projection
    }

    /// Diagonal of H: 1/h_l^λ, all positive.
    pub fn norm_diag(&self) -> &[f64] {
        &self.norm_diag
    }

    /// Diagonal of W: (1−x_j²)^{λ−1/2}.
    pub fn weight_diag(&self) -> &[f64] {
        &self.weight_diag
    }

    /// Gegenbauer coefficients of the Fourier data: Re(F^Bessel · b̂).
    ///
    /// For clean conjugate-symmetric data the imaginary part is cancellation
    /// residue (plus the structurally unpaired k = −N/2 mode); for noisy data
    /// it is discarded noise. The reconstruction target is real either way.
    pub fn project_coeffs(&self, data: &SpectralData) -> Result<GegCoeffs, ReprojError> {
        if data.n() != self.n() {
            return Err(ReprojError::Shape {
                op: "project_coeffs",
                expected: self.n(),
                got: data.n(),
            });
        }
        let complex = self.bessel_projection.matvec(&data.coeffs)?;
        Ok(GegCoeffs {
            values: complex.into_iter().map(|z| z.re).collect(),
        })
    }

    /// Classical spectral reprojection: synthesize the projected coefficients
    /// back onto the grid.
    pub fn gegenbauer_reconstruct(&self, data: &SpectralData) -> Result<RealSignal, ReprojError> {
        let coeffs = self.project_coeffs(data)?;
        let values = self.geg_synthesis.matvec(&coeffs.values)?;
        Ok(RealSignal::from_values(values))
    }

    /// Discrete Gegenbauer projection of a sampled signal: S·analysis·f.
    ///
    /// This is the forward operator of the Bayesian estimators (likelihood
    /// and prior both factor through it).
    pub fn geg_partial_sum(&self, signal: &RealSignal) -> Result<RealSignal, ReprojError> {
        if signal.len() != self.n() {
            return Err(ReprojError::Shape {
                op: "geg_partial_sum",
                expected: self.n(),
                got: signal.len(),
            });
        }
        let coeffs = self.geg_analysis.matvec(&signal.values)?;
        let values = self.geg_synthesis.matvec(&coeffs)?;
        Ok(RealSignal::from_values(values))
    }

    /// Materializes the N×N projection matrix A = S·analysis.
    pub fn projection_matrix(&self) -> DenseMatrix {
        self.geg_synthesis
            .matmul(&self.geg_analysis)
            .expect("inner dimensions fixed by construction")
    }

    /// Structured diagnostic dump: dimensions, a condition estimate of the
    /// projection A over its range, and the proportionality guidance report.
    pub fn diagnostics(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "operator set: N = {}, m = {}, lambda = {}\n",
            self.n(),
            self.params.m,
            self.params.lambda
        ));
        out.push_str(&format!(
            "geg_synthesis: {} x {}\n",
            self.geg_synthesis.rows(),
            self.geg_synthesis.cols()
        ));
        out.push_str(&format!(
            "geg_analysis: {} x {}\n",
            self.geg_analysis.rows(),
            self.geg_analysis.cols()
        ));
        out.push_str(&format!(
            "bessel_projection: {} x {}\n",
            self.bessel_projection.rows(),
            self.bessel_projection.cols()
        ));
        match self.projection_condition() {
            Some(cond) => out.push_str(&format!("projection condition estimate: {cond:.3e}\n")),
            None => out.push_str("projection condition estimate: unavailable\n"),
        }
        out.push_str(&format!("{}\n", self.params.kappa_report(self.n())));
        out
    }

    /// Ratio of extreme nonzero singular values of A = S·analysis.
    ///
    /// A has rank m+1, so the estimate works on the (m+1)×(m+1) matrix
    /// Lᵀ·(analysis·analysisᵀ)·L with SᵀS = LLᵀ, whose eigenvalues are the
    /// nonzero eigenvalues of AAᵀ.
    fn projection_condition(&self) -> Option<f64> {
        let synth_gram = self.geg_synthesis.gram();
        let factor = spd_factor(&synth_gram).ok()?;
        let analysis_gram = self.geg_analysis.transpose().gram();
        let dim = synth_gram.rows();
        // Lᵀ·G·L column by column.
        let mut reduced = DenseMatrix::zeros(dim, dim);
        let lower = factor.lower();
        for c in 0..dim {
            let lcol: Vec<f64> = (0..dim).map(|r| lower.get(r, c)).collect();
            let gl = analysis_gram.matvec(&lcol).ok()?;
            for r in 0..dim {
                let ltg: f64 = (0..dim).map(|i| lower.get(i, r) * gl[i]).sum();
                reduced.set(r, c, ltg);
            }
        }
        let max = sym_max_eig(&reduced)?;
        let min = min_eig_estimate(&reduced).ok()?;
        if min.value <= 0.0 {
            return None;
        }
        Some((max / min.value).sqrt())
    }
}

/// Power iteration for the largest eigenvalue of a symmetric matrix.
fn sym_max_eig(a: &DenseMatrix) -> Option<f64> {
    let n = a.rows();
    let mut v = vec![1.0; n];
    let mut eig = 0.0;
    for _ in 0..200 {
        let w = a.matvec(&v).ok()?;
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Some(0.0);
        }
        let next: f64 = w
            .iter()
            .zip(&v)
            .map(|(wi, vi)| wi * vi)
            .sum::<f64>();
        v = w.into_iter().map(|x| x / norm).collect();
        if (next - eig).abs() <= 1e-10 * next.abs().max(1.0) {
            return Some(next);
        }
        eig = next;
    }
    Some(eig)
}
