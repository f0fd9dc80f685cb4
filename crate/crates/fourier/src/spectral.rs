//! DFT pair, refined-mesh coefficient synthesis, and the SNR convention.

use degibbs_linalg::ComplexMatrix;
use num_complex::Complex64;

use crate::grid::{make_grid, Grid, RealSignal};
use crate::{config, domain, FourierError};

/// Provenance tag: clean coefficients are deterministic transforms of a
/// signal; noisy ones have had measurement noise added.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralKind {
    Clean,
    Noisy,
}

/// Fourier coefficients indexed by wavenumber k = -N/2 .. N/2-1.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    pub coeffs: Vec<Complex64>,
    pub kind: SpectralKind,
}

impl SpectralData {
    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    /// Wavenumber of a storage index: k = idx - N/2.
    pub fn wavenumber(&self, idx: usize) -> i64 {
        idx as i64 - self.n() as i64 / 2
    }

    /// Storage index of a wavenumber.
    pub fn index_of(&self, k: i64) -> usize {
        (k + self.n() as i64 / 2) as usize
    }

    /// Coefficient at wavenumber k.
    pub fn coeff(&self, k: i64) -> Complex64 {
        self.coeffs[self.index_of(k)]
    }

    /// Total squared coefficient norm.
    pub fn power(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// Forward DFT matrix with rows (1/N) e^{-ik pi x_j}, k = -N/2 .. N/2-1.
pub fn dft_matrix(grid: &Grid) -> ComplexMatrix {
    let n = grid.n();
    let scale = 1.0 / n as f64;
    ComplexMatrix::from_fn(n, n, |r, j| {
        let k = r as i64 - n as i64 / 2;
        scale * Complex64::cis(-(k as f64) * std::f64::consts::PI * grid.points()[j])
    })
}

/// Synthesis matrix with entries e^{+ik pi x_j}; the (j, r) entry pairs a
/// grid point with wavenumber k = r - N/2. Satisfies (synthesis)(forward)
/// = I exactly in exact arithmetic.
pub fn inverse_dft_matrix(grid: &Grid) -> ComplexMatrix {
    let n = grid.n();
    ComplexMatrix::from_fn(n, n, |j, r| {
        let k = r as i64 - n as i64 / 2;
        Complex64::cis(k as f64 * std::f64::consts::PI * grid.points()[j])
    })
}

/// Fourier coefficients of a sampled signal: (1/N) sum_j f_j e^{-ik pi x_j}.
pub fn dft_forward(signal: &RealSignal, grid: &Grid) -> Result<SpectralData, FourierError> {
    if signal.len() != grid.n() {
        return Err(FourierError::Shape {
            op: "dft_forward",
            expected: grid.n(),
            got: signal.len(),
        });
    }
    let coeffs = dft_matrix(grid)
        .matvec_real(&signal.values)
        .expect("matrix built for this grid size");
    Ok(SpectralData {
        coeffs,
        kind: SpectralKind::Clean,
    })
}

/// Partial-sum reconstruction Re(sum_k b_k e^{ik pi x_j}). The real part is
/// taken unconditionally: for clean data the imaginary part cancels, for
/// noisy data discarding it is the projection onto real signals.
pub fn fourier_partial_sum(data: &SpectralData, grid: &Grid) -> Result<RealSignal, FourierError> {
    if data.n() != grid.n() {
        return Err(FourierError::Shape {
            op: "fourier_partial_sum",
            expected: grid.n(),
            got: data.n(),
        });
    }
    let full = inverse_dft_matrix(grid)
        .matvec(&data.coeffs)
        .expect("matrix built for this data size");
    Ok(RealSignal::from_values(full.iter().map(|c| c.re).collect()))
}

/// Trapezoid-rule Fourier coefficients of an analytic function, computed on
/// a refine-times-finer uniform mesh and truncated to the N working modes.
/// With refine = 1 this is exactly `dft_forward` of the sampled signal; the
/// periodic trapezoid rule and the uniform average coincide.
pub fn synthesize_clean_coeffs(
    f: impl Fn(f64) -> f64,
    n: usize,
    refine: usize,
) -> Result<SpectralData, FourierError> {
    if refine < 1 {
        return Err(config(format!("refine must be >= 1, got {refine}")));
    }
    let fine = make_grid(n * refine)?;
    let samples = RealSignal::from_fn(&fine, f);
    let full = dft_forward(&samples, &fine)?;
    let m = fine.n();
    let lo = m / 2 - n / 2;
    let coeffs = full.coeffs[lo..lo + n].to_vec();
    Ok(SpectralData {
        coeffs,
        kind: SpectralKind::Clean,
    })
}

/// SNR in dB for clean coefficients against noise precision alpha:
/// 10 log10(||F f||^2 / (N alpha^{-1})).
pub fn snr_db(clean: &SpectralData, inv_variance: f64) -> Result<f64, FourierError> {
    if !(inv_variance.is_finite() && inv_variance > 0.0) {
        return Err(domain(
            "snr_db",
            format!("noise precision must be positive and finite, got {inv_variance}"),
        ));
    }
    let power = clean.power();
    if power == 0.0 {
        return Err(domain("snr_db", "signal has zero power".to_string()));
    }
    Ok(10.0 * (power * inv_variance / clean.n() as f64).log10())
}

/// Noise precision alpha achieving a target SNR for the given clean
/// coefficients; exact inverse of `snr_db`.
pub fn inv_variance_for_snr(clean: &SpectralData, target_db: f64) -> Result<f64, FourierError> {
    if !target_db.is_finite() {
        return Err(domain(
            "inv_variance_for_snr",
            format!("target SNR must be finite, got {target_db}"),
        ));
    }
    let power = clean.power();
    if power == 0.0 {
        return Err(domain(
            "inv_variance_for_snr",
            "signal has zero power".to_string(),
        ));
    }
    Ok(clean.n() as f64 * 10f64.powf(target_db / 10.0) / power)
}
