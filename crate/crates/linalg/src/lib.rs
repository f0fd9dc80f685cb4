//! Minimal dense linear-algebra kernel shared by the reconstruction stack:
//! row-major real and complex matrices, symmetric positive-definite
//! (Cholesky) factorization and solves, and a smallest-eigenvalue estimator.
//!
//! Everything here is dense and single-threaded on purpose: the operators in
//! this project are a few hundred rows at most, so O(n³) direct methods are
//! both simpler and faster than anything iterative at this scale.

use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the dense kernel.
#[derive(Debug, Error)]
pub enum LinalgError {
    /// Operand shapes are incompatible for the requested operation.
    #[error("dimension mismatch in {context}: {lhs} vs {rhs}")]
    DimensionMismatch {
        context: &'static str,
        lhs: String,
        rhs: String,
    },
    /// A square matrix was required.
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    /// Cholesky pivot was non-positive; the matrix is not positive definite.
    #[error("matrix is not positive definite: pivot {index} is {value:.6e}")]
    NotSpd { index: usize, value: f64 },
    /// A matrix or vector with zero extent was supplied where data is required.
    #[error("empty operand in {0}")]
    Empty(&'static str),
}

fn dim_err(context: &'static str, lhs: impl std::fmt::Debug, rhs: impl std::fmt::Debug) -> LinalgError {
    LinalgError::DimensionMismatch {
        context,
        lhs: format!("{lhs:?}"),
        rhs: format!("{rhs:?}"),
    }
}

/// Dense real matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Identity matrix of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Builds a matrix by evaluating `f(row, col)` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Wraps an existing row-major buffer.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(dim_err("from_vec", (rows, cols), data.len()));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    /// Borrow of row `r` as a slice.
    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Raw row-major entries.
    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(dim_err("matmul", (self.rows, self.cols), (rhs.rows, rhs.cols)));
        }
        let mut out = DenseMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                let lhs_row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in out_row.iter_mut().zip(lhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self * v`.
    pub fn matvec(&self, v: &[f64]) -> Result<Vec<f64>, LinalgError> {
        if self.cols != v.len() {
            return Err(dim_err("matvec", (self.rows, self.cols), v.len()));
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    /// Transpose-vector product `selfᵀ * v`.
    pub fn matvec_transposed(&self, v: &[f64]) -> Result<Vec<f64>, LinalgError> {
        if self.rows != v.len() {
            return Err(dim_err("matvec_transposed", (self.rows, self.cols), v.len()));
        }
        let mut out = vec![0.0; self.cols];
        for (r, &vr) in v.iter().enumerate() {
            for (o, &a) in out.iter_mut().zip(self.row(r)) {
                *o += a * vr;
            }
        }
        Ok(out)
    }

    /// Transposed copy.
    pub fn transpose(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Gram matrix `selfᵀ * self`, using symmetry to halve the work.
    pub fn gram(&self) -> DenseMatrix {
        let n = self.cols;
        let mut out = DenseMatrix::zeros(n, n);
        for r in 0..self.rows {
            let row = self.row(r);
            for i in 0..n {
                let a = row[i];
                if a == 0.0 {
                    continue;
                }
                for (o, &rj) in out.data[i * n + i..(i + 1) * n].iter_mut().zip(&row[i..]) {
                    *o += a * rj;
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                out.data[i * n + j] = out.data[j * n + i];
            }
        }
        out
    }

    /// Entry-wise linear combination `a*self + b*other`.
    pub fn linear_comb(&self, a: f64, other: &DenseMatrix, b: f64) -> Result<DenseMatrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(dim_err(
                "linear_comb",
                (self.rows, self.cols),
                (other.rows, other.cols),
            ));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&x, &y)| a * x + b * y)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Scaled copy `s * self`.
    pub fn scale(&self, s: f64) -> DenseMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| s * x).collect(),
        }
    }

    /// Largest absolute entry (max norm).
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &x| m.max(x.abs()))
    }

    /// Largest absolute asymmetry `max |A - Aᵀ|`; zero for non-square input
    /// is never requested (caller checks squareness first).
    pub fn asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in (i + 1)..self.cols.min(self.rows) {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// Symmetric part `(A + Aᵀ)/2` of a square matrix.
    pub fn symmetric_part(&self) -> Result<DenseMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(DenseMatrix::from_fn(self.rows, self.cols, |r, c| {
            0.5 * (self.get(r, c) + self.get(c, r))
        }))
    }
}

/// Dense complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Builds a matrix by evaluating `f(row, col)` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product with a complex vector.
    pub fn matvec(&self, v: &[Complex64]) -> Result<Vec<Complex64>, LinalgError> {
        if self.cols != v.len() {
            return Err(dim_err("complex matvec", (self.rows, self.cols), v.len()));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Complex64::new(0.0, 0.0), |acc, (&a, &b)| acc + a * b)
            })
            .collect())
    }

    /// Matrix-vector product with a real vector.
    pub fn matvec_real(&self, v: &[f64]) -> Result<Vec<Complex64>, LinalgError> {
        if self.cols != v.len() {
            return Err(dim_err("complex matvec_real", (self.rows, self.cols), v.len()));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Complex64::new(0.0, 0.0), |acc, (&a, &b)| acc + a * b)
            })
            .collect())
    }

    /// Conjugate-transposed copy.
    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(dim_err(
                "complex matmul",
                (self.rows, self.cols),
                (rhs.rows, rhs.cols),
            ));
        }
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Real parts as a real matrix.
    pub fn re_part(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).re)
    }

    /// Largest absolute entry (complex modulus).
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.norm()))
    }
}

/// Lower-triangular Cholesky factor of a symmetric positive-definite matrix,
/// with `P = L·Lᵀ`.
#[derive(Debug, Clone)]
pub struct SpdFactorization {
    lower: DenseMatrix,
    /// Largest absolute asymmetry of the input before symmetrization.
    asymmetry: f64,
}

impl SpdFactorization {
    pub fn dim(&self) -> usize {
        self.lower.rows()
    }

    /// The lower-triangular factor `L`.
    pub fn lower(&self) -> &DenseMatrix {
        &self.lower
    }

    /// Input asymmetry `max |P - Pᵀ|` recorded before symmetrization.
    pub fn input_asymmetry(&self) -> f64 {
        self.asymmetry
    }

    /// Solves `L y = rhs` by forward substitution.
    pub fn solve_lower(&self, rhs: &[f64]) -> Result<Vec<f64>, LinalgError> {
        let n = self.dim();
        if rhs.len() != n {
            return Err(dim_err("solve_lower", n, rhs.len()));
        }
        let mut y = vec![0.0; n];
        for i in 0..n {
            let row = self.lower.row(i);
            let s = dot(&row[..i], &y[..i]);
            y[i] = (rhs[i] - s) / row[i];
        }
        Ok(y)
    }

    /// Solves `Lᵀ x = rhs` by back substitution.
    pub fn solve_upper(&self, rhs: &[f64]) -> Result<Vec<f64>, LinalgError> {
        let n = self.dim();
        if rhs.len() != n {
            return Err(dim_err("solve_upper", n, rhs.len()));
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = rhs[i];
            for (k, &xk) in x.iter().enumerate().skip(i + 1) {
                s -= self.lower.get(k, i) * xk;
            }
            x[i] = s / self.lower.get(i, i);
        }
        Ok(x)
    }
}

/// Factors a symmetric positive-definite matrix as `P = L·Lᵀ`.
///
/// The input is symmetrized as `(P + Pᵀ)/2` first and the asymmetry magnitude
/// is recorded on the factorization; callers are expected to pass matrices
/// symmetric to within roundoff. A non-positive pivot aborts with the pivot
/// index and value.
pub fn spd_factor(p: &DenseMatrix) -> Result<SpdFactorization, LinalgError> {
    if p.rows() != p.cols() {
        return Err(LinalgError::NotSquare {
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    if p.rows() == 0 {
        return Err(LinalgError::Empty("spd_factor"));
    }
    let asymmetry = p.asymmetry();
    let s = p.symmetric_part()?;
    let n = s.rows();
    let mut lower = DenseMatrix::zeros(n, n);
    for j in 0..n {
        let mut d = s.get(j, j);
        for k in 0..j {
            let ljk = lower.get(j, k);
            d -= ljk * ljk;
        }
        if d <= 0.0 || !d.is_finite() {
            return Err(LinalgError::NotSpd { index: j, value: d });
        }
        let ljj = d.sqrt();
        lower.set(j, j, ljj);
        for i in (j + 1)..n {
            let mut v = s.get(i, j);
            for k in 0..j {
                v -= lower.get(i, k) * lower.get(j, k);
            }
            lower.set(i, j, v / ljj);
        }
    }
    Ok(SpdFactorization { lower, asymmetry })
}

/// Solves `P x = rhs` given a factorization of `P`.
pub fn spd_solve(fact: &SpdFactorization, rhs: &[f64]) -> Result<Vec<f64>, LinalgError> {
    let y = fact.solve_lower(rhs)?;
    fact.solve_upper(&y)
}

/// Result of the smallest-eigenvalue estimator.
#[derive(Debug, Clone, Copy)]
pub struct MinEigEstimate {
    /// Estimated smallest eigenvalue of the symmetrized input.
    pub value: f64,
    /// Whether the iteration met the relative tolerance before the cap.
    pub converged: bool,
    /// Iterations consumed.
    pub iterations: usize,
}

const MIN_EIG_REL_TOL: f64 = 1e-6;
const MIN_EIG_MAX_ITER: usize = 1000;

/// Estimates the smallest eigenvalue of a symmetric matrix.
///
/// Positive-definite inputs use inverse power iteration on the Cholesky
/// factorization, which converges quickly because the target eigenvalue is
/// mapped to the dominant one of `P⁻¹`. If the factorization reveals a
/// non-positive pivot, the estimate falls back to power iteration on the
/// Gershgorin shift `cI − P` (eigenvalues `c − λᵢ ≥ 0`), which is slower but
/// correct for indefinite matrices. Non-convergence is reported through the
/// `converged` flag, never as an error.
pub fn min_eig_estimate(p: &DenseMatrix) -> Result<MinEigEstimate, LinalgError> {
    if p.rows() != p.cols() {
        return Err(LinalgError::NotSquare {
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    if p.rows() == 0 {
        return Err(LinalgError::Empty("min_eig_estimate"));
    }
    let s = p.symmetric_part()?;
    let n = s.rows();

    // Deterministic start with a mild stagger so no coordinate eigenvector is
    // missed exactly.
    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 1e-3 * (i as f64)).collect();
    normalize(&mut v);

    match spd_factor(&s) {
        Ok(fact) => {
            let mut last = f64::INFINITY;
            for it in 1..=MIN_EIG_MAX_ITER {
                let mut w = spd_solve(&fact, &v)?;
                normalize(&mut w);
                let pw = s.matvec(&w)?;
                let lambda = dot(&w, &pw);
                v = w;
                if (lambda - last).abs() <= MIN_EIG_REL_TOL * lambda.abs().max(f64::MIN_POSITIVE) {
                    return Ok(MinEigEstimate {
                        value: lambda,
                        converged: true,
                        iterations: it,
                    });
                }
                last = lambda;
            }
            Ok(MinEigEstimate {
                value: last,
                converged: false,
                iterations: MIN_EIG_MAX_ITER,
            })
        }
        Err(LinalgError::NotSpd { .. }) => {
            // Gershgorin upper bound on the spectral radius.
            let c = (0..n)
                .map(|i| s.row(i).iter().map(|x| x.abs()).sum::<f64>())
                .fold(0.0_f64, f64::max)
                .max(f64::MIN_POSITIVE);
            let mut last = f64::INFINITY;
            for it in 1..=MIN_EIG_MAX_ITER {
                let sv = s.matvec(&v)?;
                let mut w: Vec<f64> = v.iter().zip(&sv).map(|(&x, &y)| c * x - y).collect();
                normalize(&mut w);
                let pw = s.matvec(&w)?;
                let lambda = dot(&w, &pw);
                v = w;
                if (lambda - last).abs() <= MIN_EIG_REL_TOL * lambda.abs().max(1e-300) {
                    return Ok(MinEigEstimate {
                        value: lambda,
                        converged: true,
                        iterations: it,
                    });
                }
                last = lambda;
            }
            Ok(MinEigEstimate {
                value: last,
                converged: false,
                iterations: MIN_EIG_MAX_ITER,
            })
        }
        Err(e) => Err(e),
    }
}

/// Euclidean dot product.
#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// Euclidean norm.
#[inline]
pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Squared Euclidean norm of a complex vector (sum of re² + im²).
#[inline]
pub fn norm2_sq_complex(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum()
}

fn normalize(v: &mut [f64]) {
    let n = norm2(v);
    if n > 0.0 {
        for x in v.iter_mut() {
            *x /= n;
        }
    }
}
