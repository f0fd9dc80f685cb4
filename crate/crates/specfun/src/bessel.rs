//! Bessel functions of the first kind J_ν(x) with real order ν ≥ 0 and
//! argument x ≥ 0.
//!
//! Two regimes (Numerical Recipes §6.5, Watson §5.7):
//! - ascending power series where it is monotone-safe (x² ≤ 4(ν+1); terms
//!   shrink from the start, so no cancellation),
//! - Miller's downward recurrence otherwise, normalized by the Neumann sum
//!   Σ_k (μ+2k) Γ(μ+k)/k! · J_{μ+2k}(x) = (x/2)^μ for fractional μ ∈ (0,1),
//!   or J_0 + 2 Σ_k J_{2k} = 1 for integer orders.
//!
//! One downward pass produces every order sharing a fractional part, which
//! is how the projection operator consumes the function: a whole column of
//! orders λ, λ+1, ..., λ+m at once, optionally in log-magnitude form so the
//! caller can attach exponentially large or small prefactors without
//! overflow.

use crate::gamma::ln_gamma_unchecked;
use crate::{domain, SpecFunError};

/// Signed log-magnitude representation: value = sign · exp(ln_abs),
/// with sign ∈ {-1, 0, +1} and ln_abs = −∞ for an exact zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogMagnitude {
    pub ln_abs: f64,
    pub sign: f64,
}

impl LogMagnitude {
    pub const ZERO: Self = Self {
        ln_abs: f64::NEG_INFINITY,
        sign: 0.0,
    };

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else {
            Self {
                ln_abs: v.abs().ln(),
                sign: v.signum(),
            }
        }
    }

    pub fn value(self) -> f64 {
        self.sign * self.ln_abs.exp()
    }
}

/// Downward recurrence restarts far enough above max(order, x) that the
/// seed's contamination decays below 1e-20 by the time it reaches the
/// requested orders.
const MILLER_START_FACTOR: f64 = 1.15;
const MILLER_START_MARGIN: usize = 40;
/// Mid-recurrence rescale threshold; the unnormalized sequence grows fast
/// and the common scale cancels in the final normalization.
const MILLER_RESCALE: f64 = 1e250;
const SERIES_MAX_TERMS: usize = 400;

fn check_args(op: &'static str, order: f64, arg: f64) -> Result<(), SpecFunError> {
    if !(order.is_finite() && order >= 0.0) {
        return Err(domain(
            op,
            format!("order must be a finite non-negative real, got {order}"),
        ));
    }
    if !(arg.is_finite() && arg >= 0.0) {
        return Err(domain(
            op,
            format!("argument must be a finite non-negative real, got {arg}"),
        ));
    }
    Ok(())
}

fn series_is_safe(order: f64, arg: f64) -> bool {
    arg * arg <= 4.0 * (order + 1.0)
}

/// Ascending series in ratio form: J_ν(x) = t₀ · Σ_k r_k with t₀ =
/// (x/2)^ν / Γ(ν+1), r_0 = 1, r_k = r_{k-1} · (−x²/4) / (k (ν+k)).
/// Returned as a log-magnitude so t₀ may exceed the f64 range.
fn series_log(order: f64, arg: f64) -> Result<LogMagnitude, SpecFunError> {
    debug_assert!(arg > 0.0);
    let q = arg * arg / 4.0;
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut converged = false;
    for k in 1..=SERIES_MAX_TERMS {
        let k = k as f64;
        term *= -q / (k * (order + k));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(SpecFunError::NonConvergence {
            op: "bessel_j",
            diagnostics: format!(
                "ascending series did not settle after {SERIES_MAX_TERMS} terms \
                 (order {order}, argument {arg})"
            ),
        });
    }
    let ln_t0 = order * (arg / 2.0).ln() - ln_gamma_unchecked(order + 1.0);
    Ok(LogMagnitude {
        ln_abs: ln_t0 + sum.abs().ln(),
        sign: sum.signum(),
    })
}

/// One Miller pass: unnormalized values j_n ∝ J_{mu+n}(x) for n = 0..=n_top
/// plus the Neumann normalization sum at the same common scale.
fn miller_pass(mu: f64, n_top: usize, arg: f64) -> Result<(Vec<f64>, f64), SpecFunError> {
    debug_assert!((0.0..1.0).contains(&mu));
    debug_assert!(arg > 0.0);
    let start = ((MILLER_START_FACTOR * (n_top as f64).max(arg)).ceil() as usize
        + MILLER_START_MARGIN)
        .max(n_top + 2);
    let mut j = vec![0.0_f64; start + 2];
    j[start] = 1e-30;
    for n in (0..start).rev() {
        let v = 2.0 * (mu + n as f64 + 1.0) / arg * j[n + 1] - j[n + 2];
        j[n] = v;
        if v.abs() > MILLER_RESCALE {
            for w in j[n..].iter_mut() {
                *w /= MILLER_RESCALE;
            }
        }
    }
    let s = if mu == 0.0 {
        let mut s = j[0];
        let mut k = 2;
        while k <= start {
            s += 2.0 * j[k];
            k += 2;
        }
        s
    } else {
        // c_k = (mu + 2k) Γ(mu + k) / k!, built up by ratios.
        let mut c = ln_gamma_unchecked(mu + 1.0).exp();
        let mut s = c * j[0];
        let mut k = 1.0;
        let mut idx = 2;
        while idx <= start {
            c *= (mu + 2.0 * k) / (mu + 2.0 * k - 2.0) * (mu + k - 1.0) / k;
            s += c * j[idx];
            k += 1.0;
            idx += 2;
        }
        s
    };
    if !(s.is_finite() && s != 0.0) {
        return Err(SpecFunError::NonConvergence {
            op: "bessel_j",
            diagnostics: format!(
                "Miller normalization sum degenerate ({s}) for base order {mu}, \
                 top offset {n_top}, argument {arg}"
            ),
        });
    }
    j.truncate(n_top + 1);
    Ok((j, s))
}

/// J_ν(x) for ν ≥ 0, x ≥ 0.
pub fn bessel_j(order: f64, arg: f64) -> Result<f64, SpecFunError> {
    check_args("bessel_j", order, arg)?;
    if arg == 0.0 {
        return Ok(if order == 0.0 { 1.0 } else { 0.0 });
    }
    if series_is_safe(order, arg) {
        return Ok(series_log(order, arg)?.value());
    }
    let mu = order.fract();
    let n = order.trunc() as usize;
    let (j, s) = miller_pass(mu, n, arg)?;
    Ok(normalize_one(j[n], s, mu, arg))
}

fn normalize_one(j: f64, s: f64, mu: f64, arg: f64) -> f64 {
    if mu == 0.0 {
        j / s
    } else {
        j / s * (arg / 2.0).powf(mu)
    }
}

/// J_{base}(x), J_{base+1}(x), ..., J_{base+count-1}(x) in one call.
pub fn bessel_j_orders(base: f64, count: usize, arg: f64) -> Result<Vec<f64>, SpecFunError> {
    Ok(bessel_j_orders_ln(base, count, arg)?
        .into_iter()
        .map(LogMagnitude::value)
        .collect())
}

/// Log-magnitude variant of `bessel_j_orders`, for callers combining the
/// values with prefactors that individually overflow or underflow f64.
pub fn bessel_j_orders_ln(
    base: f64,
    count: usize,
    arg: f64,
) -> Result<Vec<LogMagnitude>, SpecFunError> {
    check_args("bessel_j_orders", base, arg)?;
    if count == 0 {
        return Ok(Vec::new());
    }
    if arg == 0.0 {
        let mut out = vec![LogMagnitude::ZERO; count];
        if base == 0.0 {
            out[0] = LogMagnitude::from_value(1.0);
        }
        return Ok(out);
    }
    // The series-safety bound is monotone in the order, so checking the
    // lowest order covers the whole run.
    if series_is_safe(base, arg) {
        return (0..count)
            .map(|i| series_log(base + i as f64, arg))
            .collect();
    }
    let mu = base.fract();
    let offset = base.trunc() as usize;
    let n_top = offset + count - 1;
    let (j, s) = miller_pass(mu, n_top, arg)?;
    let ln_prefix = if mu == 0.0 {
        -s.abs().ln()
    } else {
        mu * (arg / 2.0).ln() - s.abs().ln()
    };
    Ok(j[offset..=n_top]
        .iter()
        .map(|&v| {
            if v == 0.0 {
                LogMagnitude::ZERO
            } else {
                LogMagnitude {
                    ln_abs: v.abs().ln() + ln_prefix,
                    sign: v.signum() * s.signum(),
                }
            }
        })
        .collect())
}
