use std::fmt;

use crate::{config_err, CliError};

/// Test signal evaluated pointwise on the grid. The two named signals cover
/// the standard experiments; `poly:c0,c1,...` defines an inline polynomial
/// with ascending-degree coefficients.
#[derive(Debug, Clone, PartialEq)]
pub enum Signal {
    ExpSin,
    CosShift,
    Poly(Vec<f64>),
}

impl Signal {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text.trim() {
            "exp_sin" => Ok(Signal::ExpSin),
            "cos_shift" => Ok(Signal::CosShift),
            rest => {
                if let Some(list) = rest.strip_prefix("poly:") {
                    let coeffs = list
                        .split(',')
                        .map(|s| {
                            s.trim().parse::<f64>().map_err(|e| {
                                config_err(format!("signal: bad coefficient `{s}`: {e}"))
                            })
                        })
                        .collect::<Result<Vec<f64>, CliError>>()?;
                    if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
                        return Err(config_err(
                            "signal: poly needs at least one finite coefficient",
                        ));
                    }
                    Ok(Signal::Poly(coeffs))
                } else {
                    Err(config_err(format!(
                        "signal: unknown `{rest}`, expected exp_sin, cos_shift, or poly:c0,c1,..."
                    )))
                }
            }
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Signal::ExpSin => x.exp() * (5.0 * x).sin(),
            Signal::CosShift => (1.4 * std::f64::consts::PI * (x + 1.0)).cos(),
            Signal::Poly(coeffs) => coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c),
        }
    }
}

impl fmt::Display for Signal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Signal::ExpSin => write!(f, "exp_sin"),
            Signal::CosShift => write!(f, "cos_shift"),
            Signal::Poly(coeffs) => {
                write!(f, "poly:")?;
                for (i, c) in coeffs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
        }
    }
}
