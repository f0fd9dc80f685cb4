//! Text serialization: spectral data as `k,re,im` lines, signals as
//! `x,value` CSV. Floats are written with the shortest round-trip
//! representation, so read-after-write reproduces values exactly.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;

use crate::spectral::{SpectralData, SpectralKind};
use crate::FourierError;

/// Writes one `k,re,im` row per coefficient after a header. Noisy data is
/// marked with a leading `# kind=noisy` comment so provenance survives a
/// round trip; clean files carry no extra lines.
pub fn write_spectral(data: &SpectralData, path: &Path) -> Result<(), FourierError> {
    let mut w = BufWriter::new(File::create(path)?);
    if data.kind == SpectralKind::Noisy {
        writeln!(w, "# kind=noisy")?;
    }
    writeln!(w, "k,re,im")?;
    for (i, c) in data.coeffs.iter().enumerate() {
        writeln!(w, "{},{},{}", data.wavenumber(i), c.re, c.im)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_spectral(path: &Path) -> Result<SpectralData, FourierError> {
    let reader = BufReader::new(File::open(path)?);
    let mut kind = SpectralKind::Clean;
    let mut coeffs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if comment.trim() == "kind=noisy" {
                kind = SpectralKind::Noisy;
            }
            continue;
        }
        if trimmed == "k,re,im" {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').collect();
        if fields.len() != 3 {
            return Err(FourierError::Parse {
                line: line_no,
                message: format!("expected 3 fields `k,re,im`, got {}", fields.len()),
            });
        }
        let parse = |s: &str, what: &str| -> Result<f64, FourierError> {
            s.trim().parse::<f64>().map_err(|e| FourierError::Parse {
                line: line_no,
                message: format!("bad {what} `{s}`: {e}"),
            })
        };
        // The wavenumber is implied by row order; parse it only to validate.
        fields[0]
            .trim()
            .parse::<i64>()
            .map_err(|e| FourierError::Parse {
                line: line_no,
                message: format!("bad wavenumber `{}`: {e}", fields[0]),
            })?;
        let re = parse(fields[1], "real part")?;
        let im = parse(fields[2], "imaginary part")?;
        coeffs.push(Complex64::new(re, im));
    }
    Ok(SpectralData { coeffs, kind })
}

/// Writes paired samples as `x,value` CSV.
pub fn write_signal(xs: &[f64], values: &[f64], path: &Path) -> Result<(), FourierError> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "x,value")?;
    for (x, v) in xs.iter().zip(values) {
        writeln!(w, "{x},{v}")?;
    }
    w.flush()?;
    Ok(())
}

/// Reads `x,value` CSV rows (header and blank lines skipped).
pub fn read_xy(path: &Path) -> Result<Vec<(f64, f64)>, FourierError> {
    let reader = BufReader::new(File::open(path)?);
    let mut rows = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed == "x,value" {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').collect();
        if fields.len() != 2 {
            return Err(FourierError::Parse {
                line: line_no,
                message: format!("expected 2 fields `x,value`, got {}", fields.len()),
            });
        }
        let mut parsed = [0.0; 2];
        for (slot, field) in parsed.iter_mut().zip(&fields) {
            *slot = field.trim().parse::<f64>().map_err(|e| FourierError::Parse {
                line: line_no,
                message: format!("bad number `{field}`: {e}"),
            })?;
        }
        rows.push((parsed[0], parsed[1]));
    }
    Ok(rows)
}
