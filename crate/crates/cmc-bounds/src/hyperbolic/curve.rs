//! Sampled boundary curves with strictly negative geodesic curvature.

use crate::{Error, Result};
use std::io::{BufRead, Write};
use std::path::Path;

/// One arc-length sample of a curve: position `s` and signed geodesic
/// curvature `kappa` there.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CurveSample {
    pub s: f64,
    pub kappa: f64,
}

/// Curve known through curvature samples at increasing arc length.
///
/// Samples run from `s = 0` to `s = total_length()`; between samples the
/// curvature is treated as linear, and every integral the crate takes over
/// a curve (trapezoid rule, panel quadrature) uses that same interpolation,
/// so closed forms and oracles see one consistent curvature model.
///
/// All curvatures must be strictly negative: these are boundary curves that
/// bend away from the surface they bound, measured against the normal that
/// points to their non-convex side.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryCurve {
    samples: Vec<CurveSample>,
}

impl BoundaryCurve {
    pub fn new(samples: Vec<CurveSample>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::domain(
                "a boundary curve needs at least two samples",
            ));
        }
        if samples[0].s.abs() > 1e-9 {
            return Err(Error::domain(format!(
                "first sample must sit at s = 0, got s = {}",
                samples[0].s
            )));
        }
        for pair in samples.windows(2) {
            if !(pair[1].s > pair[0].s) {
                return Err(Error::domain(format!(
                    "arc length must be strictly increasing, got {} then {}",
                    pair[0].s, pair[1].s
                )));
            }
        }
        for sample in &samples {
            if !sample.kappa.is_finite() || sample.kappa >= 0.0 {
                return Err(Error::domain(format!(
                    "curvature must be strictly negative, got {} at s = {}",
                    sample.kappa, sample.s
                )));
            }
            if !sample.s.is_finite() {
                return Err(Error::domain("arc length must be finite"));
            }
        }
        Ok(BoundaryCurve { samples })
    }

    /// Uniformly sampled curve of constant curvature.
    pub fn constant(kappa: f64, length: f64, n_samples: usize) -> Result<Self> {
        Self::from_fn(length, n_samples, |_| kappa)
    }

    /// Uniformly sampled curve with curvature `f(s)`.
    pub fn from_fn(length: f64, n_samples: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if !(length > 0.0) || !length.is_finite() {
            return Err(Error::domain("curve length must be positive and finite"));
        }
        if n_samples < 2 {
            return Err(Error::domain("need at least two samples"));
        }
        let samples = (0..n_samples)
            .map(|i| {
                let s = length * i as f64 / (n_samples - 1) as f64;
                CurveSample { s, kappa: f(s) }
            })
            .collect();
        Self::new(samples)
    }

    pub fn samples(&self) -> &[CurveSample] {
        &self.samples
    }

    pub fn total_length(&self) -> f64 {
        self.samples.last().unwrap().s
    }

    /// Trapezoid rule for `integral kappa ds`; exact for the piecewise
    /// linear curvature model.
    pub fn total_curvature_integral(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|p| 0.5 * (p[0].kappa + p[1].kappa) * (p[1].s - p[0].s))
            .sum()
    }

    /// Reads the two-column format `s,kappa` with a mandatory header row.
    pub fn read_csv(reader: impl BufRead) -> Result<Self> {
        let mut lines = reader.lines().enumerate();
        let header = match lines.next() {
            Some((_, line)) => line?,
            None => return Err(Error::parse("empty curve file")),
        };
        if header.trim() != "s,kappa" {
            return Err(Error::parse(format!(
                "expected header 's,kappa', got '{}'",
                header.trim()
            )));
        }
        let mut samples = Vec::new();
        for (idx, line) in lines {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let mut fields = trimmed.split(',');
            let (s, kappa) = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => (a.trim(), b.trim()),
                _ => {
                    return Err(Error::parse(format!(
                        "line {}: expected exactly two fields",
                        idx + 1
                    )))
                }
            };
            let s: f64 = s
                .parse()
                .map_err(|_| Error::parse(format!("line {}: bad arc length '{s}'", idx + 1)))?;
            let kappa: f64 = kappa
                .parse()
                .map_err(|_| Error::parse(format!("line {}: bad curvature '{kappa}'", idx + 1)))?;
            samples.push(CurveSample { s, kappa });
        }
        Self::new(samples)
    }

    pub fn read_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::read_csv(std::io::BufReader::new(file))
    }

    pub fn write_csv(&self, mut writer: impl Write) -> Result<()> {
        writeln!(writer, "s,kappa")?;
        for sample in &self.samples {
            writeln!(writer, "{:.17},{:.17}", sample.s, sample.kappa)?;
        }
        Ok(())
    }

    pub fn write_csv_path(&self, path: impl AsRef<Path>) -> Result<()> {
        let file = std::fs::File::create(path)?;
        self.write_csv(std::io::BufWriter::new(file))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn constant_curve_integrates_exactly() {
        let curve = BoundaryCurve::constant(-2.0, 3.0, 7).unwrap();
        assert_relative_eq!(curve.total_curvature_integral(), -6.0, max_relative = 1e-15);
        assert_relative_eq!(curve.total_length(), 3.0);
    }

    #[test]
    fn linear_curvature_integrates_exactly() {
        // kappa(s) = -1 - s on [0, 2]: integral = -(2 + 2) = -4.
        let curve = BoundaryCurve::from_fn(2.0, 9, |s| -1.0 - s).unwrap();
        assert_relative_eq!(curve.total_curvature_integral(), -4.0, max_relative = 1e-14);
    }

    #[test]
    fn rejects_bad_samples() {
        assert!(BoundaryCurve::new(vec![CurveSample { s: 0.0, kappa: -1.0 }]).is_err());
        assert!(BoundaryCurve::new(vec![
            CurveSample { s: 0.5, kappa: -1.0 },
            CurveSample { s: 1.0, kappa: -1.0 },
        ])
        .is_err());
        assert!(BoundaryCurve::new(vec![
            CurveSample { s: 0.0, kappa: -1.0 },
            CurveSample { s: 0.0, kappa: -1.0 },
        ])
        .is_err());
        assert!(BoundaryCurve::new(vec![
            CurveSample { s: 0.0, kappa: -1.0 },
            CurveSample { s: 1.0, kappa: 0.0 },
        ])
        .is_err());
    }

    #[test]
    fn csv_round_trip() {
        let curve = BoundaryCurve::from_fn(1.5, 11, |s| -1.0 - 0.3 * (2.0 * s).sin()).unwrap();
        let mut buf = Vec::new();
        curve.write_csv(&mut buf).unwrap();
        let back = BoundaryCurve::read_csv(std::io::Cursor::new(buf)).unwrap();
        assert_eq!(curve, back);
    }

    #[test]
    fn csv_rejects_malformed_input() {
        let no_header = "0.0,-1.0\n1.0,-1.0\n";
        assert!(BoundaryCurve::read_csv(std::io::Cursor::new(no_header)).is_err());
        let bad_field = "s,kappa\n0.0,-1.0\n0.5,abc\n";
        assert!(BoundaryCurve::read_csv(std::io::Cursor::new(bad_field)).is_err());
        let decreasing = "s,kappa\n0.0,-1.0\n0.8,-1.0\n0.5,-1.0\n";
        assert!(BoundaryCurve::read_csv(std::io::Cursor::new(decreasing)).is_err());
        let positive = "s,kappa\n0.0,-1.0\n0.8,0.2\n";
        assert!(BoundaryCurve::read_csv(std::io::Cursor::new(positive)).is_err());
    }
}
