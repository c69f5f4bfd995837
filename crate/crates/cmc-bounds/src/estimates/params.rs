//! Parameter sets and surface summaries.

use crate::{Error, Result};
use std::f64::consts::TAU as TWO_PI;

/// Ambient and variational parameters every bound depends on.
///
/// A surface is admissible for these parameters when its Morse index is at
/// most `index_bound`, its mean curvature at most `h0`, and it is immersed
/// in a complete 3-manifold with injectivity radius at least `r0` and
/// absolute sectional curvature at most `k0`. `cs` and `a1` are the
/// curvature constants of the boundary-curve estimates in the stable and
/// index-concentration regimes; `c`, when present, is a positive lower
/// bound for `3 H^2 + rho/2` (rho the ambient scalar curvature) and
/// activates the compactness bounds.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GeometryParams {
    /// Upper bound `I` for the Morse index.
    #[serde(rename = "I")]
    pub index_bound: u64,
    /// Injectivity radius floor `r0 > 0`.
    #[serde(default = "one")]
    pub r0: f64,
    /// Ambient sectional curvature ceiling `K0 >= 0`.
    #[serde(rename = "K0", default = "one")]
    pub k0: f64,
    /// Mean curvature ceiling `H0 >= 0`.
    #[serde(rename = "H0", default = "one")]
    pub h0: f64,
    /// Stable-regime curvature constant `Cs >= 2 pi`.
    #[serde(rename = "Cs", default = "two_pi")]
    pub cs: f64,
    /// Concentration-regime curvature constant `A1 >= 1`.
    #[serde(rename = "A1", default = "one")]
    pub a1: f64,
    /// Optional scalar curvature floor `c > 0`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
}

fn one() -> f64 {
    1.0
}

fn two_pi() -> f64 {
    TWO_PI
}

impl GeometryParams {
    /// Parameters of the normalized space: everything 1, `Cs = 2 pi`.
    pub fn new(index_bound: u64) -> Self {
        GeometryParams {
            index_bound,
            r0: 1.0,
            k0: 1.0,
            h0: 1.0,
            cs: TWO_PI,
            a1: 1.0,
            c: None,
        }
    }

    pub fn with_scalar_floor(mut self, c: f64) -> Self {
        self.c = Some(c);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r0 > 0.0) || !self.r0.is_finite() {
            return Err(Error::params(format!("r0 must be positive, got {}", self.r0)));
        }
        if !(self.k0 >= 0.0) || !self.k0.is_finite() {
            return Err(Error::params(format!("K0 must be nonnegative, got {}", self.k0)));
        }
        if !(self.h0 >= 0.0) || !self.h0.is_finite() {
            return Err(Error::params(format!("H0 must be nonnegative, got {}", self.h0)));
        }
        if !(self.cs >= TWO_PI) {
            return Err(Error::params(format!(
                "Cs must be at least 2 pi, got {}",
                self.cs
            )));
        }
        if !(self.a1 >= 1.0) {
            return Err(Error::params(format!("A1 must be at least 1, got {}", self.a1)));
        }
        if let Some(c) = self.c {
            if !(c > 0.0) || !c.is_finite() {
                return Err(Error::params(format!("c must be positive, got {c}")));
            }
        }
        Ok(())
    }

    /// Normalization scale `lambda = max(1, 1/r0, sqrt(K0), H0)`.
    pub fn lambda(&self) -> f64 {
        1.0_f64.max(1.0 / self.r0).max(self.k0.sqrt()).max(self.h0)
    }
}

/// Measured data of one surface, in ambient units.
///
/// `diameter` is the intrinsic diameter; it dominates the extrinsic one,
/// so every lower bound stated for the extrinsic diameter applies to it
/// as well. `mean_curvature` is the (constant) unsigned mean curvature.
/// A non-compact surface has infinite area; area lower bounds are then
/// vacuous and `area`/`diameter` are ignored.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SurfaceSummary {
    pub genus: u64,
    pub area: f64,
    pub diameter: f64,
    pub mean_curvature: f64,
    pub index: u64,
    pub compact: bool,
    pub connected: bool,
}

impl SurfaceSummary {
    pub fn validate(&self) -> Result<()> {
        if self.compact {
            if !(self.area > 0.0) || !self.area.is_finite() {
                return Err(Error::params(format!(
                    "compact surface needs finite positive area, got {}",
                    self.area
                )));
            }
            if !(self.diameter > 0.0) || !self.diameter.is_finite() {
                return Err(Error::params(format!(
                    "compact surface needs finite positive diameter, got {}",
                    self.diameter
                )));
            }
        }
        if !(self.mean_curvature >= 0.0) {
            return Err(Error::params(format!(
                "mean curvature must be reported unsigned, got {}",
                self.mean_curvature
            )));
        }
        Ok(())
    }
}

/// Converts an ambient-units summary to the normalized space with scale
/// `lam`: areas gain `lam^2`, lengths gain `lam`, the mean curvature drops
/// to `H / lam`. Topological fields are scale invariant. Applying this with
/// the parameter set's own `lambda()` and checking against normalized
/// parameters gives the same verdicts as checking the raw pair.
pub fn rescale_summary(summary: &SurfaceSummary, lam: f64) -> SurfaceSummary {
    SurfaceSummary {
        genus: summary.genus,
        area: summary.area * lam * lam,
        diameter: summary.diameter * lam,
        mean_curvature: summary.mean_curvature / lam,
        index: summary.index,
        compact: summary.compact,
        connected: summary.connected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn defaults_are_normalized() {
        let p = GeometryParams::new(0);
        p.validate().unwrap();
        assert_eq!(p.lambda(), 1.0);
    }

    #[test]
    fn lambda_takes_the_binding_constraint() {
        let mut p = GeometryParams::new(0);
        p.r0 = 0.25;
        assert_eq!(p.lambda(), 4.0);
        p.r0 = 1.0;
        p.k0 = 9.0;
        assert_eq!(p.lambda(), 3.0);
        p.k0 = 1.0;
        p.h0 = 2.5;
        assert_eq!(p.lambda(), 2.5);
    }

    #[test]
    fn validation_rejects_out_of_range() {
        let mut p = GeometryParams::new(0);
        p.cs = 6.0;
        assert!(p.validate().is_err());
        let mut p = GeometryParams::new(0);
        p.a1 = 0.5;
        assert!(p.validate().is_err());
        let mut p = GeometryParams::new(0);
        p.r0 = 0.0;
        assert!(p.validate().is_err());
        let p = GeometryParams::new(0).with_scalar_floor(-1.0);
        assert!(p.validate().is_err());
    }

    #[test]
    fn rescaling_applies_the_stated_powers() {
        let s = SurfaceSummary {
            genus: 2,
            area: 4.0 * std::f64::consts::PI,
            diameter: 3.0,
            mean_curvature: 1.0,
            index: 1,
            compact: true,
            connected: true,
        };
        let r = rescale_summary(&s, 2.0);
        assert_relative_eq!(r.area, 16.0 * std::f64::consts::PI);
        assert_relative_eq!(r.diameter, 6.0);
        assert_relative_eq!(r.mean_curvature, 0.5);
        assert_eq!(r.genus, 2);
        assert_eq!(r.index, 1);
        let id = rescale_summary(&s, 1.0);
        assert_eq!(id, s);
    }

    #[test]
    fn params_config_round_trip() {
        let p = GeometryParams::new(3).with_scalar_floor(0.7);
        let text = toml::to_string(&p).unwrap();
        let back: GeometryParams = toml::from_str(&text).unwrap();
        assert_eq!(p, back);
        // Renamed keys are the external contract.
        assert!(text.contains("I = 3"));
        assert!(text.contains("K0"));
    }
}
