//! Equidistant-curve calculus: Jacobi factors, curvature of pushed curves,
//! and collar areas.
//!
//! A boundary curve with curvature `kappa(s) < 0` is pushed to distance
//! `r` along the normal on its non-convex side. In the fiber coordinate
//! `t in [0, r]` the pushed metric stretches arc length by the Jacobi
//! factor `f_s(t) = cosh t - kappa(s) sinh t` (curvature -1 model). With
//! `kappa < 0` the factor is positive for all `t >= 0`, so the normal
//! exponential map is injective on each fiber and areas can be computed by
//! integrating the factor.

use super::curve::BoundaryCurve;
use super::lorentz::{HyperbolicPoint, TangentVector};
use crate::{Error, Result};

/// Length distortion `cosh t - kappa sinh t` of the equidistant push at
/// distance `t`, for a curve point with curvature `kappa`.
pub fn jacobi_factor(kappa: f64, t: f64) -> f64 {
    t.cosh() - kappa * t.sinh()
}

/// Geodesic curvature of the equidistant curve at distance `r >= 0` on the
/// non-convex side, for a base point of curvature `kappa < 0`:
///
/// `(kappa - tanh r) / (1 - kappa tanh r)`.
///
/// The result stays in `(-1, 0)` union `(-inf, -1)` according to where
/// `kappa` starts, and tends to -1 (horocycle curvature) as `r -> inf`.
pub fn equidistant_curvature(kappa: f64, r: f64) -> Result<f64> {
    if !(kappa < 0.0) {
        return Err(Error::domain(format!(
            "equidistant curvature needs kappa < 0, got {kappa}"
        )));
    }
    if !(r >= 0.0) {
        return Err(Error::domain(format!(
            "push distance must be nonnegative, got {r}"
        )));
    }
    let th = r.tanh();
    Ok((kappa - th) / (1.0 - th * kappa))
}

/// Point at distance `r >= 0` from the base of `tangent` along the normal
/// obtained by rotating the (unit) tangent a quarter turn:
///
/// `cosh(r) p + sinh(r) (p x tangent)`.
///
/// The rotation convention matches the one used when integrating curves
/// from their curvature, so pushed curves have the curvature reported by
/// [`equidistant_curvature`].
pub fn equidistant_point(tangent: &TangentVector, r: f64) -> Result<HyperbolicPoint> {
    if !(r >= 0.0) {
        return Err(Error::domain(format!(
            "push distance must be nonnegative, got {r}"
        )));
    }
    let unit_defect = (tangent.direction().lorentz_norm_sq() - 1.0).abs();
    if unit_defect > 1e-9 {
        return Err(Error::domain(format!(
            "tangent must be unit length, |<v,v>| - 1 = {unit_defect:e}"
        )));
    }
    let p = tangent.base().position();
    let normal = p.lorentz_cross(&tangent.direction());
    HyperbolicPoint::renormalized(p * r.cosh() + normal * r.sinh())
}

/// Area of the collar swept between `curve` and its equidistant at distance
/// `r >= 0`, in ambient constant curvature `k1 < 0`.
///
/// Writing `b = sqrt(-k1)`, the fiberwise Jacobi factor integrates to
///
/// `area = (1 - cosh(b r)) / (-k1) * integral(kappa ds)
///         + sinh(b r) / b * length`.
///
/// Both terms are nonnegative for admissible curves (`kappa < 0`), the
/// result is zero at `r = 0` and strictly increasing in `r`. At `k1 = -1`
/// this reduces to `(1 - cosh r) integral(kappa) + sinh(r) length`.
///
/// The two terms scale differently under metric rescaling: curvature
/// integrals are scale invariant while lengths scale linearly, which pins
/// the powers of `b` (see the rescaling tests).
pub fn collar_area(curve: &BoundaryCurve, r: f64, k1: f64) -> Result<f64> {
    if !(k1 < 0.0) {
        return Err(Error::domain(format!(
            "ambient curvature must be negative, got {k1}"
        )));
    }
    if !(r >= 0.0) {
        return Err(Error::domain(format!(
            "push distance must be nonnegative, got {r}"
        )));
    }
    let b = (-k1).sqrt();
    let total_kappa = curve.total_curvature_integral();
    let length = curve.total_length();
    Ok((1.0 - (b * r).cosh()) / (-k1) * total_kappa + (b * r).sinh() / b * length)
}

/// Total geodesic curvature of the equidistant curve at distance `r`,
/// integrated against its own arc length (curvature -1 model):
///
/// `cosh(r) integral(kappa ds) - sinh(r) length`.
///
/// Together with [`collar_area`] this closes the Gauss-Bonnet identity for
/// the collar: `area = integral(kappa) - equidistant_total_curvature`.
pub fn equidistant_total_curvature(curve: &BoundaryCurve, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::domain(format!(
            "push distance must be nonnegative, got {r}"
        )));
    }
    Ok(r.cosh() * curve.total_curvature_integral() - r.sinh() * curve.total_length())
}
