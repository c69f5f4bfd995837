//! The constants ladder: every number the bounds are built from.
//!
//! The ladder bottoms out in two inputs: the universal ball-area profile
//! `E(r) = pi r^2 exp(-2r - 1 + r cot r)` and the curvature levels
//! `k1 = -1 - Cs^2/2` (stable regime) and `-1 - A1^2/2` (concentration
//! regime). Everything above is min/max plumbing chosen so that each
//! constant is monotone in the parameters it depends on; the monotonicity
//! suite pins that.

use super::params::GeometryParams;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Which curvature level a comparison argument runs against.
///
/// `Stable` uses the curvature bound available when no index concentrates
/// (`k1 = -1 - Cs^2/2`); `Concentrated` uses the bound away from the
/// concentration regions (`k1 = -1 - A1^2/2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum K1Mode {
    Stable,
    Concentrated,
}

/// Universal area floor `E(pi/4)`, approximately `0.325043`.
pub fn c_a() -> f64 {
    // Inline rather than through ball_area_lower so the value is total.
    let r = PI / 4.0;
    PI * r * r * (-2.0 * r - 1.0 + r / r.tan()).exp()
}

/// Lower bound `E(r) = pi r^2 exp(-2r - 1 + r cot r)` for the area of an
/// intrinsic ball of radius `r` around a point of a surface in the
/// normalized regularity class. Increasing on the admissible domain
/// `0 < r <= pi/4`.
pub fn ball_area_lower(r: f64) -> Result<f64> {
    if !(r > 0.0 && r <= PI / 4.0) {
        return Err(Error::domain(format!(
            "ball area profile is defined on (0, pi/4], got r = {r}"
        )));
    }
    Ok(PI * r * r * (-2.0 * r - 1.0 + r / r.tan()).exp())
}

/// Curvature level for the comparison geometry: `-1 - Cs^2/2` in the
/// stable regime, `-1 - A1^2/2` in the concentration regime. Always
/// at most `-3/2` given the parameter validation floor `A1 >= 1`.
pub fn k1(params: &GeometryParams, mode: K1Mode) -> f64 {
    match mode {
        K1Mode::Stable => -1.0 - params.cs * params.cs / 2.0,
        K1Mode::Concentrated => -1.0 - params.a1 * params.a1 / 2.0,
    }
}

/// Curvature magnitude `A3 = -4 k1 = 4 + 2 A1^2` used by the
/// concentration-regime ball bounds. At least 6.
pub fn a3(params: &GeometryParams) -> f64 {
    -4.0 * k1(params, K1Mode::Concentrated)
}

/// Intermediate constants behind `C1`, in evaluation order.
#[derive(Clone, Copy, Debug)]
pub struct C1Breakdown {
    /// Concentration-regime curvature level.
    pub k1: f64,
    /// `min(2 pi / (3 |k1|), c_A / 2)`.
    pub c3: f64,
    /// `pi / |k1|` (index-positive branch only).
    pub c4_prime: Option<f64>,
    /// `c_A / (12 I - 3)` (index-positive branch only).
    pub c4_double_prime: Option<f64>,
    /// `min(c4_prime, c4_double_prime)`.
    pub c4: Option<f64>,
    /// Final genus coefficient `min(c3, c4)`.
    pub c1: f64,
}

/// Evaluates the `C1` ladder. For `index_bound = 0` only the `C3` branch
/// exists; otherwise `C1 = min(C3, C4)` with `C4` shrinking like `1/I`.
pub fn c1_breakdown(params: &GeometryParams) -> C1Breakdown {
    let k1 = k1(params, K1Mode::Concentrated);
    let c3 = (2.0 * PI / (3.0 * k1.abs())).min(c_a() / 2.0);
    if params.index_bound == 0 {
        return C1Breakdown {
            k1,
            c3,
            c4_prime: None,
            c4_double_prime: None,
            c4: None,
            c1: c3,
        };
    }
    let i = params.index_bound as f64;
    let c4_prime = PI / k1.abs();
    let c4_double_prime = c_a() / (12.0 * i - 3.0);
    let c4 = c4_prime.min(c4_double_prime);
    C1Breakdown {
        k1,
        c3,
        c4_prime: Some(c4_prime),
        c4_double_prime: Some(c4_double_prime),
        c4: Some(c4),
        c1: c3.min(c4),
    }
}

/// Genus coefficient of the index-linear area lower bound.
pub fn c1(params: &GeometryParams) -> f64 {
    c1_breakdown(params).c1
}

/// Genus coefficient `pi / (3 + 4 Cs + 4 Cs^2)` of the high-genus area
/// lower bound. Independent of the index bound.
pub fn big_c(params: &GeometryParams) -> f64 {
    PI / (3.0 + 4.0 * params.cs + 4.0 * params.cs * params.cs)
}

/// Curvature budget `1 + 2 Cs` for unit-length subarcs of stable boundary
/// curves; reported alongside the other constants.
pub fn c_hat_s(params: &GeometryParams) -> f64 {
    1.0 + 2.0 * params.cs
}

/// Closed-form area `2 pi / (-k1) (cosh(sqrt(-k1) r) - 1)` of the geodesic
/// ball of radius `r` in constant curvature `k1 < 0`.
pub fn hyperbolic_ball_area(r: f64, k1: f64) -> Result<f64> {
    if !(k1 < 0.0) {
        return Err(Error::domain(format!(
            "ball area needs negative curvature, got {k1}"
        )));
    }
    if !(r >= 0.0) {
        return Err(Error::domain(format!("radius must be nonnegative, got {r}")));
    }
    let b = (-k1).sqrt();
    Ok(2.0 * PI / (-k1) * ((b * r).cosh() - 1.0))
}

/// Normalized-scale ball area ceiling in the concentration regime
/// (index at least 1): complement-of-regions part plus the fixed
/// `3 pi I / 8` region contribution.
fn concentrated_ball_ceiling_normalized(params: &GeometryParams, r: f64) -> f64 {
    let i = params.index_bound as f64;
    let a3 = a3(params);
    let root = a3.sqrt();
    let annulus = 2.0 * (6.0 * PI + 1.0) * i / a3
        * (2.0 * ((root * r).cosh() - 1.0) + (root * r).sinh() / root);
    annulus + 3.0 * PI / 8.0 * i
}

/// Annulus part of the concentration-regime ceiling at normalized scale;
/// exposed to the bound layer for the complement-area bound.
pub(crate) fn annulus_ceiling_normalized(params: &GeometryParams, r: f64) -> f64 {
    let i = params.index_bound as f64;
    let a3 = a3(params);
    let root = a3.sqrt();
    2.0 * (6.0 * PI + 1.0) * i / a3 * (2.0 * ((root * r).cosh() - 1.0) + (root * r).sinh() / root)
}

/// Normalized-scale ceiling `h~(I, r)` for the area of a ball of radius
/// `r` around any point of an admissible surface: the stable-regime
/// comparison ball for `I = 0`, otherwise the worse of the
/// concentration-regime comparison ball and the concentration ceiling.
pub fn h_tilde(params: &GeometryParams, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::domain(format!("radius must be nonnegative, got {r}")));
    }
    if params.index_bound == 0 {
        return hyperbolic_ball_area(r, k1(params, K1Mode::Stable));
    }
    let comparison = hyperbolic_ball_area(r, k1(params, K1Mode::Concentrated))?;
    Ok(comparison.max(concentrated_ball_ceiling_normalized(params, r)))
}

/// Normalized-scale total-area budget `h(I) = I` times the unit-radius
/// concentration ceiling; zero when the index bound is zero.
pub fn h_small(params: &GeometryParams) -> f64 {
    if params.index_bound == 0 {
        return 0.0;
    }
    params.index_bound as f64 * concentrated_ball_ceiling_normalized(params, 1.0)
}

/// Genus threshold `G(I)` above which the high-genus area bound applies:
/// `max(12 I - 3, ceil(-2 k1 h(I) / pi) - 1)`, and 0 for `I = 0`.
pub fn g_threshold(params: &GeometryParams) -> u64 {
    if params.index_bound == 0 {
        return 0;
    }
    let i = params.index_bound;
    let k1 = k1(params, K1Mode::Concentrated);
    let spectral = (-2.0 * k1 * h_small(params) / PI).ceil() - 1.0;
    let combinatorial = 12 * i - 3;
    (spectral.max(0.0) as u64).max(combinatorial)
}

/// Radius `R_c = 2 pi / sqrt(3 c)` beyond which no ball admits a stable
/// admissible piece once the ambient floor `3 H^2 + rho/2 >= c > 0` holds.
pub fn stability_radius(c: f64) -> Result<f64> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::domain(format!(
            "scalar curvature floor must be positive, got {c}"
        )));
    }
    Ok(2.0 * PI / (3.0 * c).sqrt())
}

/// Normalized-scale area ceiling `A2(I, c) = h~(I, 2 (I+1) R_c)` of the
/// compact case. Non-increasing in `c` because `R_c` is.
pub fn a2(params: &GeometryParams) -> Result<f64> {
    let c = params
        .c
        .ok_or_else(|| Error::Precondition("compact-case constants need the scalar floor c".into()))?;
    let r_c = stability_radius(c)?;
    h_tilde(params, 2.0 * (params.index_bound as f64 + 1.0) * r_c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn defaults(i: u64) -> GeometryParams {
        GeometryParams::new(i)
    }

    #[test]
    fn universal_floor_value() {
        assert_relative_eq!(c_a(), 0.3250431851520064, epsilon = 1e-15);
        // Equals the profile at the right end of its domain, exactly.
        assert_relative_eq!(ball_area_lower(PI / 4.0).unwrap(), c_a(), epsilon = 1e-12);
    }

    #[test]
    fn ball_profile_domain_and_growth() {
        assert!(ball_area_lower(0.0).is_err());
        assert!(ball_area_lower(PI / 4.0 + 1e-9).is_err());
        assert_relative_eq!(
            ball_area_lower(PI / 8.0).unwrap(),
            0.20970947882908492,
            epsilon = 1e-14
        );
        let mut last = 0.0;
        for i in 1..=40 {
            let r = PI / 4.0 * i as f64 / 40.0;
            let v = ball_area_lower(r).unwrap();
            assert!(v > last);
            last = v;
        }
    }

    #[test]
    fn curvature_levels() {
        let p = defaults(0);
        assert_relative_eq!(k1(&p, K1Mode::Stable), -1.0 - 2.0 * PI * PI, epsilon = 1e-12);
        assert_relative_eq!(k1(&p, K1Mode::Concentrated), -1.5);
        assert_relative_eq!(a3(&p), 6.0);
        let mut p = defaults(0);
        p.a1 = 2.0;
        assert_relative_eq!(k1(&p, K1Mode::Concentrated), -3.0);
        assert_relative_eq!(a3(&p), 12.0);
    }

    #[test]
    fn c1_ladder_index_zero() {
        let b = c1_breakdown(&defaults(0));
        assert_relative_eq!(b.c3, 0.1625215925760032, epsilon = 1e-14);
        assert!(b.c4.is_none());
        assert_relative_eq!(b.c1, 0.1625215925760032, epsilon = 1e-14);
    }

    #[test]
    fn c1_ladder_index_one() {
        let b = c1_breakdown(&defaults(1));
        assert_relative_eq!(b.c4_double_prime.unwrap(), c_a() / 9.0, epsilon = 1e-14);
        assert_relative_eq!(b.c1, 0.03611590946133405, epsilon = 1e-14);
        assert!(b.c4_prime.unwrap() > b.c4_double_prime.unwrap());
    }

    #[test]
    fn c1_never_exceeds_half_the_floor() {
        for i in 0..6 {
            for &a1 in &[1.0, 1.5, 4.0] {
                let mut p = defaults(i);
                p.a1 = a1;
                assert!(c1(&p) <= c_a() / 2.0 + 1e-15);
            }
        }
    }

    #[test]
    fn high_genus_coefficient() {
        assert_relative_eq!(big_c(&defaults(0)), 0.01688606958765193, epsilon = 1e-14);
        assert!(big_c(&defaults(0)) < c_a() / 2.0);
        assert_relative_eq!(c_hat_s(&defaults(0)), 1.0 + 4.0 * PI, epsilon = 1e-14);
    }

    #[test]
    fn ball_area_closed_form() {
        assert_relative_eq!(
            hyperbolic_ball_area(1.0, -1.0).unwrap(),
            3.412276265284902,
            epsilon = 1e-14
        );
        assert!(hyperbolic_ball_area(1.0, 0.0).is_err());
        assert!(hyperbolic_ball_area(-1.0, -1.0).is_err());
    }

    #[test]
    fn genus_threshold_values() {
        assert_eq!(g_threshold(&defaults(0)), 0);
        assert_eq!(g_threshold(&defaults(1)), 77);
        // The combinatorial branch binds for small h.
        assert!(g_threshold(&defaults(2)) >= 21);
    }

    #[test]
    fn stability_radius_values() {
        assert_relative_eq!(
            stability_radius(1.0).unwrap(),
            3.6275987284684357,
            epsilon = 1e-14
        );
        assert!(stability_radius(0.0).is_err());
        let mut last = f64::INFINITY;
        for i in 1..=20 {
            let v = stability_radius(i as f64 * 0.3).unwrap();
            assert!(v < last);
            last = v;
        }
    }

    #[test]
    fn a2_requires_scalar_floor_and_shrinks_in_c() {
        assert!(a2(&defaults(1)).is_err());
        let mut last = f64::INFINITY;
        for i in 1..=20 {
            let p = defaults(1).with_scalar_floor(0.2 * i as f64);
            let v = a2(&p).unwrap();
            assert!(v <= last);
            last = v;
        }
    }

    #[test]
    fn h_tilde_modes() {
        let p0 = defaults(0);
        assert_relative_eq!(
            h_tilde(&p0, 1.0).unwrap(),
            hyperbolic_ball_area(1.0, k1(&p0, K1Mode::Stable)).unwrap()
        );
        let p1 = defaults(1);
        let comparison = hyperbolic_ball_area(1.0, -1.5).unwrap();
        let ht = h_tilde(&p1, 1.0).unwrap();
        assert!(ht >= comparison);
        assert_relative_eq!(h_small(&p1), 80.67824117352907, epsilon = 1e-10);
    }
}
