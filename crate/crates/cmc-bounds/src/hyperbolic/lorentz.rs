//! Lorentz 3-space primitives: vectors, hyperboloid points, tangent
//! vectors, geodesics and parallel transport.
//!
//! The bilinear form is `<u,v> = u1*v1 + u2*v2 - u3*v3`. The model surface
//! is the upper sheet `<x,x> = -1, x3 > 0`; its tangent plane at `x` is the
//! Lorentz-orthogonal complement of `x`, on which the form is positive
//! definite.

use crate::{Error, Result};
use std::ops::{Add, Mul, Neg, Sub};

/// Vector in Lorentz 3-space.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LorentzVector {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl LorentzVector {
    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        LorentzVector { x1, x2, x3 }
    }

    /// Lorentz inner product `u1*v1 + u2*v2 - u3*v3`.
    pub fn lorentz_dot(&self, other: &LorentzVector) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2 - self.x3 * other.x3
    }

    /// `<v,v>`, positive for spacelike vectors.
    pub fn lorentz_norm_sq(&self) -> f64 {
        self.lorentz_dot(self)
    }

    /// Euclidean magnitude, used only for tolerance scaling.
    pub fn euclidean_norm(&self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    /// Lorentz cross product: `<a x b, w> = det(a, b, w)` for all `w`.
    ///
    /// For a hyperboloid point `p` and a unit tangent `u` at `p`, `p x u`
    /// is the unit tangent obtained by rotating `u` a quarter turn in the
    /// tangent plane; this fixes the orientation used for curve normals
    /// throughout the crate.
    pub fn lorentz_cross(&self, other: &LorentzVector) -> LorentzVector {
        LorentzVector {
            x1: self.x2 * other.x3 - self.x3 * other.x2,
            x2: self.x3 * other.x1 - self.x1 * other.x3,
            x3: -(self.x1 * other.x2 - self.x2 * other.x1),
        }
    }
}

impl Add for LorentzVector {
    type Output = LorentzVector;
    fn add(self, rhs: LorentzVector) -> LorentzVector {
        LorentzVector::new(self.x1 + rhs.x1, self.x2 + rhs.x2, self.x3 + rhs.x3)
    }
}

impl Sub for LorentzVector {
    type Output = LorentzVector;
    fn sub(self, rhs: LorentzVector) -> LorentzVector {
        LorentzVector::new(self.x1 - rhs.x1, self.x2 - rhs.x2, self.x3 - rhs.x3)
    }
}

impl Mul<f64> for LorentzVector {
    type Output = LorentzVector;
    fn mul(self, rhs: f64) -> LorentzVector {
        LorentzVector::new(self.x1 * rhs, self.x2 * rhs, self.x3 * rhs)
    }
}

impl Neg for LorentzVector {
    type Output = LorentzVector;
    fn neg(self) -> LorentzVector {
        LorentzVector::new(-self.x1, -self.x2, -self.x3)
    }
}

/// Point on the upper hyperboloid sheet.
///
/// The constraint `<x,x> = -1` is checked with tolerance `1e-12 * (1 + x3^2)`;
/// the quadratic scaling accounts for the cancellation inherent in evaluating
/// `x1^2 + x2^2 - x3^2` far from the vertex of the sheet.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct HyperbolicPoint {
    position: LorentzVector,
}

const POINT_TOL: f64 = 1e-12;

impl HyperbolicPoint {
    pub fn new(position: LorentzVector) -> Result<Self> {
        if position.x3 <= 0.0 {
            return Err(Error::domain(format!(
                "hyperboloid point must lie on the upper sheet, got x3 = {}",
                position.x3
            )));
        }
        let residual = position.lorentz_norm_sq() + 1.0;
        let scale = 1.0 + position.x3 * position.x3;
        if residual.abs() > POINT_TOL * scale {
            return Err(Error::domain(format!(
                "point is off the hyperboloid: <x,x> = {}",
                position.lorentz_norm_sq()
            )));
        }
        Ok(HyperbolicPoint { position })
    }

    /// Vertex of the sheet, `(0, 0, 1)`.
    pub fn origin() -> Self {
        HyperbolicPoint {
            position: LorentzVector::new(0.0, 0.0, 1.0),
        }
    }

    pub fn position(&self) -> LorentzVector {
        self.position
    }

    /// Rescales a timelike upper-sheet vector onto the hyperboloid.
    /// Keeps points constructed from exact formulas on the constraint
    /// surface regardless of accumulated rounding.
    pub(crate) fn renormalized(v: LorentzVector) -> Result<Self> {
        let q = -v.lorentz_norm_sq();
        if q <= 0.0 || v.x3 <= 0.0 {
            return Err(Error::domain(
                "cannot project a non-timelike or lower-sheet vector to the hyperboloid",
            ));
        }
        let inv = 1.0 / q.sqrt();
        HyperbolicPoint::new(v * inv)
    }

    /// Geodesic distance `arccosh(-<p,q>)`.
    pub fn distance(&self, other: &HyperbolicPoint) -> f64 {
        // The difference of two points on the sheet is spacelike with
        // |p - q|^2 = 2 (cosh d - 1) = 4 sinh^2(d/2), so
        // d = 2 asinh(|p - q| / 2). Unlike acosh(-<p, q>), this keeps full
        // absolute precision for nearby points (no cancellation under the
        // square root). Rounding can still push the norm square a hair
        // below zero for identical points.
        let diff = self.position - other.position;
        let half = 0.5 * diff.lorentz_norm_sq().max(0.0).sqrt();
        2.0 * half.asinh()
    }
}

/// Tangent vector: a spacelike vector Lorentz-orthogonal to its base point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangentVector {
    base: HyperbolicPoint,
    direction: LorentzVector,
}

impl TangentVector {
    pub fn new(base: HyperbolicPoint, direction: LorentzVector) -> Result<Self> {
        let pairing = base.position().lorentz_dot(&direction);
        let scale = base.position().euclidean_norm() * direction.euclidean_norm();
        if pairing.abs() > 1e-12 * scale.max(1.0) {
            return Err(Error::domain(format!(
                "direction is not tangent at the base point: <x,v> = {pairing}"
            )));
        }
        Ok(TangentVector { base, direction })
    }

    pub fn base(&self) -> HyperbolicPoint {
        self.base
    }

    pub fn direction(&self) -> LorentzVector {
        self.direction
    }

    /// Length `sqrt(<v,v>)`; the form is positive definite on tangent planes.
    pub fn norm(&self) -> f64 {
        self.direction.lorentz_norm_sq().max(0.0).sqrt()
    }
}

/// Point at arc parameter `t` on the geodesic through `x` with initial
/// velocity `v`: `cosh(|v| t) x + sinh(|v| t) v / |v|`.
///
/// `v` must be a nonzero (spacelike) tangent vector at `x`. The result is
/// renormalized onto the constraint surface before being returned.
pub fn geodesic(x: &HyperbolicPoint, v: &LorentzVector, t: f64) -> Result<HyperbolicPoint> {
    let tangent = TangentVector::new(*x, *v)?;
    let speed_sq = v.lorentz_norm_sq();
    if speed_sq <= 0.0 {
        return Err(Error::domain(
            "geodesic direction must be spacelike and nonzero",
        ));
    }
    let speed = tangent.norm();
    let u = speed * t;
    let pos = x.position() * u.cosh() + *v * (u.sinh() / speed);
    HyperbolicPoint::renormalized(pos)
}

/// Velocity of the geodesic of [`geodesic`] at parameter `t`.
fn geodesic_velocity(x: &HyperbolicPoint, v: &LorentzVector, t: f64) -> LorentzVector {
    let speed = v.lorentz_norm_sq().sqrt();
    let u = speed * t;
    x.position() * (speed * u.sinh()) + *v * u.cosh()
}

/// Parallel transport of the tangent vector `w` from `x` to the point at
/// parameter `t` along the geodesic with initial velocity `v`:
///
/// `w + <v,w>/<v,v> * (gamma'(t) - v)`.
///
/// Transport is a linear isometry between tangent planes; norms and pairwise
/// inner products are preserved.
pub fn parallel_transport(
    x: &HyperbolicPoint,
    v: &LorentzVector,
    w: &LorentzVector,
    t: f64,
) -> Result<TangentVector> {
    let _ = TangentVector::new(*x, *v)?;
    let _ = TangentVector::new(*x, *w)?;
    let speed_sq = v.lorentz_norm_sq();
    if speed_sq <= 0.0 {
        return Err(Error::domain(
            "transport direction must be spacelike and nonzero",
        ));
    }
    let target = geodesic(x, v, t)?;
    let coeff = v.lorentz_dot(w) / speed_sq;
    let moved = *w + (geodesic_velocity(x, v, t) - *v) * coeff;
    // Clean residual normal component before revalidating tangency.
    let projected = moved + target.position() * target.position().lorentz_dot(&moved);
    TangentVector::new(target, projected)
}
