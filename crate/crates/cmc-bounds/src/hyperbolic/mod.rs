//! Hyperboloid-model kernel for the hyperbolic plane.
//!
//! Points live on the upper sheet of the unit hyperboloid in Lorentz
//! 3-space. The kernel provides exact geodesics and parallel transport,
//! sampled boundary curves with negative geodesic curvature, and the
//! equidistant (parallel-curve) calculus: curvature of pushed curves,
//! Jacobi length-distortion factors, and the area of the collar swept
//! between a curve and its outward equidistant at a given distance.

mod collar;
mod curve;
mod lorentz;

pub use collar::{
    collar_area, equidistant_curvature, equidistant_point, equidistant_total_curvature,
    jacobi_factor,
};
pub use curve::{BoundaryCurve, CurveSample};
pub use lorentz::{geodesic, parallel_transport, HyperbolicPoint, LorentzVector, TangentVector};
