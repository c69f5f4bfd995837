//! Equidistant collars around curves in the hyperbolic plane: closed-form
//! areas, the curvature of the pushed-off curve, and the Gauss-Bonnet
//! closure that ties both together.
//!
//! Run with `cargo run --example collar_areas`.

use cmc_bounds::hyperbolic::{
    collar_area, equidistant_curvature, equidistant_total_curvature, BoundaryCurve,
};

fn main() -> cmc_bounds::Result<()> {
    // A closed curve is known through samples of its signed geodesic
    // curvature at increasing arc length. Negative curvature means the
    // curve bends away from the side we push into.
    let curve = BoundaryCurve::from_fn(5.0, 64, |s| -1.5 - 0.4 * (2.0 * s).sin())?;
    println!(
        "curve: length {:.3}, total curvature integral {:+.6}",
        curve.total_length(),
        curve.total_curvature_integral()
    );

    // Pushing the curve outward a distance r sweeps a collar. In a space
    // with curvature floor k1 < 0 the swept area has a closed form built
    // from cosh and sinh of r sqrt(-k1).
    println!("\ncollar areas at k1 = -1 and k1 = -6:");
    for r in [0.25, 0.5, 1.0, 2.0] {
        let a1 = collar_area(&curve, r, -1.0)?;
        let a6 = collar_area(&curve, r, -6.0)?;
        println!("  r = {r:<5} area(k1=-1) = {a1:>12.6}   area(k1=-6) = {a6:>12.6}");
    }

    // The pushed-off curve at distance r has its own geodesic curvature.
    // For a circle of curvature kappa the map is a Mobius-like fraction in
    // tanh r; the family interpolates between the curve (r = 0) and a
    // horocycle-like limit.
    println!("\nequidistant curvature of a kappa = -2 circle:");
    for r in [0.0, 0.5, 1.0, 2.0, 4.0] {
        let k = equidistant_curvature(-2.0, r)?;
        println!("  r = {r:<4} kappa_r = {k:+.9}");
    }

    // Gauss-Bonnet closes the loop: the collar between the curve and its
    // push-off is an annulus (chi = 0) in curvature -1, so its area must
    // exactly account for how much more the far boundary turns:
    //   turning(0) - turning(r) = area.
    let r = 0.8;
    let area = collar_area(&curve, r, -1.0)?;
    let turning_near = curve.total_curvature_integral();
    let turning_far = equidistant_total_curvature(&curve, r)?;
    let residual = turning_near - turning_far - area;
    println!("\nGauss-Bonnet closure at r = {r}:");
    println!("  turning at r       {turning_far:+.9}");
    println!("  turning at 0       {turning_near:+.9}");
    println!("  collar area        {area:+.9}");
    println!("  residual           {residual:+.3e}");
    Ok(())
}
