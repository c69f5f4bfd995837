//! Scale normalization: every bound is proved in a normalized space and
//! transported to ambient units by lambda = max(1, 1/r0, sqrt(K0), H0).
//! Checking a raw surface against raw parameters and checking its
//! normalized version against normalized parameters must agree.
//!
//! Run with `cargo run --example rescaling`.

use cmc_bounds::estimates::{
    area_lower_bound, check_surface, rescale_summary, GeometryParams, SurfaceSummary,
};

fn main() -> cmc_bounds::Result<()> {
    // A rough ambient space: small injectivity radius, curvature up to 3,
    // mean curvature allowed up to 1.9. The binding constraint is
    // 1/r0 = 2.5, so lambda = 2.5.
    let mut params = GeometryParams::new(1);
    params.r0 = 0.4;
    params.k0 = 3.0;
    params.h0 = 1.9;
    let lam = params.lambda();
    println!("lambda = {lam}");

    // A surface measured in the same ambient units.
    let summary = SurfaceSummary {
        genus: 1,
        area: 7.4,
        diameter: 2.3,
        mean_curvature: 0.8,
        index: 1,
        compact: true,
        connected: true,
    };

    // Normalizing multiplies areas by lambda^2 and lengths by lambda and
    // divides curvatures by lambda; topology is untouched. The normalized
    // surface lives in the normalized space, where every parameter is 1.
    let normalized_summary = rescale_summary(&summary, lam);
    let normalized_params = GeometryParams::new(params.index_bound);
    println!(
        "ambient:    area {:>8.4}, diameter {:>7.4}, |H| {:.4}",
        summary.area, summary.diameter, summary.mean_curvature
    );
    println!(
        "normalized: area {:>8.4}, diameter {:>7.4}, |H| {:.4}",
        normalized_summary.area, normalized_summary.diameter, normalized_summary.mean_curvature
    );

    // Same verdicts either way: the bounds carry the inverse powers of
    // lambda, so observation and bound move together.
    let raw = check_surface(&summary, &params)?;
    let norm = check_surface(&normalized_summary, &normalized_params)?;
    println!("\nverdict comparison (ambient / normalized):");
    let mut mismatches = 0;
    for (b, a) in raw.inequalities.iter().zip(norm.inequalities.iter()) {
        let tag = if b.status == a.status {
            ""
        } else {
            mismatches += 1;
            "  <-- MISMATCH"
        };
        println!("  {:<34} {:?} / {:?}{tag}", b.name, b.status, a.status);
    }
    println!("mismatches: {mismatches}");

    // The mechanism in one line: the ambient floor is the normalized
    // floor divided by lambda^2.
    let ambient_floor = area_lower_bound(&params, summary.genus);
    let normalized_floor = area_lower_bound(&normalized_params, summary.genus);
    println!(
        "\narea floor: ambient {:.9} = normalized {:.9} / lambda^2 (ratio x lambda^2 = {:.9})",
        ambient_floor,
        normalized_floor,
        ambient_floor / normalized_floor * lam * lam
    );
    Ok(())
}
