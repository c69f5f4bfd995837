//! Validating a decomposition document: how a surface of small index can
//! distribute its instability across concentration regions, and what a
//! checker can reject.
//!
//! Run with `cargo run --example structure_check`.

use cmc_bounds::estimates::{validate_structure, GeometryParams, RegionData, StructureData};

fn main() -> cmc_bounds::Result<()> {
    // A decomposition document lists the concentration regions of a
    // surface with index at most I: each region carries its own index,
    // boundary count, spinning, genus, orientability, focal radius and
    // total boundary turning.
    let region = RegionData {
        index: 1,
        boundary_components: 2,
        spinning: 2,
        genus: 0,
        orientable: true,
        focal_radius: 0.2,
        total_curvature: 4.0 * std::f64::consts::PI,
    };
    let document = StructureData {
        regions: vec![region.clone()],
        delta: 0.5,
        delta_1: 0.05,
        genus_total: None,
        genus_outside: None,
    };
    let params = GeometryParams::new(2);

    let report = validate_structure(&document, &params)?;
    println!("valid document:");
    println!("{}", report.render_table());

    // Now break the rules: an index-1 region must look like a sphere with
    // either two boundary circles and spinning two, or one boundary circle
    // and spinning three. Claiming five boundary circles breaks that
    // profile and drags the Euler characteristic below its floor too.
    let mut bad_region = region.clone();
    bad_region.boundary_components = 5;
    let bad = StructureData {
        regions: vec![bad_region],
        ..document.clone()
    };
    let report = validate_structure(&bad, &params)?;
    println!("five boundary circles on an index-1 region:");
    for name in report.failed_names() {
        println!("  failed: {name}");
    }

    // Break a single budget instead: a region of index share 2 may spin at
    // most 3*2 - 1 = 5 times. Claim six, with the boundary turning kept
    // consistent so only the spinning ceiling trips.
    let spinning_heavy = StructureData {
        regions: vec![RegionData {
            index: 2,
            boundary_components: 1,
            spinning: 6,
            genus: 0,
            orientable: true,
            focal_radius: 0.2,
            total_curvature: 12.0 * std::f64::consts::PI,
        }],
        ..document.clone()
    };
    let report = validate_structure(&spinning_heavy, &params)?;
    println!("\nspinning 6 on an index-2 region:");
    for name in report.failed_names() {
        println!("  failed: {name}");
    }

    // Documents round-trip through TOML via the config layer, so the same
    // validation runs from `cmc-bounds structure-check document.toml`.
    Ok(())
}
