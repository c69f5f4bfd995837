//! The constants pipeline and the area/diameter bounds it feeds, rendered
//! the same way the `cmc-bounds bounds` subcommand does.
//!
//! Run with `cargo run --example bounds_report`.

use cmc_bounds::estimates::{
    bounds_report, c1, c1_breakdown, check_surface, g_threshold, GeometryParams, SurfaceSummary,
};

fn main() -> cmc_bounds::Result<()> {
    // All bounds are driven by one parameter pack: an index bound I and
    // the ambient regularity data. `new` gives the normalized space where
    // every scale parameter is 1.
    let params = GeometryParams::new(1);
    println!("lambda = {}", params.lambda());

    // The headline constant C1 is a minimum over two branches; the
    // breakdown shows which one binds at this index bound.
    let b = c1_breakdown(&params);
    println!(
        "C1 = {:.12}  (concentration branch {:.12}, counting branch {:.12})",
        c1(&params),
        b.c3,
        b.c4.expect("index bound is positive")
    );

    // High genus unlocks a second area floor once the genus clears a
    // threshold G computed from the same constants.
    for i in [1u64, 2, 5] {
        let p = GeometryParams::new(i);
        println!("I = {i}: genus threshold G = {}", g_threshold(&p));
    }

    // A full report bundles the constants table with every inequality,
    // marking each one satisfied, violated, vacuous or not-checked.
    let report = bounds_report(&params, 2, None)?;
    println!("\n{}", report.render_table());

    // Feeding an observed surface flips the not-checked rows to real
    // verdicts. This one satisfies everything.
    let summary = SurfaceSummary {
        genus: 2,
        area: 18.0,
        diameter: 3.0,
        mean_curvature: 0.9,
        index: 1,
        compact: true,
        connected: true,
    };
    let checked = check_surface(&summary, &params)?;
    println!("violations with an honest surface: {}", checked.violated());

    // A surface claiming less area than the universal floor is flagged.
    let impossible = SurfaceSummary {
        area: 0.05,
        ..summary
    };
    let checked = check_surface(&impossible, &params)?;
    println!("violations with area 0.05:         {}", checked.violated());
    for entry in &checked.inequalities {
        if entry.status == cmc_bounds::estimates::CheckStatus::Violated {
            println!("  violated: {}", entry.name);
        }
    }

    // Reports serialize cleanly for downstream tooling.
    let json = checked.to_json()?;
    println!("\nJSON size: {} bytes", json.len());
    Ok(())
}
