//! The numeric cross-check suite: every closed form in the crate is
//! validated against an independent numerical method before anything
//! downstream trusts it.
//!
//! Run with `cargo run --example oracle_suite`.

use cmc_bounds::hyperbolic::BoundaryCurve;
use cmc_bounds::oracles::run_suite;

fn main() -> cmc_bounds::Result<()> {
    // The suite re-derives each closed form a second way:
    //   - equidistant curvature against a central finite difference of
    //     the distance-r push-off construction,
    //   - collar areas against adaptive quadrature of the Jacobi factor,
    //   - Gauss-Bonnet closure as an internal consistency identity,
    //   - hyperbolic ball areas against the integrated circumference,
    //   - geodesics against a Runge-Kutta integration of the ODE,
    //   - parallel transport against its norm-preservation law.
    // Feed it one extra curve so the collar checks also run on something
    // that is not baked into the defaults.
    let wavy = BoundaryCurve::from_fn(6.0, 96, |s| -2.0 - 0.7 * (1.5 * s).cos())?;
    let suite = run_suite(Some(&wavy))?;

    let widest = suite.cases.iter().map(|c| c.case.len()).max().unwrap_or(0);
    for case in &suite.cases {
        println!(
            "{} {:<w$}  closed {:>17.10e}  oracle {:>17.10e}  |err| {:.3e}",
            if case.passed { "pass" } else { "FAIL" },
            case.case,
            case.closed_form,
            case.oracle,
            case.abs_error,
            w = widest
        );
    }
    println!(
        "\n{} of {} cross-checks passed",
        suite.cases.iter().filter(|c| c.passed).count(),
        suite.cases.len()
    );

    // Each case records the tolerance it was held to; the tightest ones
    // are identities that must cancel to machine precision.
    let tightest = suite
        .cases
        .iter()
        .min_by(|a, b| a.tolerance.total_cmp(&b.tolerance))
        .expect("suite is never empty");
    println!(
        "tightest tolerance: {} at {:.1e}",
        tightest.case, tightest.tolerance
    );
    Ok(())
}
