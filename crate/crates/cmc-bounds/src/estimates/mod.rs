//! Constants pipeline, area/diameter bounds, surface checking and the
//! structure validator.
//!
//! Everything here is parameterized by [`GeometryParams`]: an index bound
//! `I` plus ambient regularity data (injectivity radius floor `r0`,
//! sectional curvature ceiling `K0`, mean curvature ceiling `H0`), the
//! curve-curvature constants `Cs` and `A1`, and optionally a scalar
//! curvature floor `c` that activates the compact-case bounds. The scale
//! factor `lambda = max(1, 1/r0, sqrt(K0), H0)` converts every bound
//! between the normalized space (all parameters 1) and ambient units:
//! areas carry `1/lambda^2`, lengths `1/lambda`.

mod bounds;
mod check;
mod constants;
mod params;
mod report;
mod structure;

pub use bounds::{
    annulus_complement_area_upper, area_lower_bound, area_lower_bound_high_genus,
    ball_area_upper, ball_area_upper_any, ball_area_upper_concentrated, compact_case_bounds,
    diameter_lower_bound, CompactCaseBounds, DiameterMode,
};
pub use check::{bounds_report, check_surface};
pub use constants::{
    a2, a3, ball_area_lower, big_c, c1, c1_breakdown, c_a, c_hat_s, g_threshold, h_small, h_tilde,
    hyperbolic_ball_area, k1, stability_radius, C1Breakdown, K1Mode,
};
pub use params::{rescale_summary, GeometryParams, SurfaceSummary};
pub use report::{BoundsReport, CheckStatus, ConstantEntry, InequalityEntry};
pub use structure::{
    validate_structure, RegionData, StructureCheck, StructureData, StructureReport, TAU,
};
