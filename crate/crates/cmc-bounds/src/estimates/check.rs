//! Report assembly: evaluate the constants ladder and every applicable
//! inequality for a parameter set, optionally auditing an observed surface.

use super::bounds::{
    area_lower_bound, area_lower_bound_high_genus, ball_area_upper, ball_area_upper_any,
    compact_case_bounds, diameter_lower_bound, DiameterMode,
};
use super::constants::{
    a2, a3, big_c, c1_breakdown, c_a, c_hat_s, g_threshold, h_small, k1, stability_radius,
    K1Mode,
};
use super::params::{GeometryParams, SurfaceSummary};
use super::report::{BoundsReport, CheckStatus, ConstantEntry, InequalityEntry};
use crate::{Error, Result};
use std::f64::consts::PI;

fn constant(name: &str, value: f64, definition: &str) -> ConstantEntry {
    ConstantEntry {
        name: name.into(),
        value,
        definition: definition.into(),
    }
}

struct EntryBuilder<'a> {
    observed: Option<&'a SurfaceSummary>,
    entries: Vec<InequalityEntry>,
}

enum Sense {
    /// Bound must stay below the observation: `observed >= bound`.
    Floor,
    /// Strict floor: `observed > bound`.
    StrictFloor,
    /// Bound must stay above the observation: `observed <= bound`.
    Ceiling,
}

impl<'a> EntryBuilder<'a> {
    fn push(
        &mut self,
        name: &str,
        definition: &str,
        bound: f64,
        sense: Sense,
        observation: Option<f64>,
        applicable: std::result::Result<(), &str>,
    ) {
        let (status, observed, note) = match applicable {
            Err(why) => (CheckStatus::NotChecked, None, Some(why.to_string())),
            Ok(()) => match observation {
                None => (CheckStatus::NotChecked, None, None),
                Some(value) => {
                    let ok = match sense {
                        Sense::Floor => value >= bound,
                        Sense::StrictFloor => value > bound,
                        Sense::Ceiling => value <= bound,
                    };
                    let status = if ok {
                        CheckStatus::Satisfied
                    } else {
                        CheckStatus::Violated
                    };
                    (status, Some(value), None)
                }
            },
        };
        self.entries.push(InequalityEntry {
            name: name.into(),
            definition: definition.into(),
            bound,
            observed,
            status,
            note,
        });
    }

    fn push_vacuous(&mut self, name: &str, definition: &str, bound: f64, note: &str) {
        self.entries.push(InequalityEntry {
            name: name.into(),
            definition: definition.into(),
            bound,
            observed: None,
            status: CheckStatus::Vacuous,
            note: Some(note.to_string()),
        });
    }
}

/// Evaluates every constant and inequality for `params` at genus `genus`.
/// With `observed` present the inequalities get verdicts; otherwise they
/// are reported as values only.
pub fn bounds_report(
    params: &GeometryParams,
    genus: u64,
    observed: Option<&SurfaceSummary>,
) -> Result<BoundsReport> {
    params.validate()?;
    if let Some(summary) = observed {
        summary.validate()?;
    }
    let lambda = params.lambda();
    let ladder = c1_breakdown(params);
    let threshold = g_threshold(params);

    let mut constants = vec![
        constant("lambda", lambda, "max(1, 1/r0, sqrt(K0), H0)"),
        constant("C_A", c_a(), "pi (pi/4)^2 exp(-pi/2 - 1 + pi/4)"),
        constant("K1_stable", k1(params, K1Mode::Stable), "-1 - Cs^2/2"),
        constant(
            "K1_concentration",
            k1(params, K1Mode::Concentrated),
            "-1 - A1^2/2",
        ),
        constant("A3", a3(params), "-4 K1_concentration"),
        constant("C3", ladder.c3, "min(2 pi / (3 |K1_concentration|), C_A / 2)"),
    ];
    if let (Some(c4p), Some(c4pp), Some(c4)) =
        (ladder.c4_prime, ladder.c4_double_prime, ladder.c4)
    {
        constants.push(constant("C4_prime", c4p, "pi / |K1_concentration|"));
        constants.push(constant("C4_double_prime", c4pp, "C_A / (12 I - 3)"));
        constants.push(constant("C4", c4, "min(C4_prime, C4_double_prime)"));
    }
    constants.push(constant(
        "C1",
        ladder.c1,
        if params.index_bound == 0 {
            "C3 (index bound 0)"
        } else {
            "min(C3, C4)"
        },
    ));
    constants.push(constant("C", big_c(params), "pi / (3 + 4 Cs + 4 Cs^2)"));
    constants.push(constant("Chat_s", c_hat_s(params), "1 + 2 Cs"));
    constants.push(constant(
        "h",
        h_small(params),
        "I x (concentration ball ceiling at radius 1, normalized scale)",
    ));
    constants.push(constant(
        "G",
        threshold as f64,
        "max(12 I - 3, ceil(2 |K1_concentration| h / pi) - 1); 0 for I = 0",
    ));
    if let Some(c) = params.c {
        constants.push(constant("R_c", stability_radius(c)?, "2 pi / sqrt(3 c)"));
        constants.push(constant(
            "A2",
            a2(params)?,
            "h~(I, 2 (I+1) R_c), normalized scale",
        ));
    }

    let compact = observed.map(|s| s.compact);
    let connected = observed.map(|s| s.connected);
    let mut builder = EntryBuilder {
        observed,
        entries: Vec::new(),
    };

    let area = builder.observed.map(|s| s.area);
    let diameter = builder.observed.map(|s| s.diameter);
    let genus_observed = builder.observed.map(|s| s.genus as f64);
    let index = builder.observed.map(|s| s.index);

    let area_applicable: std::result::Result<(), &str> = match compact {
        Some(false) => Err("vacuous"),
        _ => Ok(()),
    };
    let diameter_applicable: std::result::Result<(), &str> = match (compact, connected) {
        (Some(false), _) => Err("vacuous"),
        (_, Some(false)) => Err("diameter comparisons need a connected surface"),
        _ => Ok(()),
    };

    // Area floors.
    if compact == Some(false) {
        builder.push_vacuous(
            "area floor (universal)",
            "area > C_A / lambda^2",
            c_a() / lambda.powi(2),
            "non-compact surfaces have infinite area",
        );
        builder.push_vacuous(
            "area floor (genus-linear)",
            "area >= C1 (g+1) / lambda^2",
            area_lower_bound(params, genus),
            "non-compact surfaces have infinite area",
        );
    } else {
        builder.push(
            "area floor (universal)",
            "area > C_A / lambda^2",
            c_a() / lambda.powi(2),
            Sense::StrictFloor,
            area,
            area_applicable,
        );
        builder.push(
            "area floor (genus-linear)",
            "area >= C1 (g+1) / lambda^2",
            area_lower_bound(params, genus),
            Sense::Floor,
            area,
            Ok(()),
        );
    }
    if genus >= threshold {
        let bound = area_lower_bound_high_genus(params, genus)?;
        if compact == Some(false) {
            builder.push_vacuous(
                "area floor (high-genus)",
                "area >= C (g+1) / lambda^2 for g >= G",
                bound,
                "non-compact surfaces have infinite area",
            );
        } else {
            builder.push(
                "area floor (high-genus)",
                "area >= C (g+1) / lambda^2 for g >= G",
                bound,
                Sense::Floor,
                area,
                Ok(()),
            );
        }
    } else {
        builder.push(
            "area floor (high-genus)",
            "area >= C (g+1) / lambda^2 for g >= G",
            big_c(params) * (genus as f64 + 1.0) / lambda.powi(2),
            Sense::Floor,
            None,
            Err("genus below the threshold G"),
        );
    }

    // Diameter floors.
    builder.push(
        "diameter floor (universal)",
        "diameter > pi / (4 lambda)",
        PI / (4.0 * lambda),
        Sense::StrictFloor,
        diameter,
        diameter_applicable,
    );
    let stable_applicable = match (diameter_applicable, index) {
        (Err(why), _) => Err(why),
        (Ok(()), Some(0)) | (Ok(()), None) => Ok(()),
        (Ok(()), Some(_)) => Err("applies to stable surfaces (observed index is positive)"),
    };
    builder.push(
        "diameter floor (stable)",
        "diameter >= arccosh(|K1_stable| C1 (g+1) / (2 pi) + 1) / (lambda sqrt(|K1_stable|))",
        diameter_lower_bound(params, genus, DiameterMode::Stable)?,
        Sense::Floor,
        diameter,
        stable_applicable,
    );
    builder.push(
        "diameter floor (flat ambient)",
        "diameter >= arccosh(|K1_concentration| C1 (g+1) / (2 pi) + 1) / (lambda sqrt(|K1_concentration|))",
        diameter_lower_bound(params, genus, DiameterMode::CurvatureZero)?,
        Sense::Floor,
        diameter,
        Err("applies when the ambient space is flat; not derivable from the parameter set"),
    );
    if params.index_bound >= 1 {
        builder.push(
            "diameter floor (concentration)",
            "diameter >= arccosh(C1 (g+1) / (20 I)) / (lambda sqrt(A3)), 0 if the argument is below 1",
            diameter_lower_bound(params, genus, DiameterMode::Concentrated)?,
            Sense::Floor,
            diameter,
            diameter_applicable,
        );
    }

    // Ball ceiling at the observed diameter: a connected compact surface is
    // contained in the ball of radius diameter around any of its points.
    if let (Some(d), Ok(())) = (diameter, diameter_applicable) {
        builder.push(
            "area ceiling at the diameter",
            "area <= h~(I, lambda diameter) / lambda^2",
            ball_area_upper_any(params, d)?,
            Sense::Ceiling,
            area,
            Ok(()),
        );
        if index == Some(0) {
            builder.push(
                "area ceiling at the diameter (stable)",
                "area <= 2 pi (cosh(lambda sqrt(|K1_stable|) diameter) - 1) / (|K1_stable| lambda^2)",
                ball_area_upper(params, d, K1Mode::Stable)?,
                Sense::Ceiling,
                area,
                Ok(()),
            );
        }
    }

    // Compact case under a scalar curvature floor.
    if params.c.is_some() {
        let cc = compact_case_bounds(params)?;
        let compactness_status = match compact {
            None => CheckStatus::NotChecked,
            Some(true) => CheckStatus::Satisfied,
            Some(false) => CheckStatus::Violated,
        };
        builder.entries.push(InequalityEntry {
            name: "compactness under the scalar floor".into(),
            definition: "c > 0 forces every admissible surface to be compact".into(),
            bound: cc.diameter_upper,
            observed: None,
            status: compactness_status,
            note: Some("bound column shows the diameter ceiling".into()),
        });
        builder.push(
            "area ceiling (compact case)",
            "area <= A2 / lambda^2",
            cc.area_upper,
            Sense::Ceiling,
            area,
            area_applicable,
        );
        builder.push(
            "diameter ceiling (compact case)",
            "diameter <= 2 (I+1) R_c / lambda",
            cc.diameter_upper,
            Sense::Ceiling,
            diameter,
            diameter_applicable,
        );
        builder.push(
            "genus ceiling (compact case)",
            "g <= A2 / C1 - 1",
            cc.genus_upper as f64,
            Sense::Ceiling,
            genus_observed,
            Ok(()),
        );
    }

    Ok(BoundsReport {
        constants,
        inequalities: builder.entries,
    })
}

/// Audits an observed surface against every bound its parameters admit.
///
/// Preconditions: the summary must be admissible for the parameters
/// (index within the bound, mean curvature within the ceiling); otherwise
/// the comparison arguments say nothing and this returns an error instead
/// of a misleading report.
pub fn check_surface(summary: &SurfaceSummary, params: &GeometryParams) -> Result<BoundsReport> {
    params.validate()?;
    summary.validate()?;
    if summary.index > params.index_bound {
        return Err(Error::Precondition(format!(
            "surface index {} exceeds the parameter bound I = {}",
            summary.index, params.index_bound
        )));
    }
    if summary.mean_curvature > params.h0 * (1.0 + 1e-12) {
        return Err(Error::Precondition(format!(
            "surface mean curvature {} exceeds the ceiling H0 = {}",
            summary.mean_curvature, params.h0
        )));
    }
    bounds_report(params, summary.genus, Some(summary))
}
