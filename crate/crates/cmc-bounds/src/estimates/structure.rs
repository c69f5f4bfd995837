//! Combinatorial validator for curvature-concentration decompositions.
//!
//! A decomposition splits a surface into `k` concentration regions
//! `Delta_1, ..., Delta_k` (disks of small extrinsic radius carrying the
//! index) and a complement with uniformly bounded second fundamental form.
//! Each region reports its index share, topology, boundary spinning and
//! total geodesic curvature; the validator checks the full list of
//! combinatorial constraints such a decomposition must satisfy.
//!
//! Violated *type invariants* (radii out of range, decreasing-radius chain
//! broken, index budget exceeded) are rejected with an error: the data does
//! not describe a decomposition at all. Violated *inequalities* come back
//! as failed [`StructureCheck`] entries with their slack, so a caller can
//! see exactly which constraint a candidate decomposition breaks.

use super::params::GeometryParams;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Curvature-window half-width: per-region deviation of the total geodesic
/// curvature from `2 pi m(i)` is allowed up to `TAU / m(i)`.
pub const TAU: f64 = PI / 10.0;

/// One concentration region of a decomposition.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct RegionData {
    /// Index share `I(Delta_i) >= 1`.
    #[serde(rename = "I")]
    pub index: u64,
    /// Number of boundary components `e(i) >= 1`.
    #[serde(rename = "e")]
    pub boundary_components: u64,
    /// Total spinning `m(i) >= 2` of the boundary multi-graphs.
    #[serde(rename = "m")]
    pub spinning: u64,
    /// Genus `g(Delta_i)`; for non-orientable regions the genus of the
    /// oriented cover (cross-caps minus 1).
    #[serde(rename = "g", default)]
    pub genus: u64,
    #[serde(default = "default_true")]
    pub orientable: bool,
    /// Focal radius `r_F(i)`, in `[delta1, delta/2]`.
    #[serde(rename = "r_F")]
    pub focal_radius: f64,
    /// Total geodesic curvature `kappa(Delta_i)` of the region boundary.
    #[serde(rename = "kappa")]
    pub total_curvature: f64,
}

fn default_true() -> bool {
    true
}

impl RegionData {
    /// Euler characteristic from genus and boundary count. Non-orientable
    /// regions store the oriented-cover genus `g`, so they have `g + 1`
    /// cross-caps and `chi = 2 - (g+1) - e`.
    pub fn euler_characteristic(&self) -> i64 {
        let g = self.genus as i64;
        let e = self.boundary_components as i64;
        if self.orientable {
            2 - 2 * g - e
        } else {
            1 - g - e
        }
    }
}

/// A candidate decomposition: the regions plus the radius scale
/// `0 < delta1 <= delta/2 <= 1/4` they were extracted at.
///
/// `genus_total` / `genus_outside` optionally record the genus of the whole
/// surface and of the complement of the regions; when both are present the
/// genus-outside window is checked as well.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StructureData {
    #[serde(rename = "region", default)]
    pub regions: Vec<RegionData>,
    pub delta: f64,
    #[serde(rename = "delta1")]
    pub delta_1: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus_total: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus_outside: Option<u64>,
}

/// One checked inequality. `region` is the 1-based region number for
/// per-region checks, absent for aggregate ones. `slack` is the margin to
/// the bound (nonnegative iff the check passed); membership checks with no
/// numeric margin leave it empty.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StructureCheck {
    pub name: String,
    pub definition: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<usize>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slack: Option<f64>,
}

/// Outcome of [`validate_structure`]: every inequality that applies to the
/// decomposition, with pass/fail and slack.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StructureReport {
    pub checks: Vec<StructureCheck>,
    pub passed: bool,
}

impl StructureReport {
    /// Names of the failed checks, deduplicated and sorted.
    pub fn failed_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.clone())
            .collect();
        names.sort();
        names.dedup();
        names
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::parse(e.to_string()))
    }

    /// Aligned text table, one line per check.
    pub fn render_table(&self) -> String {
        let name_w = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let mut out = String::new();
        out.push_str(&format!(
            "{:<name_w$}  {:>6}  {:>7}  {:>12}  definition\n",
            "name", "region", "status", "slack"
        ));
        for c in &self.checks {
            let region = c.region.map_or(String::from("-"), |r| r.to_string());
            let slack = c.slack.map_or(String::from("-"), |s| format!("{s:.6}"));
            out.push_str(&format!(
                "{:<name_w$}  {:>6}  {:>7}  {:>12}  {}\n",
                c.name,
                region,
                if c.passed { "ok" } else { "FAILED" },
                slack,
                c.definition
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed { "valid" } else { "INVALID" }
        ));
        out
    }
}

fn invariants(data: &StructureData, params: &GeometryParams) -> Result<()> {
    params.validate()?;
    if !(data.delta_1 > 0.0) {
        return Err(Error::Structure(format!(
            "delta1 must be positive, got {}",
            data.delta_1
        )));
    }
    if !(data.delta_1 <= data.delta / 2.0) {
        return Err(Error::Structure(format!(
            "delta1 = {} must be at most delta/2 = {}",
            data.delta_1,
            data.delta / 2.0
        )));
    }
    if !(data.delta / 2.0 <= 0.25) {
        return Err(Error::Structure(format!(
            "delta/2 = {} must be at most 1/4",
            data.delta / 2.0
        )));
    }
    let mut index_total: u64 = 0;
    for (n, region) in data.regions.iter().enumerate() {
        let label = n + 1;
        if region.index < 1 {
            return Err(Error::Structure(format!(
                "region {label}: index share must be at least 1"
            )));
        }
        if region.boundary_components < 1 {
            return Err(Error::Structure(format!(
                "region {label}: needs at least one boundary component"
            )));
        }
        if region.spinning < 2 {
            return Err(Error::Structure(format!(
                "region {label}: total spinning must be at least 2, got {}",
                region.spinning
            )));
        }
        if !region.focal_radius.is_finite()
            || region.focal_radius < data.delta_1
            || region.focal_radius > data.delta / 2.0
        {
            return Err(Error::Structure(format!(
                "region {label}: focal radius {} outside [{}, {}]",
                region.focal_radius,
                data.delta_1,
                data.delta / 2.0
            )));
        }
        if !region.total_curvature.is_finite() {
            return Err(Error::Structure(format!(
                "region {label}: total curvature must be finite"
            )));
        }
        index_total += region.index;
    }
    for pair in data.regions.windows(2) {
        if !(pair[0].focal_radius > 4.0 * pair[1].focal_radius) {
            return Err(Error::Structure(format!(
                "focal radii must drop by more than a factor 4 between consecutive regions: {} vs {}",
                pair[0].focal_radius, pair[1].focal_radius
            )));
        }
    }
    if index_total > params.index_bound {
        return Err(Error::Structure(format!(
            "region index shares sum to {index_total}, exceeding the bound I = {}",
            params.index_bound
        )));
    }
    match (data.genus_total, data.genus_outside) {
        (Some(_), None) | (None, Some(_)) => {
            return Err(Error::Structure(
                "genus_total and genus_outside must be given together".into(),
            ));
        }
        _ => {}
    }
    Ok(())
}

struct Checks {
    list: Vec<StructureCheck>,
}

impl Checks {
    fn margin(&mut self, name: &str, definition: &str, region: Option<usize>, slack: f64) {
        self.list.push(StructureCheck {
            name: name.into(),
            definition: definition.into(),
            region,
            passed: slack >= 0.0,
            slack: Some(slack),
        });
    }

    fn membership(&mut self, name: &str, definition: &str, region: usize, passed: bool) {
        self.list.push(StructureCheck {
            name: name.into(),
            definition: definition.into(),
            region: Some(region),
            passed,
            slack: None,
        });
    }
}

/// Checks every combinatorial inequality a decomposition must satisfy.
///
/// Type-invariant violations (see [`StructureData`]) are returned as
/// errors; inequality violations come back as failed entries in the
/// report. With `k = 0` regions the aggregate checks hold trivially and
/// the report is a short list of passes.
pub fn validate_structure(
    data: &StructureData,
    params: &GeometryParams,
) -> Result<StructureReport> {
    invariants(data, params)?;
    let mut checks = Checks { list: Vec::new() };
    let k = data.regions.len();
    let big_i = params.index_bound as f64;

    for (n, region) in data.regions.iter().enumerate() {
        let label = n + 1;
        let idx = region.index;
        let e = region.boundary_components;
        let m = region.spinning;
        let g = region.genus;

        if idx == 1 {
            let profile_ok = region.orientable && g == 0 && matches!((e, m), (2, 2) | (1, 3));
            checks.membership(
                "index_one_profile",
                "I(Delta) = 1 forces an orientable genus-0 region with (e, m) in {(2,2), (1,3)}",
                label,
                profile_ok,
            );
        } else {
            checks.margin(
                "spinning_ceiling",
                "m(i) <= 3 I(Delta_i) - 1",
                Some(label),
                (3 * idx - 1) as f64 - m as f64,
            );
            checks.margin(
                "boundary_ceiling",
                "e(i) <= 3 I(Delta_i) - 2",
                Some(label),
                (3 * idx - 2) as f64 - e as f64,
            );
            let (genus_cap, genus_def) = if region.orientable {
                (3 * idx as i64 - 4, "g(Delta_i) <= 3 I(Delta_i) - 4")
            } else {
                (6 * idx as i64 - 8, "g(Delta_i) <= 6 I(Delta_i) - 8 (oriented cover)")
            };
            checks.margin("genus_ceiling", genus_def, Some(label), (genus_cap - g as i64) as f64);
        }

        checks.margin(
            "euler_floor",
            "chi(Delta_i) >= -6 I(Delta_i) + 2 m(i) + e(i)",
            Some(label),
            (region.euler_characteristic() - (-6 * idx as i64 + 2 * m as i64 + e as i64)) as f64,
        );
        checks.margin(
            "curvature_window",
            "|kappa(Delta_i) - 2 pi m(i)| <= tau / m(i)",
            Some(label),
            TAU / m as f64 - (region.total_curvature - 2.0 * PI * m as f64).abs(),
        );
    }

    if k > 0 {
        let s: u64 = data.regions.iter().map(|r| r.spinning).sum();
        let kappa_sum: f64 = data.regions.iter().map(|r| r.total_curvature).sum();
        let chi_sum: i64 = data.regions.iter().map(|r| r.euler_characteristic()).sum();

        checks.margin(
            "curvature_window_total",
            "|sum kappa(Delta_i) - 2 pi S| <= tau k / 2",
            None,
            TAU * k as f64 / 2.0 - (kappa_sum - 2.0 * PI * s as f64).abs(),
        );
        checks.margin(
            "curvature_mass",
            "-2 pi chi(union Delta_i) + sum kappa(Delta_i) > 3 k pi",
            None,
            -2.0 * PI * chi_sum as f64 + kappa_sum - 3.0 * k as f64 * PI,
        );
        checks.margin(
            "total_spinning",
            "S = sum m(i) <= 3 I",
            None,
            3.0 * big_i - s as f64,
        );
        checks.margin(
            "boundary_length_budget",
            "sum (2 pi m(i) + 1) r_F(i) <= (6 pi + 1) I / 4",
            None,
            (6.0 * PI + 1.0) * big_i / 4.0
                - data
                    .regions
                    .iter()
                    .map(|r| (2.0 * PI * r.spinning as f64 + 1.0) * r.focal_radius)
                    .sum::<f64>(),
        );
        checks.margin(
            "region_area_floor",
            "2 pi sum m(i) r_F(i)^2 >= k pi delta1^2",
            None,
            2.0 * PI
                * data
                    .regions
                    .iter()
                    .map(|r| r.spinning as f64 * r.focal_radius.powi(2))
                    .sum::<f64>()
                - k as f64 * PI * data.delta_1.powi(2),
        );
        if let (Some(total), Some(outside)) = (data.genus_total, data.genus_outside) {
            let diff = total as i64 - outside as i64;
            let upper = 3 * params.index_bound as i64 - 2;
            checks.margin(
                "genus_outside_window",
                "0 <= g(M) - g(outside region) <= 3 I - 2",
                None,
                diff.min(upper - diff) as f64,
            );
        }
    }

    let passed = checks.list.iter().all(|c| c.passed);
    Ok(StructureReport {
        checks: checks.list,
        passed,
    })
}
