//! One-call mesh analysis: geometry, topology, curvature, and spectrum,
//! condensed into the summary shape the inequality checker consumes.

use super::curvature::{mean_curvature_statistics, vertex_curvatures};
use super::diameter::{extrinsic_diameter, intrinsic_diameter};
use super::spectrum::{jacobi_spectrum, JacobiSpectrum, SpectrumOptions};
use super::surface::TriangulatedSurface;
use crate::estimates::SurfaceSummary;
use crate::Result;
use std::fmt::Write as _;

/// Relative spread of |H| below which a mesh is accepted as a plausible
/// constant-mean-curvature sample.
pub const CMC_SPREAD_TOLERANCE: f64 = 0.02;

/// Everything the pipeline measures on a mesh.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct MeshAnalysis {
    /// Condensed form handed to the inequality checker. A mesh with
    /// boundary is reported non-compact: it samples a window of a larger
    /// surface, so closed-surface comparisons must not apply.
    pub summary: SurfaceSummary,
    pub spectrum: JacobiSpectrum,
    /// Mean of |H| over vertices.
    pub mean_curvature: f64,
    /// Coefficient of variation of |H|; small means plausibly constant.
    pub curvature_spread: f64,
    /// Whether `curvature_spread` clears [`CMC_SPREAD_TOLERANCE`].
    pub constant_mean_curvature: bool,
    /// Graph-based intrinsic diameter; absent when disconnected.
    pub intrinsic_diameter: Option<f64>,
    pub extrinsic_diameter: f64,
    pub area: f64,
    pub euler_characteristic: i64,
    pub total_angle_defect: f64,
    pub vertex_count: usize,
    pub face_count: usize,
    pub boundary_edge_count: usize,
    pub component_count: usize,
    pub max_edge_length: f64,
}

/// Full analysis with default spectrum settings (natural boundary).
pub fn analyze_mesh(mesh: &TriangulatedSurface) -> Result<MeshAnalysis> {
    analyze_mesh_with(mesh, &SpectrumOptions::default())
}

/// Full analysis with explicit spectrum settings.
pub fn analyze_mesh_with(
    mesh: &TriangulatedSurface,
    spectrum_options: &SpectrumOptions,
) -> Result<MeshAnalysis> {
    let field = vertex_curvatures(mesh)?;
    let (mean_h, spread) = mean_curvature_statistics(&field);
    let spectrum = jacobi_spectrum(mesh, spectrum_options)?;
    let intrinsic = if mesh.is_connected() {
        Some(intrinsic_diameter(mesh)?)
    } else {
        None
    };
    let extrinsic = extrinsic_diameter(mesh);
    let compact = mesh.is_closed();
    let genus = if compact && mesh.is_connected() {
        mesh.genus()?
    } else {
        0
    };
    let summary = SurfaceSummary {
        genus,
        area: mesh.area(),
        // The intrinsic estimate when available; chord diameter otherwise.
        diameter: intrinsic.unwrap_or(extrinsic),
        mean_curvature: mean_h,
        index: spectrum.index as u64,
        compact,
        connected: mesh.is_connected(),
    };
    summary.validate()?;
    Ok(MeshAnalysis {
        summary,
        mean_curvature: mean_h,
        curvature_spread: spread,
        constant_mean_curvature: spread <= CMC_SPREAD_TOLERANCE,
        intrinsic_diameter: intrinsic,
        extrinsic_diameter: extrinsic,
        area: mesh.area(),
        euler_characteristic: mesh.euler_characteristic(),
        total_angle_defect: mesh.total_angle_defect(),
        vertex_count: mesh.vertices().len(),
        face_count: mesh.faces().len(),
        boundary_edge_count: mesh.boundary_edges().len(),
        component_count: mesh.component_count(),
        spectrum,
        max_edge_length: mesh.max_edge_length(),
    })
}

impl MeshAnalysis {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("mesh analysis serializes")
    }

    /// Plain-text report.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let mut row = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<28} {v}");
        };
        row("vertices", format!("{}", self.vertex_count));
        row("faces", format!("{}", self.face_count));
        row("components", format!("{}", self.component_count));
        row("boundary edges", format!("{}", self.boundary_edge_count));
        row("euler characteristic", format!("{}", self.euler_characteristic));
        if self.summary.compact && self.summary.connected {
            row("genus", format!("{}", self.summary.genus));
        }
        row("area", format!("{:.9}", self.area));
        row("max edge length", format!("{:.9}", self.max_edge_length));
        row("total angle defect", format!("{:.9}", self.total_angle_defect));
        match self.intrinsic_diameter {
            Some(d) => row("intrinsic diameter", format!("{d:.9}")),
            None => row("intrinsic diameter", "n/a (disconnected)".to_string()),
        }
        row("extrinsic diameter", format!("{:.9}", self.extrinsic_diameter));
        row("mean |H|", format!("{:.9}", self.mean_curvature));
        row(
            "|H| spread",
            format!(
                "{:.4} ({})",
                self.curvature_spread,
                if self.constant_mean_curvature {
                    "plausibly constant"
                } else {
                    "not constant"
                }
            ),
        );
        row("stability index", format!("{}", self.spectrum.index));
        row("nullity", format!("{}", self.spectrum.nullity));
        row("zero band", format!("{:.3e}", self.spectrum.zero_band));
        let eigs: Vec<String> = self
            .spectrum
            .eigenvalues
            .iter()
            .map(|e| format!("{e:.6}"))
            .collect();
        row("low spectrum", eigs.join(", "));
        out
    }
}
