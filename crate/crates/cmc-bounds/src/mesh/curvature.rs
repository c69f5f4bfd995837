//! Pointwise curvature recovery from a triangulation.
//!
//! Each vertex gets a local polynomial fit: neighbors are expressed in a
//! tangent frame aligned with the vertex normal, a least-squares graph
//! `z = p(x, y)` is fitted over the one- and two-ring, and the shape
//! operator is read off the first- and second-order coefficients. The
//! polynomial degree adapts to how many neighbors are available (quartic
//! when the stencil is rich enough, falling back to cubic or quadratic);
//! the higher-degree terms are never used directly, they only stop the
//! neighborhood's higher-order shape from contaminating the second-order
//! coefficients.
//!
//! Signs follow the face winding: the normal is the area-weighted average
//! of incident face normals, and curvatures are measured against it. A
//! unit sphere wound outward therefore reports mean curvature -1.

use super::surface::TriangulatedSurface;
use crate::{Error, Result};
use nalgebra::{DMatrix, DVector, Matrix2, Unit, Vector3};

/// Shape-operator invariants at one vertex.
#[derive(Debug, Clone, Copy)]
pub struct VertexCurvature {
    /// Mean curvature H = (k1 + k2) / 2, signed against the winding normal.
    pub mean: f64,
    /// Gauss curvature K = k1 * k2.
    pub gauss: f64,
    /// Principal curvatures, larger first.
    pub principal: (f64, f64),
}

impl VertexCurvature {
    /// Squared norm of the second fundamental form, k1^2 + k2^2.
    pub fn shape_norm_sq(&self) -> f64 {
        4.0 * self.mean * self.mean - 2.0 * self.gauss
    }
}

/// Fits curvatures at every vertex. Fails on meshes too coarse to carry a
/// quadratic fit (fewer than six usable neighbors around some vertex even
/// after widening the stencil to three rings).
pub fn vertex_curvatures(mesh: &TriangulatedSurface) -> Result<Vec<VertexCurvature>> {
    let normals = mesh.vertex_normals();
    let neighbors = mesh.vertex_neighbors();
    let mut out = Vec::with_capacity(mesh.vertices().len());
    for (v, normal) in normals.iter().enumerate() {
        let stencil = collect_rings(&neighbors, v, 3);
        out.push(fit_vertex(mesh, normal, v, &stencil)?);
    }
    Ok(out)
}

/// Breadth-first rings around `center`, excluding the center itself.
/// Returns (vertex, ring) pairs out to `max_ring`.
fn collect_rings(neighbors: &[Vec<usize>], center: usize, max_ring: usize) -> Vec<(usize, usize)> {
    let mut seen = std::collections::HashSet::new();
    seen.insert(center);
    let mut frontier = vec![center];
    let mut out = Vec::new();
    for ring in 1..=max_ring {
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in &neighbors[u] {
                if seen.insert(w) {
                    next.push(w);
                    out.push((w, ring));
                }
            }
        }
        frontier = next;
    }
    out
}

fn fit_vertex(
    mesh: &TriangulatedSurface,
    normal: &Vector3<f64>,
    v: usize,
    stencil: &[(usize, usize)],
) -> Result<VertexCurvature> {
    // Tangent frame: pick the coordinate axis least aligned with the normal.
    let n = Unit::new_normalize(*normal);
    let seed = if n.x.abs() <= n.y.abs() && n.x.abs() <= n.z.abs() {
        Vector3::x()
    } else if n.y.abs() <= n.z.abs() {
        Vector3::y()
    } else {
        Vector3::z()
    };
    let t1 = Unit::new_normalize(seed - n.into_inner() * seed.dot(&n));
    let t2 = n.cross(&t1);
    let base = mesh.vertices()[v];
    let coords = |u: usize| {
        let d = mesh.vertices()[u] - base;
        (d.dot(&t1), d.dot(&t2), d.dot(&n))
    };

    // Usable stencil: two rings, widened into the third only when two are
    // thin. A tight stencil keeps the fit's own truncation error small, so
    // the third ring is a fallback, not a default. Widening points must
    // stay graph-like over the tangent plane — on a coarse closed mesh the
    // third ring can wrap toward the horizon, where a height-function fit
    // is meaningless — so they are kept only well inside the 45-degree
    // cone. The margin in the guard matters: symmetric meshes place
    // vertices exactly on the cone, and a knife-edge test there would pick
    // stencils irreproducibly.
    let mut local: Vec<(f64, f64, f64)> = stencil
        .iter()
        .filter(|&&(_, r)| r <= 2)
        .map(|&(u, _)| coords(u))
        .collect();
    if local.len() < 16 {
        for &(u, r) in stencil {
            if r == 3 {
                let (x, y, z) = coords(u);
                if z.abs() <= 0.99 * x.hypot(y) {
                    local.push((x, y, z));
                }
            }
        }
    }
    let mut degree = match local.len() {
        n if n >= 16 => 4,
        n if n >= 11 => 3,
        n if n >= 6 => 2,
        _ => {
            return Err(Error::mesh(format!(
                "vertex {v} has only {} usable neighbors within three rings; \
                 curvature needs at least 6",
                local.len()
            )))
        }
    };
    // Normalize by the mean offset length so the Vandermonde columns are
    // comparable across degrees.
    let scale = local
        .iter()
        .map(|&(x, y, z)| (x * x + y * y + z * z).sqrt())
        .sum::<f64>()
        / local.len() as f64;
    if !(scale > 0.0) {
        return Err(Error::mesh(format!("vertex {v} has a degenerate stencil")));
    }

    // Solve at the chosen degree, dropping a degree whenever the stencil
    // geometry cannot actually support it (nearly dependent columns).
    let (powers, coef) = loop {
        // Monomial exponents (i, j) for x^i y^j, degree 1..=degree, no
        // constant term: the fitted graph passes through the vertex itself.
        let mut powers: Vec<(usize, usize)> = Vec::new();
        for total in 1..=degree {
            for i in (0..=total).rev() {
                powers.push((i, total - i));
            }
        }
        let rows = local.len();
        let cols = powers.len();
        let mut mat = DMatrix::zeros(rows, cols);
        let mut rhs = DVector::zeros(rows);
        for (r, &(x, y, z)) in local.iter().enumerate() {
            let (xs, ys) = (x / scale, y / scale);
            for (c, &(i, j)) in powers.iter().enumerate() {
                mat[(r, c)] = xs.powi(i as i32) * ys.powi(j as i32);
            }
            rhs[r] = z / scale;
        }
        let svd = mat.svd(true, true);
        let sigma_max = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
        let sigma_min = svd
            .singular_values
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        // Backstop for genuinely degenerate stencil geometry; healthy
        // stencils sit far above this (ratios of 1e-2 and up), so ordinary
        // meshes never lose a degree here.
        if sigma_min < 1e-8 * sigma_max && degree > 2 {
            degree -= 1;
            continue;
        }
        let coef = svd
            .solve(&rhs, 1e-12 * sigma_max.max(f64::MIN_POSITIVE))
            .map_err(|e| Error::mesh(format!("curvature fit failed at vertex {v}: {e}")))?;
        break (powers, coef);
    };

    // Coefficient of x^i y^j in original units carries scale^(1 - i - j).
    let coeff = |pi: usize, pj: usize| -> f64 {
        let idx = powers.iter().position(|&(i, j)| i == pi && j == pj).unwrap();
        coef[idx] * scale.powi(1 - (pi + pj) as i32)
    };
    let (d, e) = (coeff(1, 0), coeff(0, 1));
    let (zxx, zxy, zyy) = (2.0 * coeff(2, 0), coeff(1, 1), 2.0 * coeff(0, 2));

    // Weingarten map of the graph z(x, y) at the origin.
    let w = (1.0 + d * d + e * e).sqrt();
    let first = Matrix2::new(1.0 + d * d, d * e, d * e, 1.0 + e * e);
    let second = Matrix2::new(zxx, zxy, zxy, zyy) / w;
    let inv = first
        .try_inverse()
        .ok_or_else(|| Error::mesh(format!("singular metric at vertex {v}")))?;
    let shape = inv * second;
    let mean = 0.5 * shape.trace();
    let gauss = shape.determinant();
    let disc = (mean * mean - gauss).max(0.0).sqrt();
    Ok(VertexCurvature {
        mean,
        gauss,
        principal: (mean + disc, mean - disc),
    })
}

/// Mean of |H| over vertices together with its coefficient of variation;
/// the spread is the constancy diagnostic used to decide whether a mesh
/// plausibly discretizes a constant-mean-curvature surface.
pub fn mean_curvature_statistics(field: &[VertexCurvature]) -> (f64, f64) {
    let n = field.len() as f64;
    let mean = field.iter().map(|c| c.mean.abs()).sum::<f64>() / n;
    let var = field
        .iter()
        .map(|c| (c.mean.abs() - mean).powi(2))
        .sum::<f64>()
        / n;
    let spread = if mean > 0.0 { var.sqrt() / mean } else { var.sqrt() };
    (mean, spread)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::generators::{flat_disk, icosphere, torus_grid};
    use approx::assert_relative_eq;

    #[test]
    fn unit_sphere_has_mean_curvature_minus_one() {
        let s = icosphere(3).unwrap();
        let field = vertex_curvatures(&s).unwrap();
        let (mean_abs, spread) = mean_curvature_statistics(&field);
        assert_relative_eq!(mean_abs, 1.0, max_relative = 5e-3);
        assert!(spread < 0.01, "spread {spread} too wide for a sphere");
        for c in &field {
            assert!(c.mean < 0.0, "outward winding must give negative H");
            assert_relative_eq!(c.gauss, 1.0, max_relative = 0.03);
            assert_relative_eq!(c.shape_norm_sq(), 2.0, max_relative = 0.03);
        }
    }

    #[test]
    fn scaled_sphere_curvature_scales_inversely() {
        let s = icosphere(3).unwrap().scaled(2.0).unwrap();
        let field = vertex_curvatures(&s).unwrap();
        let (mean_abs, _) = mean_curvature_statistics(&field);
        assert_relative_eq!(mean_abs, 0.5, max_relative = 5e-3);
    }

    #[test]
    fn flat_disk_is_curvature_free() {
        let s = flat_disk(6).unwrap();
        let field = vertex_curvatures(&s).unwrap();
        for c in &field {
            assert!(c.mean.abs() < 1e-9, "flat mesh must fit a flat graph");
            assert!(c.gauss.abs() < 1e-9);
            assert!(c.shape_norm_sq() < 1e-9);
        }
    }

    #[test]
    fn torus_matches_the_analytic_shape_operator() {
        let (ring, tube) = (2.0, 0.5);
        let s = torus_grid(ring, tube, 48, 24).unwrap();
        let field = vertex_curvatures(&s).unwrap();
        // Vertex 0 sits on the outer equator (u = 0, v = 0) where, against
        // the outward normal, the curvatures are -1/tube and -1/(ring+tube).
        let c = field[0];
        let k_tube = -1.0 / tube;
        let k_ring = -1.0 / (ring + tube);
        assert_relative_eq!(c.mean, 0.5 * (k_tube + k_ring), max_relative = 0.02);
        assert_relative_eq!(c.gauss, k_tube * k_ring, max_relative = 0.05);
        // The torus is nowhere near constant mean curvature.
        let (_, spread) = mean_curvature_statistics(&field);
        assert!(spread > 0.1, "torus spread {spread} should be far from 0");
    }

    #[test]
    fn too_coarse_meshes_are_refused() {
        use nalgebra::Point3;
        let tetra = TriangulatedSurface::new(
            vec![
                Point3::new(1.0, 1.0, 1.0),
                Point3::new(1.0, -1.0, -1.0),
                Point3::new(-1.0, 1.0, -1.0),
                Point3::new(-1.0, -1.0, 1.0),
            ],
            vec![[0, 2, 1], [0, 1, 3], [0, 3, 2], [1, 2, 3]],
        )
        .unwrap();
        assert!(vertex_curvatures(&tetra).is_err());
    }
}
