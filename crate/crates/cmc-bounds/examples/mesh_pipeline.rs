//! From a raw triangle mesh to a checked surface summary: curvature fit,
//! intrinsic diameter, topology, and the bounds verdict.
//!
//! Run with `cargo run --example mesh_pipeline --release`.

use cmc_bounds::estimates::{check_surface, GeometryParams};
use cmc_bounds::mesh::generators::icosphere;
use cmc_bounds::mesh::{
    analyze_mesh, extrinsic_diameter, intrinsic_diameter, mean_curvature_statistics,
    vertex_curvatures,
};

fn main() -> cmc_bounds::Result<()> {
    // A subdivided icosahedron projected to the unit sphere: the cleanest
    // example of a constant mean curvature surface (|H| = 1, index 1).
    let mesh = icosphere(3)?;
    println!(
        "icosphere level 3: {} vertices, {} faces, euler characteristic {}",
        mesh.vertices().len(),
        mesh.faces().len(),
        mesh.euler_characteristic()
    );

    // Per-vertex curvature comes from a weighted polynomial fit of the
    // local neighborhood in a tangent frame. On the unit sphere the mean
    // curvature is -1 with outward normals (our winding convention).
    let curvatures = vertex_curvatures(&mesh)?;
    let (mean_abs_h, spread) = mean_curvature_statistics(&curvatures);
    println!("mean |H| = {mean_abs_h:.6}, relative spread = {spread:.2e}");
    let v0 = &curvatures[0];
    println!(
        "vertex 0: H = {:+.6}, K = {:+.6}, |A|^2 = {:.6}",
        v0.mean,
        v0.gauss,
        v0.shape_norm_sq()
    );

    // Total angle defect is a purely combinatorial Gauss-Bonnet check:
    // it equals 2 pi chi exactly, independent of mesh quality.
    println!(
        "total angle defect = {:.12} (2 pi chi = {:.12})",
        mesh.total_angle_defect(),
        2.0 * std::f64::consts::PI * mesh.euler_characteristic() as f64
    );

    // Intrinsic diameter: geodesic distances along the surface, measured
    // on a refined edge-and-chord graph. For the unit sphere it converges
    // to pi from below as the lattice refines.
    let d_in = intrinsic_diameter(&mesh)?;
    let d_ex = extrinsic_diameter(&mesh);
    println!("intrinsic diameter = {d_in:.6} (pi = {:.6})", std::f64::consts::PI);
    println!("extrinsic diameter = {d_ex:.6}");

    // `analyze_mesh` bundles all of the above plus the stability spectrum
    // into one summary ready for the bounds checker.
    let analysis = analyze_mesh(&mesh)?;
    println!("\n{}", analysis.render_table());

    // The sphere has mean curvature slightly above or below 1 depending
    // on the discretization; state a ceiling with a little headroom.
    let mut params = GeometryParams::new(analysis.summary.index);
    params.h0 = 1.1;
    let report = check_surface(&analysis.summary, &params)?;
    println!("{}", report.render_table());
    println!("any violations: {}", report.violated());
    Ok(())
}
