//! Triangulated surfaces: construction, file formats, reference shapes,
//! and the measurements (curvature, diameter, stability spectrum) that
//! feed the inequality checker.

mod curvature;
mod diameter;
pub mod generators;
mod io;
mod spectrum;
mod summary;
mod surface;

pub use curvature::{mean_curvature_statistics, vertex_curvatures, VertexCurvature};
pub use diameter::{extrinsic_diameter, intrinsic_diameter};
pub use io::{load_mesh, read_obj, read_off, write_obj, write_off, LoadedMesh};
pub use spectrum::{
    jacobi_spectrum, spectrum_with_potential, BoundaryCondition, JacobiSpectrum, SpectrumOptions,
};
pub use summary::{analyze_mesh, analyze_mesh_with, MeshAnalysis, CMC_SPREAD_TOLERANCE};
pub use surface::TriangulatedSurface;
