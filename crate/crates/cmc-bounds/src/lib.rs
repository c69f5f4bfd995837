//! Quantitative geometry of constant mean curvature surfaces of bounded
//! Morse index.
//!
//! The crate has four cooperating parts:
//!
//! * [`hyperbolic`]: an exact kernel for the hyperboloid model of the
//!   hyperbolic plane. Geodesics, parallel transport, equidistant curves and
//!   the collar areas swept by pushing a negatively curved boundary curve
//!   outward. These closed forms drive every curvature-comparison argument
//!   in the estimate layer.
//! * [`estimates`]: the constants pipeline and the bounds themselves. Area
//!   lower bounds linear in genus, ball area upper bounds, diameter bounds,
//!   and the compact-case bounds available once the ambient space has a
//!   positive scalar curvature floor. A structure validator checks reported
//!   topological data for the region decomposition that concentrates index.
//! * [`mesh`]: a discrete pipeline that ingests triangulated surfaces,
//!   measures area, genus, diameter and curvature, assembles the Jacobi
//!   operator by finite elements, and produces a summary the estimate layer
//!   can audit.
//! * [`oracles`]: independent numerical checks (quadrature, ODE integration,
//!   finite differences) for the closed forms of the kernel. The oracle
//!   routines never call the functions they validate.
//!
//! Start with the runnable examples (`cargo run --example bounds_report`)
//! or the `cmc-bounds` binary, a thin front end over the same API.

// Validation throughout is written `!(x > 0.0)` rather than `x <= 0.0` so
// that NaN fails the admissibility check instead of slipping past it.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod estimates;
pub mod hyperbolic;
pub mod mesh;
pub mod oracles;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
