//! Reverse isoperimetric bounds for λ-convex curves in the three simply
//! connected constant-curvature planes.
//!
//! The crate is organized bottom-up:
//!
//! - [`modelspace`]: curvature-parameterized trigonometry, poses, exact
//!   propagation along arcs of constant geodesic curvature, distances.
//! - [`curves`]: closed piecewise constant-curvature curves with corners,
//!   their turning, λ-convexity, and enclosed area.
//! - [`bounds`]: the sharp lower bound on area given perimeter, perimeter
//!   caps, and the classical upper bounds used for sandwich checks.
//! - [`lune`]: construction and certification of the extremal λ-convex lune.
//! - [`verify`]: randomized inequality suites and lune perturbation tests.
//!
//! All lengths, curvatures and areas are plain `f64` in consistent units:
//! curvature `c` has units 1/length², geodesic curvature 1/length.

pub mod bounds;
pub mod curves;
pub mod error;
pub mod lune;
pub mod modelspace;
pub mod quadrature;
pub mod tolerance;
pub mod verify;

pub use bounds::{perimeter_cap, reverse_bound, BoundCase, BoundQuery, BoundResult};
pub use curves::{Arc, ClosedCurve, SubArc};
pub use error::{Error, Result};
pub use lune::{build_lune, certify_equality, LuneSpec};
pub use modelspace::{Geometry, ModelSpace, Point, Pose};
pub use tolerance::Tolerances;
