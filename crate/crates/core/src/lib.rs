//! Numerical checks of the Ricci-curvature lower bound on Yamabe constants.
//!
//! For a closed `n`-manifold with `Ricci ≥ ρ > 0` and volume `V`, the Yamabe
//! constant of the conformal class satisfies `Y(M,[g]) ≥ n ρ V^{2/n}`, with
//! equality for Einstein metrics. This crate evaluates every computable object
//! in that argument on metrics whose curvature is known exactly:
//!
//! - [`geom`]: rotationally symmetric metrics on `Sⁿ` and products of round spheres.
//! - [`yamabe`]: the Yamabe functional, lower bounds, radial minimization, reports.
//! - [`rearrange`]: distribution functions, spherical rearrangement, coarea checks and
//!   the gradient comparison between `f` and its rearrangement.
//! - [`isoperimetry`]: the round-sphere isoperimetric profile, the diameter factor
//!   `A(d)`, and the two-sided squeeze on model metrics.
//! - [`cli`]: the command-line front end behind the `yamabe` binary.

// `!(x > 0.0)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod battery;
pub mod cli;
pub mod error;
pub mod function;
pub mod geom;
pub mod isoperimetry;
pub mod quadrature;
pub mod rearrange;
pub mod yamabe;

pub use error::{Error, Result};
pub use function::RadialFunction;
pub use geom::{Metric, ProductSphereMetric, RadialModel, Warp, WarpedSphereMetric};
