//! The Yamabe functional, its lower bounds, and restricted upper bounds.
//!
//! `Y_g(f) = (a_n ∫‖∇f‖² + ∫ Scal f²) / (∫ f^p)^{2/p}` with `a_n = 4(n-1)/(n-2)`
//! and `p = 2n/(n-2)`. The Yamabe constant `Y(M,[g])` is its infimum. Here we
//! bound it from below by `n ρ V^{2/n}` when `Ricci ≥ ρ > 0` and from above by
//! minimizing over radial trial functions.

mod bounds;
mod constants;
mod functional;
mod minimize;
mod report;

pub use bounds::{einstein_volume_bound, kobayashi_lower_bound, ricci_yamabe_lower_bound};
pub use constants::{yamabe_constants, YamabeConstants};
pub use functional::{yamabe_functional, FunctionalParts};
pub use minimize::{minimize_yamabe_radial, MinimizeOutcome, MinimizerOptions};
pub use report::{yamabe_report, ReportOptions, YamabeReport, CONSISTENCY_TOL};

pub(crate) use functional::DiscreteFunctional;
