//! Distribution functions, spherical rearrangement and the energy comparison.
//!
//! A radial function `f` is read as the piecewise-linear interpolant of its
//! samples. Its superlevel sets `{f > t}` are finite unions of radial shells whose
//! volumes are integrated exactly against the slice-area density. The spherical
//! rearrangement `f_*` lives on the round sphere rescaled to the same volume and
//! is the radially nonincreasing function with the same distribution.

mod coarea;
mod comparison;
mod levels;
mod profile;
mod symmetrize;

pub use coarea::{coarea_check, level_crossing_integral, CoareaPoint};
pub use comparison::{dirichlet_energy, gradient_comparison, GradientComparison};
pub use levels::superlevel_volume;
pub use profile::{distribution_profile, DistributionProfile, MIN_LEVELS};
pub use symmetrize::{
    spherical_rearrangement, spherical_rearrangement_refined, Rearrangement, DEFAULT_REFINE,
};
