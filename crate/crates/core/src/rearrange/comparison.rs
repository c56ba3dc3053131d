use serde::Serialize;

use crate::error::Result;
use crate::function::RadialFunction;
use crate::geom::{round_sphere_volume, Metric};
use crate::isoperimetry::{diameter_factor_A, normalizing_scale, resolve_diameter, DiameterChoice};
use crate::rearrange::symmetrize::spherical_rearrangement;

/// Relative slack in `lhs ≥ rhs`.
pub const COMPARISON_TOL: f64 = 1e-6;

/// `∫ ‖∇f‖² dV` of the piecewise-linear interpolant of `f`.
pub fn dirichlet_energy(metric: &Metric, f: &RadialFunction) -> Result<f64> {
    let model = metric.radial_model();
    Ok(model.dirichlet_energy(&f.samples_on(&model)?))
}

/// Both sides of `∫‖∇f‖² ≥ (V₀/V_n)^{2/n} A(d)² ∫‖∇f_*‖²`, evaluated on the
/// metric rescaled so that `Ric ≥ n − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GradientComparison {
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub ok: bool,
    /// Factor `λ` applied to the metric before comparing.
    pub scale: f64,
    /// Volume of the rescaled metric.
    pub volume: f64,
    #[serde(rename = "A")]
    pub a: f64,
    pub d_used: f64,
    /// `∫‖∇f_*‖²` on the volume-matched round sphere.
    pub energy_star: f64,
}

/// Evaluate the energy comparison for `f`, sampled by node index on the rescaled metric.
pub fn gradient_comparison(
    metric: &Metric,
    f: &RadialFunction,
    d_choice: DiameterChoice,
) -> Result<GradientComparison> {
    let lambda = normalizing_scale(metric)?;
    let samples = f.samples_on(&metric.radial_model())?;
    let normalized = metric.scaled(lambda)?;
    let model = normalized.radial_model();
    let moved = RadialFunction::on_model(&model, |_| 0.0).with_values(samples);

    let n = metric.dimension();
    let d = resolve_diameter(&normalized, d_choice)?;
    let a = diameter_factor_A(n, d)?;
    let lhs = model.dirichlet_energy(moved.values());
    let rearranged = spherical_rearrangement(&normalized, &moved)?;
    let energy_star = dirichlet_energy(&rearranged.target_metric(), &rearranged.function)?;
    let volume = model.volume();
    let rhs = (volume / round_sphere_volume(n)?).powf(2.0 / n as f64) * a * a * energy_star;
    let ratio = if rhs > 0.0 {
        lhs / rhs
    } else if lhs > 0.0 {
        f64::INFINITY
    } else {
        1.0
    };
    Ok(GradientComparison {
        lhs,
        rhs,
        ratio,
        ok: lhs >= rhs * (1.0 - COMPARISON_TOL),
        scale: lambda,
        volume,
        a,
        d_used: d,
        energy_star,
    })
}
