use crate::error::{Error, Result};
use crate::geom::Metric;

fn require_dimension(metric: &Metric) -> Result<f64> {
    let n = metric.dimension();
    if n < 3 {
        return Err(Error::domain(format!("Yamabe bounds need n >= 3, got {n}")));
    }
    Ok(n as f64)
}

/// `inf Scal · V^{2/n}`.
///
/// This bounds `Y(M,[g])` from below only when the infimum is non-positive; for
/// positive scalar curvature it is informational.
pub fn kobayashi_lower_bound(metric: &Metric) -> Result<f64> {
    let n = require_dimension(metric)?;
    Ok(metric.scalar_curvature_infimum() * metric.volume().powf(2.0 / n))
}

/// `n ρ V^{2/n}` for `Ricci ≥ ρ > 0`. With `ρ = n - 1` this is `n(n-1) V^{2/n}`.
pub fn ricci_yamabe_lower_bound(metric: &Metric) -> Result<f64> {
    let n = require_dimension(metric)?;
    let rho = metric.ricci_lower_bound();
    if !(rho > 0.0) {
        return Err(Error::NotApplicable(format!(
            "Ricci lower bound is {rho}, the bound needs a positive one"
        )));
    }
    Ok(n * rho * metric.volume().powf(2.0 / n))
}

/// Largest volume allowed for a metric with `Ricci ≥ rho` on a manifold whose
/// Yamabe invariant is at most `yamabe`: `(yamabe / (n rho))^{n/2}`.
pub fn einstein_volume_bound(yamabe: f64, n: usize, rho: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::domain(format!("need n >= 3, got {n}")));
    }
    if !(yamabe > 0.0 && yamabe.is_finite()) {
        return Err(Error::domain(format!(
            "Yamabe value must be positive, got {yamabe}"
        )));
    }
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::domain(format!(
            "Ricci bound must be positive, got {rho}"
        )));
    }
    let nf = n as f64;
    Ok((yamabe / (nf * rho)).powf(nf / 2.0))
}
