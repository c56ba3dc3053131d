use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::RadialFunction;
use crate::geom::Metric;
use crate::rearrange::levels::Superlevels;
use crate::rearrange::profile::{level_grid, MIN_LEVELS};

/// Both sides of `−dμ/dt = ∫_{f=t} ‖∇f‖⁻¹ dσ` at one level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoareaPoint {
    pub t: f64,
    pub fd_slope: f64,
    pub crossing_integral: f64,
    pub rel_err: f64,
}

/// `∫_{f=t} ‖∇f‖⁻¹ dσ` summed over the transversal crossings of `t`.
pub fn level_crossing_integral(metric: &Metric, f: &RadialFunction, t: f64) -> Result<f64> {
    let model = metric.radial_model();
    let samples = f.samples_on(&model)?;
    Ok(crossing_sum(&Superlevels::new(&model, &samples), t))
}

fn crossing_sum(sl: &Superlevels, t: f64) -> f64 {
    sl.crossings(t)
        .into_iter()
        .map(|(x, slope)| sl.model().slice_area(x) / slope.abs())
        .sum()
}

/// Levels closer to a local extremum value than one cell's variation there.
fn near_critical(samples: &[f64], t: f64) -> bool {
    let n = samples.len();
    (0..n).any(|i| {
        let left = if i > 0 { samples[i - 1] } else { f64::NAN };
        let right = if i + 1 < n { samples[i + 1] } else { f64::NAN };
        let v = samples[i];
        let is_max = !(left > v) && !(right > v);
        let is_min = !(left < v) && !(right < v);
        if !(is_max || is_min) {
            return false;
        }
        let reach = [left, right]
            .iter()
            .filter(|x| x.is_finite())
            .map(|x| (x - v).abs())
            .fold(0.0, f64::max);
        (t - v).abs() <= reach
    })
}

/// Compare a centered difference of `μ{f > t}` with the level-crossing integral
/// at the regular levels of the profile grid.
pub fn coarea_check(
    metric: &Metric,
    f: &RadialFunction,
    levels: usize,
) -> Result<Vec<CoareaPoint>> {
    if levels < MIN_LEVELS {
        return Err(Error::invalid(
            "levels",
            format!("need at least {MIN_LEVELS} levels, got {levels}"),
        ));
    }
    let model = metric.radial_model();
    let samples = f.samples_on(&model)?;
    let sl = Superlevels::new(&model, &samples);
    let range = f.max() - f.min();
    let mut sorted = samples.clone();
    sorted.sort_by(f64::total_cmp);

    let mut out = Vec::new();
    for t in level_grid(&samples, levels) {
        let k = sorted.partition_point(|&s| s < t);
        let below = if k > 0 {
            t - sorted[k - 1]
        } else {
            f64::INFINITY
        };
        let above = if k < sorted.len() {
            sorted[k] - t
        } else {
            f64::INFINITY
        };
        let gap = below.min(above);
        if gap <= 1e-9 * range || near_critical(&samples, t) {
            continue;
        }
        let dt = 0.25 * gap;
        let fd_slope = (sl.measure(t - dt) - sl.measure(t + dt)) / (2.0 * dt);
        let crossing_integral = crossing_sum(&sl, t);
        out.push(CoareaPoint {
            t,
            fd_slope,
            crossing_integral,
            rel_err: (fd_slope - crossing_integral).abs() / crossing_integral,
        });
    }
    Ok(out)
}
