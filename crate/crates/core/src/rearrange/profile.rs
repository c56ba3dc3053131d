use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::RadialFunction;
use crate::geom::Metric;
use crate::rearrange::levels::Superlevels;

pub const MIN_LEVELS: usize = 16;

/// Sampled distribution function `t ↦ μ{f > t}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistributionProfile {
    /// Strictly increasing levels.
    pub levels: Vec<f64>,
    /// `μ{f > t}` at each level.
    pub measures: Vec<f64>,
    pub volume: f64,
    pub min: f64,
    pub max: f64,
}

impl DistributionProfile {
    /// `V₀` below the minimum, `0` at or above the maximum, linear in between.
    pub fn measure_at(&self, t: f64) -> f64 {
        if t < self.min {
            return self.volume;
        }
        if t >= self.max {
            return 0.0;
        }
        let k = self.levels.partition_point(|&l| l <= t);
        if k == 0 {
            return self.measures[0];
        }
        if k == self.levels.len() {
            return *self.measures.last().unwrap();
        }
        let (t0, t1) = (self.levels[k - 1], self.levels[k]);
        let (m0, m1) = (self.measures[k - 1], self.measures[k]);
        m0 + (t - t0) / (t1 - t0) * (m1 - m0)
    }

    /// CSV with header `t,mu`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["t", "mu"]).unwrap();
        for (t, m) in self.levels.iter().zip(&self.measures) {
            w.write_record([t.to_string(), m.to_string()]).unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// Quantiles of the samples plus the midpoints between consecutive quantiles.
pub(crate) fn level_grid(samples: &[f64], levels: usize) -> Vec<f64> {
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let count = levels / 2 + 1;
    let last = sorted.len() - 1;
    let mut quantiles: Vec<f64> = (0..count)
        .map(|i| sorted[((i * last) as f64 / (count - 1) as f64).round() as usize])
        .collect();
    quantiles.dedup();
    let mut out = Vec::with_capacity(2 * quantiles.len());
    for w in quantiles.windows(2) {
        out.push(w[0]);
        out.push(0.5 * (w[0] + w[1]));
    }
    out.push(*quantiles.last().unwrap());
    out
}

/// Distribution profile of `f` at about `levels` levels.
pub fn distribution_profile(
    metric: &Metric,
    f: &RadialFunction,
    levels: usize,
) -> Result<DistributionProfile> {
    if levels < MIN_LEVELS {
        return Err(Error::invalid(
            "levels",
            format!("need at least {MIN_LEVELS} levels, got {levels}"),
        ));
    }
    let model = metric.radial_model();
    let samples = f.samples_on(&model)?;
    let sl = Superlevels::new(&model, &samples);
    let grid = level_grid(&samples, levels);
    let measures = grid.iter().map(|&t| sl.measure(t)).collect();
    Ok(DistributionProfile {
        levels: grid,
        measures,
        volume: model.volume(),
        min: f.min(),
        max: f.max(),
    })
}
