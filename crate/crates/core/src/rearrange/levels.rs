use crate::error::Result;
use crate::function::RadialFunction;
use crate::geom::{Metric, RadialModel};

/// Superlevel-set volumes of a piecewise-linear function on a radial model.
pub(crate) struct Superlevels<'a> {
    model: &'a RadialModel,
    f: &'a [f64],
}

impl<'a> Superlevels<'a> {
    pub(crate) fn new(model: &'a RadialModel, f: &'a [f64]) -> Self {
        Superlevels { model, f }
    }

    pub(crate) fn model(&self) -> &RadialModel {
        self.model
    }

    pub(crate) fn samples(&self) -> &[f64] {
        self.f
    }

    /// Volume of `{f > t}` inside cell `k`.
    pub(crate) fn cell_part(&self, k: usize, t: f64) -> f64 {
        let (f0, f1) = (self.f[k], self.f[k + 1]);
        match (f0 > t, f1 > t) {
            (true, true) => self.model.cell_volume(k),
            (false, false) => 0.0,
            _ => {
                let nodes = self.model.nodes();
                let (x0, x1) = (nodes[k], nodes[k + 1]);
                let x = (x0 + (t - f0) / (f1 - f0) * (x1 - x0)).clamp(x0, x1);
                if f1 > f0 {
                    self.model.partial_volume(x, x1)
                } else {
                    self.model.partial_volume(x0, x)
                }
            }
        }
    }

    /// `μ{f > t}`.
    pub(crate) fn measure(&self, t: f64) -> f64 {
        (0..self.model.cells()).map(|k| self.cell_part(k, t)).sum()
    }

    /// Points where the interpolant crosses `t` transversally, with the physical slope there.
    pub(crate) fn crossings(&self, t: f64) -> Vec<(f64, f64)> {
        let nodes = self.model.nodes();
        (0..self.model.cells())
            .filter_map(|k| {
                let (f0, f1) = (self.f[k], self.f[k + 1]);
                let crosses = (f0 < t && t < f1) || (f1 < t && t < f0);
                crosses.then(|| {
                    let x = nodes[k] + (t - f0) / (f1 - f0) * (nodes[k + 1] - nodes[k]);
                    (x, (f1 - f0) / self.model.cell_length(k))
                })
            })
            .collect()
    }
}

/// `μ{f > t}` for a radial function on a metric.
pub fn superlevel_volume(metric: &Metric, f: &RadialFunction, t: f64) -> Result<f64> {
    let model = metric.radial_model();
    let samples = f.samples_on(&model)?;
    Ok(Superlevels::new(&model, &samples).measure(t))
}
