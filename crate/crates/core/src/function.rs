use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Metric, RadialModel};

/// A function of the radial coordinate, sampled at nodes and read as the
/// piecewise-linear interpolant of its samples.
///
/// Samples only need to be finite here; the Yamabe routines additionally require
/// them to be positive (see [`RadialFunction::ensure_positive`]).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialFunction {
    nodes: Vec<f64>,
    values: Vec<f64>,
}

impl RadialFunction {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::invalid(
                "values",
                format!("{} values for {} nodes", values.len(), nodes.len()),
            ));
        }
        if nodes.len() < 2 {
            return Err(Error::invalid("nodes", "need at least two nodes"));
        }
        if nodes.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::invalid("nodes", "nodes must be strictly increasing"));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::invalid("values", format!("value {i} is not finite")));
        }
        Ok(RadialFunction { nodes, values })
    }

    /// Sample `f(r)` at the metric's radial nodes.
    pub fn from_fn<F: Fn(f64) -> f64>(metric: &Metric, f: F) -> Self {
        Self::on_model(&metric.radial_model(), f)
    }

    pub fn on_model<F: Fn(f64) -> f64>(model: &RadialModel, f: F) -> Self {
        let nodes = model.nodes().to_vec();
        let values = nodes.iter().map(|&r| f(r)).collect();
        RadialFunction { nodes, values }
    }

    pub fn constant(metric: &Metric, c: f64) -> Self {
        Self::from_fn(metric, |_| c)
    }

    pub(crate) fn with_values(mut self, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), self.nodes.len());
        self.values = values;
        self
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }
    pub fn values(&self) -> &[f64] {
        &self.values
    }
    pub fn len(&self) -> usize {
        self.values.len()
    }
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }
    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// The function multiplied by `lambda`.
    pub fn scaled(&self, lambda: f64) -> Self {
        RadialFunction {
            nodes: self.nodes.clone(),
            values: self.values.iter().map(|v| v * lambda).collect(),
        }
    }

    /// Value of the interpolant at `r`, clamped to the node range.
    pub fn eval(&self, r: f64) -> f64 {
        let last = self.nodes.len() - 1;
        if r <= self.nodes[0] {
            return self.values[0];
        }
        if r >= self.nodes[last] {
            return self.values[last];
        }
        let k = self.nodes.partition_point(|&x| x <= r) - 1;
        let t = (r - self.nodes[k]) / (self.nodes[k + 1] - self.nodes[k]);
        self.values[k] + t * (self.values[k + 1] - self.values[k])
    }

    pub fn ensure_positive(&self) -> Result<()> {
        match self.values.iter().position(|&v| !(v > 0.0)) {
            Some(i) => Err(Error::invalid(
                "values",
                format!("function must be positive, value {i} is {}", self.values[i]),
            )),
            None => Ok(()),
        }
    }

    /// Samples at the model's nodes. Functions given on another grid spanning the
    /// same meridian are resampled linearly.
    pub fn samples_on(&self, model: &RadialModel) -> Result<Vec<f64>> {
        let target = model.nodes();
        let span = model.length();
        let tol = 1e-9 * span.max(1.0);
        let same = target.len() == self.nodes.len()
            && target
                .iter()
                .zip(&self.nodes)
                .all(|(a, b)| (a - b).abs() <= tol);
        if same {
            return Ok(self.values.clone());
        }
        let last = self.nodes.len() - 1;
        if self.nodes[0].abs() > tol || (self.nodes[last] - span).abs() > tol {
            return Err(Error::invalid(
                "nodes",
                format!(
                    "nodes must span the meridian [0, {span}], got [{}, {}]",
                    self.nodes[0], self.nodes[last]
                ),
            ));
        }
        Ok(target.iter().map(|&r| self.eval(r)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_mismatched_and_unsorted() {
        assert!(RadialFunction::new(vec![0.0, 1.0], vec![1.0]).is_err());
        assert!(RadialFunction::new(vec![0.0, 0.0], vec![1.0, 1.0]).is_err());
        assert!(RadialFunction::new(vec![0.0, 1.0], vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn resamples_onto_metric_grid() {
        let m = Metric::round(3).unwrap();
        let model = m.radial_model();
        let coarse_nodes: Vec<f64> = (0..65)
            .map(|i| std::f64::consts::PI * i as f64 / 64.0)
            .collect();
        let coarse = RadialFunction::new(
            coarse_nodes.clone(),
            coarse_nodes.iter().map(|r| 1.0 + r).collect(),
        )
        .unwrap();
        let fine = coarse.samples_on(&model).unwrap();
        for (r, v) in model.nodes().iter().zip(&fine) {
            assert!((v - (1.0 + r)).abs() < 1e-12);
        }
    }
}
