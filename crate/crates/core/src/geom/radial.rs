//! One-dimensional reduction shared by every metric in the model family.
//!
//! A radial function lives on a meridian `[0, L]` sampled at uniform nodes and is
//! treated as the piecewise-linear interpolant of its samples. Integrals are taken
//! cell by cell with Simpson's rule against the exact slice-area density, so the
//! superlevel volumes, `Lᵠ` norms and Dirichlet energy all describe one function.

use crate::geom::warped::Warp;
use crate::geom::{unit_sphere_volume, Metric};
use crate::quadrature::bisect_increasing;

#[derive(Debug, Clone)]
enum SliceArea {
    /// `factor · φ(r)^{n-1}`
    Warped {
        warp: Warp,
        length: f64,
        n: usize,
        factor: f64,
    },
    /// `factor · (a sin(s/a))^{p-1}`
    Product { a: f64, p: usize, factor: f64 },
}

impl SliceArea {
    fn eval(&self, r: f64) -> f64 {
        match self {
            SliceArea::Warped {
                warp,
                length,
                n,
                factor,
            } => factor * warp.value(r, *length).max(0.0).powi(*n as i32 - 1),
            SliceArea::Product { a, p, factor } => {
                factor * (a * (r / a).sin()).max(0.0).powi(*p as i32 - 1)
            }
        }
    }
}

/// Meridian grid, slice areas, curvature samples and cumulative ball volumes of a metric.
#[derive(Debug, Clone)]
pub struct RadialModel {
    dimension: usize,
    nodes: Vec<f64>,
    spacing: f64,
    arc_scale: f64,
    area: SliceArea,
    node_area: Vec<f64>,
    mid_area: Vec<f64>,
    node_scal: Vec<f64>,
    mid_scal: Vec<f64>,
    cumulative: Vec<f64>,
}

impl RadialModel {
    pub fn new(metric: &Metric) -> Self {
        let (dimension, nodes, arc_scale, area, node_scal, mid_scal) = match metric {
            Metric::Warped(w) => {
                let n = w.dimension();
                let factor = unit_sphere_volume(n - 1) * w.scale().powf(0.5 * (n as f64 - 1.0));
                let area = SliceArea::Warped {
                    warp: w.warp().clone(),
                    length: w.length(),
                    n,
                    factor,
                };
                let scal = w.scalar_curvature_profile();
                let mid = w.scalar_curvature_midpoints(&scal);
                (n, w.nodes(), w.scale().sqrt(), area, scal, mid)
            }
            Metric::Product(pm) => {
                let (p, a, q, b) = pm.factors();
                let factor = unit_sphere_volume(p - 1) * unit_sphere_volume(q) * b.powi(q as i32);
                let len = pm.meridian_length();
                let g = pm.grid_size();
                let h = len / (g - 1) as f64;
                let nodes: Vec<f64> = (0..g)
                    .map(|i| if i + 1 == g { len } else { h * i as f64 })
                    .collect();
                let s = pm.scalar_curvature();
                (
                    p + q,
                    nodes,
                    1.0,
                    SliceArea::Product { a, p, factor },
                    vec![s; g],
                    vec![s; g - 1],
                )
            }
        };
        let spacing = nodes[1] - nodes[0];
        let node_area: Vec<f64> = nodes.iter().map(|&r| area.eval(r)).collect();
        let mid_area: Vec<f64> = nodes
            .windows(2)
            .map(|w| area.eval(0.5 * (w[0] + w[1])))
            .collect();
        let mut cumulative = Vec::with_capacity(nodes.len());
        cumulative.push(0.0);
        let mut acc = 0.0;
        for k in 0..nodes.len() - 1 {
            let dx = nodes[k + 1] - nodes[k];
            acc += arc_scale * dx / 6.0 * (node_area[k] + 4.0 * mid_area[k] + node_area[k + 1]);
            cumulative.push(acc);
        }
        RadialModel {
            dimension,
            nodes,
            spacing,
            arc_scale,
            area,
            node_area,
            mid_area,
            node_scal,
            mid_scal,
            cumulative,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }
    pub fn len(&self) -> usize {
        self.nodes.len()
    }
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
    pub fn length(&self) -> f64 {
        *self.nodes.last().unwrap()
    }
    pub fn cells(&self) -> usize {
        self.nodes.len() - 1
    }
    /// Physical length of one coordinate unit along the meridian.
    pub fn arc_scale(&self) -> f64 {
        self.arc_scale
    }
    /// Physical length of a cell.
    pub fn cell_length(&self, k: usize) -> f64 {
        self.arc_scale * (self.nodes[k + 1] - self.nodes[k])
    }
    pub fn volume(&self) -> f64 {
        *self.cumulative.last().unwrap()
    }
    pub fn cumulative_volumes(&self) -> &[f64] {
        &self.cumulative
    }
    pub fn cell_volume(&self, k: usize) -> f64 {
        self.cumulative[k + 1] - self.cumulative[k]
    }

    /// Area of the level hypersurface at coordinate `r`.
    pub fn slice_area(&self, r: f64) -> f64 {
        self.area.eval(r)
    }

    pub(crate) fn node_area(&self) -> &[f64] {
        &self.node_area
    }
    pub(crate) fn mid_area(&self) -> &[f64] {
        &self.mid_area
    }
    pub(crate) fn node_scal(&self) -> &[f64] {
        &self.node_scal
    }
    pub(crate) fn mid_scal(&self) -> &[f64] {
        &self.mid_scal
    }

    /// Volume of `{x0 < r < x1}` for `x0 ≤ x1` inside one cell.
    pub fn partial_volume(&self, x0: f64, x1: f64) -> f64 {
        if x1 <= x0 {
            return 0.0;
        }
        let m = 0.5 * (x0 + x1);
        self.arc_scale * (x1 - x0) / 6.0
            * (self.area.eval(x0) + 4.0 * self.area.eval(m) + self.area.eval(x1))
    }

    fn cell_of(&self, r: f64) -> usize {
        ((r / self.spacing).floor().max(0.0) as usize).min(self.cells() - 1)
    }

    /// Volume of the coordinate ball `{r' < r}` around the first pole.
    pub fn ball_volume(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        if r >= self.length() {
            return self.volume();
        }
        let k = self.cell_of(r);
        self.cumulative[k] + self.partial_volume(self.nodes[k], r)
    }

    /// Radius of the coordinate ball of volume `v`.
    pub fn ball_radius(&self, v: f64) -> f64 {
        if v <= 0.0 {
            return 0.0;
        }
        if v >= self.volume() {
            return self.length();
        }
        let k = self
            .cumulative
            .partition_point(|&c| c <= v)
            .saturating_sub(1)
            .min(self.cells() - 1);
        let (lo, hi) = (self.nodes[k], self.nodes[k + 1]);
        bisect_increasing(|r| self.ball_volume(r), v, lo, hi, 1e-15 * self.length())
    }

    /// `∫ g(f) dV` for the piecewise-linear interpolant of `f`.
    pub fn integrate<G: Fn(f64) -> f64>(&self, f: &[f64], g: G) -> f64 {
        let mut total = 0.0;
        for k in 0..self.cells() {
            let w = self.arc_scale * (self.nodes[k + 1] - self.nodes[k]) / 6.0;
            let fm = 0.5 * (f[k] + f[k + 1]);
            total += w
                * (self.node_area[k] * g(f[k])
                    + 4.0 * self.mid_area[k] * g(fm)
                    + self.node_area[k + 1] * g(f[k + 1]));
        }
        total
    }

    /// `∫ Scal · f² dV`.
    pub fn potential(&self, f: &[f64]) -> f64 {
        let mut total = 0.0;
        for k in 0..self.cells() {
            let w = self.arc_scale * (self.nodes[k + 1] - self.nodes[k]) / 6.0;
            let fm = 0.5 * (f[k] + f[k + 1]);
            total += w
                * (self.node_area[k] * self.node_scal[k] * f[k] * f[k]
                    + 4.0 * self.mid_area[k] * self.mid_scal[k] * fm * fm
                    + self.node_area[k + 1] * self.node_scal[k + 1] * f[k + 1] * f[k + 1]);
        }
        total
    }

    /// `∫ ‖∇f‖² dV` of the piecewise-linear interpolant.
    pub fn dirichlet_energy(&self, f: &[f64]) -> f64 {
        (0..self.cells())
            .map(|k| {
                let slope = (f[k + 1] - f[k]) / self.cell_length(k);
                self.cell_volume(k) * slope * slope
            })
            .sum()
    }
}
