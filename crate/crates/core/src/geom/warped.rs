use crate::error::{Error, Result};

/// Tolerance for the pole closure conditions `φ(0) = φ(L) = 0`, `φ'(0) = 1`, `φ'(L) = -1`.
pub const CLOSURE_TOL: f64 = 1e-3;

/// Nodes excluded at each pole from curvature min/max scans.
pub const POLE_MARGIN: usize = 2;

/// Minimum number of radial nodes.
pub const MIN_GRID_SIZE: usize = 64;

/// Default number of radial nodes.
pub const DEFAULT_GRID_SIZE: usize = 1024;

/// Warping function of a rotationally symmetric metric.
#[derive(Debug, Clone, PartialEq)]
pub enum Warp {
    /// `φ(r) = sin r · (1 + eps · sin² r)` on `[0, π]`; `eps = 0` is the round sphere.
    Sine { eps: f64 },
    /// Uniform samples of `φ` on `[0, L]`, interpolated piecewise-linearly.
    Samples(Vec<f64>),
}

impl Warp {
    pub fn round() -> Self {
        Warp::Sine { eps: 0.0 }
    }

    pub(crate) fn value(&self, r: f64, length: f64) -> f64 {
        match self {
            Warp::Sine { eps } => {
                let s = r.sin();
                s * (1.0 + eps * s * s)
            }
            Warp::Samples(v) => {
                let m = v.len() - 1;
                let x = (r / length).clamp(0.0, 1.0) * m as f64;
                let i = (x.floor() as usize).min(m - 1);
                let t = x - i as f64;
                v[i] + t * (v[i + 1] - v[i])
            }
        }
    }

    /// `(φ, φ', φ'')` from the closed form, when there is one.
    fn closed_jet(&self, r: f64) -> Option<(f64, f64, f64)> {
        match self {
            Warp::Sine { eps } => {
                let (s, c) = r.sin_cos();
                let s2 = s * s;
                Some((
                    s * (1.0 + eps * s2),
                    c * (1.0 + 3.0 * eps * s2),
                    -s + 6.0 * eps * s - 9.0 * eps * s * s2,
                ))
            }
            Warp::Samples(_) => None,
        }
    }
}

/// Ricci eigenvalues of `dr² + φ² g_{S^{n-1}}` at a point: (radial, tangential).
pub(crate) fn ricci_pair(n: usize, phi: f64, dphi: f64, ddphi: f64) -> (f64, f64) {
    let k = (n - 1) as f64;
    let radial = -k * ddphi / phi;
    let tangential = -ddphi / phi + (n as f64 - 2.0) * (1.0 - dphi * dphi) / (phi * phi);
    (radial, tangential)
}

/// Scalar curvature of `dr² + φ² g_{S^{n-1}}`.
pub(crate) fn scalar_from_jet(n: usize, phi: f64, dphi: f64, ddphi: f64) -> f64 {
    let k = (n - 1) as f64;
    -2.0 * k * ddphi / phi + k * (n as f64 - 2.0) * (1.0 - dphi * dphi) / (phi * phi)
}

/// The metric `c · (dr² + φ(r)² g_{S^{n-1}})` on `Sⁿ`, `r ∈ [0, L]`.
#[derive(Debug, Clone, PartialEq)]
pub struct WarpedSphereMetric {
    n: usize,
    length: f64,
    warp: Warp,
    grid_size: usize,
    scale: f64,
}

impl WarpedSphereMetric {
    pub fn new(n: usize, length: f64, warp: Warp, grid_size: usize, scale: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(
                "n",
                format!("dimension must be at least 2, got {n}"),
            ));
        }
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::invalid(
                "L",
                format!("radial length must be positive, got {length}"),
            ));
        }
        if grid_size < MIN_GRID_SIZE {
            return Err(Error::invalid(
                "grid_size",
                format!("need at least {MIN_GRID_SIZE} nodes, got {grid_size}"),
            ));
        }
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::invalid(
                "scale",
                format!("scale must be positive, got {scale}"),
            ));
        }
        match &warp {
            Warp::Sine { eps } if !eps.is_finite() => {
                return Err(Error::invalid("eps", "perturbation must be finite"));
            }
            Warp::Samples(v) if v.len() < 3 => {
                return Err(Error::invalid("phi", "need at least 3 samples"));
            }
            Warp::Samples(v) if v.iter().any(|x| !x.is_finite()) => {
                return Err(Error::invalid("phi", "samples must be finite"));
            }
            _ => {}
        }
        let metric = WarpedSphereMetric {
            n,
            length,
            warp,
            grid_size,
            scale,
        };
        metric.check_closure()?;
        Ok(metric)
    }

    /// Unit round sphere `Sⁿ` on the default grid.
    pub fn round(n: usize) -> Result<Self> {
        Self::new(
            n,
            std::f64::consts::PI,
            Warp::round(),
            DEFAULT_GRID_SIZE,
            1.0,
        )
    }

    /// `φ(r) = sin r · (1 + eps sin² r)` on the default grid.
    pub fn perturbed_round(n: usize, eps: f64) -> Result<Self> {
        Self::new(
            n,
            std::f64::consts::PI,
            Warp::Sine { eps },
            DEFAULT_GRID_SIZE,
            1.0,
        )
    }

    pub fn with_grid_size(&self, grid_size: usize) -> Result<Self> {
        Self::new(
            self.n,
            self.length,
            self.warp.clone(),
            grid_size,
            self.scale,
        )
    }

    /// The metric multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(
            self.n,
            self.length,
            self.warp.clone(),
            self.grid_size,
            self.scale * c,
        )
    }

    pub fn dimension(&self) -> usize {
        self.n
    }
    pub fn length(&self) -> f64 {
        self.length
    }
    pub fn warp(&self) -> &Warp {
        &self.warp
    }
    pub fn grid_size(&self) -> usize {
        self.grid_size
    }
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn spacing(&self) -> f64 {
        self.length / (self.grid_size - 1) as f64
    }

    /// Radial coordinates of the grid nodes.
    pub fn nodes(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.grid_size)
            .map(|i| {
                if i + 1 == self.grid_size {
                    self.length
                } else {
                    h * i as f64
                }
            })
            .collect()
    }

    pub(crate) fn phi(&self, r: f64) -> f64 {
        self.warp.value(r, self.length)
    }

    /// `(φ, φ', φ'')` at every node for the unscaled metric. Closed forms are
    /// differentiated exactly; sampled warps use centered differences.
    pub(crate) fn jets(&self) -> Vec<(f64, f64, f64)> {
        let nodes = self.nodes();
        if self.warp.closed_jet(0.0).is_some() {
            return nodes
                .iter()
                .map(|&r| self.warp.closed_jet(r).unwrap())
                .collect();
        }
        let h = self.spacing();
        let phi: Vec<f64> = nodes.iter().map(|&r| self.phi(r)).collect();
        let last = phi.len() - 1;
        (0..=last)
            .map(|i| {
                if i == 0 {
                    (
                        (phi[0]),
                        (-3.0 * phi[0] + 4.0 * phi[1] - phi[2]) / (2.0 * h),
                        0.0,
                    )
                } else if i == last {
                    (
                        phi[last],
                        (3.0 * phi[last] - 4.0 * phi[last - 1] + phi[last - 2]) / (2.0 * h),
                        0.0,
                    )
                } else {
                    (
                        phi[i],
                        (phi[i + 1] - phi[i - 1]) / (2.0 * h),
                        (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) / (h * h),
                    )
                }
            })
            .collect()
    }

    fn check_closure(&self) -> Result<()> {
        let jets = self.jets();
        let last = jets.len() - 1;
        let scale_ref = jets.iter().map(|j| j.0.abs()).fold(0.0, f64::max).max(1.0);
        if jets[0].0.abs() > CLOSURE_TOL * scale_ref || jets[last].0.abs() > CLOSURE_TOL * scale_ref
        {
            return Err(Error::invalid(
                "phi",
                format!(
                    "warp must vanish at both poles (phi(0)={:.3e}, phi(L)={:.3e})",
                    jets[0].0, jets[last].0
                ),
            ));
        }
        if let Some(i) = (1..last).find(|&i| jets[i].0 <= 0.0) {
            return Err(Error::invalid(
                "phi",
                format!(
                    "warp must be positive in the interior, node {i} has {}",
                    jets[i].0
                ),
            ));
        }
        if (jets[0].1 - 1.0).abs() > CLOSURE_TOL || (jets[last].1 + 1.0).abs() > CLOSURE_TOL {
            return Err(Error::invalid(
                "phi",
                format!(
                    "smooth closure needs phi'(0)=1 and phi'(L)=-1, got {:.6} and {:.6}",
                    jets[0].1, jets[last].1
                ),
            ));
        }
        Ok(())
    }

    /// Unscaled scalar curvature at a node jet, or `None` at a pole.
    fn scal_unscaled(&self, jet: (f64, f64, f64)) -> f64 {
        scalar_from_jet(self.n, jet.0, jet.1, jet.2)
    }

    fn scan_range(&self) -> std::ops::Range<usize> {
        POLE_MARGIN..self.grid_size - POLE_MARGIN
    }

    /// Indices where curvature is evaluated directly; the rest are filled from neighbours.
    fn evaluated_range(&self) -> std::ops::Range<usize> {
        match self.warp {
            Warp::Sine { .. } => 1..self.grid_size - 1,
            Warp::Samples(_) => self.scan_range(),
        }
    }

    pub fn scalar_curvature_profile(&self) -> Vec<f64> {
        let jets = self.jets();
        let range = self.evaluated_range();
        let mut out = vec![0.0; self.grid_size];
        for i in range.clone() {
            out[i] = self.scal_unscaled(jets[i]) / self.scale;
        }
        let (first, last) = (range.start, range.end - 1);
        for i in 0..first {
            out[i] = out[first];
        }
        for i in last + 1..self.grid_size {
            out[i] = out[last];
        }
        out
    }

    /// Scalar curvature at cell midpoints, used by the cell quadrature.
    pub(crate) fn scalar_curvature_midpoints(&self, nodal: &[f64]) -> Vec<f64> {
        let nodes = self.nodes();
        match self.warp {
            Warp::Sine { .. } => nodes
                .windows(2)
                .map(|w| {
                    let jet = self.warp.closed_jet(0.5 * (w[0] + w[1])).unwrap();
                    self.scal_unscaled(jet) / self.scale
                })
                .collect(),
            Warp::Samples(_) => nodal.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect(),
        }
    }

    /// (radial, tangential) Ricci eigenvalues at the scanned interior nodes.
    pub fn ricci_eigenvalues(&self) -> Vec<(f64, f64)> {
        let jets = self.jets();
        self.scan_range()
            .map(|i| {
                let (a, b) = ricci_pair(self.n, jets[i].0, jets[i].1, jets[i].2);
                (a / self.scale, b / self.scale)
            })
            .collect()
    }

    pub fn ricci_lower_bound(&self) -> f64 {
        self.ricci_eigenvalues()
            .into_iter()
            .map(|(a, b)| a.min(b))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn scalar_curvature_infimum(&self) -> f64 {
        let profile = self.scalar_curvature_profile();
        profile[self.scan_range()]
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}
