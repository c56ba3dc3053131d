use crate::error::{Error, Result};
use crate::geom::unit_sphere_volume;
use crate::geom::warped::{DEFAULT_GRID_SIZE, MIN_GRID_SIZE};

/// `S^p(a) × S^q(b)` with round factors of radii `a` and `b`.
///
/// Radial functions on a product depend on the polar angle of the first factor;
/// `grid_size` sets the resolution of that meridian.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductSphereMetric {
    p: usize,
    q: usize,
    a: f64,
    b: f64,
    grid_size: usize,
}

impl ProductSphereMetric {
    pub fn new(p: usize, a: f64, q: usize, b: f64) -> Result<Self> {
        Self::with_grid(p, a, q, b, DEFAULT_GRID_SIZE)
    }

    pub fn with_grid(p: usize, a: f64, q: usize, b: f64, grid_size: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::invalid(
                "p",
                format!("factor dimension must be at least 2, got {p}"),
            ));
        }
        if q < 2 {
            return Err(Error::invalid(
                "q",
                format!("factor dimension must be at least 2, got {q}"),
            ));
        }
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::invalid(
                "a",
                format!("radius must be positive, got {a}"),
            ));
        }
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::invalid(
                "b",
                format!("radius must be positive, got {b}"),
            ));
        }
        if grid_size < MIN_GRID_SIZE {
            return Err(Error::invalid(
                "grid_size",
                format!("need at least {MIN_GRID_SIZE} nodes, got {grid_size}"),
            ));
        }
        Ok(ProductSphereMetric {
            p,
            q,
            a,
            b,
            grid_size,
        })
    }

    /// `δ g₀ × g₀` on `S² × S²`.
    pub fn s2xs2(delta: f64) -> Result<Self> {
        Self::new(2, delta.sqrt(), 2, 1.0)
    }

    pub fn factors(&self) -> (usize, f64, usize, f64) {
        (self.p, self.a, self.q, self.b)
    }
    pub fn dimension(&self) -> usize {
        self.p + self.q
    }
    pub fn grid_size(&self) -> usize {
        self.grid_size
    }

    pub fn with_grid_size(&self, grid_size: usize) -> Result<Self> {
        Self::with_grid(self.p, self.a, self.q, self.b, grid_size)
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::invalid(
                "scale",
                format!("scale must be positive, got {c}"),
            ));
        }
        let s = c.sqrt();
        Self::with_grid(self.p, self.a * s, self.q, self.b * s, self.grid_size)
    }

    pub fn volume(&self) -> f64 {
        unit_sphere_volume(self.p)
            * self.a.powi(self.p as i32)
            * unit_sphere_volume(self.q)
            * self.b.powi(self.q as i32)
    }

    pub fn scalar_curvature(&self) -> f64 {
        let (p, q) = (self.p as f64, self.q as f64);
        p * (p - 1.0) / (self.a * self.a) + q * (q - 1.0) / (self.b * self.b)
    }

    pub fn ricci_lower_bound(&self) -> f64 {
        let (p, q) = (self.p as f64, self.q as f64);
        ((p - 1.0) / (self.a * self.a)).min((q - 1.0) / (self.b * self.b))
    }

    /// Arc length of the first factor's meridian, `π a`.
    pub fn meridian_length(&self) -> f64 {
        std::f64::consts::PI * self.a
    }
}
