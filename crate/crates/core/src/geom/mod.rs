//! Metric backends with exactly computable volume, curvature and diameter bounds.
//!
//! Two families are supported: rotationally symmetric metrics
//! `c · (dr² + φ(r)² g_{S^{n-1}})` on `Sⁿ` ([`WarpedSphereMetric`]) and products of
//! round spheres ([`ProductSphereMetric`]). Both reduce to one-dimensional
//! quadrature through [`RadialModel`].

mod product;
mod radial;
mod warped;

use std::sync::OnceLock;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::quadrature::simpson;

pub use product::ProductSphereMetric;
pub use radial::RadialModel;
pub use warped::{
    Warp, WarpedSphereMetric, CLOSURE_TOL, DEFAULT_GRID_SIZE, MIN_GRID_SIZE, POLE_MARGIN,
};

const SPHERE_PANELS: usize = 4096;
const SPHERE_TABLE: usize = 64;

fn sphere_volume_uncached(n: usize) -> f64 {
    let mut v = 2.0;
    for k in 1..=n {
        v *= simpson(
            |t: f64| t.sin().powi(k as i32 - 1),
            0.0,
            std::f64::consts::PI,
            SPHERE_PANELS,
        );
    }
    v
}

/// Volume of the unit round sphere `S^n` (`n = 0` gives the two-point sphere).
pub(crate) fn unit_sphere_volume(n: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = vec![2.0];
        for k in 1..SPHERE_TABLE {
            let prev = t[k - 1];
            t.push(
                prev * simpson(
                    |x: f64| x.sin().powi(k as i32 - 1),
                    0.0,
                    std::f64::consts::PI,
                    SPHERE_PANELS,
                ),
            );
        }
        t
    });
    table
        .get(n)
        .copied()
        .unwrap_or_else(|| sphere_volume_uncached(n))
}

/// Volume `V_n` of the unit round sphere, by the recursion `V_n = V_{n-1} ∫₀^π sin^{n-1}`.
pub fn round_sphere_volume(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("round sphere volume needs n >= 1"));
    }
    Ok(unit_sphere_volume(n))
}

/// Interval containing the diameter. `high` is `+∞` when Myers' theorem does not apply.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiameterBounds {
    pub low: f64,
    pub high: f64,
}

/// Scalar curvature sampled along the meridian, or a constant.
#[derive(Debug, Clone, PartialEq)]
pub enum CurvatureProfile {
    Sampled(Vec<f64>),
    Constant(f64),
}

impl CurvatureProfile {
    pub fn min(&self) -> f64 {
        match self {
            CurvatureProfile::Sampled(v) => v.iter().copied().fold(f64::INFINITY, f64::min),
            CurvatureProfile::Constant(c) => *c,
        }
    }
    pub fn max(&self) -> f64 {
        match self {
            CurvatureProfile::Sampled(v) => v.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            CurvatureProfile::Constant(c) => *c,
        }
    }
}

/// A metric from the model family.
#[derive(Debug, Clone, PartialEq)]
pub enum Metric {
    Warped(WarpedSphereMetric),
    Product(ProductSphereMetric),
}

impl From<WarpedSphereMetric> for Metric {
    fn from(m: WarpedSphereMetric) -> Self {
        Metric::Warped(m)
    }
}

impl From<ProductSphereMetric> for Metric {
    fn from(m: ProductSphereMetric) -> Self {
        Metric::Product(m)
    }
}

impl Metric {
    pub fn round(n: usize) -> Result<Self> {
        WarpedSphereMetric::round(n).map(Metric::Warped)
    }

    pub fn dimension(&self) -> usize {
        match self {
            Metric::Warped(m) => m.dimension(),
            Metric::Product(m) => m.dimension(),
        }
    }

    pub fn grid_size(&self) -> usize {
        match self {
            Metric::Warped(m) => m.grid_size(),
            Metric::Product(m) => m.grid_size(),
        }
    }

    pub fn with_grid_size(&self, grid_size: usize) -> Result<Self> {
        match self {
            Metric::Warped(m) => m.with_grid_size(grid_size).map(Metric::Warped),
            Metric::Product(m) => m.with_grid_size(grid_size).map(Metric::Product),
        }
    }

    /// The metric `c · g`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        match self {
            Metric::Warped(m) => m.scaled(c).map(Metric::Warped),
            Metric::Product(m) => m.scaled(c).map(Metric::Product),
        }
    }

    /// `c^{n/2} ω_{n-1} ∫₀^L φ^{n-1} dr` for warped metrics, `V_p(a) V_q(b)` for products.
    pub fn volume(&self) -> f64 {
        match self {
            Metric::Warped(_) => RadialModel::new(self).volume(),
            Metric::Product(m) => m.volume(),
        }
    }

    pub fn scalar_curvature_profile(&self) -> CurvatureProfile {
        match self {
            Metric::Warped(m) => CurvatureProfile::Sampled(m.scalar_curvature_profile()),
            Metric::Product(m) => CurvatureProfile::Constant(m.scalar_curvature()),
        }
    }

    /// Infimum of the scalar curvature over the scanned interior.
    pub fn scalar_curvature_infimum(&self) -> f64 {
        match self {
            Metric::Warped(m) => m.scalar_curvature_infimum(),
            Metric::Product(m) => m.scalar_curvature(),
        }
    }

    /// Smallest Ricci eigenvalue. May be non-positive.
    pub fn ricci_lower_bound(&self) -> f64 {
        match self {
            Metric::Warped(m) => m.ricci_lower_bound(),
            Metric::Product(m) => m.ricci_lower_bound(),
        }
    }

    /// Pole-to-pole distance (or the longer factor's diameter) below, Myers above.
    pub fn diameter_bounds(&self) -> DiameterBounds {
        let n = self.dimension() as f64;
        let rho = self.ricci_lower_bound();
        let high = if rho > 0.0 {
            std::f64::consts::PI * ((n - 1.0) / rho).sqrt()
        } else {
            f64::INFINITY
        };
        let low = match self {
            Metric::Warped(m) => m.scale().sqrt() * m.length(),
            Metric::Product(m) => {
                let (_, a, _, b) = m.factors();
                std::f64::consts::PI * a.max(b)
            }
        };
        DiameterBounds { low, high }
    }

    pub fn radial_model(&self) -> RadialModel {
        RadialModel::new(self)
    }

    /// Parse a metric specification such as `{"type":"round","n":4}`.
    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::invalid("metric", "expected a JSON object"))?;
        let kind = obj
            .get("type")
            .ok_or_else(|| Error::invalid("type", "missing field"))?
            .as_str()
            .ok_or_else(|| Error::invalid("type", "expected a string"))?;
        let grid_size = opt_usize(obj, "grid_size")?.unwrap_or(DEFAULT_GRID_SIZE);
        let scale = opt_f64(obj, "scale")?.unwrap_or(1.0);
        match kind {
            "round" => {
                let n = req_usize(obj, "n")?;
                let w = WarpedSphereMetric::new(
                    n,
                    std::f64::consts::PI,
                    Warp::round(),
                    grid_size,
                    scale,
                )?;
                Ok(Metric::Warped(w))
            }
            "warped" => {
                let n = req_usize(obj, "n")?;
                let length = opt_f64(obj, "L")?.unwrap_or(std::f64::consts::PI);
                let eps = opt_f64(obj, "eps")?;
                let warp = match obj.get("phi") {
                    None => return Err(Error::invalid("phi", "missing field")),
                    Some(Value::String(s)) if s == "sin" => Warp::Sine {
                        eps: eps.unwrap_or(0.0),
                    },
                    Some(Value::String(s)) => {
                        return Err(Error::invalid(
                            "phi",
                            format!("unknown closed form `{s}`, expected \"sin\""),
                        ))
                    }
                    Some(Value::Array(items)) => {
                        if eps.is_some() {
                            return Err(Error::invalid(
                                "eps",
                                "only allowed with \"phi\": \"sin\"",
                            ));
                        }
                        let samples = items
                            .iter()
                            .enumerate()
                            .map(|(i, v)| {
                                v.as_f64().ok_or_else(|| {
                                    Error::invalid("phi", format!("sample {i} is not a number"))
                                })
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Warp::Samples(samples)
                    }
                    Some(_) => {
                        return Err(Error::invalid(
                            "phi",
                            "expected \"sin\" or an array of samples",
                        ))
                    }
                };
                Ok(Metric::Warped(WarpedSphereMetric::new(
                    n, length, warp, grid_size, scale,
                )?))
            }
            "product" => {
                let p = req_usize(obj, "p")?;
                let q = req_usize(obj, "q")?;
                let a = req_f64(obj, "a")?;
                let b = req_f64(obj, "b")?;
                let m = ProductSphereMetric::with_grid(p, a, q, b, grid_size)?;
                if scale != 1.0 {
                    return m.scaled(scale).map(Metric::Product);
                }
                Ok(Metric::Product(m))
            }
            other => Err(Error::invalid(
                "type",
                format!("unknown metric type `{other}`, expected round|warped|product"),
            )),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::invalid("metric", format!("malformed JSON: {e}")))?;
        Self::from_json(&value)
    }

    /// Specification that parses back to this metric.
    pub fn to_json(&self) -> Value {
        match self {
            Metric::Warped(m) => {
                let mut v = json!({
                    "type": "warped",
                    "n": m.dimension(),
                    "L": m.length(),
                    "grid_size": m.grid_size(),
                    "scale": m.scale(),
                });
                match m.warp() {
                    Warp::Sine { eps } => {
                        v["phi"] = json!("sin");
                        v["eps"] = json!(eps);
                    }
                    Warp::Samples(s) => v["phi"] = json!(s),
                }
                v
            }
            Metric::Product(m) => {
                let (p, a, q, b) = m.factors();
                json!({"type": "product", "p": p, "a": a, "q": q, "b": b, "grid_size": m.grid_size()})
            }
        }
    }
}

type Obj = serde_json::Map<String, Value>;

fn opt_f64(obj: &Obj, key: &str) -> Result<Option<f64>> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => v
            .as_f64()
            .map(Some)
            .ok_or_else(|| Error::invalid(key, "expected a number")),
    }
}

fn req_f64(obj: &Obj, key: &str) -> Result<f64> {
    opt_f64(obj, key)?.ok_or_else(|| Error::invalid(key, "missing field"))
}

fn opt_usize(obj: &Obj, key: &str) -> Result<Option<usize>> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => v
            .as_u64()
            .map(|x| Some(x as usize))
            .ok_or_else(|| Error::invalid(key, "expected a non-negative integer")),
    }
}

fn req_usize(obj: &Obj, key: &str) -> Result<usize> {
    opt_usize(obj, key)?.ok_or_else(|| Error::invalid(key, "missing field"))
}
