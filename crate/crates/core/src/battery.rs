//! The bundled test-function battery.
//!
//! Functions are described in the normalized coordinate `u = r/L ∈ [0, 1]` along
//! the meridian, so the same battery can be sampled on any radial model. The
//! spline entries are monotone cubic (PCHIP) interpolants of knot values drawn
//! once from a seeded generator and stored in `data/battery.json`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::function::RadialFunction;
use crate::geom::Metric;

const BUNDLED: &str = include_str!("../data/battery.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    Constant {
        value: f64,
    },
    /// `2 + cos(πu)`
    Cosine,
    /// `1 + 2(1 − u)²`
    Decreasing,
    /// `1/4 + sin(πu)`
    SineBump,
    /// PCHIP through equally spaced knots on `[0, 1]`.
    Pchip {
        knots: Vec<f64>,
    },
}

impl Shape {
    pub fn eval(&self, u: f64) -> f64 {
        match self {
            Shape::Constant { value } => *value,
            Shape::Cosine => 2.0 + (PI * u).cos(),
            Shape::Decreasing => 1.0 + 2.0 * (1.0 - u) * (1.0 - u),
            Shape::SineBump => 0.25 + (PI * u).sin(),
            Shape::Pchip { knots } => pchip(knots, u),
        }
    }

    /// True when the function is nonincreasing in `u`.
    pub fn is_nonincreasing(&self) -> bool {
        match self {
            Shape::Constant { .. } | Shape::Cosine | Shape::Decreasing => true,
            Shape::SineBump => false,
            Shape::Pchip { knots } => knots.windows(2).all(|w| w[1] <= w[0]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    #[serde(flatten)]
    pub shape: Shape,
}

impl Entry {
    /// Samples on the metric's radial grid, with `u` measured along the whole meridian.
    pub fn sample(&self, metric: &Metric) -> RadialFunction {
        let model = metric.radial_model();
        let length = model.length();
        RadialFunction::on_model(&model, |r| self.shape.eval(r / length))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Battery {
    pub seed: u64,
    pub knots: usize,
    pub functions: Vec<Entry>,
}

impl Battery {
    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.functions.iter().find(|e| e.name == name)
    }

    pub fn splines(&self) -> impl Iterator<Item = &Entry> {
        self.functions
            .iter()
            .filter(|e| matches!(e.shape, Shape::Pchip { .. }))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).unwrap() + "\n"
    }
}

/// The battery versioned with the crate.
pub fn bundled() -> Battery {
    serde_json::from_str(BUNDLED).expect("bundled battery is valid JSON")
}

/// Fritsch–Carlson monotone cubic through equally spaced knots on `[0, 1]`.
pub fn pchip(knots: &[f64], u: f64) -> f64 {
    let m = knots.len();
    if m == 1 {
        return knots[0];
    }
    let h = 1.0 / (m - 1) as f64;
    let slopes: Vec<f64> = knots.windows(2).map(|w| (w[1] - w[0]) / h).collect();
    let tangent = |i: usize| -> f64 {
        if i == 0 {
            return end_tangent(slopes[0], *slopes.get(1).unwrap_or(&slopes[0]));
        }
        if i == m - 1 {
            return end_tangent(
                slopes[m - 2],
                if m > 2 { slopes[m - 3] } else { slopes[m - 2] },
            );
        }
        let (a, b) = (slopes[i - 1], slopes[i]);
        if a * b <= 0.0 {
            0.0
        } else {
            2.0 / (1.0 / a + 1.0 / b)
        }
    };
    let u = u.clamp(0.0, 1.0);
    let k = ((u / h).floor() as usize).min(m - 2);
    let s = (u - k as f64 * h) / h;
    let (y0, y1) = (knots[k], knots[k + 1]);
    let (d0, d1) = (tangent(k) * h, tangent(k + 1) * h);
    let s2 = s * s;
    let s3 = s2 * s;
    (2.0 * s3 - 3.0 * s2 + 1.0) * y0
        + (s3 - 2.0 * s2 + s) * d0
        + (-2.0 * s3 + 3.0 * s2) * y1
        + (s3 - s2) * d1
}

/// One-sided end tangent that keeps the shape monotone.
fn end_tangent(first: f64, second: f64) -> f64 {
    let d = 1.5 * first - 0.5 * second;
    if d * first <= 0.0 {
        0.0
    } else if first * second <= 0.0 && d.abs() > 3.0 * first.abs() {
        3.0 * first
    } else {
        d
    }
}
