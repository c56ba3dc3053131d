use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::function::RadialFunction;
use crate::geom::{round_sphere_volume, Metric, RadialModel, Warp, WarpedSphereMetric};
use crate::rearrange::levels::Superlevels;

/// Target nodes per source cell.
pub const DEFAULT_REFINE: usize = 2;

const BISECTION_STEPS: usize = 200;

/// A function on the volume-matched round sphere together with that sphere.
#[derive(Debug, Clone)]
pub struct Rearrangement {
    pub target: WarpedSphereMetric,
    pub function: RadialFunction,
}

impl Rearrangement {
    pub fn target_metric(&self) -> Metric {
        Metric::Warped(self.target.clone())
    }
}

/// Spherical rearrangement onto a target grid twice as fine as the source.
pub fn spherical_rearrangement(metric: &Metric, f: &RadialFunction) -> Result<Rearrangement> {
    spherical_rearrangement_refined(metric, f, DEFAULT_REFINE)
}

/// Spherical rearrangement with `refine` target cells per source cell.
pub fn spherical_rearrangement_refined(
    metric: &Metric,
    f: &RadialFunction,
    refine: usize,
) -> Result<Rearrangement> {
    if refine == 0 {
        return Err(Error::invalid("refine", "must be at least 1"));
    }
    let model = metric.radial_model();
    let samples = f.samples_on(&model)?;
    let n = model.dimension();
    let v0 = model.volume();
    let scale = (v0 / round_sphere_volume(n)?).powf(2.0 / n as f64);
    let grid = refine * (model.len() - 1) + 1;
    let target = WarpedSphereMetric::new(n, PI, Warp::round(), grid, scale)?;
    let target_model = RadialModel::new(&Metric::Warped(target.clone()));
    let ratio = v0 / target_model.volume();
    let balls: Vec<f64> = target_model
        .cumulative_volumes()
        .iter()
        .map(|v| v * ratio)
        .collect();

    let values = rearranged_values(&Superlevels::new(&model, &samples), &balls);
    let function = RadialFunction::on_model(&target_model, |_| 0.0).with_values(values);
    Ok(Rearrangement { target, function })
}

/// Cells that are entirely above or straddle the open interval `(lo, hi)`.
struct Bracket {
    lo: f64,
    hi: f64,
    full: f64,
    crossing: Vec<usize>,
}

impl Bracket {
    fn new(sl: &Superlevels, lo: f64, hi: f64) -> Self {
        let f = sl.samples();
        let mut full = 0.0;
        let mut crossing = Vec::new();
        for k in 0..sl.model().cells() {
            let (a, b) = (f[k].min(f[k + 1]), f[k].max(f[k + 1]));
            if a >= hi {
                full += sl.model().cell_volume(k);
            } else if b >= hi && a <= lo {
                crossing.push(k);
            }
        }
        Bracket {
            lo,
            hi,
            full,
            crossing,
        }
    }

    fn measure(&self, sl: &Superlevels, t: f64) -> f64 {
        self.full
            + self
                .crossing
                .iter()
                .map(|&k| sl.cell_part(k, t))
                .sum::<f64>()
    }
}

/// `f_*` at the given ball volumes: the smallest `t` with `μ{f > t} ≤ v`.
fn rearranged_values(sl: &Superlevels, balls: &[f64]) -> Vec<f64> {
    let mut levels = sl.samples().to_vec();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    let at_levels: Vec<f64> = levels.iter().map(|&t| sl.measure(t)).collect();

    let mut bracket: Option<(usize, Bracket)> = None;
    balls
        .iter()
        .map(|&v| {
            let j = at_levels.partition_point(|&m| m > v);
            if j == 0 {
                return levels[0];
            }
            let (lo, hi) = (levels[j - 1], levels[j]);
            if bracket.as_ref().map(|(i, _)| *i) != Some(j) {
                bracket = Some((j, Bracket::new(sl, lo, hi)));
            }
            let b = &bracket.as_ref().unwrap().1;
            // the bracket's measure evaluated at `hi` is the left limit μ(hi−);
            // volumes below it sit on the plateau or jump at `hi`
            if v < b.measure(sl, hi) {
                return hi;
            }
            let (mut a, mut c) = (b.lo, b.hi);
            for _ in 0..BISECTION_STEPS {
                let mid = 0.5 * (a + c);
                if mid <= a || mid >= c {
                    break;
                }
                if b.measure(sl, mid) > v {
                    a = mid;
                } else {
                    c = mid;
                }
            }
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::round_sphere_volume;

    fn lq(metric: &Metric, f: &RadialFunction, q: f64) -> f64 {
        let model = metric.radial_model();
        model.integrate(&f.samples_on(&model).unwrap(), |x| x.abs().powf(q))
    }

    #[test]
    fn constant_stays_constant() {
        let m = Metric::Warped(WarpedSphereMetric::perturbed_round(4, 0.1).unwrap());
        let r = spherical_rearrangement(&m, &RadialFunction::constant(&m, 1.5)).unwrap();
        assert!(r.function.values().iter().all(|&v| v == 1.5));
        let vt = r.target_metric().volume();
        assert!((vt - m.volume()).abs() < 1e-9 * vt);
        let expected = (m.volume() / round_sphere_volume(4).unwrap()).powf(0.5);
        assert!((r.target.scale() - expected).abs() < 1e-14);
    }

    #[test]
    fn monotone_on_round_sphere_is_fixed() {
        let m = Metric::round(3).unwrap();
        let f = RadialFunction::from_fn(&m, |r| 1.0 + r.cos().powi(3) + 0.5 * (PI - r));
        let r = spherical_rearrangement(&m, &f).unwrap();
        for (x, v) in r.function.nodes().iter().zip(r.function.values()) {
            assert!((v - f.eval(*x)).abs() < 1e-9, "x={x}");
        }
    }

    #[test]
    fn preserves_norms_and_is_nonincreasing() {
        let m = Metric::Warped(
            WarpedSphereMetric::perturbed_round(4, 0.05)
                .unwrap()
                .with_grid_size(2048)
                .unwrap(),
        );
        let f =
            RadialFunction::from_fn(&m, |r| 1.5 + (2.0 * r).sin() * 0.7 + 0.2 * (5.0 * r).cos());
        let r = spherical_rearrangement(&m, &f).unwrap();
        assert!(r.function.values().windows(2).all(|w| w[1] <= w[0]));
        let tm = r.target_metric();
        for q in [1.0, 2.0, 4.0] {
            let (a, b) = (lq(&m, &f, q), lq(&tm, &r.function, q));
            assert!((a - b).abs() < 1e-6 * a, "q={q}: {a} vs {b}");
        }
        assert_eq!(r.function.values()[0], f.max());
        assert_eq!(*r.function.values().last().unwrap(), f.min());
    }

    #[test]
    fn plateau_becomes_flat_annulus() {
        let m = Metric::round(2).unwrap();
        let f = RadialFunction::from_fn(&m, |r| {
            if r < 1.0 {
                2.0
            } else {
                1.0 + (PI - r) / (PI - 1.0)
            }
        });
        let r = spherical_rearrangement(&m, &f).unwrap();
        let tm = r.target_metric();
        assert!((lq(&m, &f, 2.0) - lq(&tm, &r.function, 2.0)).abs() < 1e-6 * lq(&m, &f, 2.0));
        let flat = r.function.values().iter().filter(|&&v| v == 2.0).count();
        assert!(flat > 100);
    }
}
