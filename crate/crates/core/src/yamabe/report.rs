use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::RadialFunction;
use crate::geom::Metric;
use crate::yamabe::{
    kobayashi_lower_bound, minimize_yamabe_radial, ricci_yamabe_lower_bound, yamabe_constants,
    yamabe_functional, MinimizerOptions,
};

/// Relative slack (in units of `Y_n`) allowed when checking `lb_ricci ≤ ub_numeric`.
pub const CONSISTENCY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReportOptions {
    /// Overrides the metric's grid size when set.
    pub grid_size: Option<usize>,
    pub max_iters: usize,
    pub tol: f64,
    /// Run the radial minimizer; otherwise the upper bound is the constant-function value.
    pub with_minimizer: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        let m = MinimizerOptions::default();
        ReportOptions {
            grid_size: None,
            max_iters: m.max_iters,
            tol: m.tol,
            with_minimizer: true,
        }
    }
}

/// Bounds, constants and verification margins for one metric.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct YamabeReport {
    pub n: usize,
    #[serde(rename = "V0")]
    pub v0: f64,
    pub rho: f64,
    pub inf_scal: f64,
    /// `[pole-to-pole lower bound, Myers upper bound]`; the upper end is `null` when `rho <= 0`.
    pub d_interval: [f64; 2],
    /// `n ρ V^{2/n}`, absent when the Ricci hypothesis fails.
    pub lb_ricci: Option<f64>,
    pub lb_kobayashi: f64,
    /// The Kobayashi value is not a lower bound when `inf_scal > 0`.
    pub kobayashi_informational: bool,
    /// Restricted upper bound: the best value of the functional over the trial functions tried.
    pub ub_numeric: f64,
    pub ub_label: &'static str,
    pub ub_method: &'static str,
    pub ub_converged: bool,
    pub ub_iterations: usize,
    pub const_fn_value: f64,
    #[serde(rename = "Y_n")]
    pub y_n: f64,
    pub a_n: f64,
    pub p_n: f64,
    /// `ub_numeric - lb_ricci`.
    pub margin: Option<f64>,
    /// `margin >= -CONSISTENCY_TOL · Y_n`.
    pub consistent: Option<bool>,
    /// `lb_ricci <= Y_n`, which any metric with `Ricci ≥ ρ > 0` must satisfy.
    pub bishop_consistent: Option<bool>,
    pub applicable: bool,
}

pub fn yamabe_report(metric: &Metric, options: &ReportOptions) -> Result<YamabeReport> {
    let metric = match options.grid_size {
        Some(g) if g != metric.grid_size() => metric.with_grid_size(g)?,
        _ => metric.clone(),
    };
    let n = metric.dimension();
    let constants = yamabe_constants(n)?;
    let v0 = metric.volume();
    let rho = metric.ricci_lower_bound();
    let inf_scal = metric.scalar_curvature_infimum();
    let diam = metric.diameter_bounds();
    let lb_kobayashi = kobayashi_lower_bound(&metric)?;

    let lb_ricci = match ricci_yamabe_lower_bound(&metric) {
        Ok(v) => Some(v),
        Err(Error::NotApplicable(_)) => None,
        Err(e) => return Err(e),
    };

    let const_fn_value = yamabe_functional(&metric, &RadialFunction::constant(&metric, 1.0))?;
    let (ub_numeric, ub_method, ub_converged, ub_iterations) = if options.with_minimizer {
        let out = minimize_yamabe_radial(
            &metric,
            &MinimizerOptions {
                max_iters: options.max_iters,
                tol: options.tol,
            },
        )?;
        let method = if out.iterations == 0 && matches!(metric, Metric::Product(_)) {
            "constant_function"
        } else {
            "radial_descent"
        };
        (
            out.value.min(const_fn_value),
            method,
            out.converged,
            out.iterations,
        )
    } else {
        (const_fn_value, "constant_function", true, 0)
    };

    let margin = lb_ricci.map(|lb| ub_numeric - lb);
    let consistent = margin.map(|m| m >= -CONSISTENCY_TOL * constants.y_n);
    let bishop_consistent = lb_ricci.map(|lb| lb <= constants.y_n * (1.0 + 1e-9));

    Ok(YamabeReport {
        n,
        v0,
        rho,
        inf_scal,
        d_interval: [diam.low, diam.high],
        lb_ricci,
        lb_kobayashi,
        kobayashi_informational: inf_scal > 0.0,
        ub_numeric,
        ub_label: "restricted upper bound",
        ub_method,
        ub_converged,
        ub_iterations,
        const_fn_value,
        y_n: constants.y_n,
        a_n: constants.a_n,
        p_n: constants.p_n,
        margin,
        consistent,
        bishop_consistent,
        applicable: lb_ricci.is_some(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{ProductSphereMetric, WarpedSphereMetric};
    use std::f64::consts::PI;

    #[test]
    fn round_s4_equality() {
        let r = yamabe_report(&Metric::round(4).unwrap(), &ReportOptions::default()).unwrap();
        let lb = r.lb_ricci.unwrap();
        assert!((lb / r.y_n - 1.0).abs() < 1e-6);
        assert!((r.ub_numeric / r.y_n - 1.0).abs() < 0.01);
        assert!(r.margin.unwrap().abs() < 0.01 * r.y_n);
        assert_eq!(r.consistent, Some(true));
    }

    #[test]
    fn perturbed_warp_margin_is_nonnegative() {
        let m = Metric::Warped(WarpedSphereMetric::perturbed_round(4, 0.1).unwrap());
        let r = yamabe_report(&m, &ReportOptions::default()).unwrap();
        assert!(r.applicable);
        assert!(r.margin.unwrap() >= 0.0);
        assert_eq!(r.bishop_consistent, Some(true));
    }

    #[test]
    fn product_gap() {
        let m = Metric::Product(ProductSphereMetric::s2xs2(4.0).unwrap());
        let r = yamabe_report(&m, &ReportOptions::default()).unwrap();
        assert!((r.rho - 0.25).abs() < 1e-12);
        assert!((r.lb_ricci.unwrap() - 8.0 * PI).abs() < 1e-9);
        assert!((r.const_fn_value - 20.0 * PI).abs() < 1e-9);
        assert!(r.lb_ricci.unwrap() < r.lb_kobayashi);
        assert_eq!(r.ub_method, "constant_function");
    }

    #[test]
    fn not_applicable_still_reports() {
        let m = Metric::Warped(WarpedSphereMetric::perturbed_round(4, 0.4).unwrap());
        let r = yamabe_report(
            &m,
            &ReportOptions {
                with_minimizer: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!r.applicable);
        assert!(r.lb_ricci.is_none() && r.margin.is_none());
        let json = serde_json::to_value(&r).unwrap();
        assert!(json["d_interval"][1].is_null());
    }
}
