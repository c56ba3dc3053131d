use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::cli::output::{rows_to_csv_table, Output};
use crate::cli::{Format, EXIT_CHECK_FAILED, EXIT_OK};
use crate::error::{Error, Result};
use crate::geom::{Metric, ProductSphereMetric, WarpedSphereMetric};
use crate::yamabe::{yamabe_report, ReportOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `S² × S²` with radii `√δ` and `1`.
    Product,
    /// Warped spheres `φ = sin r (1 + ε sin² r)`.
    Warp,
}

/// Parameter values `start, start + step, ..., stop`.
pub fn parse_range(range: &str) -> Result<Vec<f64>> {
    let bad = |why: &str| {
        Error::invalid(
            "range",
            format!("{why}; expected start:stop:step, got `{range}`"),
        )
    };
    let parts: Vec<f64> = range
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad("not a number")))
        .collect::<Result<_>>()?;
    let [start, stop, step] = parts[..] else {
        return Err(bad("need three fields"));
    };
    if !(step > 0.0) || !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(bad("need start <= stop and a positive step"));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    if count > 100_000 {
        return Err(bad("too many points"));
    }
    // rounding to 12 decimals keeps 0.1 steps printing as typed
    Ok((0..=count)
        .map(|k| ((start + k as f64 * step) * 1e12).round() / 1e12)
        .collect())
}

#[derive(Debug)]
pub struct SweepSpec {
    family: Family,
    values: Vec<f64>,
    n: usize,
    grid_size: Option<usize>,
    tol: Option<f64>,
}

#[derive(Debug, Serialize)]
struct ProductRow {
    delta: f64,
    rho: f64,
    #[serde(rename = "V")]
    v: f64,
    lb_ricci: f64,
    const_fn_value: f64,
}

#[derive(Debug, Serialize)]
struct WarpRow {
    eps: f64,
    rho: f64,
    #[serde(rename = "V")]
    v: f64,
    lb_ricci: Option<f64>,
    const_fn_value: f64,
    ub_numeric: f64,
    margin: Option<f64>,
    applicable: bool,
    #[serde(skip)]
    consistent: bool,
}

impl SweepSpec {
    pub fn new(
        family: Family,
        param: &str,
        range: &str,
        n: usize,
        grid_size: Option<usize>,
        tol: Option<f64>,
    ) -> Result<Self> {
        let expected = match family {
            Family::Product => "delta",
            Family::Warp => "eps",
        };
        if param != expected {
            return Err(Error::invalid(
                "param",
                format!("the {family:?} family is swept over `{expected}`, got `{param}`"),
            ));
        }
        Ok(SweepSpec {
            family,
            values: parse_range(range)?,
            n,
            grid_size,
            tol,
        })
    }

    fn options(&self) -> ReportOptions {
        let mut o = ReportOptions {
            grid_size: self.grid_size,
            ..ReportOptions::default()
        };
        if let Some(t) = self.tol {
            o.tol = t;
        }
        o
    }

    pub fn run(&self, format: Format) -> Result<Output> {
        match self.family {
            Family::Product => {
                let rows = self
                    .values
                    .par_iter()
                    .map(|&delta| {
                        let metric = Metric::Product(
                            ProductSphereMetric::s2xs2(delta).map_err(rename_param("delta"))?,
                        );
                        let r = yamabe_report(&metric, &self.options())?;
                        Ok(ProductRow {
                            delta,
                            rho: r.rho,
                            v: r.v0,
                            lb_ricci: r.lb_ricci.unwrap_or(f64::NAN),
                            const_fn_value: r.const_fn_value,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(emit(format, EXIT_OK, "delta", &rows))
            }
            Family::Warp => {
                let rows = self
                    .values
                    .par_iter()
                    .map(|&eps| {
                        let mut warped = WarpedSphereMetric::perturbed_round(self.n, eps)
                            .map_err(rename_param("eps"))?;
                        if let Some(g) = self.grid_size {
                            warped = warped.with_grid_size(g)?;
                        }
                        let r = yamabe_report(&Metric::Warped(warped), &self.options())?;
                        Ok(WarpRow {
                            eps,
                            rho: r.rho,
                            v: r.v0,
                            lb_ricci: r.lb_ricci,
                            const_fn_value: r.const_fn_value,
                            ub_numeric: r.ub_numeric,
                            margin: r.margin,
                            applicable: r.applicable,
                            consistent: r.consistent != Some(false),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let code = if rows.iter().all(|r| r.consistent) {
                    EXIT_OK
                } else {
                    EXIT_CHECK_FAILED
                };
                Ok(emit(format, code, "eps", &rows))
            }
        }
    }
}

fn rename_param(name: &'static str) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Invalid { reason, .. } => Error::invalid(name, reason),
        Error::Domain(reason) => Error::invalid(name, reason),
        other => other,
    }
}

fn emit<T: Serialize>(format: Format, code: i32, param: &str, rows: &[T]) -> Output {
    match format {
        Format::Csv => Output::text(code, rows_to_csv_table(rows)),
        Format::Json => Output::json(code, &json!({ "param": param, "rows": rows })),
    }
}
