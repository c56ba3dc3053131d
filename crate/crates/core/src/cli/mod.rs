//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Every invocation produces a single JSON object or a CSV table with a header.
//! Exit codes: 0 ok, 1 a check failed, 2 bad input, 3 the positive-Ricci
//! hypothesis fails (the output is still written, with `applicable: false`).

mod output;
mod sweep;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::battery;
use crate::error::{Error, Result};
use crate::function::RadialFunction;
use crate::geom::Metric;
use crate::isoperimetry::{beta_grid, profile_sweep, rows_to_csv, DiameterChoice, PROFILE_NOTE};
use crate::rearrange::{distribution_profile, gradient_comparison, spherical_rearrangement};
use crate::yamabe::{yamabe_constants, yamabe_report, ReportOptions};

pub use output::Output;
use output::{object_to_csv, rows_to_csv_table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "yamabe",
    version,
    about = "Ricci lower bounds on Yamabe constants, checked numerically"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct MetricArgs {
    /// Metric specification as JSON, or `@path` to read it from a file.
    #[arg(long)]
    pub metric: String,
    /// Override the metric's radial grid size.
    #[arg(long)]
    pub grid_size: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of a_n, p_n, V_n and Y_n.
    Constants {
        /// A single dimension; otherwise 3..=max-n.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Lower and upper bounds on the Yamabe constant of one metric.
    Report {
        #[command(flatten)]
        metric: MetricArgs,
        /// Relative-decrease stopping tolerance of the radial minimizer.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        max_iters: Option<usize>,
        /// Use only the constant trial function for the upper bound.
        #[arg(long)]
        no_minimizer: bool,
    },
    /// Bounds over a one-parameter family.
    Sweep {
        #[arg(long, value_enum)]
        family: sweep::Family,
        /// `delta` for products, `eps` for warps.
        #[arg(long)]
        param: String,
        /// `start:stop:step`, both ends included.
        #[arg(long)]
        range: String,
        /// Dimension of the warp family.
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long)]
        grid_size: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Spherical rearrangement of a radial function and its distribution profile.
    Rearrange {
        #[command(flatten)]
        metric: MetricArgs,
        /// Battery function name, or a `{"nodes":[..],"values":[..]}` object (inline or `@path`).
        #[arg(long, default_value = "cos")]
        function: String,
        /// Approximate number of levels in the distribution profile.
        #[arg(long, default_value_t = 64)]
        levels: usize,
    },
    /// Lower bound and coordinate-ball candidate for the isoperimetric profile.
    Isoprofile {
        #[command(flatten)]
        metric: MetricArgs,
        /// Number of volume fractions in (0, 1).
        #[arg(long, default_value_t = 50)]
        levels: usize,
        /// `myers`, `pole`, or an explicit diameter of the normalized metric.
        #[arg(long, default_value = "myers")]
        d_choice: DiameterChoice,
    },
    /// Energy comparison for every function in the bundled battery.
    VerifyChain {
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(long, default_value = "myers")]
        d_choice: DiameterChoice,
    },
}

/// Parse arguments, run the command, and collect what it would print.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output::error(code, text)
            } else {
                Output::text(code, text)
            };
        }
    };
    let result = execute(&cli);
    let mut out = match result {
        Ok(out) => out,
        Err(e) => return Output::error(EXIT_INPUT, format!("error: {e}\n")),
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &out.stdout) {
            return Output::error(EXIT_INPUT, format!("error: invalid `out`: {e}\n"));
        }
        out.stdout.clear();
    }
    out
}

fn execute(cli: &Cli) -> Result<Output> {
    let json_default = |f: Option<Format>| f.unwrap_or(Format::Json);
    match &cli.command {
        Command::Constants { n, max_n } => constants(*n, *max_n, json_default(cli.format)),
        Command::Report {
            metric,
            tol,
            max_iters,
            no_minimizer,
        } => {
            let metric = load_metric(metric)?;
            let mut options = ReportOptions {
                with_minimizer: !no_minimizer,
                ..ReportOptions::default()
            };
            if let Some(t) = tol {
                options.tol = check_tol(*t)?;
            }
            if let Some(m) = max_iters {
                options.max_iters = *m;
            }
            report(&metric, &options, json_default(cli.format))
        }
        Command::Sweep {
            family,
            param,
            range,
            n,
            grid_size,
            tol,
        } => {
            let spec = sweep::SweepSpec::new(
                *family,
                param,
                range,
                *n,
                *grid_size,
                tol.map(check_tol).transpose()?,
            )?;
            spec.run(cli.format.unwrap_or(Format::Csv))
        }
        Command::Rearrange {
            metric,
            function,
            levels,
        } => {
            let metric = load_metric(metric)?;
            rearrange(&metric, function, *levels, json_default(cli.format))
        }
        Command::Isoprofile {
            metric,
            levels,
            d_choice,
        } => {
            let metric = load_metric(metric)?;
            isoprofile(
                &metric,
                *levels,
                *d_choice,
                cli.format.unwrap_or(Format::Csv),
            )
        }
        Command::VerifyChain { metric, d_choice } => {
            let metric = load_metric(metric)?;
            verify_chain(&metric, *d_choice, json_default(cli.format))
        }
    }
}

fn check_tol(tol: f64) -> Result<f64> {
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(Error::invalid(
            "tol",
            format!("must be positive, got {tol}"),
        ))
    }
}

/// Inline JSON, or `@path`.
fn read_spec(text: &str, field: &str) -> Result<String> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(field, format!("cannot read {path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

pub fn load_metric(args: &MetricArgs) -> Result<Metric> {
    let metric = Metric::from_json_str(&read_spec(&args.metric, "metric")?)?;
    match args.grid_size {
        Some(g) => metric.with_grid_size(g),
        None => Ok(metric),
    }
}

fn constants(n: Option<usize>, max_n: usize, format: Format) -> Result<Output> {
    let dims: Vec<usize> = match n {
        Some(n) => vec![n],
        None => (3..=max_n).collect(),
    };
    let table = dims
        .iter()
        .map(|&d| yamabe_constants(d).map_err(|e| Error::invalid("n", e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Ok(match format {
        Format::Json => Output::json(EXIT_OK, &json!({ "constants": table })),
        Format::Csv => Output::text(EXIT_OK, rows_to_csv_table(&table)),
    })
}

fn report(metric: &Metric, options: &ReportOptions, format: Format) -> Result<Output> {
    let report = yamabe_report(metric, options)?;
    let code = if !report.applicable {
        EXIT_NOT_APPLICABLE
    } else if report.consistent == Some(false) || report.bishop_consistent == Some(false) {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    let value = serde_json::to_value(&report).unwrap();
    Ok(match format {
        Format::Json => Output::json(code, &value),
        Format::Csv => Output::text(code, object_to_csv(&value)),
    })
}

fn load_function(metric: &Metric, spec: &str) -> Result<RadialFunction> {
    if let Some(entry) = battery::bundled().get(spec) {
        return Ok(entry.sample(metric));
    }
    let text = read_spec(spec, "function")?;
    let f: RadialFunction = serde_json::from_str(&text).map_err(|e| {
        Error::invalid(
            "function",
            format!("not a battery name or a radial function object: {e}"),
        )
    })?;
    let f = RadialFunction::new(f.nodes().to_vec(), f.values().to_vec())?;
    let model = metric.radial_model();
    let values = f.samples_on(&model)?;
    Ok(RadialFunction::on_model(&model, |_| 0.0).with_values(values))
}

fn rearrange(metric: &Metric, function: &str, levels: usize, format: Format) -> Result<Output> {
    let f = load_function(metric, function)?;
    let profile = distribution_profile(metric, &f, levels)?;
    let r = spherical_rearrangement(metric, &f)?;
    Ok(match format {
        Format::Json => Output::json(
            EXIT_OK,
            &json!({
                "volume": profile.volume,
                "target": r.target_metric().to_json(),
                "f_star": r.function,
                "profile": { "t": profile.levels, "mu": profile.measures },
            }),
        ),
        Format::Csv => Output::text(EXIT_OK, profile.to_csv()),
    })
}

fn not_applicable(reason: &Error, format: Format, csv_header: &str) -> Output {
    match format {
        Format::Json => Output::json(
            EXIT_NOT_APPLICABLE,
            &json!({ "applicable": false, "reason": reason.to_string() }),
        ),
        Format::Csv => Output::text(EXIT_NOT_APPLICABLE, format!("{csv_header}\n")),
    }
}

fn isoprofile(
    metric: &Metric,
    levels: usize,
    d_choice: DiameterChoice,
    format: Format,
) -> Result<Output> {
    if levels == 0 {
        return Err(Error::invalid("levels", "need at least one beta value"));
    }
    let rows = match profile_sweep(metric, &beta_grid(levels), d_choice) {
        Err(e @ Error::NotApplicable(_)) => {
            return Ok(not_applicable(
                &e,
                format,
                "beta,h_lower,h_candidate,A,d_used",
            ))
        }
        other => other?,
    };
    Ok(match format {
        Format::Json => Output::json(
            EXIT_OK,
            &json!({ "applicable": true, "note": PROFILE_NOTE, "rows": rows }),
        ),
        Format::Csv => Output::text(EXIT_OK, rows_to_csv(&rows)),
    })
}

fn verify_chain(metric: &Metric, d_choice: DiameterChoice, format: Format) -> Result<Output> {
    let battery = battery::bundled();
    let results: Vec<Result<Value>> = battery
        .functions
        .par_iter()
        .map(|entry| {
            let c = gradient_comparison(metric, &entry.sample(metric), d_choice)?;
            Ok(json!({
                "name": entry.name,
                "nonincreasing": entry.shape.is_nonincreasing(),
                "lhs": c.lhs,
                "rhs": c.rhs,
                "ratio": c.ratio,
                "ok": c.ok,
                "A": c.a,
                "d_used": c.d_used,
                "scale": c.scale,
            }))
        })
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Err(e @ Error::NotApplicable(_)) => {
                return Ok(not_applicable(&e, format, "name,lhs,rhs,ratio,ok"))
            }
            other => rows.push(other?),
        }
    }
    let all_ok = rows.iter().all(|r| r["ok"] == Value::Bool(true));
    let code = if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok(match format {
        Format::Json => Output::json(
            code,
            &json!({ "applicable": true, "all_ok": all_ok, "results": rows }),
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "lhs", "rhs", "ratio", "ok"])
                .unwrap();
            for r in &rows {
                w.write_record([
                    r["name"].as_str().unwrap().to_string(),
                    r["lhs"].to_string(),
                    r["rhs"].to_string(),
                    r["ratio"].to_string(),
                    r["ok"].to_string(),
                ])
                .unwrap();
            }
            Output::text(code, String::from_utf8(w.into_inner().unwrap()).unwrap())
        }
    })
}
