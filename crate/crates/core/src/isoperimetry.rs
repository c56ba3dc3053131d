//! Isoperimetric profiles: the round-sphere profile `h₀`, the diameter factor
//! `A(d)`, the Bérard–Besson–Gallot lower bound and coordinate-ball candidates.
//!
//! The true profile is an infimum over all domains of a given volume fraction.
//! It is never computed here. Only the squeeze between the lower bound and the
//! coordinate-ball upper bound is available.

use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::Metric;
use crate::quadrature::{bisect_increasing, simpson, sine_power_integral};

const BETA_TOL: f64 = 1e-12;
const COSINE_PANELS: usize = 4096;
/// Relative slack when comparing a diameter against `π` or the admissible interval.
const DIAMETER_SLACK: f64 = 1e-12;

/// Sentence attached to every profile output.
pub const PROFILE_NOTE: &str =
    "h_lower and h_candidate bracket the isoperimetric profile; the profile itself is not computed";

/// Which diameter value to feed into `A(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum DiameterChoice {
    /// Myers' upper bound. Always valid, gives the smallest `A`.
    #[default]
    Myers,
    /// Pole-to-pole distance along the meridian, a lower bound on the diameter.
    Pole,
    /// A caller-supplied value inside the admissible interval.
    Value(f64),
}

impl std::str::FromStr for DiameterChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "myers" => Ok(DiameterChoice::Myers),
            "pole" => Ok(DiameterChoice::Pole),
            other => other
                .parse::<f64>()
                .map(DiameterChoice::Value)
                .map_err(|_| {
                    Error::invalid(
                        "d-choice",
                        format!("expected myers, pole or a number, got `{other}`"),
                    )
                }),
        }
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "beta must lie in (0, 1), got {beta}"
        )))
    }
}

/// Boundary area over volume for the geodesic ball of volume fraction `beta` in the unit `Sⁿ`.
pub fn sphere_profile_h0(n: usize, beta: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!(
            "dimension must be at least 2, got {n}"
        )));
    }
    check_beta(beta)?;
    let k = (n - 1) as u32;
    let total = sine_power_integral(k, PI);
    let r = bisect_increasing(
        |r| sine_power_integral(k, r) / total,
        beta,
        0.0,
        PI,
        BETA_TOL,
    );
    Ok(r.sin().powi(k as i32) / total)
}

/// `A(d) = (∫₀^{π/2} cosⁿ⁻¹ / ∫₀^{d/2} cosⁿ⁻¹)^{1/n}`.
#[allow(non_snake_case)]
pub fn diameter_factor_A(n: usize, d: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!(
            "dimension must be at least 2, got {n}"
        )));
    }
    if !(d > 0.0) {
        return Err(Error::domain(format!("diameter must be positive, got {d}")));
    }
    if d > PI * (1.0 + DIAMETER_SLACK) {
        return Err(Error::domain(format!("diameter {d} exceeds π")));
    }
    let d = d.min(PI);
    let k = (n - 1) as i32;
    let integrand = |t: f64| t.cos().powi(k);
    let full = simpson(integrand, 0.0, FRAC_PI_2, COSINE_PANELS);
    let part = if d == PI {
        full
    } else {
        simpson(integrand, 0.0, 0.5 * d, COSINE_PANELS)
    };
    Ok((full / part).powf(1.0 / n as f64))
}

/// Scale `λ` with `Ric(λg) ≥ n − 1`, or `NotApplicable` when `ρ ≤ 0`.
pub fn normalizing_scale(metric: &Metric) -> Result<f64> {
    let rho = metric.ricci_lower_bound();
    if !(rho > 0.0) {
        return Err(Error::NotApplicable(format!(
            "Ricci lower bound {rho} is not positive"
        )));
    }
    Ok(rho / (metric.dimension() as f64 - 1.0))
}

/// Diameter used in `A(d)` for the metric already normalized to `ρ = n − 1`.
pub fn resolve_diameter(normalized: &Metric, choice: DiameterChoice) -> Result<f64> {
    let bounds = normalized.diameter_bounds();
    let high = bounds.high.min(PI);
    match choice {
        DiameterChoice::Myers => Ok(high),
        DiameterChoice::Pole => Ok(bounds.low.min(high)),
        DiameterChoice::Value(d) => {
            if d < bounds.low * (1.0 - DIAMETER_SLACK) || d > high * (1.0 + DIAMETER_SLACK) {
                Err(Error::invalid(
                    "d-choice",
                    format!(
                        "{d} lies outside the admissible diameter interval [{}, {high}]",
                        bounds.low
                    ),
                ))
            } else {
                Ok(d.min(high))
            }
        }
    }
}

/// `√λ · A(d) · h₀(β)` where `λ` normalizes the Ricci bound to `n − 1`.
pub fn bbg_lower_profile(metric: &Metric, beta: f64, d_choice: DiameterChoice) -> Result<f64> {
    check_beta(beta)?;
    let lambda = normalizing_scale(metric)?;
    let normalized = metric.scaled(lambda)?;
    let d = resolve_diameter(&normalized, d_choice)?;
    Ok(lambda.sqrt() * bbg_normalized(metric.dimension(), d, beta)?)
}

/// `A(d) · h₀(β)`, the bound for a metric with `Ric ≥ n − 1` and diameter `d`.
pub fn bbg_normalized(n: usize, d: f64, beta: f64) -> Result<f64> {
    Ok(diameter_factor_A(n, d)? * sphere_profile_h0(n, beta)?)
}

/// Smaller normalized boundary area of the two coordinate balls of volume fraction `beta`.
pub fn coordinate_ball_profile(metric: &Metric, beta: f64) -> Result<f64> {
    if !matches!(metric, Metric::Warped(_)) {
        return Err(Error::invalid(
            "type",
            "coordinate-ball profiles need a warped metric",
        ));
    }
    check_beta(beta)?;
    let model = metric.radial_model();
    let v0 = model.volume();
    let north = model.slice_area(model.ball_radius(beta * v0));
    let south = model.slice_area(model.ball_radius((1.0 - beta) * v0));
    Ok(north.min(south) / v0)
}

/// One row of an isoperimetric sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfileRow {
    pub beta: f64,
    pub h_lower: f64,
    pub h_candidate: f64,
    #[serde(rename = "A")]
    pub a: f64,
    pub d_used: f64,
}

/// `beta = k/(count + 1)` for `k = 1..=count`.
pub fn beta_grid(count: usize) -> Vec<f64> {
    (1..=count).map(|k| k as f64 / (count + 1) as f64).collect()
}

/// Lower bound and candidate at each `beta`, in input order.
pub fn profile_sweep(
    metric: &Metric,
    betas: &[f64],
    d_choice: DiameterChoice,
) -> Result<Vec<ProfileRow>> {
    let lambda = normalizing_scale(metric)?;
    let normalized = metric.scaled(lambda)?;
    let d = resolve_diameter(&normalized, d_choice)?;
    let a = diameter_factor_A(metric.dimension(), d)?;
    betas
        .par_iter()
        .map(|&beta| {
            Ok(ProfileRow {
                beta,
                h_lower: bbg_lower_profile(metric, beta, d_choice)?,
                h_candidate: coordinate_ball_profile(metric, beta)?,
                a,
                d_used: d,
            })
        })
        .collect()
}

/// CSV with header `beta,h_lower,h_candidate,A,d_used`.
pub fn rows_to_csv(rows: &[ProfileRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::WarpedSphereMetric;

    #[test]
    fn hemisphere_and_equator() {
        assert!((sphere_profile_h0(2, 0.5).unwrap() - 0.5).abs() < 1e-12);
        assert!((sphere_profile_h0(3, 0.5).unwrap() - 2.0 / PI).abs() < 1e-12);
    }

    #[test]
    fn h0_complement_symmetry() {
        for n in 2..7 {
            for beta in [0.01, 0.2, 0.37, 0.49] {
                let a = sphere_profile_h0(n, beta).unwrap();
                let b = sphere_profile_h0(n, 1.0 - beta).unwrap();
                assert!((a - b).abs() < 1e-10, "n={n} beta={beta}");
            }
        }
    }

    #[test]
    fn h0_rejects_endpoints() {
        assert!(matches!(sphere_profile_h0(3, 0.0), Err(Error::Domain(_))));
        assert!(matches!(sphere_profile_h0(3, 1.0), Err(Error::Domain(_))));
        assert!(matches!(sphere_profile_h0(1, 0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn diameter_factor_values() {
        for n in 2..8 {
            assert!((diameter_factor_A(n, PI).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((diameter_factor_A(2, FRAC_PI_2).unwrap() - 2f64.powf(0.25)).abs() < 1e-9);
        assert!(diameter_factor_A(3, PI + 1e-6).is_err());
        assert!(diameter_factor_A(3, 0.0).is_err());
    }

    #[test]
    fn bbg_composes_oracles() {
        let h = bbg_normalized(2, FRAC_PI_2, 0.5).unwrap();
        assert!((h - 0.5 * 2f64.powf(0.25)).abs() < 1e-9);
        let m = Metric::round(2).unwrap();
        let h = bbg_lower_profile(&m, 0.5, DiameterChoice::Value(FRAC_PI_2));
        // π/2 is below the pole distance π on the round sphere
        assert!(h.is_err());
        let h = bbg_lower_profile(&m, 0.3, DiameterChoice::Myers).unwrap();
        assert!((h - sphere_profile_h0(2, 0.3).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn candidate_on_round_sphere_is_h0() {
        for n in [2, 3, 4] {
            let m = Metric::round(n).unwrap();
            for beta in [0.05, 0.3, 0.5, 0.8] {
                let c = coordinate_ball_profile(&m, beta).unwrap();
                assert!(
                    (c - sphere_profile_h0(n, beta).unwrap()).abs() < 1e-8,
                    "n={n} beta={beta}"
                );
            }
        }
    }

    #[test]
    fn not_applicable_for_negative_ricci() {
        let m = Metric::Warped(WarpedSphereMetric::perturbed_round(4, 0.4).unwrap());
        assert!(matches!(
            bbg_lower_profile(&m, 0.5, DiameterChoice::Myers),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn parse_choice() {
        assert_eq!(
            "myers".parse::<DiameterChoice>().unwrap(),
            DiameterChoice::Myers
        );
        assert_eq!(
            "2.5".parse::<DiameterChoice>().unwrap(),
            DiameterChoice::Value(2.5)
        );
        assert!("far".parse::<DiameterChoice>().is_err());
    }
}
