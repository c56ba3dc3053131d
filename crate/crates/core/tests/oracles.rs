//! Values checked against independent closed forms.

use std::f64::consts::PI;

use yamabe::geom::round_sphere_volume;
use yamabe::rearrange::{dirichlet_energy, spherical_rearrangement};
use yamabe::yamabe::{einstein_volume_bound, yamabe_constants};
use yamabe::{Metric, RadialFunction, WarpedSphereMetric};

/// `Γ(k/2)` from `Γ(1/2) = √π`, `Γ(1) = 1` and `Γ(x + 1) = xΓ(x)`.
fn gamma_half(k: u32) -> f64 {
    let (mut x, mut g) = if k.is_multiple_of(2) {
        (1.0, 1.0)
    } else {
        (0.5, PI.sqrt())
    };
    while x < k as f64 / 2.0 {
        g *= x;
        x += 1.0;
    }
    g
}

#[test]
fn sphere_volumes_match_gamma_formula() {
    for n in 1..=20u32 {
        let exact = 2.0 * PI.powf((n as f64 + 1.0) / 2.0) / gamma_half(n + 1);
        let v = round_sphere_volume(n as usize).unwrap();
        assert!((v - exact).abs() <= 1e-10 * exact, "n={n}: {v} vs {exact}");
    }
    assert!(round_sphere_volume(0).is_err());
}

#[test]
fn round_constants_from_formula() {
    for n in 3..=12usize {
        let c = yamabe_constants(n).unwrap();
        let nf = n as f64;
        assert_eq!(c.a_n, 4.0 * (nf - 1.0) / (nf - 2.0));
        assert_eq!(c.p_n, 2.0 * nf / (nf - 2.0));
        let v = 2.0 * PI.powf((nf + 1.0) / 2.0) / gamma_half(n as u32 + 1);
        assert!((c.y_n - nf * (nf - 1.0) * v.powf(2.0 / nf)).abs() <= 1e-10 * c.y_n);
    }
}

#[test]
fn fubini_study_volume() {
    // Y(CP², [g₁]) = 12√2 π with Ricci = 6 gives the Fubini–Study volume π²/2
    let v = einstein_volume_bound(12.0 * 2f64.sqrt() * PI, 4, 6.0).unwrap();
    assert!((v - PI * PI / 2.0).abs() <= 1e-12);
}

/// `f = sin r` on round `S²` has `μ{f > t} = 4π cos(arcsin t)`, so its rearrangement
/// on the same sphere satisfies `2π(1 − cos s) = 4π√(1 − t²)`.
#[test]
fn equatorial_bump_rearranges_by_cap_inversion() {
    let m = Metric::round(2).unwrap();
    let f = RadialFunction::from_fn(&m, f64::sin);
    let r = spherical_rearrangement(&m, &f).unwrap();
    assert!((r.target.scale() - 1.0).abs() < 1e-12);
    for (s, v) in r.function.nodes().iter().zip(r.function.values()) {
        let cap = 2.0 * PI * (1.0 - s.cos());
        let exact = if cap >= 4.0 * PI {
            0.0
        } else {
            (1.0 - (cap / (4.0 * PI)).powi(2)).sqrt()
        };
        assert!((v - exact).abs() < 2e-3, "s={s}: {v} vs {exact}");
    }
}

/// Direct midpoint-slope sum at double resolution, independent of the library's cell loop.
#[test]
fn cosine_energy_on_s3() {
    let m = Metric::Warped(
        WarpedSphereMetric::round(3)
            .unwrap()
            .with_grid_size(1024)
            .unwrap(),
    );
    let f = RadialFunction::from_fn(&m, f64::cos);
    let e = dirichlet_energy(&m, &f).unwrap();
    let n = 2 * 1023;
    let h = PI / n as f64;
    let direct: f64 = (0..n)
        .map(|k| {
            let x = (k as f64 + 0.5) * h;
            x.sin().powi(2) * 2.0 * PI * x.sin().powi(2) * h * 2.0
        })
        .sum();
    let exact = 1.5 * PI * PI;
    assert!((direct - exact).abs() < 1e-8 * exact);
    assert!((e - exact).abs() < 1e-5 * exact, "{e} vs {exact}");
}
