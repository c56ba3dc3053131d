use proptest::prelude::*;

use yamabe::battery::pchip;
use yamabe::isoperimetry::{
    bbg_lower_profile, coordinate_ball_profile, diameter_factor_A, sphere_profile_h0,
    DiameterChoice,
};
use yamabe::rearrange::{
    distribution_profile, gradient_comparison, spherical_rearrangement, superlevel_volume,
};
use yamabe::yamabe::{
    einstein_volume_bound, ricci_yamabe_lower_bound, yamabe_constants, yamabe_functional,
};
use yamabe::{Metric, ProductSphereMetric, RadialFunction, WarpedSphereMetric};

fn knots() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.5f64..2.0, 4..10)
}

/// Warps with positive Ricci curvature, and products.
fn metric(grid: usize) -> impl Strategy<Value = Metric> {
    prop_oneof![
        (3usize..6, 0.0f64..0.12).prop_map(move |(n, eps)| Metric::Warped(
            WarpedSphereMetric::perturbed_round(n, eps)
                .unwrap()
                .with_grid_size(grid)
                .unwrap()
        )),
        (0.3f64..3.0).prop_map(move |d| Metric::Product(
            ProductSphereMetric::s2xs2(d)
                .unwrap()
                .with_grid_size(grid)
                .unwrap()
        )),
    ]
}

fn local_extrema(v: &[f64]) -> Vec<f64> {
    let mut out = vec![v[0], v[v.len() - 1]];
    for w in v.windows(3) {
        if (w[1] - w[0]) * (w[2] - w[1]) <= 0.0 {
            out.push(w[1]);
        }
    }
    out
}

fn spline_on(m: &Metric, k: &[f64]) -> RadialFunction {
    let len = m.radial_model().length();
    RadialFunction::from_fn(m, |r| pchip(k, r / len))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn functional_is_homogeneous(m in metric(256), k in knots(), lambda in 0.05f64..20.0) {
        let f = spline_on(&m, &k);
        let a = yamabe_functional(&m, &f).unwrap();
        let b = yamabe_functional(&m, &f.scaled(lambda)).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.abs());
    }

    #[test]
    fn functional_is_scale_invariant(m in metric(256), k in knots(), c in 0.1f64..10.0) {
        let f = spline_on(&m, &k);
        let scaled = m.scaled(c).unwrap();
        let a = yamabe_functional(&m, &f).unwrap();
        let g = RadialFunction::new(scaled.radial_model().nodes().to_vec(), f.values().to_vec()).unwrap();
        let b = yamabe_functional(&scaled, &g).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * a.abs(), "{} vs {}", a, b);
    }

    #[test]
    fn lower_bound_is_scale_invariant(m in metric(256), c in 0.1f64..10.0) {
        let a = ricci_yamabe_lower_bound(&m).unwrap();
        let b = ricci_yamabe_lower_bound(&m.scaled(c).unwrap()).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * a);
    }

    #[test]
    fn lower_bound_never_exceeds_round_value_after_normalizing(m in metric(256)) {
        let n = m.dimension();
        let rho = m.ricci_lower_bound();
        let normalized = m.scaled(rho / (n as f64 - 1.0)).unwrap();
        let lb = ricci_yamabe_lower_bound(&normalized).unwrap();
        prop_assert!(lb <= yamabe_constants(n).unwrap().y_n * (1.0 + 1e-9));
    }

    #[test]
    fn volume_bound_inverts_lower_bound(m in metric(256)) {
        let n = m.dimension();
        let lb = ricci_yamabe_lower_bound(&m).unwrap();
        let v = einstein_volume_bound(lb, n, m.ricci_lower_bound()).unwrap();
        prop_assert!((v - m.volume()).abs() <= 1e-9 * v);
    }

    #[test]
    fn h0_is_symmetric(n in 2usize..8, beta in 0.001f64..0.999) {
        let a = sphere_profile_h0(n, beta).unwrap();
        let b = sphere_profile_h0(n, 1.0 - beta).unwrap();
        prop_assert!((a - b).abs() <= 1e-10);
        prop_assert!(a <= sphere_profile_h0(n, 0.5).unwrap() + 1e-12);
    }

    #[test]
    fn diameter_factor_decreases(n in 2usize..8, d in 0.05f64..3.1, step in 0.0f64..0.04) {
        let a = diameter_factor_A(n, d).unwrap();
        let b = diameter_factor_A(n, d + step).unwrap();
        prop_assert!(b <= a && b >= 1.0);
    }

    #[test]
    fn squeeze_holds_and_scales(eps in 0.0f64..0.12, beta in 0.01f64..0.99, lambda in 0.2f64..5.0) {
        let m = Metric::Warped(WarpedSphereMetric::perturbed_round(4, eps).unwrap());
        let lower = bbg_lower_profile(&m, beta, DiameterChoice::Myers).unwrap();
        let cand = coordinate_ball_profile(&m, beta).unwrap();
        prop_assert!(cand >= lower * (1.0 - 1e-6));
        let s = m.scaled(lambda).unwrap();
        let ls = bbg_lower_profile(&s, beta, DiameterChoice::Myers).unwrap();
        let cs = coordinate_ball_profile(&s, beta).unwrap();
        prop_assert!((ls * lambda.sqrt() - lower).abs() <= 1e-9 * lower);
        prop_assert!((cs * lambda.sqrt() - cand).abs() <= 1e-9 * cand);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, ..ProptestConfig::default() })]

    #[test]
    fn rearrangement_preserves_norms(m in metric(2048), k in knots()) {
        let f = spline_on(&m, &k);
        let r = spherical_rearrangement(&m, &f).unwrap();
        let (src, dst) = (m.radial_model(), r.target_metric().radial_model());
        let p = yamabe_constants(m.dimension()).unwrap().p_n;
        for q in [2.0, p] {
            let a = src.integrate(f.values(), |x| x.powf(q));
            let b = dst.integrate(r.function.values(), |x| x.powf(q));
            prop_assert!((a - b).abs() <= 1e-6 * a, "q={}: {} vs {}", q, a, b);
        }
    }

    #[test]
    fn rearrangement_is_equimeasurable_and_monotone(m in metric(2048), k in knots()) {
        let f = spline_on(&m, &k);
        let r = spherical_rearrangement(&m, &f).unwrap();
        prop_assert!(r.function.values().windows(2).all(|w| w[1] <= w[0]));
        let target = r.target_metric();
        let v0 = m.volume();
        // levels taken from f_*'s own samples are matched exactly
        let star_profile = distribution_profile(&target, &r.function, 32).unwrap();
        for &t in &star_profile.levels {
            if !r.function.values().contains(&t) {
                continue;
            }
            let mu = superlevel_volume(&m, &f, t).unwrap();
            let star = superlevel_volume(&target, &r.function, t).unwrap();
            prop_assert!((star - mu).abs() <= 1e-6 * v0, "t={}: {} vs {}", t, mu, star);
        }
        // elsewhere f_* is piecewise linear between target nodes, so agreement is grid-limited,
        // and near the value of a local extremum f_* flattens out across whole cells
        let profile = distribution_profile(&m, &f, 32).unwrap();
        let extrema = local_extrema(f.values());
        let range = f.max() - f.min();
        for (&t, &mu) in profile.levels.iter().zip(&profile.measures) {
            if extrema.iter().any(|e| (t - e).abs() <= 1e-3 * range) {
                continue;
            }
            let star = superlevel_volume(&target, &r.function, t).unwrap();
            prop_assert!((star - mu).abs() <= 1e-4 * v0, "t={}: {} vs {}", t, mu, star);
        }
    }

    #[test]
    fn gradient_comparison_holds(m in metric(1024), k in knots()) {
        let f = spline_on(&m, &k);
        let c = gradient_comparison(&m, &f, DiameterChoice::Myers).unwrap();
        prop_assert!(c.ok, "{:?}", c);
    }
}
