//! One-dimensional quadrature and root bracketing.
//!
//! Everything here is deterministic: fixed panel counts, no adaptive state.

/// Composite Simpson rule on uniformly spaced samples `y` with spacing `h`.
///
/// An even number of intervals uses the 1/3 rule throughout. An odd number
/// uses the 1/3 rule on all but the last three intervals and the 3/8 rule there.
pub fn simpson_uniform(y: &[f64], h: f64) -> f64 {
    let n = y.len();
    match n {
        0 | 1 => 0.0,
        2 => 0.5 * h * (y[0] + y[1]),
        3 => simpson_13(y, h),
        4 => simpson_38(y, h),
        _ => {
            if (n - 1).is_multiple_of(2) {
                simpson_13(y, h)
            } else {
                simpson_13(&y[..n - 3], h) + simpson_38(&y[n - 4..], h)
            }
        }
    }
}

fn simpson_13(y: &[f64], h: f64) -> f64 {
    let last = y.len() - 1;
    let mut odd = 0.0;
    let mut even = 0.0;
    for (i, v) in y.iter().enumerate().take(last).skip(1) {
        if i % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    h / 3.0 * (y[0] + 4.0 * odd + 2.0 * even + y[last])
}

fn simpson_38(y: &[f64], h: f64) -> f64 {
    3.0 * h / 8.0 * (y[0] + 3.0 * y[1] + 3.0 * y[2] + y[3])
}

/// Composite Simpson rule for `f` on `[a, b]` with `panels` subintervals
/// (rounded up to the next even number).
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let m = (panels.max(2) + 1) & !1;
    let h = (b - a) / m as f64;
    let mut sum = f(a) + f(b);
    for i in 1..m {
        let x = a + h * i as f64;
        sum += if i % 2 == 1 { 4.0 * f(x) } else { 2.0 * f(x) };
    }
    sum * h / 3.0
}

/// `∫₀^x sin^k(t) dt` by the reduction formula
/// `I_k = -sin^{k-1}(x) cos(x) / k + (k-1)/k · I_{k-2}`.
pub fn sine_power_integral(k: u32, x: f64) -> f64 {
    match k {
        0 => x,
        1 => 1.0 - x.cos(),
        _ => {
            let (s, c) = x.sin_cos();
            let kf = k as f64;
            -s.powi(k as i32 - 1) * c / kf + (kf - 1.0) / kf * sine_power_integral(k - 2, x)
        }
    }
}

/// Bisection for an increasing function: returns `x ∈ [lo, hi]` with `f(x) ≈ target`.
///
/// Stops once the bracket is narrower than `x_tol` or after 200 halvings.
pub fn bisect_increasing<F: Fn(f64) -> f64>(
    f: F,
    target: f64,
    mut lo: f64,
    mut hi: f64,
    x_tol: f64,
) -> f64 {
    for _ in 0..200 {
        if hi - lo <= x_tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn simpson_uniform_is_exact_on_cubics() {
        for n in [3usize, 4, 5, 6, 11, 64] {
            let h = 1.0 / (n - 1) as f64;
            let y: Vec<f64> = (0..n).map(|i| (i as f64 * h).powi(3)).collect();
            assert!((simpson_uniform(&y, h) - 0.25).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn simpson_sin_on_half_period() {
        let v = simpson(f64::sin, 0.0, PI, 2000);
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn reduction_formula_matches_quadrature() {
        for k in 0..8 {
            for &x in &[0.3, 1.0, PI / 2.0, 2.5, PI] {
                let q = simpson(|t: f64| t.sin().powi(k as i32), 0.0, x, 4000);
                assert!((sine_power_integral(k, x) - q).abs() < 1e-12, "k={k} x={x}");
            }
        }
    }

    #[test]
    fn bisection_inverts_monotone_map() {
        let x = bisect_increasing(|x| x * x * x, 0.125, 0.0, 1.0, 1e-15);
        assert!((x - 0.5).abs() < 1e-14);
    }
}
