//! Radial minimization of the Yamabe quotient.
//!
//! Preconditioned gradient descent: the gradient of the discrete quotient is
//! mapped through the discrete `H¹` operator `a_n K + σ M` (a tridiagonal solve),
//! the step is chosen by backtracking halving, trial functions are floored to stay
//! positive and renormalized to unit `Lᵖ` mass. Every accepted iterate lowers
//! the quotient, so every recorded value is an upper bound for the infimum over
//! radial functions on this grid.

use serde::Serialize;

use crate::error::Result;
use crate::function::RadialFunction;
use crate::geom::Metric;
use crate::yamabe::DiscreteFunctional;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinimizerOptions {
    pub max_iters: usize,
    /// Stop once an accepted step lowers the value by less than this fraction.
    pub tol: f64,
}

impl Default for MinimizerOptions {
    fn default() -> Self {
        MinimizerOptions {
            max_iters: 10_000,
            tol: 1e-8,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimizeOutcome {
    /// Best quotient value reached.
    pub value: f64,
    /// Trial function attaining `value`, normalized to `∫ f^p = 1`.
    pub function: RadialFunction,
    pub converged: bool,
    pub iterations: usize,
    /// Quotient value after each accepted step, starting from `f ≡ 1`.
    pub history: Vec<f64>,
}

/// Trial functions are floored at this fraction of their maximum.
const POSITIVITY_FLOOR: f64 = 1e-12;
const MAX_HALVINGS: usize = 60;
const MAX_STEP: f64 = 1e6;

/// Minimize the Yamabe quotient over positive radial functions.
///
/// Product metrics are evaluated at constants only.
pub fn minimize_yamabe_radial(
    metric: &Metric,
    options: &MinimizerOptions,
) -> Result<MinimizeOutcome> {
    let model = metric.radial_model();
    let functional = DiscreteFunctional::new(&model)?;
    let p = 2.0 * model.dimension() as f64 / (model.dimension() as f64 - 2.0);

    let mut f = vec![1.0; model.len()];
    normalize(&functional, &mut f, p);

    if let Metric::Product(_) = metric {
        let value = functional.value(&f);
        return Ok(MinimizeOutcome {
            value,
            function: RadialFunction::on_model(&model, |_| f[0]),
            converged: true,
            iterations: 0,
            history: vec![value],
        });
    }

    let precond = Preconditioner::new(&functional);
    let (mut value, mut grad) = functional.value_and_gradient(&f);
    let mut history = vec![value];
    let mut step: f64 = 1.0;
    let mut converged = false;
    let mut iterations = 0;

    while iterations < options.max_iters {
        let direction = precond.solve(&grad);
        let mut accepted = None;
        let mut trial_step = (2.0 * step).min(MAX_STEP);
        for _ in 0..MAX_HALVINGS {
            let mut trial: Vec<f64> = f
                .iter()
                .zip(&direction)
                .map(|(x, d)| x - trial_step * d)
                .collect();
            let top = trial.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if top > 0.0 && top.is_finite() {
                let floor = POSITIVITY_FLOOR * top;
                trial.iter_mut().for_each(|x| *x = x.max(floor));
                normalize(&functional, &mut trial, p);
                let v = functional.value(&trial);
                if v < value {
                    accepted = Some((trial, v));
                    break;
                }
            }
            trial_step *= 0.5;
        }
        let Some((trial, v)) = accepted else {
            converged = true;
            break;
        };
        iterations += 1;
        step = trial_step;
        let decrease = (value - v) / value.abs();
        f = trial;
        value = v;
        history.push(value);
        if decrease < options.tol {
            converged = true;
            break;
        }
        grad = functional.value_and_gradient(&f).1;
    }

    Ok(MinimizeOutcome {
        value,
        function: RadialFunction::on_model(&model, |_| 0.0).with_values(f),
        converged,
        iterations,
        history,
    })
}

fn normalize(functional: &DiscreteFunctional<'_>, f: &mut [f64], p: f64) {
    let mass = functional.model().integrate(f, |x| x.powf(p));
    let s = mass.powf(-1.0 / p);
    f.iter_mut().for_each(|x| *x *= s);
}

/// Tridiagonal `2(a_n K + σ M)` with `K` the stiffness and `M` the lumped mass.
struct Preconditioner {
    lower: Vec<f64>,
    diag: Vec<f64>,
    upper: Vec<f64>,
}

impl Preconditioner {
    fn new(functional: &DiscreteFunctional<'_>) -> Self {
        let m = functional.model();
        let len = m.len();
        let a_n = functional.a_n();
        let nodes = m.nodes();
        let (area, mid_area, scal) = (m.node_area(), m.mid_area(), m.node_scal());
        // σ carries curvature units so the operator scales like the Hessian.
        let mean_scal = scal.iter().map(|s| s.abs()).sum::<f64>() / len as f64;
        let sigma = if mean_scal > 0.0 {
            mean_scal
        } else {
            1.0 / (m.length() * m.arc_scale()).powi(2)
        };
        let mut lower = vec![0.0; len];
        let mut diag = vec![0.0; len];
        let mut upper = vec![0.0; len];
        for k in 0..m.cells() {
            let ell = m.cell_length(k);
            let stiff = a_n * m.cell_volume(k) / (ell * ell);
            diag[k] += stiff;
            diag[k + 1] += stiff;
            upper[k] -= stiff;
            lower[k + 1] -= stiff;
            let w = m.arc_scale() * (nodes[k + 1] - nodes[k]) / 6.0;
            diag[k] += sigma * w * (area[k] + 2.0 * mid_area[k]);
            diag[k + 1] += sigma * w * (area[k + 1] + 2.0 * mid_area[k]);
        }
        for x in lower
            .iter_mut()
            .chain(diag.iter_mut())
            .chain(upper.iter_mut())
        {
            *x *= 2.0;
        }
        Preconditioner { lower, diag, upper }
    }

    /// Thomas algorithm.
    fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = rhs.len();
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        c[0] = self.upper[0] / self.diag[0];
        d[0] = rhs[0] / self.diag[0];
        for i in 1..n {
            let denom = self.diag[i] - self.lower[i] * c[i - 1];
            c[i] = self.upper[i] / denom;
            d[i] = (rhs[i] - self.lower[i] * d[i - 1]) / denom;
        }
        let mut x = vec![0.0; n];
        x[n - 1] = d[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = d[i] - c[i] * x[i + 1];
        }
        x
    }
}
