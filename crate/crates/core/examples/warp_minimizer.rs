// Radial minimization on the warped spheres phi = sin r (1 + eps sin^2 r).
//
// These metrics are conformally flat, so the minimizer should climb down from
// the constant-function value towards Y_4 while the Ricci bound drops with eps.

use yamabe::yamabe::{
    minimize_yamabe_radial, ricci_yamabe_lower_bound, yamabe_constants, MinimizerOptions,
};
use yamabe::{Metric, WarpedSphereMetric};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let y4 = yamabe_constants(4)?.y_n;
    for eps in [0.0, 0.05, 0.1] {
        let m = Metric::Warped(WarpedSphereMetric::perturbed_round(4, eps)?);
        let out = minimize_yamabe_radial(&m, &MinimizerOptions::default())?;
        println!(
            "eps = {eps:<4}  lb_ricci = {:>9.5}  start = {:>9.5}  minimum = {:>9.5} after {:>3} steps  (Y_4 = {y4:.5})",
            ricci_yamabe_lower_bound(&m)?,
            out.history[0],
            out.value,
            out.iterations,
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
