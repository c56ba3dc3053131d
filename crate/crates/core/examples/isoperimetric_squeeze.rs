// Lower bound A(d) h_0 against coordinate-ball candidates on a warped S^4.
// The true isoperimetric profile lies between the two columns.

use yamabe::isoperimetry::{beta_grid, profile_sweep, DiameterChoice};
use yamabe::{Metric, WarpedSphereMetric};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let m = Metric::Warped(WarpedSphereMetric::perturbed_round(4, 0.1)?);
    for choice in [DiameterChoice::Myers, DiameterChoice::Pole] {
        let rows = profile_sweep(&m, &beta_grid(9), choice)?;
        println!(
            "{choice:?}: d = {:.6}, A(d) = {:.6}",
            rows[0].d_used, rows[0].a
        );
        for r in rows {
            println!(
                "  beta = {:.1}  lower = {:.6}  candidate = {:.6}",
                r.beta, r.h_lower, r.h_candidate
            );
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
