// On round spheres the Ricci lower bound, the constant trial function and the
// radial minimizer all land on Y_n.

use yamabe::yamabe::{yamabe_report, ReportOptions};
use yamabe::Metric;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for n in [3, 4, 5] {
        let r = yamabe_report(&Metric::round(n)?, &ReportOptions::default())?;
        let lb = r
            .lb_ricci
            .expect("round spheres have positive Ricci curvature");
        println!(
            "S^{n}: lb_ricci = {lb:.12}  ub = {:.12}  Y_n = {:.12}  margin = {:+.2e}",
            r.ub_numeric,
            r.y_n,
            r.margin.unwrap()
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
