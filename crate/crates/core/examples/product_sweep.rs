// The products delta g0 x g0 on S^2 x S^2: equality at delta = 1, a strict gap
// between n rho V^(2/n) and the constant-function value elsewhere.

use yamabe::yamabe::{yamabe_report, ReportOptions};
use yamabe::{Metric, ProductSphereMetric};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>6} {:>8} {:>12} {:>12} {:>8}",
        "delta", "rho", "lb_ricci", "constant", "gap"
    );
    for k in 0..=6 {
        let delta = 0.5 + 0.25 * k as f64;
        let m = Metric::Product(ProductSphereMetric::s2xs2(delta)?);
        let r = yamabe_report(&m, &ReportOptions::default())?;
        let lb = r.lb_ricci.unwrap();
        println!(
            "{delta:>6.2} {:>8.4} {lb:>12.6} {:>12.6} {:>8.4}",
            r.rho,
            r.const_fn_value,
            r.const_fn_value - lb
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
