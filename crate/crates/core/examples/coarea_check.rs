// Compare -d mu/dt with the level-crossing integral of 1/|grad f| for cos r.

use yamabe::rearrange::coarea_check;
use yamabe::{Metric, RadialFunction};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for n in [2, 3] {
        let m = Metric::round(n)?;
        let f = RadialFunction::from_fn(&m, f64::cos);
        let points = coarea_check(&m, &f, 64)?;
        println!("round S^{n}: {} regular levels", points.len());
        for p in points.iter().step_by(8) {
            println!(
                "  t = {:+.4}  fd = {:.8}  crossing = {:.8}  rel = {:.1e}",
                p.t, p.fd_slope, p.crossing_integral, p.rel_err
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
