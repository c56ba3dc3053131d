// Volume bound on CP^2. The Yamabe invariant 12 sqrt(2) pi is realized by the
// Fubini-Study metric, whose Ricci curvature is 6; any metric with Ricci >= 6
// therefore has volume at most pi^2 / 2.

use std::f64::consts::PI;

use yamabe::yamabe::einstein_volume_bound;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let y = 12.0 * 2f64.sqrt() * PI;
    let v = einstein_volume_bound(y, 4, 6.0)?;
    println!("Vol(CP^2, g) <= {v:.12}  (pi^2/2 = {:.12})", PI * PI / 2.0);
    for rho in [3.0, 6.0, 12.0] {
        println!(
            "  Ricci >= {rho:>4}: volume <= {:.6}",
            einstein_volume_bound(y, 4, rho)?
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
