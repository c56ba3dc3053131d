// Run the energy comparison over the bundled battery on S^2 x S^2.

use yamabe::battery::bundled;
use yamabe::isoperimetry::DiameterChoice;
use yamabe::rearrange::gradient_comparison;
use yamabe::{Metric, ProductSphereMetric};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let m = Metric::Product(ProductSphereMetric::s2xs2(1.5)?);
    let mut all_ok = true;
    for entry in &bundled().functions {
        let c = gradient_comparison(&m, &entry.sample(&m), DiameterChoice::Myers)?;
        all_ok &= c.ok;
        println!(
            "{:<10} lhs = {:>10.6}  rhs = {:>10.6}  ratio = {:.4}",
            entry.name, c.lhs, c.rhs, c.ratio
        );
    }
    println!("all comparisons hold: {all_ok}");
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
