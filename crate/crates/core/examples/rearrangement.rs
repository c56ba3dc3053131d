// Rearrange a battery spline on a warped S^4 onto the round sphere of the same
// volume and compare L^q norms before and after.

use yamabe::battery::bundled;
use yamabe::rearrange::spherical_rearrangement;
use yamabe::yamabe::yamabe_constants;
use yamabe::{Metric, WarpedSphereMetric};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let m = Metric::Warped(WarpedSphereMetric::perturbed_round(4, 0.1)?.with_grid_size(2048)?);
    let f = bundled()
        .get("spline_03")
        .expect("bundled spline")
        .sample(&m);
    let r = spherical_rearrangement(&m, &f)?;
    let (source, target) = (m.radial_model(), r.target_metric().radial_model());
    println!(
        "target: round S^4 scaled by {:.6}, volume {:.9}",
        r.target.scale(),
        target.volume()
    );
    let p = yamabe_constants(4)?.p_n;
    for q in [1.0, 2.0, p] {
        let before = source.integrate(f.values(), |x| x.powf(q));
        let after = target.integrate(r.function.values(), |x| x.powf(q));
        println!(
            "q = {q}: {before:.10} -> {after:.10} (relative change {:.1e})",
            (after - before).abs() / before
        );
    }
    let v = r.function.values();
    println!(
        "f_* runs from {:.6} at the pole down to {:.6}",
        v[0],
        v[v.len() - 1]
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
