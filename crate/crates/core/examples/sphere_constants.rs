// Print a_n, p_n, V_n and Y_n for the first few dimensions.

use yamabe::yamabe::yamabe_constants;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>3} {:>6} {:>6} {:>22} {:>22}",
        "n", "a_n", "p_n", "V_n", "Y_n"
    );
    for n in 3..=10 {
        let c = yamabe_constants(n)?;
        println!(
            "{:>3} {:>6} {:>6} {:>22} {:>22}",
            n, c.a_n_exact, c.p_n_exact, c.v_n, c.y_n
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
