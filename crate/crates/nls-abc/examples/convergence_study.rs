//! Mesh-refinement study against the exact soliton.
//!
//! Each rung uses dt = dx², so halving dx should divide the space-time L1
//! error by four (second order in space and time together). This example
//! runs a two-rung ladder to stay quick; the `converge` subcommand of the
//! `nls-abc` binary runs the full dx ∈ {0.2, 0.1, 0.05} table.
//!
//! ```text
//! cargo run --release --example convergence_study
//! ```

use nls_abc::drivers::convergence_table;
use nls_abc::presets::ExperimentPreset;

fn main() -> Result<(), nls_abc::Error> {
    let base = ExperimentPreset::Example1.config();
    let dxs = [0.2, 0.1];
    let times = [3.0, 4.0];
    let table = convergence_table(&base, &dxs, &times)?;

    println!("space-time L1 errors (dt = dx²):");
    print!("{:>8}", "dx \\ t");
    for &t in &times {
        print!("{t:>13}");
    }
    println!();
    for (i, &dx) in dxs.iter().enumerate() {
        print!("{dx:>8}");
        for k in 0..times.len() {
            print!("{:>13.4e}", table.error(i, k));
        }
        println!();
    }

    println!("\nobserved orders (log2 of the error ratio):");
    for (k, &t) in times.iter().enumerate() {
        let order = table.order(0, k)?;
        println!("  t = {t}: {order:.3}");
    }
    println!("\nthe scheme is second order: orders should sit near 2.0");
    Ok(())
}
