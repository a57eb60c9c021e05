//! Defocusing wave spreading over a repulsive Gaussian bump: absorbing rows
//! versus a hard Dirichlet wall.
//!
//! With g = +2 the packet spreads slowly, and by T = 6 most of its mass is
//! still physically inside [0, 30]. The honest yardstick is therefore a
//! reference run on a much larger domain, restricted to the same window:
//! the absorbing rows should match that reference closely, while Dirichlet
//! walls trap everything and drift away from it as radiation re-enters.
//!
//! ```text
//! cargo run --release --example repulsive_potential
//! ```

use nls_abc::boundary::{BoundaryKind, BoundarySpec};
use nls_abc::field::WaveField;
use nls_abc::grid::{make_grid, Grid};
use nls_abc::presets::ExperimentPreset;
use nls_abc::simulate::run_simulation;

/// Mass restricted to the window `[lo, hi]` (trapezoid-free node sum, the
/// same convention the reflection ratio uses).
fn windowed_mass(field: &WaveField, grid: &Grid, lo: f64, hi: f64) -> f64 {
    let mut sum = 0.0;
    for j in 0..=grid.intervals as isize {
        let x = grid.node(j);
        if (lo - 1e-9..=hi + 1e-9).contains(&x) {
            sum += field.at(j).norm_sqr();
        }
    }
    sum
}

fn main() -> Result<(), nls_abc::Error> {
    let base = ExperimentPreset::Example3.config();
    println!("repulsive bump, g = +2, Gaussian packet at x = 15, T = {}", base.t_final());

    // Reference: same physics on [-30, 90], boundaries never reached.
    let mut reference = base.clone();
    reference.grid = make_grid(-30.0, 90.0, 1200, base.grid.dt, base.grid.steps)?;
    let ref_out = run_simulation(&reference, &[])?;
    let psi0 = nls_abc::initial::eval_initial(&reference.initial, &reference.grid)?;
    let r_ref = windowed_mass(&ref_out.final_field, &reference.grid, 0.0, 30.0)
        / windowed_mass(&psi0, &reference.grid, 0.0, 30.0);
    println!("\nlarge-domain reference: fraction still in [0, 30] = {r_ref:.4}");

    for (label, kind) in [
        ("third-order absorbing rows", BoundaryKind::Abc3Nonlinear),
        ("Dirichlet walls", BoundaryKind::DirichletZero),
    ] {
        let mut config = base.clone();
        config.boundary = BoundarySpec::new(kind, 1.5, 1.5)?;
        let outcome = run_simulation(&config, &[])?;
        let r = outcome.observables.reflection.last().copied().unwrap();
        println!("{label:>28}: r(T) = {r:.4}, boundary-induced excess = {:+.2e}", r - r_ref);
    }

    println!("\nthe absorbing rows track the physical retention; the walls hold");
    println!("the full mass in (r stays near 1) and contaminate the interior");
    Ok(())
}
