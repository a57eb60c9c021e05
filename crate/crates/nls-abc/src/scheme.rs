//! Assembly of the Crank-Nicolson system with boundary rows.
//!
//! Unknown layout: `u = (ψ_{−1}, ψ_0, …, ψ_J, ψ_{J+1})`, dimension `J + 3`
//! (all physical nodes plus one ghost per side). The interior scheme
//! occupies rows `1..=J+1`; the boundary equations occupy rows `0` and
//! `J+2`.
//!
//! A boundary equation couples `(s − 1, s, s + 1)`, so the raw left row has
//! entries in columns `(0, 1, 2)` and the raw right row in
//! `(J, J+1, J+2)` - one entry outside the tridiagonal band on each side.
//! Since the adjacent interior rows have nonzero off-diagonal entries
//! (`−ħ²/(4mΔx²)` is never zero), one elimination step per corner restores
//! a strictly tridiagonal system without changing the solution.

use num_complex::Complex64;

use crate::boundary::{boundary_row, BoundaryRow, BoundarySpec, Side};
use crate::field::WaveField;
use crate::grid::Grid;
use crate::params::PhysicalParams;
use crate::tridiag::BandedSystem;

/// Off-diagonal and diagonal coefficients of one interior row, together with
/// its right-hand side:
/// `a·u_{j−1} + d_j·u_j + a·u_{j+1} = rhs_j` with
/// `a = −ħ²/(4mΔx²)`, `d_j = ħ²/(2mΔx²) + W_j/2 − iħ/Δt`.
#[inline]
fn interior_row(
    physics: &PhysicalParams,
    dx: f64,
    dt: f64,
    w_j: f64,
    psi_m: Complex64,
    psi_j: Complex64,
    psi_p: Complex64,
) -> (Complex64, Complex64, Complex64) {
    let kinetic = physics.hbar * physics.hbar / (4.0 * physics.mass * dx * dx);
    let shift = Complex64::new(0.0, physics.hbar / dt);
    let a = Complex64::new(-kinetic, 0.0);
    let d = Complex64::new(2.0 * kinetic + w_j / 2.0, 0.0) - shift;
    let rhs = -shift * psi_j + kinetic * (psi_p - 2.0 * psi_j + psi_m) - 0.5 * w_j * psi_j;
    (a, d, rhs)
}

/// Builds the full `J + 3` system for one Picard iterate.
///
/// * `w` holds the frozen reaction term `W_j = V(x_j) + g·f(ρ_j)` at the
///   physical nodes `0..=J`,
/// * `psi` is the previous time level `ψ^n` including ghost values.
///
/// The returned system is strictly tridiagonal (corners pre-eliminated) and
/// ready for [`BandedSystem::solve`].
pub fn assemble_system(
    grid: &Grid,
    physics: &PhysicalParams,
    boundary: &BoundarySpec,
    w: &[f64],
    psi: &WaveField,
) -> BandedSystem {
    let j_max = grid.intervals as isize;
    let n = grid.num_nodes();
    debug_assert_eq!(w.len(), grid.num_physical());
    debug_assert_eq!(psi.len(), n);

    let mut sys = BandedSystem::zeros(n);

    for j in 0..=j_max {
        let (a, d, rhs) = interior_row(
            physics,
            grid.dx,
            grid.dt,
            w[j as usize],
            psi.at(j - 1),
            psi.at(j),
            psi.at(j + 1),
        );
        let r = (j + 1) as usize;
        sys.lower[r] = a;
        sys.main[r] = d;
        sys.upper[r] = a;
        sys.rhs[r] = rhs;
    }

    let left = boundary_row(
        boundary.order,
        Side::Left,
        boundary.k0_left,
        w[0],
        psi.at(-1),
        psi.at(0),
        psi.at(1),
        physics,
        grid.dx,
        grid.dt,
    );
    let right = boundary_row(
        boundary.order,
        Side::Right,
        boundary.k0_right,
        w[j_max as usize],
        psi.at(j_max - 1),
        psi.at(j_max),
        psi.at(j_max + 1),
        physics,
        grid.dx,
        grid.dt,
    );
    eliminate_corners(&mut sys, &left, &right);
    sys
}

/// Installs the two boundary rows, folding their out-of-band entries into
/// the adjacent interior rows.
///
/// Left: row 0 is `(cm, c0, cp)` over columns `(0, 1, 2)`; subtracting
/// `μ = cp / upper[1]` times row 1 cancels the column-2 entry. Right: row
/// `n−1` is `(cm, c0, cp)` over columns `(n−3, n−2, n−1)`; subtracting
/// `μ = cm / lower[n−2]` times row `n−2` cancels the column-`(n−3)` entry.
fn eliminate_corners(sys: &mut BandedSystem, left: &BoundaryRow, right: &BoundaryRow) {
    let n = sys.len();

    let mu = left.cp / sys.upper[1];
    sys.main[0] = left.cm - mu * sys.lower[1];
    sys.upper[0] = left.c0 - mu * sys.main[1];
    sys.rhs[0] = left.rhs - mu * sys.rhs[1];
    sys.lower[0] = Complex64::new(0.0, 0.0);

    let mu = right.cm / sys.lower[n - 2];
    sys.lower[n - 1] = right.c0 - mu * sys.main[n - 2];
    sys.main[n - 1] = right.cp - mu * sys.upper[n - 2];
    sys.rhs[n - 1] = right.rhs - mu * sys.rhs[n - 2];
    sys.upper[n - 1] = Complex64::new(0.0, 0.0);
}
