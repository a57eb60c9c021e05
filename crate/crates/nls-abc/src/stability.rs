//! Normal-mode well-posedness analysis of the boundary conditions.
//!
//! Substituting plane-wave modes `ψ = e^{st + kx}` into the interior
//! equation together with a boundary condition yields a spatial root `k` and
//! a temporal eigenvalue `s`. The initial boundary value problem is well
//! posed when no mode grows in time, i.e. `Re(s) ≤ 0`. With the
//! potential-plus-nonlinearity frozen as `V + f = v1 + f1 + i(v2 + f2)`,
//! both the second- and third-order conditions give
//! `Re(s) = (v2 + f2)/ħ`, so well-posedness is equivalent to
//! `v2 + f2 ≤ 0`; real potentials (v2 = f2 = 0) sit exactly on the
//! imaginary axis.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::ConfigError;
use crate::params::PhysicalParams;

/// Slack around `Re(s) = 0`: purely imaginary eigenvalues computed in
/// floating point count as well posed.
const WELLPOSED_SLACK: f64 = 1e-12;

/// Frozen-coefficient decomposition `V + f = v1 + f1 + i·(v2 + f2)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PotentialDecomposition {
    /// Real part of the potential.
    pub v1: f64,
    /// Imaginary part of the potential (gain/loss).
    pub v2: f64,
    /// Real part of the frozen nonlinearity.
    pub f1: f64,
    /// Imaginary part of the frozen nonlinearity.
    pub f2: f64,
}

impl PotentialDecomposition {
    /// A purely real decomposition (`v2 = f2 = 0`).
    pub fn real(v1: f64, f1: f64) -> Self {
        PotentialDecomposition { v1, v2: 0.0, f1, f2: 0.0 }
    }
}

/// Roots of the normal-mode substitution for one boundary order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalModeResult {
    /// Boundary condition order (2 or 3).
    pub order: u8,
    /// Spatial root of the boundary relation.
    pub k: Complex64,
    /// Temporal eigenvalue of the interior equation at that root.
    pub s: Complex64,
    /// `Re(s) ≤ 0` (within [`WELLPOSED_SLACK`]).
    pub wellposed: bool,
}

/// Computes the normal-mode roots for the second- or third-order boundary
/// condition.
///
/// Order 2: `k = i·√(2m/ħ)·k0` and
/// `s = −i·k0² − i·(v1 + f1)/ħ + (v2 + f2)/ħ`.
/// Order 3: `k = i·k0` (the admissible root of the dispersion relation, see
/// [`dispersion_residual`]) and
/// `s = −i·(ħ/2m)·k0² − i·(v1 + f1)/ħ + (v2 + f2)/ħ`.
///
/// # Errors
///
/// `order` must be 2 or 3 and `k0` positive.
pub fn normal_mode_roots(
    order: u8,
    k0: f64,
    decomp: &PotentialDecomposition,
    physics: &PhysicalParams,
) -> Result<NormalModeResult, ConfigError> {
    physics.validate()?;
    if !(k0 > 0.0) || !k0.is_finite() {
        return Err(ConfigError::invalid("k0", format!("must be positive (got {k0})")));
    }
    let hbar = physics.hbar;
    let growth = (decomp.v2 + decomp.f2) / hbar;
    let potential_phase = (decomp.v1 + decomp.f1) / hbar;
    let (k, s) = match order {
        2 => (
            Complex64::new(0.0, (2.0 * physics.mass / hbar).sqrt() * k0),
            Complex64::new(growth, -(k0 * k0) - potential_phase),
        ),
        3 => (
            Complex64::new(0.0, k0),
            Complex64::new(growth, -(hbar / (2.0 * physics.mass)) * k0 * k0 - potential_phase),
        ),
        other => {
            return Err(ConfigError::invalid(
                "order",
                format!("normal-mode analysis covers orders 2 and 3 (got {other})"),
            ))
        }
    };
    Ok(NormalModeResult { order, k, s, wellposed: s.re <= WELLPOSED_SLACK })
}

/// Residual of the third-order dispersion relation
/// `(ħ²/2m)·k² − (ħ²k0²/2m)·(3ik + k0)/(ik + 3k0)` at a trial root `k`;
/// the admissible root `k = i·k0` makes this vanish identically.
pub fn dispersion_residual(k: Complex64, k0: f64, physics: &PhysicalParams) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let half_kin = physics.hbar * physics.hbar / (2.0 * physics.mass);
    half_kin * k * k - half_kin * k0 * k0 * (3.0 * i * k + k0) / (i * k + 3.0 * k0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn default_physics() -> PhysicalParams {
        PhysicalParams::nondimensional(-2.0)
    }

    #[test]
    fn order_two_free_case_is_purely_imaginary() {
        let r = normal_mode_roots(2, 2.0, &PotentialDecomposition::default(), &default_physics())
            .unwrap();
        assert!((r.k - Complex64::new(0.0, 2.0)).norm() < 1e-14, "k = {}", r.k);
        assert!((r.s - Complex64::new(0.0, -4.0)).norm() < 1e-14, "s = {}", r.s);
        assert!(r.s.re.abs() < 1e-12, "s should be wholly imaginary");
        assert!(r.wellposed);
    }

    #[test]
    fn order_three_free_case_and_damped_case() {
        let free =
            normal_mode_roots(3, 2.0, &PotentialDecomposition::default(), &default_physics())
                .unwrap();
        assert!((free.k - Complex64::new(0.0, 2.0)).norm() < 1e-14);
        assert!((free.s - Complex64::new(0.0, -4.0)).norm() < 1e-14);
        assert!(free.wellposed);

        let damped = normal_mode_roots(
            3,
            2.0,
            &PotentialDecomposition { v1: 0.0, v2: -1.0, f1: 0.0, f2: 0.0 },
            &default_physics(),
        )
        .unwrap();
        assert!((damped.s.re - -1.0).abs() < 1e-14);
        assert!(damped.wellposed);
    }

    #[test]
    fn gain_makes_the_problem_ill_posed() {
        let r = normal_mode_roots(
            2,
            1.0,
            &PotentialDecomposition { v1: 0.3, v2: 0.5, f1: -0.1, f2: 0.0 },
            &default_physics(),
        )
        .unwrap();
        assert!((r.s.re - 0.5).abs() < 1e-14);
        assert!(!r.wellposed);
    }

    #[test]
    fn admissible_root_satisfies_dispersion_relation() {
        for (k0, hbar, mass) in [(2.0, 1.0, 0.5), (0.7, 1.3, 0.9), (8.0, 1.0, 0.5)] {
            let physics = PhysicalParams { hbar, mass, g: -2.0 };
            let res = dispersion_residual(Complex64::new(0.0, k0), k0, &physics);
            assert!(res.norm() < 1e-12, "k0={k0}: residual {res}");
        }
    }

    #[test]
    fn rejects_bad_order_and_k0() {
        let d = PotentialDecomposition::default();
        let p = default_physics();
        assert!(normal_mode_roots(1, 1.0, &d, &p).is_err());
        assert!(normal_mode_roots(4, 1.0, &d, &p).is_err());
        assert!(normal_mode_roots(2, 0.0, &d, &p).is_err());
        assert!(normal_mode_roots(2, f64::NAN, &d, &p).is_err());
    }

    proptest! {
        /// Well-posedness is exactly the sign condition v2 + f2 ≤ 0, for
        /// both orders and any positive wavenumber. The generator keeps
        /// |v2 + f2| away from the floating-point slack band.
        #[test]
        fn wellposed_iff_no_gain(
            k0 in 1e-3_f64..50.0,
            v1 in -10.0_f64..10.0,
            f1 in -10.0_f64..10.0,
            magnitude in 1e-6_f64..10.0,
            gain in proptest::bool::ANY,
            order in 2_u8..=3,
        ) {
            let signed = if gain { magnitude } else { -magnitude };
            // Split the imaginary part arbitrarily between v2 and f2.
            let d = PotentialDecomposition { v1, v2: signed * 0.3, f1, f2: signed * 0.7 };
            let r = normal_mode_roots(order, k0, &d, &default_physics()).unwrap();
            prop_assert_eq!(r.wellposed, !gain);
        }
    }
}
