//! Absorbing and reflective boundary closures.
//!
//! Each boundary contributes one extra equation coupling the ghost node, the
//! boundary node, and the first interior node (`s − 1`, `s`, `s + 1` with
//! `s = 0` on the left and `s = J` on the right). The nonlinear ABC rows
//! freeze the potential-plus-nonlinearity value `W_s = V(x_s) + g·f(ρ_s)` at
//! the current Picard iterate, exactly like the interior scheme.
//!
//! Sign convention: the `+` branch of the one-way operators is the right
//! boundary, the `−` branch the left ([`Side::sign`]).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::ConfigError;
use crate::params::PhysicalParams;

/// Which artificial boundary a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// The `±` branch: `+1` at the right boundary, `−1` at the left.
    #[inline]
    pub fn sign(&self) -> f64 {
        match self {
            Side::Left => -1.0,
            Side::Right => 1.0,
        }
    }
}

/// Boundary treatment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryKind {
    /// First-order local ABC (linear Robin condition).
    Abc1Linear,
    /// Second-order split nonlinear ABC.
    Abc2Nonlinear,
    /// Third-order split nonlinear ABC.
    Abc3Nonlinear,
    /// Homogeneous Dirichlet walls at the ghost nodes (reflective baseline,
    /// conserves the discrete mass exactly).
    DirichletZero,
    /// Ghost-reflection Neumann walls (reflective baseline).
    NeumannZero,
}

impl BoundaryKind {
    /// True for the absorbing (non-reflective) boundary conditions.
    pub fn is_absorbing(&self) -> bool {
        matches!(
            self,
            BoundaryKind::Abc1Linear | BoundaryKind::Abc2Nonlinear | BoundaryKind::Abc3Nonlinear
        )
    }
}

/// Boundary condition plus the per-side wavenumber parameter `k0 = √ω0`.
///
/// `k0` tunes where the one-way approximation of the kinetic operator is
/// exact; the ideal choice is half the group velocity of the impinging wave.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundarySpec {
    pub order: BoundaryKind,
    pub k0_left: f64,
    pub k0_right: f64,
}

impl BoundarySpec {
    /// # Errors
    ///
    /// Rejects nonpositive or non-finite `k0` values.
    pub fn new(order: BoundaryKind, k0_left: f64, k0_right: f64) -> Result<Self, ConfigError> {
        let spec = BoundarySpec { order, k0_left, k0_right };
        spec.validate()?;
        Ok(spec)
    }

    /// Third-order ABC with the same `k0` on both sides.
    pub fn abc3(k0: f64) -> Result<Self, ConfigError> {
        Self::new(BoundaryKind::Abc3Nonlinear, k0, k0)
    }

    /// Checks `k0 > 0` on both sides.
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, v) in [("boundary.k0_left", self.k0_left), ("boundary.k0_right", self.k0_right)]
        {
            if !(v > 0.0) || !v.is_finite() {
                return Err(ConfigError::invalid(name, format!("must be positive (got {v})")));
            }
        }
        Ok(())
    }

    /// The wavenumber parameter for one side.
    pub fn k0(&self, side: Side) -> f64 {
        match side {
            Side::Left => self.k0_left,
            Side::Right => self.k0_right,
        }
    }
}

/// One boundary equation over the stencil `(s − 1, s, s + 1)`:
/// `cm·ψ_{s−1}^{n+1} + c0·ψ_s^{n+1} + cp·ψ_{s+1}^{n+1} = rhs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryRow {
    pub cm: Complex64,
    pub c0: Complex64,
    pub cp: Complex64,
    pub rhs: Complex64,
}

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Builds the boundary equation for one side and one Picard iterate.
///
/// * `w_s` is the frozen `V + g·f(ρ)` at the boundary node,
/// * `psi_m`, `psi_s`, `psi_p` are the old-level values `ψ^n` at
///   `s − 1`, `s`, `s + 1`.
///
/// For `DirichletZero` the row pins the ghost value to zero (the orientation
/// of the stencil puts the ghost at `s − 1` on the left and `s + 1` on the
/// right).
#[allow(clippy::too_many_arguments)]
pub fn boundary_row(
    kind: BoundaryKind,
    side: Side,
    k0: f64,
    w_s: f64,
    psi_m: Complex64,
    psi_s: Complex64,
    psi_p: Complex64,
    physics: &PhysicalParams,
    dx: f64,
    dt: f64,
) -> BoundaryRow {
    let sigma = side.sign();
    let hbar = physics.hbar;
    let m = physics.mass;
    match kind {
        // i·√(ħ/2m)·∂x ψ ± k0·ψ = 0, centered difference at the midpoint
        // time level.
        BoundaryKind::Abc1Linear => {
            let d = I * (hbar / (2.0 * m)).sqrt() / (4.0 * dx);
            let c0 = Complex64::new(sigma * k0 / 2.0, 0.0);
            BoundaryRow { cm: -d, c0, cp: d, rhs: -(d * (psi_p - psi_m) + c0 * psi_s) }
        }
        // iħ·ψ_t = [−ħ(±i·√(2ħ/m)·k0·∂x + k0²) + W]ψ, Crank-Nicolson in
        // time, centered ghost difference in space.
        BoundaryKind::Abc2Nonlinear => {
            let d = sigma * I * hbar * (2.0 * hbar / m).sqrt() * k0 / (4.0 * dx);
            let react = Complex64::new((hbar * k0 * k0 - w_s) / 2.0, 0.0);
            let c0 = I * hbar / dt + react;
            let rhs = (I * hbar / dt - react) * psi_s - d * (psi_p - psi_m);
            BoundaryRow { cm: -d, c0, cp: d, rhs }
        }
        // Third-order row as printed:
        //   [3ħ²k0²i/m − 2i·W]·(ψ_{s+1}^{n+1/2} − ψ_{s−1}^{n+1/2})/(2Δx)
        //   − ħ(ψ_{s+1}^{n+1} − ψ_{s−1}^{n+1})/(ΔxΔt)
        //   + ħ(ψ_{s+1}^{n} − ψ_{s−1}^{n})/(ΔxΔt)
        //   ± 6k0·i·(ψ_s^{n+1} − ψ_s^{n})/Δt
        //   ± (ħ²k0³/m − 6k0·W)·ψ_s^{n+1/2} = 0.
        BoundaryKind::Abc3Nonlinear => {
            let c1 = I * (3.0 * hbar * hbar * k0 * k0 / m - 2.0 * w_s);
            let grad = c1 / (4.0 * dx);
            let mixed = hbar / (dx * dt);
            let time = sigma * 6.0 * k0 * I / dt;
            let react =
                Complex64::new(sigma * (hbar * hbar * k0.powi(3) / m - 6.0 * k0 * w_s) / 2.0, 0.0);
            BoundaryRow {
                cm: -grad + mixed,
                cp: grad - mixed,
                c0: time + react,
                rhs: -(grad * (psi_p - psi_m) + mixed * (psi_p - psi_m) - time * psi_s
                    + react * psi_s),
            }
        }
        BoundaryKind::DirichletZero => {
            let one = Complex64::new(1.0, 0.0);
            let zero = Complex64::new(0.0, 0.0);
            match side {
                Side::Left => BoundaryRow { cm: one, c0: zero, cp: zero, rhs: zero },
                Side::Right => BoundaryRow { cm: zero, c0: zero, cp: one, rhs: zero },
            }
        }
        // Ghost reflection ψ_{s+1} = ψ_{s−1} at both walls.
        BoundaryKind::NeumannZero => BoundaryRow {
            cm: Complex64::new(-1.0, 0.0),
            c0: Complex64::new(0.0, 0.0),
            cp: Complex64::new(1.0, 0.0),
            rhs: Complex64::new(0.0, 0.0),
        },
    }
}
