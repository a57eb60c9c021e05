//! Physical constants of the equation
//! `i·ħ·ψ_t = [−ħ²/(2m)·∂xx + V(x) + g·f(|ψ|²)]ψ`.

use serde::{Deserialize, Serialize};

use crate::error::ConfigError;

/// Planck constant, particle mass, and nonlinearity strength.
///
/// The nondimensional profile `ħ = 1`, `m = 1/2` turns the equation into
/// `i·ψ_t = −ψ_xx + g·f(|ψ|²)ψ + Vψ`, the form all bundled experiments use.
/// General `(ħ, m)` are kept so the boundary-condition formulas can be
/// exercised as printed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    /// Planck constant (nondimensional), `ħ > 0`.
    pub hbar: f64,
    /// Particle mass, `m > 0`.
    pub mass: f64,
    /// Nonlinearity strength; `g < 0` is focusing, `g > 0` repulsive.
    pub g: f64,
}

impl PhysicalParams {
    /// General parameters; rejects nonpositive `hbar` or `mass`.
    pub fn new(hbar: f64, mass: f64, g: f64) -> Result<Self, ConfigError> {
        let p = PhysicalParams { hbar, mass, g };
        p.validate()?;
        Ok(p)
    }

    /// The nondimensional profile `ħ = 1`, `m = 1/2` with the given `g`.
    pub fn nondimensional(g: f64) -> Self {
        PhysicalParams { hbar: 1.0, mass: 0.5, g }
    }

    /// Checks positivity and finiteness of all fields.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.hbar > 0.0) || !self.hbar.is_finite() {
            return Err(ConfigError::invalid(
                "physics.hbar",
                format!("must be positive and finite (got {})", self.hbar),
            ));
        }
        if !(self.mass > 0.0) || !self.mass.is_finite() {
            return Err(ConfigError::invalid(
                "physics.mass",
                format!("must be positive and finite (got {})", self.mass),
            ));
        }
        if !self.g.is_finite() {
            return Err(ConfigError::invalid(
                "physics.g",
                format!("must be finite (got {})", self.g),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nondimensional_profile() {
        let p = PhysicalParams::nondimensional(-2.0);
        assert_eq!(p.hbar, 1.0);
        assert_eq!(p.mass, 0.5);
        assert_eq!(p.g, -2.0);
        assert!(p.validate().is_ok());
    }

    #[test]
    fn rejects_nonpositive_constants() {
        assert!(PhysicalParams::new(0.0, 0.5, -2.0).is_err());
        assert!(PhysicalParams::new(1.0, -1.0, -2.0).is_err());
        assert!(PhysicalParams::new(f64::NAN, 0.5, -2.0).is_err());
        assert!(PhysicalParams::new(1.0, 0.5, f64::INFINITY).is_err());
    }

    #[test]
    fn general_parameters_accepted() {
        let p = PhysicalParams::new(1.054, 2.5, 3.0).unwrap();
        assert_eq!(p.mass, 2.5);
    }
}
