//! Nonlinearity profiles `f(ρ)` with `ρ = |ψ|²`.

use serde::{Deserialize, Serialize};

use crate::error::ConfigError;

/// Shape of the nonlinear term `g·f(|ψ|²)ψ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonlinearitySpec {
    /// `f(ρ) = ρ` (cubic NLS).
    Cubic,
    /// `f(ρ) = ρ²` (quintic NLS).
    Quintic,
    /// `f(ρ) = 0` (linear Schrödinger).
    None,
}

impl NonlinearitySpec {
    /// Evaluates `f(ρ)` assuming `ρ >= 0` (true for `ρ = |ψ|²`).
    #[inline]
    pub fn eval(&self, rho: f64) -> f64 {
        debug_assert!(rho >= 0.0, "density must be nonnegative");
        match self {
            NonlinearitySpec::Cubic => rho,
            NonlinearitySpec::Quintic => rho * rho,
            NonlinearitySpec::None => 0.0,
        }
    }

    /// True when the nonlinear term vanishes identically, which lets the
    /// implicit step skip the Picard iteration.
    pub fn is_linear(&self) -> bool {
        matches!(self, NonlinearitySpec::None)
    }
}

/// Validated evaluation of `f(ρ)`.
///
/// # Errors
///
/// Rejects negative `rho` (a density cannot be negative).
pub fn eval_nonlinearity(f: NonlinearitySpec, rho: f64) -> Result<f64, ConfigError> {
    if !(rho >= 0.0) {
        return Err(ConfigError::invalid(
            "rho",
            format!("density must be nonnegative (got {rho})"),
        ));
    }
    Ok(f.eval(rho))
}
