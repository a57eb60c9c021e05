//! External potential profiles `V(x)`.

use serde::{Deserialize, Serialize};

use crate::error::ConfigError;

/// Potential term of the Hamiltonian.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum PotentialSpec {
    /// `V(x) = 0`.
    Zero,
    /// `V(x) = amplitude · exp(−width · (x − center)²)`.
    Gaussian { amplitude: f64, width: f64, center: f64 },
    /// Uniform samples `V(x_start + i·spacing)`, linearly interpolated.
    Tabulated { x_start: f64, spacing: f64, samples: Vec<f64> },
}

impl PotentialSpec {
    /// Checks the spec invariants (finite parameters, positive spacing,
    /// at least two samples for tabulated data).
    pub fn validate(&self) -> Result<(), ConfigError> {
        match self {
            PotentialSpec::Zero => Ok(()),
            PotentialSpec::Gaussian { amplitude, width, center } => {
                for (name, v) in [
                    ("potential.amplitude", *amplitude),
                    ("potential.width", *width),
                    ("potential.center", *center),
                ] {
                    if !v.is_finite() {
                        return Err(ConfigError::invalid(
                            name,
                            format!("must be finite (got {v})"),
                        ));
                    }
                }
                Ok(())
            }
            PotentialSpec::Tabulated { spacing, samples, .. } => {
                if !(*spacing > 0.0) {
                    return Err(ConfigError::invalid(
                        "potential.spacing",
                        format!("must be positive (got {spacing})"),
                    ));
                }
                if samples.len() < 2 {
                    return Err(ConfigError::invalid(
                        "potential.samples",
                        format!("need at least 2 samples (got {})", samples.len()),
                    ));
                }
                Ok(())
            }
        }
    }
}

/// Evaluates `V(x)`.
///
/// # Errors
///
/// A tabulated potential queried outside `[x_start, x_start + (len−1)·spacing]`
/// is rejected rather than extrapolated.
pub fn eval_potential(v: &PotentialSpec, x: f64) -> Result<f64, ConfigError> {
    match v {
        PotentialSpec::Zero => Ok(0.0),
        PotentialSpec::Gaussian { amplitude, width, center } => {
            let d = x - center;
            Ok(amplitude * (-width * d * d).exp())
        }
        PotentialSpec::Tabulated { x_start, spacing, samples } => {
            let x_end = x_start + (samples.len() - 1) as f64 * spacing;
            // One spacing of slack absorbs rounding at the sample ends.
            let eps = spacing * 1e-9;
            if x < x_start - eps || x > x_end + eps {
                return Err(ConfigError::invalid(
                    "potential.samples",
                    format!("x = {x} outside tabulated range [{x_start}, {x_end}]"),
                ));
            }
            let s = ((x - x_start) / spacing).clamp(0.0, (samples.len() - 1) as f64);
            let i = (s.floor() as usize).min(samples.len() - 2);
            let w = s - i as f64;
            Ok(samples[i] * (1.0 - w) + samples[i + 1] * w)
        }
    }
}
