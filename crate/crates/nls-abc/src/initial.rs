//! Initial wave profiles and their evaluation onto a grid.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::ConfigError;
use crate::field::WaveField;
use crate::grid::Grid;

/// Initial condition families used by the bundled experiments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum InitialCondition {
    /// `ψ(x,0) = A·sech(A(x − x0))·e^{iB(x − x0)}`.
    ///
    /// With `A = 1, B = 2, x0 = 15` this is the traveling bright soliton of
    /// the cubic equation at `g = −2`.
    BrightSoliton { a: f64, b: f64, x0: f64 },
    /// `ψ(x,0) = e^{−x² + i·k0·x}` (moving Gaussian wave packet).
    ChirpedGaussian { k0: f64 },
    /// `ψ(x,0) = e^{−alpha·(x − x0)²}`, `alpha > 0` (wave packet at rest).
    Gaussian { alpha: f64, x0: f64 },
}

impl InitialCondition {
    /// Checks parameter constraints (`alpha > 0`, finiteness).
    pub fn validate(&self) -> Result<(), ConfigError> {
        let fields: &[(&str, f64)] = match self {
            InitialCondition::BrightSoliton { a, b, x0 } => {
                &[("initial.a", *a), ("initial.b", *b), ("initial.x0", *x0)]
            }
            InitialCondition::ChirpedGaussian { k0 } => &[("initial.k0", *k0)],
            InitialCondition::Gaussian { alpha, x0 } => {
                if !(*alpha > 0.0) {
                    return Err(ConfigError::invalid(
                        "initial.alpha",
                        format!("must be positive (got {alpha})"),
                    ));
                }
                &[("initial.alpha", *alpha), ("initial.x0", *x0)]
            }
        };
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(ConfigError::invalid(name, format!("must be finite (got {v})")));
            }
        }
        Ok(())
    }

    /// Pointwise closed-form value at `x`.
    pub fn eval(&self, x: f64) -> Complex64 {
        match *self {
            InitialCondition::BrightSoliton { a, b, x0 } => {
                let xi = x - x0;
                (a / (a * xi).cosh()) * Complex64::new(0.0, b * xi).exp()
            }
            InitialCondition::ChirpedGaussian { k0 } => Complex64::new(-x * x, k0 * x).exp(),
            InitialCondition::Gaussian { alpha, x0 } => {
                let xi = x - x0;
                Complex64::new((-alpha * xi * xi).exp(), 0.0)
            }
        }
    }
}

/// Samples the initial condition on every node of `grid`, ghosts included
/// (the closed form extends smoothly past the boundary).
///
/// # Errors
///
/// Propagates parameter validation (e.g. `alpha <= 0`).
pub fn eval_initial(ic: &InitialCondition, grid: &Grid) -> Result<WaveField, ConfigError> {
    ic.validate()?;
    Ok(WaveField::from_fn(grid, |x| ic.eval(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::SolitonOracle;
    use crate::grid::make_grid;

    #[test]
    fn soliton_peak_is_one() {
        let ic = InitialCondition::BrightSoliton { a: 1.0, b: 2.0, x0: 15.0 };
        let z = ic.eval(15.0);
        assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn chirped_gaussian_at_origin_is_one() {
        let ic = InitialCondition::ChirpedGaussian { k0: 8.0 };
        assert!((ic.eval(0.0) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn gaussian_peak_is_one() {
        let ic = InitialCondition::Gaussian { alpha: 0.1, x0: 15.0 };
        assert!((ic.eval(15.0) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn bright_soliton_equals_exact_soliton_at_t0() {
        // The amplitude-1 sech profile is the exact solution for g = -2.
        let grid = make_grid(0.0, 30.0, 300, 0.01, 1).unwrap();
        let ic = InitialCondition::BrightSoliton { a: 1.0, b: 2.0, x0: 15.0 };
        let field = eval_initial(&ic, &grid).unwrap();
        let oracle = SolitonOracle::new(1.0, 2.0, -2.0, 15.0).unwrap();
        for j in -1..=301_isize {
            let diff = (field.at(j) - oracle.eval(grid.node(j), 0.0)).norm();
            assert!(diff < 1e-15, "node {j}: diff {diff}");
        }
    }

    #[test]
    fn ghosts_filled_from_closed_form() {
        let grid = make_grid(0.0, 1.0, 4, 0.1, 1).unwrap();
        let ic = InitialCondition::Gaussian { alpha: 1.0, x0: 0.5 };
        let field = eval_initial(&ic, &grid).unwrap();
        assert!((field.at(-1) - ic.eval(-0.25)).norm() < 1e-15);
        assert!((field.at(5) - ic.eval(1.25)).norm() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive_alpha() {
        let grid = make_grid(0.0, 1.0, 4, 0.1, 1).unwrap();
        let ic = InitialCondition::Gaussian { alpha: 0.0, x0: 0.5 };
        let err = eval_initial(&ic, &grid).unwrap_err();
        assert!(err.to_string().contains("alpha"));
    }
}
