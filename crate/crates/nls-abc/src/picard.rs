//! Fixed-point (Picard) resolution of the implicit nonlinear step.
//!
//! The Crank-Nicolson step is nonlinear because `W = V + g·f(ρ)` is
//! evaluated at the midpoint density `ρ = |(ψ^{n+1} + ψ^n)/2|²`. Each Picard
//! sweep freezes `W` at the current iterate, solves the resulting linear
//! tridiagonal system, and repeats until the iterate stops moving in the
//! relative maximum norm. The previous time level is the initial guess, so
//! for smooth fields the loop typically converges in a handful of sweeps.

use num_complex::Complex64;

use crate::boundary::BoundarySpec;
use crate::error::{ConfigError, StepError};
use crate::field::WaveField;
use crate::grid::Grid;
use crate::nonlinearity::NonlinearitySpec;
use crate::params::PhysicalParams;
use crate::scheme::assemble_system;

/// Iteration controls for the implicit step.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(default)]
pub struct SolverSettings {
    /// Convergence threshold on the relative max-norm change between
    /// successive iterates.
    pub picard_tol: f64,
    /// Iteration budget per time step before the step is declared failed.
    pub picard_max_iters: usize,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings { picard_tol: 1e-12, picard_max_iters: 50 }
    }
}

impl SolverSettings {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.picard_tol > 0.0) || !self.picard_tol.is_finite() {
            return Err(ConfigError::invalid(
                "solver.picard_tol",
                format!("must be positive (got {})", self.picard_tol),
            ));
        }
        if self.picard_max_iters == 0 {
            return Err(ConfigError::invalid("solver.picard_max_iters", "must be at least 1"));
        }
        Ok(())
    }
}

/// Advances `psi` by one time step, returning the new level and the number
/// of Picard sweeps it took. `v` holds the (time-independent) potential
/// samples `V(x_j)` at the physical nodes.
///
/// For a linear problem (`f = none`) the system is solved once, directly.
///
/// # Errors
///
/// [`StepError::NonConvergence`] when the iteration budget is exhausted,
/// [`StepError::NonFinite`] when an iterate leaves the finite range (the
/// usual signature of blow-up), or [`StepError::SingularPivot`] from the
/// linear solve.
pub fn picard_step(
    grid: &Grid,
    physics: &PhysicalParams,
    nonlinearity: NonlinearitySpec,
    boundary: &BoundarySpec,
    v: &[f64],
    psi: &WaveField,
    settings: &SolverSettings,
) -> Result<(WaveField, usize), StepError> {
    if psi.len() != grid.num_nodes() {
        return Err(StepError::ShapeMismatch { got: psi.len(), expected: grid.num_nodes() });
    }
    debug_assert_eq!(v.len(), grid.num_physical());

    if nonlinearity.is_linear() {
        let sys = assemble_system(grid, physics, boundary, v, psi);
        let next = sys.solve()?;
        ensure_finite(&next)?;
        return Ok((WaveField::from_values(next, psi.time_index + 1), 1));
    }

    let mut current: Vec<Complex64> = psi.as_slice().to_vec();
    let mut w = vec![0.0; grid.num_physical()];
    let mut last_change = f64::INFINITY;
    for iteration in 1..=settings.picard_max_iters {
        for (j, w_j) in w.iter_mut().enumerate() {
            // Physical node j sits at storage slot j + 1.
            let mid = (current[j + 1] + psi.at(j as isize)) / 2.0;
            *w_j = v[j] + physics.g * nonlinearity.eval(mid.norm_sqr());
        }
        let sys = assemble_system(grid, physics, boundary, &w, psi);
        let next = sys.solve()?;
        ensure_finite(&next)?;

        let scale = next.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-300);
        last_change =
            next.iter().zip(&current).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) / scale;
        current = next;
        if last_change <= settings.picard_tol {
            return Ok((WaveField::from_values(current, psi.time_index + 1), iteration));
        }
    }
    Err(StepError::NonConvergence { iterations: settings.picard_max_iters, change: last_change })
}

fn ensure_finite(values: &[Complex64]) -> Result<(), StepError> {
    if values.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(StepError::NonFinite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::BoundaryKind;
    use crate::exact::SolitonOracle;
    use crate::grid::make_grid;
    use crate::initial::{eval_initial, InitialCondition};

    fn soliton_setup() -> (Grid, PhysicalParams, BoundarySpec, Vec<f64>, WaveField) {
        let grid = make_grid(0.0, 30.0, 300, 0.01, 600).unwrap();
        let physics = PhysicalParams::nondimensional(-2.0);
        let boundary = BoundarySpec::abc3(2.0).unwrap();
        let v = vec![0.0; grid.num_physical()];
        let ic = InitialCondition::BrightSoliton { a: 1.0, b: 2.0, x0: 15.0 };
        let psi = eval_initial(&ic, &grid).unwrap();
        (grid, physics, boundary, v, psi)
    }

    fn mass(grid: &Grid, field: &WaveField) -> f64 {
        field.physical().iter().map(|z| z.norm_sqr()).sum::<f64>() * grid.dx
    }

    #[test]
    fn linear_step_solves_directly() {
        let grid = make_grid(0.0, 10.0, 64, 0.01, 1).unwrap();
        let physics = PhysicalParams::nondimensional(0.0);
        let boundary = BoundarySpec::new(BoundaryKind::DirichletZero, 1.0, 1.0).unwrap();
        let v = vec![0.0; grid.num_physical()];
        let psi = WaveField::from_fn(&grid, |x| {
            Complex64::from_polar((-0.5 * (x - 5.0).powi(2)).exp(), 2.0 * x)
        });
        let settings = SolverSettings::default();
        let (next, iters) =
            picard_step(&grid, &physics, NonlinearitySpec::None, &boundary, &v, &psi, &settings)
                .unwrap();
        assert_eq!(iters, 1);
        assert_eq!(next.time_index, 1);
        assert!(next.is_finite());
    }

    /// The converged iterate is an actual fixed point: re-freezing W on it
    /// and solving again leaves the field unchanged to solver precision.
    #[test]
    fn converged_iterate_is_a_fixed_point() {
        let (grid, physics, boundary, v, psi) = soliton_setup();
        let settings = SolverSettings::default();
        let (next, iters) =
            picard_step(&grid, &physics, NonlinearitySpec::Cubic, &boundary, &v, &psi, &settings)
                .unwrap();
        assert!(iters >= 2, "cubic step should iterate, took {iters}");
        assert!(iters <= 12, "smooth soliton step should converge fast, took {iters}");

        let mut w = vec![0.0; grid.num_physical()];
        for (j, w_j) in w.iter_mut().enumerate() {
            let mid = (next.at(j as isize) + psi.at(j as isize)) / 2.0;
            *w_j = v[j] + physics.g * mid.norm_sqr();
        }
        let refreeze = assemble_system(&grid, &physics, &boundary, &w, &psi).solve().unwrap();
        let drift =
            refreeze.iter().zip(next.as_slice()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        assert!(drift < 1e-10, "fixed-point drift {drift}");
    }

    /// One soliton step stays close to the exact solution (local accuracy).
    #[test]
    fn soliton_step_tracks_exact_solution() {
        let (grid, physics, boundary, v, psi) = soliton_setup();
        let settings = SolverSettings::default();
        let (next, _) =
            picard_step(&grid, &physics, NonlinearitySpec::Cubic, &boundary, &v, &psi, &settings)
                .unwrap();
        let oracle = SolitonOracle::new(1.0, 2.0, -2.0, 15.0).unwrap();
        let t = grid.time(1);
        let err = (0..=grid.intervals as isize)
            .map(|j| (next.at(j) - oracle.eval(grid.node(j), t)).norm())
            .fold(0.0, f64::max);
        assert!(err < 5e-4, "one-step max error {err}");
    }

    /// With Dirichlet walls the Crank-Nicolson step is a Cayley transform of
    /// a Hermitian operator, so the discrete mass is conserved to the Picard
    /// tolerance every step.
    #[test]
    fn dirichlet_step_conserves_mass() {
        let grid = make_grid(0.0, 30.0, 150, 0.02, 1).unwrap();
        let physics = PhysicalParams::nondimensional(-2.0);
        let boundary = BoundarySpec::new(BoundaryKind::DirichletZero, 1.0, 1.0).unwrap();
        let v = vec![0.0; grid.num_physical()];
        let ic = InitialCondition::BrightSoliton { a: 1.0, b: 2.0, x0: 15.0 };
        let mut psi = eval_initial(&ic, &grid).unwrap();
        let before = mass(&grid, &psi);
        let settings = SolverSettings::default();
        for _ in 0..5 {
            let (next, _) = picard_step(
                &grid,
                &physics,
                NonlinearitySpec::Cubic,
                &boundary,
                &v,
                &psi,
                &settings,
            )
            .unwrap();
            psi = next;
        }
        let after = mass(&grid, &psi);
        assert!(((after - before) / before).abs() < 1e-10, "mass drifted from {before} to {after}");
    }

    #[test]
    fn exhausted_budget_reports_non_convergence() {
        let (grid, physics, boundary, v, psi) = soliton_setup();
        let settings = SolverSettings { picard_tol: 1e-12, picard_max_iters: 1 };
        match picard_step(&grid, &physics, NonlinearitySpec::Cubic, &boundary, &v, &psi, &settings)
        {
            Err(StepError::NonConvergence { iterations: 1, change }) => {
                assert!(change > 1e-12);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let (grid, physics, boundary, v, _) = soliton_setup();
        let wrong = WaveField::from_values(vec![Complex64::new(1.0, 0.0); 5], 0);
        let err = picard_step(
            &grid,
            &physics,
            NonlinearitySpec::Cubic,
            &boundary,
            &v,
            &wrong,
            &SolverSettings::default(),
        )
        .unwrap_err();
        assert!(matches!(err, StepError::ShapeMismatch { got: 5, .. }));
    }

    #[test]
    fn settings_validation() {
        assert!(SolverSettings::default().validate().is_ok());
        assert!(SolverSettings { picard_tol: 0.0, ..Default::default() }.validate().is_err());
        assert!(SolverSettings { picard_max_iters: 0, ..Default::default() }.validate().is_err());
    }
}
