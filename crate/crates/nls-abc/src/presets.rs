//! Bundled experiment configurations.
//!
//! Three ready-made setups cover the main regimes the solver targets:
//! a bright soliton exiting through an absorbing boundary, a fast chirped
//! Gaussian under quintic focusing, and a repulsive expansion over a
//! potential bump. They are the bases which config files and command-line
//! overrides refine.

use crate::boundary::BoundarySpec;
use crate::error::ConfigError;
use crate::grid::make_grid;
use crate::initial::InitialCondition;
use crate::nonlinearity::NonlinearitySpec;
use crate::params::PhysicalParams;
use crate::picard::SolverSettings;
use crate::potential::PotentialSpec;
use crate::simulate::SimulationConfig;

/// Named experiment setups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentPreset {
    /// Bright soliton `sech(x−15)·e^{2i(x−15)}` of the focusing cubic
    /// equation (g = −2) on [0, 30], Δx = 0.1, Δt = 0.01, T = 6. The
    /// soliton travels at speed 4 and crosses the right boundary around
    /// t ≈ 3.75; third-order absorbing rows with k0 = 2 (half the group
    /// velocity) let it exit. The exact solution is known, so this preset
    /// backs error and convergence measurements.
    Example1,
    /// Chirped Gaussian `e^{−x² + 8ix}` under quintic focusing (g = −2) on
    /// [−5, 5], Δx = 0.01, Δt = 0.001, T = 1. Group speed 16, absorbing
    /// rows with k0 = 8. Positive-energy data that radiates cleanly through
    /// the boundary; negative-energy data on the same grid blows up.
    Example2,
    /// Repulsive expansion (g = +2) of the Gaussian `e^{−0.1(x−15)²}` over
    /// the potential bump `V = e^{−0.5(x−15)²}` on [0, 30], Δx = 0.1,
    /// Δt = 0.0375, T = 6. No exact solution; the reflective baselines
    /// (`dirichlet_zero`, `neumann_zero`) provide the contrast case. The
    /// wave packet carries a band of group velocities; k0 = 1.5 sits in the
    /// effective range [1.25, 2].
    Example3,
}

impl ExperimentPreset {
    pub const ALL: [ExperimentPreset; 3] =
        [ExperimentPreset::Example1, ExperimentPreset::Example2, ExperimentPreset::Example3];

    /// The name used by config files and the command line.
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentPreset::Example1 => "example1",
            ExperimentPreset::Example2 => "example2",
            ExperimentPreset::Example3 => "example3",
        }
    }

    /// Looks a preset up by its [`name`](Self::name).
    ///
    /// # Errors
    ///
    /// Unknown names are rejected with the list of valid ones implied by
    /// the error kind.
    pub fn from_name(name: &str) -> Result<Self, ConfigError> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or(ConfigError::Unknown { kind: "preset", name: name.to_string() })
    }

    /// Builds the full configuration for this preset.
    pub fn config(&self) -> SimulationConfig {
        match self {
            ExperimentPreset::Example1 => SimulationConfig {
                physics: PhysicalParams::nondimensional(-2.0),
                grid: make_grid(0.0, 30.0, 300, 0.01, 600).expect("preset grid"),
                nonlinearity: NonlinearitySpec::Cubic,
                potential: PotentialSpec::Zero,
                initial: InitialCondition::BrightSoliton { a: 1.0, b: 2.0, x0: 15.0 },
                boundary: BoundarySpec::abc3(2.0).expect("preset boundary"),
                solver: SolverSettings::default(),
            },
            ExperimentPreset::Example2 => SimulationConfig {
                physics: PhysicalParams::nondimensional(-2.0),
                grid: make_grid(-5.0, 5.0, 1000, 0.001, 1000).expect("preset grid"),
                nonlinearity: NonlinearitySpec::Quintic,
                potential: PotentialSpec::Zero,
                initial: InitialCondition::ChirpedGaussian { k0: 8.0 },
                boundary: BoundarySpec::abc3(8.0).expect("preset boundary"),
                solver: SolverSettings::default(),
            },
            ExperimentPreset::Example3 => SimulationConfig {
                physics: PhysicalParams::nondimensional(2.0),
                grid: make_grid(0.0, 30.0, 300, 0.0375, 160).expect("preset grid"),
                nonlinearity: NonlinearitySpec::Cubic,
                potential: PotentialSpec::Gaussian { amplitude: 1.0, width: 0.5, center: 15.0 },
                initial: InitialCondition::Gaussian { alpha: 0.1, x0: 15.0 },
                boundary: BoundarySpec::abc3(1.5).expect("preset boundary"),
                solver: SolverSettings::default(),
            },
        }
    }
}
