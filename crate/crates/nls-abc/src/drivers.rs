//! Multi-run experiment drivers: mesh-refinement studies and wavenumber
//! sweeps. Independent runs execute in parallel; result tables are
//! assembled in input order, so output is deterministic regardless of
//! scheduling.

use rayon::prelude::*;

use crate::analysis::convergence_order;
use crate::error::{ConfigError, Error};
use crate::exact::SolitonOracle;
use crate::field::WaveField;
use crate::grid::make_grid;
use crate::initial::InitialCondition;
use crate::nonlinearity::NonlinearitySpec;
use crate::potential::PotentialSpec;
use crate::simulate::{run_simulation_from, Probe, SimulationConfig};

/// The exact-solution oracle for a configuration, when one exists: cubic
/// focusing at exactly g = −2, no external potential, and a bright-soliton
/// initial profile (whose amplitude normalization matches that g).
pub fn soliton_oracle_for(config: &SimulationConfig) -> Option<SolitonOracle> {
    if config.nonlinearity != NonlinearitySpec::Cubic
        || config.potential != PotentialSpec::Zero
        || config.physics.g != -2.0
    {
        return None;
    }
    match config.initial {
        InitialCondition::BrightSoliton { a, b, x0 } => {
            SolitonOracle::new(a, b, config.physics.g, x0).ok()
        }
        _ => None,
    }
}

/// Initial field sampled from an exact soliton at `t = 0` (ghosts filled
/// from the closed form).
pub fn matched_soliton_initial(oracle: &SolitonOracle, grid: &crate::grid::Grid) -> WaveField {
    WaveField::from_fn(grid, |x| oracle.eval(x, 0.0))
}

/// One cell of a mesh-refinement study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceEntry {
    pub dx: f64,
    pub dt: f64,
    /// Measurement time (the run integrates `0..=t`).
    pub t: f64,
    /// Space-time L1 error over that window.
    pub l1: f64,
}

/// Errors and observed orders over a `dx` ladder at several measurement
/// times.
#[derive(Debug, Clone)]
pub struct ConvergenceTable {
    pub dxs: Vec<f64>,
    pub times: Vec<f64>,
    /// Row-major: entry for `(dxs[i], times[k])` at index `i·times.len() + k`.
    pub entries: Vec<ConvergenceEntry>,
}

impl ConvergenceTable {
    pub fn error(&self, dx_index: usize, time_index: usize) -> f64 {
        self.entries[dx_index * self.times.len() + time_index].l1
    }

    /// Observed order between ladder rungs `dx_index` and `dx_index + 1`
    /// at one measurement time.
    pub fn order(&self, dx_index: usize, time_index: usize) -> Result<f64, ConfigError> {
        convergence_order(self.error(dx_index, time_index), self.error(dx_index + 1, time_index))
    }
}

/// Runs the refinement ladder `dx ∈ dxs` with `Δt = Δx²`, measuring the
/// space-time L1 error against the exact soliton at each time in `times`.
///
/// # Errors
///
/// The base configuration must admit an exact-soliton oracle
/// ([`soliton_oracle_for`]); run failures propagate.
pub fn convergence_table(
    base: &SimulationConfig,
    dxs: &[f64],
    times: &[f64],
) -> Result<ConvergenceTable, Error> {
    let oracle = soliton_oracle_for(base).ok_or_else(|| {
        ConfigError::invalid(
            "converge",
            "needs an exact-soliton setup: cubic g = -2, zero potential, bright_soliton initial",
        )
    })?;
    for (name, list) in [("converge.dx", dxs), ("converge.times", times)] {
        if list.is_empty() {
            return Err(ConfigError::invalid(name, "list is empty").into());
        }
        if let Some(&bad) = list.iter().find(|v| !(**v > 0.0) || !v.is_finite()) {
            return Err(ConfigError::invalid(name, format!("must be positive (got {bad})")).into());
        }
    }

    let span = base.grid.x_r - base.grid.x_l;
    let cells: Vec<(f64, f64)> =
        dxs.iter().flat_map(|&dx| times.iter().map(move |&t| (dx, t))).collect();
    let entries: Vec<ConvergenceEntry> = cells
        .par_iter()
        .map(|&(dx, t)| -> Result<ConvergenceEntry, Error> {
            let intervals = (span / dx).round() as usize;
            let dt = dx * dx;
            let steps = (t / dt).round().max(1.0) as usize;
            let mut config = base.clone();
            config.grid = make_grid(base.grid.x_l, base.grid.x_r, intervals, dt, steps)?;
            let initial = matched_soliton_initial(&oracle, &config.grid);
            let outcome = run_simulation_from(initial, &config, &[Probe::SolitonL1 { oracle }])?;
            Ok(ConvergenceEntry {
                dx: config.grid.dx,
                dt,
                t,
                l1: outcome.l1_error.expect("L1 probe was attached"),
            })
        })
        .collect::<Result<_, _>>()?;

    Ok(ConvergenceTable { dxs: dxs.to_vec(), times: times.to_vec(), entries })
}

/// One wavenumber-sweep measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepEntry {
    pub k0: f64,
    pub g: f64,
    /// Reflection ratio at the final time.
    pub reflection: f64,
}

/// The wavenumber grid 0.5, 0.75, …, 6.75 plus the near-optimal 2.125.
pub fn default_sweep_wavenumbers() -> Vec<f64> {
    let mut k0s: Vec<f64> = (0..26).map(|i| 0.5 + 0.25 * i as f64).collect();
    k0s.push(2.125);
    k0s.sort_by(f64::total_cmp);
    k0s
}

/// Measures the final reflection ratio over a grid of wavenumber
/// parameters and coupling strengths.
///
/// For a bright-soliton base the initial amplitude is re-matched to each
/// `g` (the sech amplitude scales as `√(−2/g)`), so every run launches an
/// exact traveling soliton of its own equation; other initial conditions
/// are used as configured.
///
/// # Errors
///
/// Soliton re-matching requires `g < 0`; run failures propagate.
pub fn k0_sweep(
    base: &SimulationConfig,
    k0s: &[f64],
    gs: &[f64],
) -> Result<Vec<SweepEntry>, Error> {
    if k0s.is_empty() {
        return Err(ConfigError::invalid("sweep.k0", "list is empty").into());
    }
    if gs.is_empty() {
        return Err(ConfigError::invalid("sweep.g", "list is empty").into());
    }
    let cells: Vec<(f64, f64)> =
        gs.iter().flat_map(|&g| k0s.iter().map(move |&k0| (g, k0))).collect();
    cells
        .par_iter()
        .map(|&(g, k0)| -> Result<SweepEntry, Error> {
            let mut config = base.clone();
            config.physics.g = g;
            config.boundary.k0_left = k0;
            config.boundary.k0_right = k0;
            let initial = match base.initial {
                InitialCondition::BrightSoliton { a, b, x0 } => {
                    let oracle = SolitonOracle::new(a, b, g, x0).map_err(|_| {
                        ConfigError::invalid(
                            "sweep.g",
                            format!("soliton initial data needs g < 0 (got {g})"),
                        )
                    })?;
                    matched_soliton_initial(&oracle, &config.grid)
                }
                _ => crate::initial::eval_initial(&config.initial, &config.grid)
                    .map_err(Error::Config)?,
            };
            let outcome = run_simulation_from(initial, &config, &[])?;
            let reflection = *outcome
                .observables
                .reflection
                .last()
                .expect("nonzero initial mass yields a reflection series");
            Ok(SweepEntry { k0, g, reflection })
        })
        .collect()
}
