//! Full simulation runs: configuration, probes, and the stepping loop.

use crate::analysis::{self, L1Accumulator};
use crate::boundary::BoundarySpec;
use crate::error::{ConfigError, SimulationError};
use crate::exact::SolitonOracle;
use crate::field::WaveField;
use crate::grid::Grid;
use crate::initial::{eval_initial, InitialCondition};
use crate::nonlinearity::NonlinearitySpec;
use crate::params::PhysicalParams;
use crate::picard::{picard_step, SolverSettings};
use crate::potential::{eval_potential, PotentialSpec};

/// The run aborts when `max|ψ|` exceeds this factor times the initial
/// maximum, converting a focusing blow-up into a diagnosable error instead
/// of a NaN cascade.
pub const BLOWUP_GUARD_FACTOR: f64 = 1e6;

/// Everything needed to run one initial boundary value problem.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationConfig {
    pub physics: PhysicalParams,
    pub grid: Grid,
    pub nonlinearity: NonlinearitySpec,
    pub potential: PotentialSpec,
    pub initial: InitialCondition,
    pub boundary: BoundarySpec,
    pub solver: SolverSettings,
}

impl SimulationConfig {
    /// Validates every component, including grid self-consistency for
    /// configs assembled by hand rather than through
    /// [`make_grid`](crate::grid::make_grid).
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.physics.validate()?;
        let span = self.grid.x_r - self.grid.x_l;
        if !(span > 0.0) || self.grid.intervals < 4 {
            return Err(ConfigError::invalid("grid", "domain empty or too few intervals"));
        }
        let expect_dx = span / self.grid.intervals as f64;
        if !self.grid.dx.is_finite() || (self.grid.dx - expect_dx).abs() > 1e-12 * expect_dx {
            return Err(ConfigError::invalid(
                "grid.dx",
                format!("inconsistent with domain ({} vs {})", self.grid.dx, expect_dx),
            ));
        }
        if !(self.grid.dt > 0.0) || !self.grid.dt.is_finite() {
            return Err(ConfigError::invalid(
                "grid.dt",
                format!("must be positive (got {})", self.grid.dt),
            ));
        }
        if self.grid.steps == 0 {
            return Err(ConfigError::invalid("grid.steps", "must be at least 1"));
        }
        self.potential.validate()?;
        self.initial.validate()?;
        self.boundary.validate()?;
        self.solver.validate()?;
        Ok(())
    }

    /// Final time `T = N·Δt`.
    pub fn t_final(&self) -> f64 {
        self.grid.t_final()
    }
}

/// Optional measurements recorded while a run advances. The discrete mass
/// and the reflection ratio are always tracked; these probes add
/// oracle-based errors and field snapshots.
#[derive(Debug, Clone)]
pub enum Probe {
    /// Track `|ψ_node^n − ψ_exa(x_node, t^n)|` at one physical node.
    BoundaryError { node: isize, oracle: SolitonOracle },
    /// Accumulate the space-time L1 error against the exact soliton.
    SolitonL1 { oracle: SolitonOracle },
    /// Store full field snapshots at the listed step indices.
    Snapshots { steps: Vec<usize> },
}

/// A stored field copy with its step index and physical time.
#[derive(Debug, Clone)]
pub struct Snapshot {
    pub step: usize,
    pub time: f64,
    pub field: WaveField,
}

/// Time series recorded over a run. `times`, `mass` (and `reflection`, when
/// the initial field has nonzero mass) cover every level `n = 0..=N`;
/// `boundary_error` is nonempty only when the corresponding probe was
/// requested.
#[derive(Debug, Clone, Default)]
pub struct RunObservables {
    pub times: Vec<f64>,
    pub mass: Vec<f64>,
    pub reflection: Vec<f64>,
    pub boundary_error: Vec<f64>,
    pub snapshots: Vec<Snapshot>,
}

/// Result of a completed run.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub observables: RunObservables,
    pub final_field: WaveField,
    /// Space-time L1 error, present when a [`Probe::SolitonL1`] was attached.
    pub l1_error: Option<f64>,
    pub total_picard_iterations: usize,
    pub max_picard_iterations: usize,
}

/// Validated probe layout for one run.
struct ProbePlan {
    boundary: Option<(isize, SolitonOracle)>,
    l1: Option<SolitonOracle>,
    snapshot_steps: Vec<usize>,
}

impl ProbePlan {
    fn build(probes: &[Probe], grid: &Grid) -> Result<Self, ConfigError> {
        let mut plan = ProbePlan { boundary: None, l1: None, snapshot_steps: Vec::new() };
        for probe in probes {
            match probe {
                Probe::BoundaryError { node, oracle } => {
                    if plan.boundary.is_some() {
                        return Err(ConfigError::invalid("probes", "duplicate boundary probe"));
                    }
                    if *node < 0 || *node > grid.intervals as isize {
                        return Err(ConfigError::invalid(
                            "probes.boundary_error",
                            format!("node {node} outside physical range 0..={}", grid.intervals),
                        ));
                    }
                    plan.boundary = Some((*node, *oracle));
                }
                Probe::SolitonL1 { oracle } => {
                    if plan.l1.is_some() {
                        return Err(ConfigError::invalid("probes", "duplicate L1 probe"));
                    }
                    plan.l1 = Some(*oracle);
                }
                Probe::Snapshots { steps } => {
                    plan.snapshot_steps.extend_from_slice(steps);
                }
            }
        }
        plan.snapshot_steps.sort_unstable();
        plan.snapshot_steps.dedup();
        if let Some(&last) = plan.snapshot_steps.last() {
            if last > grid.steps {
                return Err(ConfigError::invalid(
                    "probes.snapshots",
                    format!("step {last} beyond final step {}", grid.steps),
                ));
            }
        }
        Ok(plan)
    }
}

/// Per-level recording state.
struct Recorder {
    initial_mass_sq: f64,
    l1: Option<L1Accumulator>,
    out: RunObservables,
}

impl Recorder {
    fn new(plan: &ProbePlan, grid: &Grid, initial: &WaveField) -> Self {
        let levels = grid.steps + 1;
        let initial_mass_sq: f64 = initial.physical().iter().map(|z| z.norm_sqr()).sum();
        Recorder {
            initial_mass_sq,
            l1: plan.l1.as_ref().map(|_| L1Accumulator::new(grid.num_physical())),
            out: RunObservables {
                times: Vec::with_capacity(levels),
                mass: Vec::with_capacity(levels),
                reflection: if initial_mass_sq > 0.0 {
                    Vec::with_capacity(levels)
                } else {
                    Vec::new()
                },
                boundary_error: Vec::new(),
                snapshots: Vec::new(),
            },
        }
    }

    fn record(
        &mut self,
        plan: &ProbePlan,
        grid: &Grid,
        n: usize,
        field: &WaveField,
    ) -> Result<(), ConfigError> {
        let t = grid.time(n);
        self.out.times.push(t);
        self.out.mass.push(analysis::mass(field, grid));
        if self.initial_mass_sq > 0.0 {
            let mass_sq: f64 = field.physical().iter().map(|z| z.norm_sqr()).sum();
            self.out.reflection.push(mass_sq / self.initial_mass_sq);
        }
        if let Some((node, oracle)) = &plan.boundary {
            let err = (field.at(*node) - oracle.eval(grid.node(*node), t)).norm();
            self.out.boundary_error.push(err);
        }
        if let (Some(acc), Some(oracle)) = (self.l1.as_mut(), plan.l1.as_ref()) {
            acc.absorb(
                field.physical(),
                (0..=grid.intervals as isize).map(|j| oracle.eval(grid.node(j), t)),
            )?;
        }
        if plan.snapshot_steps.binary_search(&n).is_ok() {
            self.out.snapshots.push(Snapshot { step: n, time: t, field: field.clone() });
        }
        Ok(())
    }
}

/// Runs the configured problem from its own initial condition.
pub fn run_simulation(
    config: &SimulationConfig,
    probes: &[Probe],
) -> Result<RunOutcome, SimulationError> {
    config.validate()?;
    let initial = eval_initial(&config.initial, &config.grid)?;
    run_simulation_from(initial, config, probes)
}

/// Runs the configured problem from a caller-supplied initial field
/// (including ghost values), for initial data outside the
/// [`InitialCondition`] catalogue.
pub fn run_simulation_from(
    initial: WaveField,
    config: &SimulationConfig,
    probes: &[Probe],
) -> Result<RunOutcome, SimulationError> {
    config.validate()?;
    let grid = &config.grid;
    if initial.len() != grid.num_nodes() {
        return Err(ConfigError::invalid(
            "initial.field",
            format!("has {} nodes, grid needs {}", initial.len(), grid.num_nodes()),
        )
        .into());
    }
    if !initial.is_finite() {
        return Err(ConfigError::invalid("initial.field", "contains non-finite values").into());
    }
    let plan = ProbePlan::build(probes, grid)?;

    let v: Vec<f64> = (0..=grid.intervals as isize)
        .map(|j| eval_potential(&config.potential, grid.node(j)))
        .collect::<Result<_, _>>()?;

    let guard_limit = BLOWUP_GUARD_FACTOR * initial.max_abs();
    let mut recorder = Recorder::new(&plan, grid, &initial);
    recorder.record(&plan, grid, 0, &initial)?;

    let mut psi = initial;
    let mut total_iters = 0usize;
    let mut max_iters = 0usize;
    for n in 1..=grid.steps {
        let (next, iters) = picard_step(
            grid,
            &config.physics,
            config.nonlinearity,
            &config.boundary,
            &v,
            &psi,
            &config.solver,
        )
        .map_err(|source| SimulationError::Step { step: n, time: grid.time(n), source })?;
        total_iters += iters;
        max_iters = max_iters.max(iters);

        let amplitude = next.max_abs();
        if guard_limit > 0.0 && amplitude > guard_limit {
            return Err(SimulationError::Blowup {
                step: n,
                time: grid.time(n),
                max_abs: amplitude,
                limit: guard_limit,
            });
        }
        psi = next;
        recorder.record(&plan, grid, n, &psi)?;
    }

    Ok(RunOutcome {
        l1_error: recorder.l1.as_ref().map(L1Accumulator::value),
        observables: recorder.out,
        final_field: psi,
        total_picard_iterations: total_iters,
        max_picard_iterations: max_iters,
    })
}
