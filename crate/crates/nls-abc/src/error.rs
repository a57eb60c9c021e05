//! Error types for configuration validation, linear/nonlinear solves, and
//! simulation runs.
//!
//! Three layers map onto the three failure classes a caller can act on:
//! [`ConfigError`] (reject the input, nothing ran), [`StepError`] (a single
//! implicit step failed), and [`SimulationError`] (a run aborted, with the
//! step index and physical time attached).

use thiserror::Error;

/// Rejected input: an invalid parameter, grid, or config file.
///
/// Every variant names the offending field so command-line users can fix the
/// file without reading source code.
#[derive(Debug, Error)]
pub enum ConfigError {
    /// A scalar field violated its constraint (e.g. `dt <= 0`).
    #[error("invalid value for `{field}`: {reason}")]
    Invalid { field: &'static str, reason: String },

    /// A required key was absent from a config file.
    #[error("missing required key `{field}`")]
    Missing { field: &'static str },

    /// The config file could not be read.
    #[error("cannot read config file `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// The config file is not valid TOML (message carries line/column).
    #[error("cannot parse config file `{path}`: {message}")]
    Parse { path: String, message: String },

    /// An unknown preset name or override key was supplied.
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

impl ConfigError {
    /// Shorthand for an [`Invalid`](ConfigError::Invalid) value error.
    pub fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        ConfigError::Invalid { field, reason: reason.into() }
    }
}

/// Failure of a single implicit time step.
#[derive(Debug, Error)]
pub enum StepError {
    /// The tridiagonal elimination hit a pivot that is zero to working
    /// precision; `row` is the equation index in the assembled system.
    #[error("numerically singular pivot in tridiagonal solve at row {row}")]
    SingularPivot { row: usize },

    /// The Picard iteration did not reach the requested tolerance.
    #[error(
        "Picard iteration did not converge after {iterations} iterations \
         (last relative change {change:.3e}); reduce dt or check for blow-up"
    )]
    NonConvergence { iterations: usize, change: f64 },

    /// A non-finite value (NaN or infinity) appeared in the field.
    #[error("non-finite value in wave field")]
    NonFinite,

    /// Input fields disagree in length with the configured grid.
    #[error("field length {got} does not match grid ({expected} nodes including ghosts)")]
    ShapeMismatch { got: usize, expected: usize },
}

/// Abort of a multi-step run, locating the failure in time.
#[derive(Debug, Error)]
pub enum SimulationError {
    /// A step failed; `step` is 1-based, `time` the target time level.
    #[error("step {step} (t = {time:.6}) failed: {source}")]
    Step {
        step: usize,
        time: f64,
        #[source]
        source: StepError,
    },

    /// The blow-up guard tripped: the field amplitude grew beyond
    /// [`BLOWUP_GUARD_FACTOR`](crate::simulate::BLOWUP_GUARD_FACTOR)
    /// times its initial maximum.
    #[error(
        "blow-up guard tripped at step {step} (t = {time:.6}): \
         max|psi| = {max_abs:.3e} exceeds {limit:.3e}"
    )]
    Blowup { step: usize, time: f64, max_abs: f64, limit: f64 },

    /// The run was rejected before stepping.
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// Convenience alias used by the analysis and driver layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Simulation(#[from] SimulationError),
    #[error("I/O error at `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl From<StepError> for Error {
    fn from(e: StepError) -> Self {
        Error::Simulation(SimulationError::Step { step: 0, time: 0.0, source: e })
    }
}

/// Process exit codes used by the command-line harness.
///
/// 0 = success, 1 = I/O failure, 2 = configuration error,
/// 3 = Picard non-convergence, 4 = blow-up guard / non-finite values.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Config(_) => 2,
        Error::Simulation(SimulationError::Config(_)) => 2,
        Error::Simulation(SimulationError::Blowup { .. }) => 4,
        Error::Simulation(SimulationError::Step { source, .. }) => match source {
            StepError::NonConvergence { .. } => 3,
            _ => 4,
        },
        Error::Io { .. } => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_error_names_field() {
        let e = ConfigError::invalid("grid.dt", "must be positive (got -0.1)");
        let msg = e.to_string();
        assert!(msg.contains("grid.dt"), "message should name the key: {msg}");
        assert!(msg.contains("-0.1"));
    }

    #[test]
    fn singular_pivot_reports_row() {
        let e = StepError::SingularPivot { row: 17 };
        assert!(e.to_string().contains("17"));
    }

    #[test]
    fn exit_codes_are_distinct() {
        let config = Error::Config(ConfigError::Missing { field: "grid" });
        let picard = Error::Simulation(SimulationError::Step {
            step: 3,
            time: 0.3,
            source: StepError::NonConvergence { iterations: 50, change: 1.0 },
        });
        let blowup = Error::Simulation(SimulationError::Blowup {
            step: 3,
            time: 0.3,
            max_abs: 1e9,
            limit: 1e6,
        });
        let io = Error::Io { path: "out.csv".into(), source: std::io::Error::other("disk full") };
        assert_eq!(exit_code(&config), 2);
        assert_eq!(exit_code(&picard), 3);
        assert_eq!(exit_code(&blowup), 4);
        assert_eq!(exit_code(&io), 1);
    }

    #[test]
    fn step_error_embedded_in_simulation_error_keeps_context() {
        let e = SimulationError::Step {
            step: 47,
            time: 0.047,
            source: StepError::NonConvergence { iterations: 50, change: 2.3e-1 },
        };
        let msg = e.to_string();
        assert!(msg.contains("step 47"));
        assert!(msg.contains("0.047"));
    }
}
