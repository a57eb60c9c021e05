//! TOML configuration files: schema, preset merging, and overrides.
//!
//! A config file consists of optional sections (`[physics]`, `[grid]`,
//! `[nonlinearity]`, `[potential]`, `[initial]`, `[boundary]`, `[solver]`)
//! plus an optional `preset = "…"` base. Resolution order:
//!
//! 1. start from the preset's full configuration (empty when no preset),
//! 2. replace whole sections with those present in the file,
//! 3. apply dotted-path overrides (`grid.dt=0.05`) key by key.
//!
//! Every section except `[solver]` must be present after merging; `[solver]`
//! falls back to the defaults. See `SCHEMA_EXAMPLE` for a complete document.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::boundary::BoundarySpec;
use crate::error::ConfigError;
use crate::grid::make_grid;
use crate::initial::InitialCondition;
use crate::nonlinearity::NonlinearitySpec;
use crate::params::PhysicalParams;
use crate::picard::SolverSettings;
use crate::potential::PotentialSpec;
use crate::presets::ExperimentPreset;
use crate::simulate::SimulationConfig;

/// A complete config document (also produced by [`to_toml_string`]).
pub const SCHEMA_EXAMPLE: &str = r#"[physics]
hbar = 1.0
mass = 0.5
g = -2.0

[grid]
x_left = 0.0
x_right = 30.0
intervals = 300
dt = 0.01
steps = 600

[nonlinearity]
kind = "cubic"            # cubic | quintic | none

[potential]
kind = "zero"             # zero | gaussian | tabulated

[initial]
kind = "bright_soliton"   # bright_soliton | chirped_gaussian | gaussian
a = 1.0
b = 2.0
x0 = 15.0

[boundary]
order = "abc3_nonlinear"  # abc1_linear | abc2_nonlinear | abc3_nonlinear
                          # | dirichlet_zero | neumann_zero
k0_left = 2.0
k0_right = 2.0

[solver]                  # optional
picard_tol = 1e-12
picard_max_iters = 50
"#;

/// `[grid]` section of a config file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSection {
    pub x_left: f64,
    pub x_right: f64,
    pub intervals: usize,
    pub dt: f64,
    pub steps: usize,
}

/// `[nonlinearity]` section of a config file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NonlinearitySection {
    pub kind: NonlinearitySpec,
}

/// A parsed config file: a preset base plus whole-section replacements.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub preset: Option<String>,
    pub physics: Option<PhysicalParams>,
    pub grid: Option<GridSection>,
    pub nonlinearity: Option<NonlinearitySection>,
    pub potential: Option<PotentialSpec>,
    pub initial: Option<InitialCondition>,
    pub boundary: Option<BoundarySpec>,
    pub solver: Option<SolverSettings>,
}

impl FileConfig {
    /// A file that only names a preset (what `run example1` amounts to).
    pub fn preset_only(name: &str) -> Self {
        FileConfig { preset: Some(name.to_string()), ..Default::default() }
    }
}

/// All sections in their serialized shape; the bridge between
/// [`SimulationConfig`] and TOML.
#[derive(Debug, Serialize, Deserialize)]
struct ResolvedSections {
    physics: PhysicalParams,
    grid: GridSection,
    nonlinearity: NonlinearitySection,
    potential: PotentialSpec,
    initial: InitialCondition,
    boundary: BoundarySpec,
    #[serde(default)]
    solver: SolverSettings,
}

impl From<&SimulationConfig> for ResolvedSections {
    fn from(config: &SimulationConfig) -> Self {
        ResolvedSections {
            physics: config.physics,
            grid: GridSection {
                x_left: config.grid.x_l,
                x_right: config.grid.x_r,
                intervals: config.grid.intervals,
                dt: config.grid.dt,
                steps: config.grid.steps,
            },
            nonlinearity: NonlinearitySection { kind: config.nonlinearity },
            potential: config.potential.clone(),
            initial: config.initial,
            boundary: config.boundary,
            solver: config.solver,
        }
    }
}

/// Parses a config document.
///
/// # Errors
///
/// [`ConfigError::Parse`] with the TOML diagnostic; `origin` labels the
/// source in the message (a path, or `"<inline>"`).
pub fn parse_config_str(text: &str, origin: &str) -> Result<FileConfig, ConfigError> {
    toml::from_str(text)
        .map_err(|e| ConfigError::Parse { path: origin.to_string(), message: e.to_string() })
}

/// Reads and parses a config file from disk.
pub fn load_config(path: &Path) -> Result<FileConfig, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
    parse_config_str(&text, &path.display().to_string())
}

/// Serializes a configuration as a complete, re-parseable TOML document.
pub fn to_toml_string(config: &SimulationConfig) -> String {
    toml::to_string_pretty(&ResolvedSections::from(config))
        .expect("configuration sections always serialize")
}

/// Merges a file (and its preset base) with dotted-path overrides into a
/// validated configuration.
///
/// # Errors
///
/// Missing sections, unknown presets, malformed overrides, and any
/// component-level validation failure.
pub fn resolve(file: &FileConfig, overrides: &[String]) -> Result<SimulationConfig, ConfigError> {
    let mut table = match &file.preset {
        Some(name) => full_table(&ExperimentPreset::from_name(name)?.config()),
        None => toml::Table::new(),
    };
    overlay(&mut table, "physics", &file.physics)?;
    overlay(&mut table, "grid", &file.grid)?;
    overlay(&mut table, "nonlinearity", &file.nonlinearity)?;
    overlay(&mut table, "potential", &file.potential)?;
    overlay(&mut table, "initial", &file.initial)?;
    overlay(&mut table, "boundary", &file.boundary)?;
    overlay(&mut table, "solver", &file.solver)?;
    for spec in overrides {
        apply_override(&mut table, spec)?;
    }

    for (key, field) in [
        ("physics", "physics"),
        ("grid", "grid"),
        ("nonlinearity", "nonlinearity"),
        ("potential", "potential"),
        ("initial", "initial"),
        ("boundary", "boundary"),
    ] {
        if !table.contains_key(key) {
            return Err(ConfigError::Missing { field });
        }
    }

    let sections: ResolvedSections = toml::Value::Table(table).try_into().map_err(|e| {
        ConfigError::Parse { path: "<resolved config>".to_string(), message: e.to_string() }
    })?;

    let grid = make_grid(
        sections.grid.x_left,
        sections.grid.x_right,
        sections.grid.intervals,
        sections.grid.dt,
        sections.grid.steps,
    )?;
    let config = SimulationConfig {
        physics: sections.physics,
        grid,
        nonlinearity: sections.nonlinearity.kind,
        potential: sections.potential,
        initial: sections.initial,
        boundary: sections.boundary,
        solver: sections.solver,
    };
    config.validate()?;
    Ok(config)
}

fn full_table(config: &SimulationConfig) -> toml::Table {
    match toml::Value::try_from(ResolvedSections::from(config)) {
        Ok(toml::Value::Table(t)) => t,
        _ => unreachable!("configuration sections always serialize to a table"),
    }
}

fn overlay<T: Serialize>(
    table: &mut toml::Table,
    key: &str,
    section: &Option<T>,
) -> Result<(), ConfigError> {
    if let Some(value) = section {
        let v = toml::Value::try_from(value).map_err(|e| ConfigError::Parse {
            path: format!("<section {key}>"),
            message: e.to_string(),
        })?;
        table.insert(key.to_string(), v);
    }
    Ok(())
}

/// Applies one `section.key=value` override. The value is parsed as a TOML
/// literal, falling back to a bare string (so `boundary.order=abc1_linear`
/// needs no quoting).
fn apply_override(table: &mut toml::Table, spec: &str) -> Result<(), ConfigError> {
    let (path, raw) = spec.split_once('=').ok_or_else(|| {
        ConfigError::invalid("override", format!("expected key=value, got `{spec}`"))
    })?;
    let parts: Vec<&str> = path.trim().split('.').collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(ConfigError::invalid("override", format!("empty path segment in `{spec}`")));
    }
    let value = parse_override_value(raw.trim());

    let mut cursor = table;
    for part in &parts[..parts.len() - 1] {
        cursor = cursor
            .entry(part.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()))
            .as_table_mut()
            .ok_or_else(|| {
                ConfigError::invalid("override", format!("`{part}` in `{spec}` is not a section"))
            })?;
    }
    cursor.insert(parts[parts.len() - 1].to_string(), value);
    Ok(())
}

fn parse_override_value(raw: &str) -> toml::Value {
    match format!("v = {raw}").parse::<toml::Table>() {
        Ok(mut t) => t.remove("v").expect("parsed table has the key"),
        Err(_) => toml::Value::String(raw.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::BoundaryKind;

    #[test]
    fn schema_example_resolves() {
        let file = parse_config_str(SCHEMA_EXAMPLE, "<schema>").unwrap();
        let config = resolve(&file, &[]).unwrap();
        assert_eq!(config, ExperimentPreset::Example1.config());
    }

    #[test]
    fn preset_round_trips_through_toml() {
        for preset in ExperimentPreset::ALL {
            let original = preset.config();
            let text = to_toml_string(&original);
            let file = parse_config_str(&text, "<round-trip>").unwrap();
            let reparsed = resolve(&file, &[]).unwrap();
            assert_eq!(reparsed, original, "{} drifted through TOML", preset.name());
        }
    }

    #[test]
    fn preset_base_with_section_replacement() {
        let text = r#"
preset = "example1"

[boundary]
order = "dirichlet_zero"
k0_left = 1.0
k0_right = 1.0
"#;
        let file = parse_config_str(text, "<inline>").unwrap();
        let config = resolve(&file, &[]).unwrap();
        assert_eq!(config.boundary.order, BoundaryKind::DirichletZero);
        // Unrelated sections keep the preset values.
        assert_eq!(config.grid.intervals, 300);
    }

    #[test]
    fn dotted_overrides_apply_last() {
        let file = FileConfig::preset_only("example1");
        let overrides = vec![
            "grid.dt=0.05".to_string(),
            "grid.steps=120".to_string(),
            "boundary.k0_right=3.25".to_string(),
            "boundary.order=abc2_nonlinear".to_string(),
        ];
        let config = resolve(&file, &overrides).unwrap();
        assert!((config.grid.dt - 0.05).abs() < 1e-15);
        assert_eq!(config.grid.steps, 120);
        assert_eq!(config.boundary.k0_right, 3.25);
        assert_eq!(config.boundary.order, BoundaryKind::Abc2Nonlinear);
        assert_eq!(config.boundary.k0_left, 2.0, "untouched keys stay");
    }

    #[test]
    fn missing_section_is_named() {
        let text = r#"
[physics]
hbar = 1.0
mass = 0.5
g = -2.0
"#;
        let file = parse_config_str(text, "<inline>").unwrap();
        match resolve(&file, &[]) {
            Err(ConfigError::Missing { field }) => assert_eq!(field, "grid"),
            other => panic!("expected missing grid, got {other:?}"),
        }
    }

    #[test]
    fn unknown_preset_and_keys_are_rejected() {
        assert!(matches!(
            resolve(&FileConfig::preset_only("example99"), &[]),
            Err(ConfigError::Unknown { kind: "preset", .. })
        ));
        assert!(parse_config_str("nonsense_key = 1", "<inline>").is_err());
        assert!(parse_config_str("[grid]\nx_lft = 0.0", "<inline>").is_err());
    }

    #[test]
    fn malformed_overrides_are_rejected() {
        let file = FileConfig::preset_only("example1");
        assert!(resolve(&file, &["grid.dt".to_string()]).is_err());
        assert!(resolve(&file, &["grid..dt=1.0".to_string()]).is_err());
        // Path through a scalar value.
        assert!(resolve(&file, &["grid.dt.sub=1.0".to_string()]).is_err());
    }

    #[test]
    fn invalid_values_fail_component_validation() {
        let file = FileConfig::preset_only("example1");
        let err = resolve(&file, &["grid.dt=-0.1".to_string()]).unwrap_err();
        assert!(err.to_string().contains("dt"), "should name the field: {err}");
        let err = resolve(&file, &["boundary.k0_left=0.0".to_string()]).unwrap_err();
        assert!(err.to_string().contains("k0_left"), "should name the field: {err}");
    }
}
