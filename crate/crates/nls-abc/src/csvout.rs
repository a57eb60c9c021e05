//! Deterministic CSV output.
//!
//! All floats are written as lowercase scientific notation with 9
//! significant digits, rows end with `\n`, and nothing time- or
//! machine-dependent is embedded, so re-running a configuration reproduces
//! its output files byte for byte.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::Error;
use crate::field::WaveField;
use crate::grid::Grid;
use crate::simulate::RunObservables;

/// Formats one float the way every writer here does: `{:.8e}`.
pub fn format_float(v: f64) -> String {
    format!("{v:.8e}")
}

fn create(path: &Path) -> Result<BufWriter<File>, Error> {
    let file = File::create(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    Ok(BufWriter::new(file))
}

fn finish(mut w: BufWriter<File>, path: &Path) -> Result<(), Error> {
    w.flush().map_err(|source| Error::Io { path: path.display().to_string(), source })
}

fn write_line(w: &mut BufWriter<File>, path: &Path, cells: &[String]) -> Result<(), Error> {
    writeln!(w, "{}", cells.join(","))
        .map_err(|source| Error::Io { path: path.display().to_string(), source })
}

/// Writes a generic numeric table with a header row.
pub fn write_table_csv(path: &Path, header: &[&str], rows: &[Vec<f64>]) -> Result<(), Error> {
    let mut w = create(path)?;
    write_line(&mut w, path, &header.iter().map(|h| h.to_string()).collect::<Vec<_>>())?;
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        write_line(&mut w, path, &row.iter().map(|&v| format_float(v)).collect::<Vec<_>>())?;
    }
    finish(w, path)
}

/// Writes the per-level observables of a run: `time,mass` plus
/// `reflection` / `boundary_error` columns when they were recorded.
pub fn write_observables_csv(path: &Path, obs: &RunObservables) -> Result<(), Error> {
    let mut header = vec!["time", "mass"];
    if !obs.reflection.is_empty() {
        header.push("reflection");
    }
    if !obs.boundary_error.is_empty() {
        header.push("boundary_error");
    }
    let mut w = create(path)?;
    write_line(&mut w, path, &header.iter().map(|h| h.to_string()).collect::<Vec<_>>())?;
    for n in 0..obs.times.len() {
        let mut cells = vec![format_float(obs.times[n]), format_float(obs.mass[n])];
        if !obs.reflection.is_empty() {
            cells.push(format_float(obs.reflection[n]));
        }
        if !obs.boundary_error.is_empty() {
            cells.push(format_float(obs.boundary_error[n]));
        }
        write_line(&mut w, path, &cells)?;
    }
    finish(w, path)
}

/// Writes a snapshot as `x,abs` over the physical nodes (enough to plot
/// amplitude profiles).
pub fn write_snapshot_abs_csv(path: &Path, grid: &Grid, field: &WaveField) -> Result<(), Error> {
    let mut w = create(path)?;
    write_line(&mut w, path, &["x".to_string(), "abs".to_string()])?;
    for j in 0..=grid.intervals as isize {
        let z = field.at(j);
        write_line(&mut w, path, &[format_float(grid.node(j)), format_float(z.norm())])?;
    }
    finish(w, path)
}

/// Writes a snapshot as `x,re,im,abs` over the physical nodes (full complex
/// data).
pub fn write_snapshot_full_csv(path: &Path, grid: &Grid, field: &WaveField) -> Result<(), Error> {
    let mut w = create(path)?;
    write_line(
        &mut w,
        path,
        &["x".to_string(), "re".to_string(), "im".to_string(), "abs".to_string()],
    )?;
    for j in 0..=grid.intervals as isize {
        let z = field.at(j);
        write_line(
            &mut w,
            path,
            &[
                format_float(grid.node(j)),
                format_float(z.re),
                format_float(z.im),
                format_float(z.norm()),
            ],
        )?;
    }
    finish(w, path)
}
