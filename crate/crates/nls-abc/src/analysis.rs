//! Run diagnostics: L1 error, convergence order, reflection ratio, discrete
//! mass, and the blow-up energy functional.

use num_complex::Complex64;

use crate::error::ConfigError;
use crate::field::WaveField;
use crate::grid::Grid;

/// Discrete mass `Σ_{j=0..J} |ψ_j|²·Δx` over the physical nodes.
pub fn mass(psi: &WaveField, grid: &Grid) -> f64 {
    psi.physical().iter().map(|z| z.norm_sqr()).sum::<f64>() * grid.dx
}

/// Reflection ratio `r = Σ_{j=0..J}|ψ_j^n|² / Σ_{j=0..J}|ψ_j^0|²`: the
/// fraction of the initial discrete mass still inside the computational
/// domain. `r → 0` means the wave packet has left through the boundary
/// completely; values near 1 mean it was reflected back (or never left).
///
/// # Errors
///
/// Rejects an identically zero initial field.
pub fn reflection_ratio(psi_n: &WaveField, psi_0: &WaveField) -> Result<f64, ConfigError> {
    if psi_n.len() != psi_0.len() {
        return Err(ConfigError::invalid(
            "reflection_ratio.fields",
            format!("shape mismatch: {} vs {} nodes", psi_n.len(), psi_0.len()),
        ));
    }
    let denom: f64 = psi_0.physical().iter().map(|z| z.norm_sqr()).sum();
    if denom <= 0.0 {
        return Err(ConfigError::invalid("reflection_ratio.psi_0", "initial field has zero mass"));
    }
    let numer: f64 = psi_n.physical().iter().map(|z| z.norm_sqr()).sum();
    Ok(numer / denom)
}

/// Observed order from two errors at mesh ratio 2 (with `Δt = Δx²`):
/// `log2(E_coarse / E_fine)`.
///
/// # Errors
///
/// Both errors must be positive.
pub fn convergence_order(e_coarse: f64, e_fine: f64) -> Result<f64, ConfigError> {
    for (name, v) in
        [("convergence_order.e_coarse", e_coarse), ("convergence_order.e_fine", e_fine)]
    {
        if !(v > 0.0) || !v.is_finite() {
            return Err(ConfigError::invalid(name, format!("must be positive (got {v})")));
        }
    }
    Ok((e_coarse / e_fine).log2())
}

/// Streaming accumulator for the space-time L1 error
/// `E1 = (1/((J+1)(N+1)))·Σ_j Σ_n |ψ_j^n − ψ_exa(x_j, t^n)|`.
///
/// Convergence studies visit millions of space-time nodes; absorbing one
/// time level at a time avoids storing the full history.
#[derive(Debug, Clone)]
pub struct L1Accumulator {
    nodes: usize,
    levels: usize,
    sum: f64,
}

impl L1Accumulator {
    /// `nodes` is the number of physical nodes `J + 1`.
    pub fn new(nodes: usize) -> Self {
        L1Accumulator { nodes, levels: 0, sum: 0.0 }
    }

    /// Adds one time level: the numeric values and the matching exact
    /// values, both over `j = 0..=J`.
    ///
    /// # Errors
    ///
    /// Both sequences must have exactly `nodes` entries.
    pub fn absorb<I>(&mut self, numeric: &[Complex64], exact: I) -> Result<(), ConfigError>
    where
        I: IntoIterator<Item = Complex64>,
    {
        if numeric.len() != self.nodes {
            return Err(ConfigError::invalid(
                "l1_error.numeric",
                format!("expected {} nodes, got {}", self.nodes, numeric.len()),
            ));
        }
        let mut count = 0usize;
        let mut level_sum = 0.0;
        for (num, exa) in numeric.iter().zip(exact) {
            level_sum += (num - exa).norm();
            count += 1;
        }
        if count != self.nodes {
            return Err(ConfigError::invalid(
                "l1_error.exact",
                format!("expected {} exact samples, got {count}", self.nodes),
            ));
        }
        self.sum += level_sum;
        self.levels += 1;
        Ok(())
    }

    /// Number of time levels absorbed so far.
    pub fn levels(&self) -> usize {
        self.levels
    }

    /// The mean `sum / (nodes·levels)`; NaN before any level is absorbed.
    pub fn value(&self) -> f64 {
        self.sum / (self.nodes * self.levels) as f64
    }
}

/// Space-time L1 error of stored fields against an exact solution
/// `exact(x, t)`; each field's time is taken from its `time_index`.
///
/// # Errors
///
/// The field list must be nonempty and every field must match the grid.
pub fn l1_error(
    fields: &[WaveField],
    grid: &Grid,
    exact: impl Fn(f64, f64) -> Complex64,
) -> Result<f64, ConfigError> {
    if fields.is_empty() {
        return Err(ConfigError::invalid("l1_error.fields", "no time levels supplied"));
    }
    let mut acc = L1Accumulator::new(grid.num_physical());
    for field in fields {
        if field.len() != grid.num_nodes() {
            return Err(ConfigError::invalid(
                "l1_error.fields",
                format!("field has {} nodes, grid has {}", field.len(), grid.num_nodes()),
            ));
        }
        let t = grid.time(field.time_index);
        acc.absorb(
            field.physical(),
            (0..=grid.intervals as isize).map(|j| exact(grid.node(j), t)),
        )?;
    }
    Ok(acc.value())
}

/// Blow-up energy functional
/// `E(ψ0) = ||∂x ψ0||² − (2/3)||ψ0||⁶_{L6}` evaluated by quadrature:
/// centered differences on interior nodes, one-sided at the two ends.
/// A negative value signals finite-time blow-up for the focusing quintic
/// equation.
pub fn initial_energy(psi0: &WaveField, grid: &Grid) -> f64 {
    let values = psi0.physical();
    let n = values.len();
    let dx = grid.dx;
    let mut grad_sq = 0.0;
    for j in 0..n {
        let d = if j == 0 {
            (values[1] - values[0]) / dx
        } else if j == n - 1 {
            (values[n - 1] - values[n - 2]) / dx
        } else {
            (values[j + 1] - values[j - 1]) / (2.0 * dx)
        };
        grad_sq += d.norm_sqr();
    }
    let sextic: f64 = values.iter().map(|z| z.norm_sqr().powi(3)).sum();
    (grad_sq - (2.0 / 3.0) * sextic) * dx
}
