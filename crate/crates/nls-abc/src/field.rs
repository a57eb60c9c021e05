//! Complex grid functions `ψ_j^n` at one time level, ghosts included.

use num_complex::Complex64;

use crate::grid::Grid;

/// A wave-function sample on all `J + 3` nodes of a [`Grid`] (two ghosts),
/// tagged with its time-step index `n`.
///
/// Node `j` (with `j = −1..=J+1`) lives at storage slot `j + 1`; the
/// `at`/`at_mut` accessors do that shift, while [`physical`](Self::physical)
/// exposes the `J + 1` physical nodes `j = 0..=J` as a slice.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveField {
    values: Vec<Complex64>,
    /// Time-step index `n >= 0`.
    pub time_index: usize,
}

impl WaveField {
    /// All-zero field at time index 0.
    pub fn zeros(grid: &Grid) -> Self {
        WaveField { values: vec![Complex64::new(0.0, 0.0); grid.num_nodes()], time_index: 0 }
    }

    /// Fills every node (ghosts included) from a closed-form expression.
    pub fn from_fn(grid: &Grid, mut f: impl FnMut(f64) -> Complex64) -> Self {
        let mut values = Vec::with_capacity(grid.num_nodes());
        for j in -1..=(grid.intervals as isize + 1) {
            values.push(f(grid.node(j)));
        }
        WaveField { values, time_index: 0 }
    }

    /// Wraps an existing storage vector (length must be `J + 3`).
    pub fn from_values(values: Vec<Complex64>, time_index: usize) -> Self {
        WaveField { values, time_index }
    }

    /// Value at node `j` (`j = −1..=J+1`).
    #[inline]
    pub fn at(&self, j: isize) -> Complex64 {
        self.values[(j + 1) as usize]
    }

    /// Mutable value at node `j`.
    #[inline]
    pub fn at_mut(&mut self, j: isize) -> &mut Complex64 {
        &mut self.values[(j + 1) as usize]
    }

    /// The physical nodes `j = 0..=J`.
    pub fn physical(&self) -> &[Complex64] {
        &self.values[1..self.values.len() - 1]
    }

    /// Full storage including ghosts, indexed `p = j + 1`.
    pub fn as_slice(&self) -> &[Complex64] {
        &self.values
    }

    /// Full mutable storage including ghosts.
    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    /// Storage length `J + 3`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True for an empty storage vector (never produced by this crate).
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// True when every entry is finite (no NaN or infinity).
    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Maximum modulus over all nodes.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;

    #[test]
    fn indexing_matches_node_layout() {
        let grid = make_grid(0.0, 1.0, 4, 0.1, 1).unwrap();
        let f = WaveField::from_fn(&grid, |x| Complex64::new(x, 0.0));
        assert_eq!(f.len(), 7);
        assert!((f.at(-1).re + 0.25).abs() < 1e-15);
        assert!((f.at(0).re - 0.0).abs() < 1e-15);
        assert!((f.at(5).re - 1.25).abs() < 1e-15);
        assert_eq!(f.physical().len(), 5);
        assert!((f.physical()[0].re - 0.0).abs() < 1e-15);
        assert!((f.physical()[4].re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn finiteness_detection() {
        let grid = make_grid(0.0, 1.0, 4, 0.1, 1).unwrap();
        let mut f = WaveField::zeros(&grid);
        assert!(f.is_finite());
        *f.at_mut(2) = Complex64::new(f64::NAN, 0.0);
        assert!(!f.is_finite());
    }

    #[test]
    fn max_abs_over_all_nodes() {
        let grid = make_grid(0.0, 1.0, 4, 0.1, 1).unwrap();
        let mut f = WaveField::zeros(&grid);
        *f.at_mut(-1) = Complex64::new(3.0, 4.0);
        assert!((f.max_abs() - 5.0).abs() < 1e-15);
    }
}
