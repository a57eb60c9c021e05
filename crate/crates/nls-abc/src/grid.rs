//! Uniform space-time grid with one ghost node beyond each end.
//!
//! The physical domain `[x_l, x_r]` is split into `J` intervals of width
//! `dx = (x_r − x_l)/J`, giving physical nodes `x_0..x_J` plus ghost nodes
//! `x_{−1}` and `x_{J+1}` addressed by the boundary rows.

use crate::error::ConfigError;

/// Space-time grid: `J + 1` physical nodes, two ghosts, `N` time steps of
/// size `dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    /// Left domain endpoint.
    pub x_l: f64,
    /// Right domain endpoint.
    pub x_r: f64,
    /// Number of spatial intervals `J` (physical nodes are `0..=J`).
    pub intervals: usize,
    /// Node spacing `(x_r − x_l)/J`.
    pub dx: f64,
    /// Time step.
    pub dt: f64,
    /// Number of time steps `N`.
    pub steps: usize,
}

/// Builds a [`Grid`], validating the domain and step sizes.
///
/// `intervals >= 4` is required so the three-point boundary stencils at both
/// ends never overlap.
///
/// # Errors
///
/// [`ConfigError::Invalid`] naming the offending field for a degenerate
/// domain (`x_r <= x_l`), nonpositive `dt`, too few intervals, or a
/// nonpositive step count.
pub fn make_grid(
    x_l: f64,
    x_r: f64,
    intervals: usize,
    dt: f64,
    steps: usize,
) -> Result<Grid, ConfigError> {
    if !x_l.is_finite() || !x_r.is_finite() || x_r <= x_l {
        return Err(ConfigError::invalid(
            "grid.x_r",
            format!("domain is degenerate: x_l = {x_l}, x_r = {x_r} (need x_r > x_l)"),
        ));
    }
    if intervals < 4 {
        return Err(ConfigError::invalid(
            "grid.intervals",
            format!("need at least 4 intervals for the boundary stencils (got {intervals})"),
        ));
    }
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(ConfigError::invalid("grid.dt", format!("must be positive (got {dt})")));
    }
    if steps == 0 {
        return Err(ConfigError::invalid("grid.steps", "must be at least 1"));
    }
    let dx = (x_r - x_l) / intervals as f64;
    Ok(Grid { x_l, x_r, intervals, dx, dt, steps })
}

impl Grid {
    /// Coordinate of node `j`; ghosts are `j = −1` and `j = J + 1`.
    pub fn node(&self, j: isize) -> f64 {
        self.x_l + j as f64 * self.dx
    }

    /// Total storage length `J + 3` (physical nodes plus two ghosts).
    pub fn num_nodes(&self) -> usize {
        self.intervals + 3
    }

    /// Number of physical nodes `J + 1`.
    pub fn num_physical(&self) -> usize {
        self.intervals + 1
    }

    /// Final time `N·dt`.
    pub fn t_final(&self) -> f64 {
        self.steps as f64 * self.dt
    }

    /// Time at step `n`.
    pub fn time(&self, n: usize) -> f64 {
        n as f64 * self.dt
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_grid() {
        let g = make_grid(0.0, 30.0, 300, 0.01, 600).unwrap();
        assert!((g.dx - 0.1).abs() < 1e-15);
        assert_eq!(g.node(0), 0.0);
        assert!((g.node(300) - 30.0).abs() < 1e-12);
        assert_eq!(g.num_nodes(), 303);
        assert!((g.t_final() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn symmetric_domain_midpoint() {
        let g = make_grid(-5.0, 5.0, 100, 0.05, 20).unwrap();
        assert!((g.dx - 0.1).abs() < 1e-15);
        assert!(g.node(50).abs() < 1e-12);
    }

    #[test]
    fn nodes_are_uniform_including_ghosts() {
        let g = make_grid(0.0, 1.0, 4, 0.1, 1).unwrap();
        let expect = [-0.25, 0.0, 0.25, 0.5, 0.75, 1.0, 1.25];
        for (i, &x) in expect.iter().enumerate() {
            assert!((g.node(i as isize - 1) - x).abs() < 1e-15, "node {i}");
        }
    }

    #[test]
    fn dx_times_intervals_recovers_domain() {
        let g = make_grid(0.0, 30.0, 300, 0.01, 10).unwrap();
        assert!((g.dx * g.intervals as f64 - (g.x_r - g.x_l)).abs() <= f64::EPSILON * 30.0);
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(make_grid(1.0, 1.0, 10, 0.1, 1).is_err());
        assert!(make_grid(2.0, 1.0, 10, 0.1, 1).is_err());
        assert!(make_grid(0.0, 1.0, 3, 0.1, 1).is_err());
        assert!(make_grid(0.0, 1.0, 10, 0.0, 1).is_err());
        assert!(make_grid(0.0, 1.0, 10, -0.1, 1).is_err());
        assert!(make_grid(0.0, 1.0, 10, 0.1, 0).is_err());
    }

    #[test]
    fn error_names_the_field() {
        let err = make_grid(0.0, 1.0, 10, -0.1, 1).unwrap_err();
        assert!(err.to_string().contains("dt"));
    }
}
