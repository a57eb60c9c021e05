//! Complex tridiagonal linear systems and the Thomas algorithm.

use num_complex::Complex64;

use crate::error::StepError;

/// Pivots whose magnitude falls below this during elimination are treated as
/// singular rather than amplified into garbage.
const PIVOT_FLOOR: f64 = 1e-300;

/// A tridiagonal system `T·u = b` in banded storage.
///
/// Row `i` reads `lower[i]·u_{i−1} + main[i]·u_i + upper[i]·u_{i+1} = rhs[i]`;
/// `lower[0]` and `upper[n−1]` are ignored.
#[derive(Debug, Clone)]
pub struct BandedSystem {
    pub lower: Vec<Complex64>,
    pub main: Vec<Complex64>,
    pub upper: Vec<Complex64>,
    pub rhs: Vec<Complex64>,
}

impl BandedSystem {
    /// An all-zero system of dimension `n`.
    pub fn zeros(n: usize) -> Self {
        let z = Complex64::new(0.0, 0.0);
        BandedSystem { lower: vec![z; n], main: vec![z; n], upper: vec![z; n], rhs: vec![z; n] }
    }

    pub fn len(&self) -> usize {
        self.main.len()
    }

    pub fn is_empty(&self) -> bool {
        self.main.is_empty()
    }

    /// Multiplies the matrix by `u` (for residual checks).
    pub fn matvec(&self, u: &[Complex64]) -> Vec<Complex64> {
        let n = self.len();
        assert_eq!(u.len(), n);
        (0..n)
            .map(|i| {
                let mut s = self.main[i] * u[i];
                if i > 0 {
                    s += self.lower[i] * u[i - 1];
                }
                if i + 1 < n {
                    s += self.upper[i] * u[i + 1];
                }
                s
            })
            .collect()
    }

    /// Solves the system in place by Gaussian elimination without pivoting
    /// (the Thomas algorithm), consuming the banded storage.
    ///
    /// # Errors
    ///
    /// [`StepError::SingularPivot`] when a pivot underflows; the scheme's
    /// matrices are strongly diagonally dominated by the `iħ/Δt` shift, so a
    /// tiny pivot signals an ill-posed configuration rather than a numerical
    /// edge case.
    pub fn solve(mut self) -> Result<Vec<Complex64>, StepError> {
        let n = self.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        // Forward sweep: eliminate the subdiagonal.
        for i in 1..n {
            let pivot = self.main[i - 1];
            if pivot.norm() < PIVOT_FLOOR {
                return Err(StepError::SingularPivot { row: i - 1 });
            }
            let w = self.lower[i] / pivot;
            self.main[i] -= w * self.upper[i - 1];
            let correction = w * self.rhs[i - 1];
            self.rhs[i] -= correction;
        }
        let last = self.main[n - 1];
        if last.norm() < PIVOT_FLOOR {
            return Err(StepError::SingularPivot { row: n - 1 });
        }
        // Back substitution.
        let mut u = vec![Complex64::new(0.0, 0.0); n];
        u[n - 1] = self.rhs[n - 1] / last;
        for i in (0..n - 1).rev() {
            u[i] = (self.rhs[i] - self.upper[i] * u[i + 1]) / self.main[i];
        }
        Ok(u)
    }
}
