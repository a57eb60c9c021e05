//! Exact bright-soliton solution of the focusing cubic NLS, used as the
//! convergence and boundary-error oracle.

use num_complex::Complex64;

use crate::error::ConfigError;

/// Exact soliton of `i·ψ_t = −ψ_xx + g|ψ|²ψ` (nondimensional profile,
/// `g < 0`), translated so the envelope is centered at `x0` at `t = 0`:
///
/// `ψ(x,t) = A·√(−2/g) · sech(A(x−x0) − 2ABt) · e^{i(B(x−x0) + (A²−B²)t)}`
///
/// `A` sets the amplitude and width, `B` the velocity (the peak travels
/// along `x − x0 = 2Bt`).
///
/// # Errors
///
/// Rejects `g >= 0`: the closed form requires a focusing nonlinearity.
pub fn exact_soliton(
    x: f64,
    t: f64,
    a: f64,
    b: f64,
    g: f64,
    x0: f64,
) -> Result<Complex64, ConfigError> {
    let oracle = SolitonOracle::new(a, b, g, x0)?;
    Ok(oracle.eval(x, t))
}

/// Validated soliton parameters, evaluable without per-call checks.
///
/// Construct once with [`SolitonOracle::new`]; [`eval`](Self::eval) is then
/// a plain closed-form evaluation suitable for tight loops.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolitonOracle {
    /// Amplitude/width parameter.
    pub a: f64,
    /// Velocity parameter (peak speed `2B`).
    pub b: f64,
    /// Focusing nonlinearity strength, `g < 0`.
    pub g: f64,
    /// Envelope center at `t = 0`.
    pub x0: f64,
}

impl SolitonOracle {
    /// # Errors
    ///
    /// Rejects `g >= 0` or non-finite parameters.
    pub fn new(a: f64, b: f64, g: f64, x0: f64) -> Result<Self, ConfigError> {
        if !(g < 0.0) {
            return Err(ConfigError::invalid(
                "g",
                format!("soliton solution requires focusing nonlinearity g < 0 (got {g})"),
            ));
        }
        for (name, v) in [("A", a), ("B", b), ("x0", x0)] {
            if !v.is_finite() {
                return Err(ConfigError::invalid(
                    "soliton",
                    format!("{name} must be finite (got {v})"),
                ));
            }
        }
        Ok(SolitonOracle { a, b, g, x0 })
    }

    /// Evaluates the soliton at `(x, t)`.
    #[inline]
    pub fn eval(&self, x: f64, t: f64) -> Complex64 {
        let xi = x - self.x0;
        let amp = self.a * (-2.0 / self.g).sqrt();
        let envelope = amp / (self.a * xi - 2.0 * self.a * self.b * t).cosh();
        let phase = self.b * xi + (self.a * self.a - self.b * self.b) * t;
        envelope * Complex64::new(0.0, phase).exp()
    }
}
