use thiserror::Error;

/// Errors from special-function evaluation, coefficient generation and
/// operator discretization.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Gamma-type pole hit exactly (non-positive integer argument, or a
    /// coefficient formula evaluated at one of its poles).
    #[error("pole at {what} = {value}")]
    Pole { what: &'static str, value: String },

    /// Argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or quadrature did not reach the requested tolerance.
    #[error("did not converge: {what} (estimate {estimate:.3e}, tolerance {tolerance:.3e})")]
    Convergence {
        what: &'static str,
        estimate: f64,
        tolerance: f64,
    },

    /// Resolvent series for the two-variable operator diverges (w too close
    /// to the cut [1, inf)).
    #[error("resolvent series diverges for w = {0}")]
    ResolventDiverges(String),

    /// Taylor-coefficient extraction by circle sampling shows a tail that
    /// does not decay; the sampling radius is too close to the analyticity
    /// boundary or the truncation order is too large.
    #[error("aliasing in Taylor sampling: tail ratio {0:.3} exceeds 0.9")]
    Aliasing(f64),

    /// Root search exhausted its iteration budget.
    #[error("no zero found after {0} iterations")]
    NoZeroFound(usize),

    /// Least-squares fit of generalized-period-function coefficients is too
    /// ill-conditioned to trust.
    #[error("ill-conditioned fit: condition estimate {0:.3e}")]
    IllConditionedFit(f64),

    /// Formal series failed to stabilize (partial sums keep moving).
    #[error("divergence detected: {what}, best delta {best_delta:.3e} after {terms} terms")]
    Divergence {
        what: &'static str,
        best_delta: f64,
        terms: usize,
    },

    /// Cusp coefficient file could not be parsed.
    #[error("coefficient file, line {line}: {msg}")]
    CoeffFile { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn pole(what: &'static str, value: impl std::fmt::Display) -> Self {
        Error::Pole {
            what,
            value: value.to_string(),
        }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
