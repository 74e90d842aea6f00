//! Error type shared by the solvers and the oracle.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum ChaseError {
    /// Input outside the formula's domain (e.g. `lambda*v == c` makes the
    /// cost index undefined, or an evaluation point violates a precondition).
    #[error("domain error: {0}")]
    Domain(String),

    /// A bracketed root-finder found no sign change. Under the proved
    /// monotonicity results this signals inconsistent parameters rather than
    /// a numerical failure.
    #[error("bracket failure: {0}")]
    Bracket(String),

    /// A solved quantity violates an equilibrium ordering it must satisfy.
    #[error("inconsistent solution: {0}")]
    Consistency(String),

    /// Best-response iteration hit its round cap without a fixed point.
    #[error("best-response iteration did not converge within {0} rounds")]
    NoConvergence(usize),
}

pub type Result<T> = std::result::Result<T, ChaseError>;
