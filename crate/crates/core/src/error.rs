use num_complex::Complex64;
use thiserror::Error;

use crate::numerics::EigenSet;

/// Unified error type for the whole crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma function evaluated at a non-positive integer.
    #[error("gamma pole at non-positive integer z = {0}")]
    Pole(f64),

    /// A parameter violates a function's requirements (e.g. 1F1 with a
    /// non-positive integer second parameter).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Evaluation requested exactly on the negative real branch cut
    /// (arg z = -pi), where the principal value is ambiguous.
    #[error("argument lies on the branch cut (arg z = -pi); the side of approach is ambiguous")]
    BranchCut,

    /// An argument is outside the supported range.
    #[error("out of range: {0}")]
    Range(String),

    /// A point or grid lies outside the domain an evaluator is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// The seed solution u has (or nearly has) a zero where it must not.
    #[error("seed solution vanishes near {location} (min |u| = {min_abs:.3e})")]
    ZeroCrossing { location: Complex64, min_abs: f64 },

    /// The image of an eigenfunction under the intertwiner is numerically
    /// null, which signals E <= epsilon misuse.
    #[error("mapped eigenfunction is numerically null (is E > epsilon?)")]
    DegenerateMap,

    /// Family parameters outside the admissible (zero-free) region.
    #[error("inadmissible parameters: {0}")]
    Admissibility(String),

    /// The eigenvalue iteration exceeded its iteration budget.
    #[error("eigenvalue iteration did not converge after {iterations} iterations")]
    Convergence { iterations: usize, partial: EigenSet },

    /// Composite Simpson quadrature requires an odd sample count.
    #[error("composite Simpson needs an odd sample count, got {0}")]
    Parity(usize),

    /// Continuation coefficients are singular at integer order.
    #[error("order nu = {0} is an integer; sin(pi nu) = 0 makes the continuation singular")]
    IntegerOrder(f64),

    /// A non-finite value reached an API boundary.
    #[error("non-finite value: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(format!("{what} = {z}")))
    }
}

pub(crate) fn ensure_finite_real(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NonFinite(format!("{what} = {x}")))
    }
}
