//! Special functions needed by the closed-form potentials and spectra:
//! gamma, the error function, Kummer's confluent hypergeometric function,
//! Hermite polynomials, and Bessel-type functions of complex argument with
//! real order.
//!
//! Every function follows the classical two-regime strategy: a power series
//! for small argument and a standard asymptotic expansion for large argument,
//! switching at [`SeriesControl::asymptotic_switch_radius`]. The seam is
//! covered by tests that evaluate both regimes in an overlap annulus.
//!
//! Branch convention: principal branch everywhere, arg z in (-pi, pi].
//! Requests exactly on arg z = -pi return [`Error::BranchCut`].

mod bessel;
mod erf_fn;
mod gamma_fn;
mod hermite;
mod kummer;

pub use bessel::{
    bessel_derivative, bessel_i, bessel_i_with, bessel_j, bessel_j_with, bessel_k, bessel_k_with,
    bessel_y, bessel_y_with, hankel1, hankel1_with, hankel2, hankel2_with, BesselKind,
};
pub(crate) use bessel::{bessel_i_scaled, bessel_k_scaled};
pub use erf_fn::erf;
pub use gamma_fn::gamma;
pub(crate) use gamma_fn::{gamma_real, ln_gamma_real};
pub use hermite::hermite_h;
pub use kummer::{kummer_1f1, kummer_1f1_scaled, kummer_1f1_with};

use crate::error::{Error, Result};

/// Tuning knobs for the series/asymptotic split.
///
/// Immutable after construction; all evaluators taking a control are pure
/// functions of their arguments and safe to call from any number of threads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    rel_tol: f64,
    max_terms: usize,
    asymptotic_switch_radius: f64,
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize, asymptotic_switch_radius: f64) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol <= 1e-6) {
            return Err(Error::Parameter(format!(
                "rel_tol must lie in (0, 1e-6], got {rel_tol}"
            )));
        }
        if max_terms < 50 {
            return Err(Error::Parameter(format!(
                "max_terms must be >= 50, got {max_terms}"
            )));
        }
        if !(asymptotic_switch_radius > 0.0) || !asymptotic_switch_radius.is_finite() {
            return Err(Error::Parameter(format!(
                "asymptotic_switch_radius must be positive and finite, got {asymptotic_switch_radius}"
            )));
        }
        Ok(SeriesControl {
            rel_tol,
            max_terms,
            asymptotic_switch_radius,
        })
    }

    /// Default control for Bessel-type functions (switch radius 18).
    pub fn bessel() -> Self {
        SeriesControl {
            rel_tol: 1e-15,
            max_terms: 400,
            asymptotic_switch_radius: 18.0,
        }
    }

    /// Default control for the confluent hypergeometric function (switch radius 30).
    pub fn kummer() -> Self {
        SeriesControl {
            rel_tol: 1e-15,
            max_terms: 500,
            asymptotic_switch_radius: 30.0,
        }
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn asymptotic_switch_radius(&self) -> f64 {
        self.asymptotic_switch_radius
    }
}
