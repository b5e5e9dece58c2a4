//! Complex one-dimensional Schrödinger potentials with real, bounded-below
//! spectra, built by the first-order Darboux transformation.
//!
//! The crate has three layers:
//!
//! * closed forms — [`specfun`] evaluates the special functions the analytic
//!   solutions are made of; [`harmonic`], [`bender_boettcher`] and
//!   [`exp_potential`] hold the three concrete families (the complex
//!   deformations of the oscillator, the -(ix)^N/2 potentials on bent
//!   contours, and the periodic e^{2ix}/2 well);
//! * the family-agnostic engine — [`transform`] turns a zero-free seed
//!   solution into the superpotential, the partner potential, the mapped
//!   eigenfunctions and the extra bound state;
//! * independent verification — [`numerics`] discretizes Hamiltonians with
//!   high-order finite differences, solves dense complex eigenproblems, and
//!   measures residual norms, so every analytic claim is checked against a
//!   second, unrelated code path.
//!
//! All evaluators are pure functions (or immutable structs); everything can
//! be called concurrently without synchronization.

pub mod bender_boettcher;
mod error;
pub mod exp_potential;
pub mod harmonic;
pub mod numerics;
pub mod specfun;
pub mod transform;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use bender_boettcher::{BBParams, ComplexContour, SusyClass};
pub use harmonic::{HarmonicParams, HarmonicSpectrum};
pub use numerics::{DenseComplexMatrix, EigenSet, Grid1D, SpectrumReport};
pub use transform::{
    EigenPair, FamilyMeta, FamilyTag, PartnerPotential, PotentialSample, SeedSolution,
    Superpotential, ZeroFreeReport,
};
pub use exp_potential::{QuantizationResult, SectorSpec, SpectrumKind};
