//! Family-independent verification layer: grids, high-order finite
//! differences, a dense complex eigensolver, composite quadrature, and
//! residual norms. Everything here is deterministic: identical inputs give
//! bit-identical outputs within one build.

mod eigen;
mod grid;
mod matrix;
mod quad;
mod residual;
mod spectrum;

pub use eigen::{eigenvalues, EigenSet};
pub use grid::Grid1D;
pub use matrix::{discretize_hamiltonian, DenseComplexMatrix};
pub use quad::quadrature;
pub use residual::{ode_residual, ode_residual_fd4, ode_residual_with_step, ResidualPoint};
pub use spectrum::{match_spectrum, LevelMatch, SpectrumReport};
