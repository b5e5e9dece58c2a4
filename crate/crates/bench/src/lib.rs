//! Shared helpers for the benchmark targets.

use darboux::{Complex64, DenseComplexMatrix};

/// Deterministic dense complex matrix from a xorshift stream, so benches
/// need no RNG dependency and never drift between runs.
pub fn pseudo_random_matrix(n: usize, seed: u64) -> DenseComplexMatrix {
    let mut state = seed.max(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    let mut m = DenseComplexMatrix::zeros(n).expect("n >= 1");
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, Complex64::new(next() * 4.0, next() * 4.0))
                .expect("finite");
        }
    }
    m
}
