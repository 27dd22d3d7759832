//! Fixtures shared by the benchmarks.

use gfl_core::seed::rng_from_seed;
use gfl_core::{FpElement, PrimeField};

/// Dense `rows x cols` matrix with uniform entries.
pub fn random_matrix(field: PrimeField, rows: usize, cols: usize, seed: u64) -> Vec<Vec<FpElement>> {
    let mut rng = rng_from_seed(seed);
    (0..rows).map(|_| (0..cols).map(|_| field.random(&mut rng)).collect()).collect()
}
