//! Benchmark inputs shared by the criterion benches.

use loctrop_core::algebra::{Exponent, Polynomial, Series};
use loctrop_core::oracles::{random_polynomial, GridSpec};
use rand::Rng;

pub fn sample_series() -> Series {
    let p = Polynomial::from_ints(2, &[(1, 1, &[1, 1]), (-1, 1, &[2, 0]), (1, 2, &[2, 1]), (1, 6, &[3, 1])]);
    Series::truncated(p, 4).expect("terms within the truncation degree")
}

/// `{x - y + z^2, yz - x^2}` in three variables.
pub fn space_curve() -> Vec<Polynomial> {
    vec![
        Polynomial::from_ints(3, &[(1, 1, &[1, 0, 0]), (-1, 1, &[0, 1, 0]), (1, 1, &[0, 0, 2])]),
        Polynomial::from_ints(3, &[(1, 1, &[0, 1, 1]), (-1, 1, &[2, 0, 0])]),
    ]
}

/// Random support sets of the given size in `[0, 8]^n`.
pub fn random_supports(n: usize, size: usize, count: usize, seed: u64) -> Vec<Vec<Exponent>> {
    let mut rng = GridSpec::new(8, 2, 1, seed).expect("valid grid").rng();
    (0..count).map(|_| (0..size).map(|_| Exponent((0..n).map(|_| rng.gen_range(0..=8)).collect())).collect()).collect()
}

/// Random exact polynomials vanishing at the origin.
pub fn random_polynomials(n: usize, degree: u32, terms: usize, count: usize, seed: u64) -> Vec<Series> {
    let mut rng = GridSpec::new(8, 2, 1, seed).expect("valid grid").rng();
    (0..count).map(|_| Series::exact(random_polynomial(&mut rng, n, 1, degree, terms))).collect()
}
