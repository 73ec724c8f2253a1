#![allow(dead_code)]

use invgen::instance::random_instance;
use invgen::ActionSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic stream of random full-rank instances with `k < n`.
pub fn random_specs(
    count: usize,
    primes: &[u64],
    n_range: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<ActionSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let p = primes[rng.gen_range(0..primes.len())];
            let n = rng.gen_range(n_range.clone());
            let k = rng.gen_range(1..n);
            random_instance(k, n, p, rng.gen())
                .unwrap()
                .to_spec()
                .unwrap()
        })
        .collect()
}

/// Every `k × n` matrix over `Z/2`, as integer rows.
pub fn all_binary_matrices(k: usize, n: usize) -> impl Iterator<Item = Vec<Vec<i64>>> {
    (0u64..1 << (k * n)).map(move |bits| {
        (0..k)
            .map(|i| (0..n).map(|j| ((bits >> (i * n + j)) & 1) as i64).collect())
            .collect()
    })
}
