//! Seeded generators shared by the integration suites.
// Not every suite uses every generator.
#![allow(dead_code)]

use pcm_core::{PairwiseComparisonMatrix, PerturbationSpec, WeightVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Log-uniform value in `[lo, hi]`.
pub fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo.ln()..=hi.ln()).exp()
}

/// Arbitrary matrix with log-uniform upper-triangle entries in `[lo, hi]`.
#[allow(clippy::needless_range_loop)]
pub fn random_pcm(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> PairwiseComparisonMatrix {
    let mut rows = vec![vec![1.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = log_uniform(rng, lo, hi);
            rows[i][j] = v;
            rows[j][i] = 1.0 / v;
        }
    }
    PairwiseComparisonMatrix::from_rows(&rows).expect("generated matrix is valid")
}

pub fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> WeightVector {
    let components: Vec<f64> = (0..n).map(|_| log_uniform(rng, 0.1, 10.0)).collect();
    WeightVector::new(&components).expect("generated weights are valid")
}

/// Simple-perturbed spec at the canonical position: order in `3..=max_order`,
/// generator ratios log-uniform in `[0.1, 10]`, factor log-uniform in
/// `[0.01, 100]` excluding a band of width `exclusion` around 1.
pub fn random_spec(rng: &mut ChaCha8Rng, max_order: usize, exclusion: f64) -> PerturbationSpec {
    let n = rng.random_range(3..=max_order);
    let ratios: Vec<f64> = (0..n - 1).map(|_| log_uniform(rng, 0.1, 10.0)).collect();
    let delta = loop {
        let candidate = log_uniform(rng, 0.01, 100.0);
        if (candidate - 1.0).abs() > exclusion {
            break candidate;
        }
    };
    PerturbationSpec::new(ratios, delta).expect("generated spec is valid")
}
