//! Shared fixtures for the benchmark suite.

use pcm_core::{
    build_simple_perturbed, parametric_inefficient, PairwiseComparisonMatrix, PerturbationSpec,
};

/// The 4x4 reference instance: consistent base with first row (1, 2, 4, 8),
/// entry (1, 2) scaled by 1.5.
pub fn reference_perturbed() -> PairwiseComparisonMatrix {
    build_simple_perturbed(&PerturbationSpec::new(vec![2.0, 4.0, 8.0], 1.5).unwrap())
}

/// A larger perturbed instance with spread-out generator ratios.
pub fn perturbed(n: usize, delta: f64) -> PairwiseComparisonMatrix {
    let ratios: Vec<f64> = (1..n).map(|k| 1.25f64.powi(k as i32)).collect();
    build_simple_perturbed(&PerturbationSpec::new(ratios, delta).unwrap())
}

/// A member of the parametric family with inefficient eigenvector.
pub fn parametric(n: usize) -> PairwiseComparisonMatrix {
    parametric_inefficient(n, 2.0, 3.0).unwrap()
}
