//! Analysis of pairwise comparison matrices.
//!
//! A pairwise comparison matrix (PCM) is a positive square matrix with unit
//! diagonal and reciprocal entries (`a_ji = 1/a_ij`) that encodes preference
//! ratios between alternatives. This crate provides:
//!
//! - validated [`PairwiseComparisonMatrix`] and [`WeightVector`] types with
//!   consistency testing ([`matrix`]),
//! - the principal (Perron) eigenpair, computed iteratively and through
//!   closed forms for matrices that differ from a consistent one in a single
//!   entry pair ([`spectral`]),
//! - construction and detection of such one-entry perturbations, plus a
//!   parametric family whose principal eigenvector is never Pareto efficient
//!   ([`perturbation`]),
//! - Pareto-efficiency verdicts for weight vectors through the
//!   strong-connectivity criterion on the preference digraph, with dominating
//!   vectors constructed as certificates of inefficiency ([`efficiency`]).

pub mod efficiency;
pub mod matrix;
pub mod perturbation;
mod scc;
pub mod spectral;

pub use efficiency::{
    build_digraph, build_digraph_with_tolerance, dominance_search, dominates, improve_dominating,
    is_efficient, is_efficient_with_tolerance, EfficiencyError, EfficiencyVerdict,
    PreferenceDigraph,
};
pub use matrix::{ConsistencyReport, MatrixError, PairwiseComparisonMatrix, WeightVector};
pub use perturbation::{
    build_simple_perturbed, detect_simple_perturbed, parametric_inefficient, recover_delta,
    DetectionResult, PerturbationError, PerturbationSpec,
};
pub use spectral::{
    lambda_explicit, lambda_from_cubic, perron_eigenpair, perron_eigenpair_with_start,
    perturbed_eigenvector, perturbed_eigenvector_alt, PerronPair, PerturbedSpectrum, SpectralError,
};
