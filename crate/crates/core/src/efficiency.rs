//! Pareto-efficiency analysis of a weight vector against a pairwise
//! comparison matrix.
//!
//! A weight vector `w` is efficient when no other positive vector
//! approximates every matrix entry at least as well (entrywise
//! `|a_ij - w_i/w_j|`) and at least one entry strictly better. Efficiency is
//! decided through the preference digraph, which has an arc `i -> j` exactly
//! when `w_i / w_j >= a_ij`: the vector is efficient if and only if that
//! digraph is strongly connected. For inefficient vectors a dominating
//! vector is constructed by rescaling a source component of the condensation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::matrix::{PairwiseComparisonMatrix, WeightVector};
use crate::scc::strongly_connected_components;

/// Relative slack on the arc rule `w_i / w_j >= a_ij`. Ties must produce
/// arcs in both directions, and the exact-ratio pairs of a perturbed
/// matrix's consistent block hit the tie only up to floating-point error.
pub const ARC_TOL: f64 = 1e-9;
/// Absolute slack on the entrywise dominance comparisons.
pub const DOMINANCE_TOL: f64 = 1e-12;

const SEARCH_STEP: f64 = 1e-3;
const SEARCH_STAGNATION_LIMIT: usize = 500;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EfficiencyError {
    #[error("dimension mismatch: matrix order {matrix} vs weight vector length {weights}")]
    DimensionMismatch { matrix: usize, weights: usize },
    #[error("digraph is strongly connected; the weight vector admits no dominating vector")]
    GraphIsStronglyConnected,
}

/// The preference digraph of a (matrix, weight vector) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct PreferenceDigraph {
    n: usize,
    adj: Vec<bool>,
}

impl PreferenceDigraph {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.adj[from * self.n + to]
    }

    pub fn out_degree(&self, node: usize) -> usize {
        (0..self.n).filter(|&j| self.has_arc(node, j)).count()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.has_arc(i, j) {
                    arcs.push((i, j));
                }
            }
        }
        arcs
    }

    /// Strongly connected components in topological order of the
    /// condensation: the first component has no incoming arcs from outside,
    /// the last no outgoing.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adjacency: Vec<Vec<usize>> = (0..self.n)
            .map(|i| (0..self.n).filter(|&j| self.has_arc(i, j)).collect())
            .collect();
        strongly_connected_components(&adjacency)
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.components().len() == 1
    }
}

/// Builds the preference digraph with the default arc tolerance [`ARC_TOL`].
pub fn build_digraph(
    a: &PairwiseComparisonMatrix,
    w: &WeightVector,
) -> Result<PreferenceDigraph, EfficiencyError> {
    build_digraph_with_tolerance(a, w, ARC_TOL)
}

/// Builds the preference digraph; the arc `i -> j` is present when
/// `w_i / w_j >= a_ij * (1 - arc_tol)`, so near-ties yield both arcs.
pub fn build_digraph_with_tolerance(
    a: &PairwiseComparisonMatrix,
    w: &WeightVector,
    arc_tol: f64,
) -> Result<PreferenceDigraph, EfficiencyError> {
    let n = check_dimensions(a, w)?;
    let mut adj = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                adj[i * n + j] = w.ratio(i, j) >= a.get(i, j) * (1.0 - arc_tol);
            }
        }
    }
    Ok(PreferenceDigraph { n, adj })
}

fn check_dimensions(
    a: &PairwiseComparisonMatrix,
    w: &WeightVector,
) -> Result<usize, EfficiencyError> {
    if a.order() != w.len() {
        return Err(EfficiencyError::DimensionMismatch {
            matrix: a.order(),
            weights: w.len(),
        });
    }
    Ok(a.order())
}

/// Efficiency verdict with certificates: the component partition of the
/// digraph, and for inefficient vectors a dominating vector together with
/// the pairs it strictly improves.
#[derive(Debug, Clone, PartialEq)]
pub struct EfficiencyVerdict {
    pub efficient: bool,
    /// Strongly connected components in topological order.
    pub scc_partition: Vec<Vec<usize>>,
    pub witness: Option<WeightVector>,
    pub improved_positions: Option<Vec<(usize, usize)>>,
}

/// Decides efficiency of `w` against `a`: efficient exactly when the
/// preference digraph is strongly connected. Inefficient verdicts carry a
/// verified dominating vector.
pub fn is_efficient(
    a: &PairwiseComparisonMatrix,
    w: &WeightVector,
) -> Result<EfficiencyVerdict, EfficiencyError> {
    is_efficient_with_tolerance(a, w, ARC_TOL)
}

/// [`is_efficient`] with an explicit arc tolerance.
pub fn is_efficient_with_tolerance(
    a: &PairwiseComparisonMatrix,
    w: &WeightVector,
    arc_tol: f64,
) -> Result<EfficiencyVerdict, EfficiencyError> {
    let digraph = build_digraph_with_tolerance(a, w, arc_tol)?;
    let scc_partition = digraph.components();
    if scc_partition.len() == 1 {
        return Ok(EfficiencyVerdict {
            efficient: true,
            scc_partition,
            witness: None,
            improved_positions: None,
        });
    }
    let witness = improve_dominating(a, w, &digraph)?;
    let improved = dominates(a, w, &witness)
        .expect("the constructed witness dominates the original vector");
    Ok(EfficiencyVerdict {
        efficient: false,
        scc_partition,
        witness: Some(witness),
        improved_positions: Some(improved),
    })
}

/// Constructs a vector dominating `w` from a non-strongly-connected
/// preference digraph.
///
/// The first component `S` of the condensation has no incoming arcs, so
/// `w_s / w_t > a_st` strictly for every `s` in `S`, `t` outside. Scaling
/// every coordinate of `S` by the largest boundary ratio
/// `theta = max a_st * w_t / w_s < 1` tightens every boundary pair from
/// above without overshooting (the extremal pair lands exactly on its matrix
/// entry) and leaves all other ratios unchanged, which strictly improves
/// every boundary pair. The result is verified against the dominance
/// definition before being returned.
pub fn improve_dominating(
    a: &PairwiseComparisonMatrix,
    w: &WeightVector,
    digraph: &PreferenceDigraph,
) -> Result<WeightVector, EfficiencyError> {
    let n = check_dimensions(a, w)?;
    let components = digraph.components();
    if components.len() == 1 {
        return Err(EfficiencyError::GraphIsStronglyConnected);
    }
    let source = &components[0];
    let in_source = {
        let mut mask = vec![false; n];
        for &s in source {
            mask[s] = true;
        }
        mask
    };
    let mut theta = 0.0_f64;
    for &s in source {
        for (t, &inside) in in_source.iter().enumerate() {
            if !inside {
                theta = theta.max(a.get(s, t) * w.get(t) / w.get(s));
            }
        }
    }
    debug_assert!(theta > 0.0 && theta < 1.0);
    let scaled: Vec<f64> = (0..n)
        .map(|k| if in_source[k] { theta * w.get(k) } else { w.get(k) })
        .collect();
    let witness = WeightVector::new(&scaled).expect("scaled weights stay positive");
    assert!(
        dominates(a, w, &witness).is_some(),
        "source-rescaled vector must dominate the original"
    );
    Ok(witness)
}

/// Checks whether `candidate` dominates `w` against `a`: every entrywise
/// approximation at least as good within [`DOMINANCE_TOL`], at least one
/// strictly better beyond it. Returns the strictly improved positions, or
/// `None` when `candidate` does not dominate.
pub fn dominates(
    a: &PairwiseComparisonMatrix,
    w: &WeightVector,
    candidate: &WeightVector,
) -> Option<Vec<(usize, usize)>> {
    let n = a.order();
    let mut improved = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let old_gap = (a.get(i, j) - w.ratio(i, j)).abs();
            let new_gap = (a.get(i, j) - candidate.ratio(i, j)).abs();
            if new_gap > old_gap + DOMINANCE_TOL {
                return None;
            }
            if new_gap < old_gap - DOMINANCE_TOL {
                improved.push((i, j));
            }
        }
    }
    if improved.is_empty() {
        None
    } else {
        Some(improved)
    }
}

/// Weak variant used to let the search drift: no pair may get worse, strict
/// improvement is not required.
fn weakly_dominates(
    a: &PairwiseComparisonMatrix,
    w: &WeightVector,
    candidate: &WeightVector,
) -> bool {
    let n = a.order();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let old_gap = (a.get(i, j) - w.ratio(i, j)).abs();
            let new_gap = (a.get(i, j) - candidate.ratio(i, j)).abs();
            if new_gap > old_gap + DOMINANCE_TOL {
                return false;
            }
        }
    }
    true
}

/// Randomized hill search for a vector dominating `w`: one coordinate at a
/// time is rescaled by a log-uniform factor in `[1 - 1e-3, 1 + 1e-3]`;
/// candidates that dominate `w` are returned immediately, candidates that at
/// least avoid worsening any pair are kept as the new base, and the walk
/// restarts from `w` after a stretch of rejected proposals.
///
/// Finding a dominator certifies that `w` is inefficient (every returned
/// vector passes the exact dominance check); finding none certifies
/// nothing. Deterministic for a fixed `(input, seed)`.
pub fn dominance_search(
    a: &PairwiseComparisonMatrix,
    w: &WeightVector,
    budget: usize,
    seed: u64,
) -> Option<WeightVector> {
    let n = a.order();
    assert_eq!(n, w.len(), "dimension mismatch");
    assert!(budget >= 1, "at least one trial is needed");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lo = (1.0_f64 - SEARCH_STEP).ln();
    let hi = (1.0_f64 + SEARCH_STEP).ln();
    let mut current = w.components().to_vec();
    let mut stagnant = 0;
    for _ in 0..budget {
        let coordinate = rng.random_range(0..n);
        let factor = rng.random_range(lo..=hi).exp();
        let mut proposal = current.clone();
        proposal[coordinate] *= factor;
        let candidate = WeightVector::new(&proposal).expect("rescaled weights stay positive");
        if dominates(a, w, &candidate).is_some() {
            return Some(candidate);
        }
        if weakly_dominates(a, w, &candidate) {
            current = proposal;
            stagnant = 0;
        } else {
            stagnant += 1;
            if stagnant >= SEARCH_STAGNATION_LIMIT {
                current = w.components().to_vec();
                stagnant = 0;
            }
        }
    }
    None
}
