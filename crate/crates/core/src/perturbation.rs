//! Construction, detection and parameter recovery of simple perturbed
//! matrices: consistent matrices with exactly one entry (and its reciprocal)
//! scaled by a factor `delta != 1`.

use thiserror::Error;

use crate::matrix::{MatrixError, PairwiseComparisonMatrix, CONSISTENCY_TOL};

/// Perturbation factors within this distance of 1 are treated as 1, i.e. the
/// matrix counts as consistent rather than perturbed.
pub const DELTA_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PerturbationError {
    #[error("perturbation factor {0} is indistinguishable from 1; the matrix would be consistent")]
    DeltaIsOne(f64),
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),
    #[error("matrix is not simple perturbed at position ({0}, {1})")]
    NotPerturbedHere(usize, usize),
}

/// Generator data for a simple perturbed matrix: the first-row ratios of the
/// consistent base matrix, the perturbation factor, and the perturbed entry.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationSpec {
    ratios: Vec<f64>,
    delta: f64,
    position: (usize, usize),
}

impl PerturbationSpec {
    /// A spec perturbing the canonical entry `(0, 1)`.
    ///
    /// `ratios` are the `n - 1` first-row entries of the consistent base
    /// matrix (the first alternative is the unit), so the matrix order is
    /// `ratios.len() + 1`.
    pub fn new(ratios: Vec<f64>, delta: f64) -> Result<Self, PerturbationError> {
        Self::with_position(ratios, delta, (0, 1))
    }

    /// A spec perturbing an arbitrary entry `(i, j)`, `i != j`.
    pub fn with_position(
        ratios: Vec<f64>,
        delta: f64,
        position: (usize, usize),
    ) -> Result<Self, PerturbationError> {
        let n = ratios.len() + 1;
        if n < crate::matrix::MIN_ORDER {
            return Err(PerturbationError::ParameterDomain(format!(
                "need at least {} generator ratios, got {}",
                crate::matrix::MIN_ORDER - 1,
                ratios.len()
            )));
        }
        if let Some(bad) = ratios.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(PerturbationError::ParameterDomain(format!(
                "generator ratios must be strictly positive, got {bad}"
            )));
        }
        if !(delta.is_finite() && delta > 0.0) {
            return Err(PerturbationError::ParameterDomain(format!(
                "perturbation factor must be strictly positive, got {delta}"
            )));
        }
        if (delta - 1.0).abs() <= DELTA_TOL {
            return Err(PerturbationError::DeltaIsOne(delta));
        }
        let (i, j) = position;
        if i == j || i >= n || j >= n {
            return Err(PerturbationError::ParameterDomain(format!(
                "position ({i}, {j}) is not an off-diagonal entry of an order-{n} matrix"
            )));
        }
        Ok(Self {
            ratios,
            delta,
            position,
        })
    }

    pub fn order(&self) -> usize {
        self.ratios.len() + 1
    }

    /// First-row ratios of the consistent base matrix.
    pub fn ratios(&self) -> &[f64] {
        &self.ratios
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn position(&self) -> (usize, usize) {
        self.position
    }
}

/// The node relabeling that carries the canonical perturbed pair `(0, 1)`
/// onto `(i, j)`: slot 0 maps to `i`, slot 1 to `j`, and the remaining slots
/// to the remaining indices in ascending order.
pub(crate) fn slot_permutation(n: usize, (i, j): (usize, usize)) -> Vec<usize> {
    let mut perm = Vec::with_capacity(n);
    perm.push(i);
    perm.push(j);
    perm.extend((0..n).filter(|&k| k != i && k != j));
    perm
}

/// Builds the simple perturbed matrix of a spec.
///
/// In canonical position the first row of the consistent base is
/// `(1, x_1, ..., x_{n-1})`, i.e. entry `(k, l)` is `x_l / x_k` with
/// `x_0 = 1`, and the entry `(0, 1)` is scaled by `delta` (its reciprocal by
/// `1/delta`). Other positions are the same matrix conjugated by the
/// relabeling of [`slot_permutation`], so the structure is preserved with the
/// perturbed pair moved to `(i, j)`.
pub fn build_simple_perturbed(spec: &PerturbationSpec) -> PairwiseComparisonMatrix {
    let n = spec.order();
    let perm = slot_permutation(n, spec.position());
    let ratio = |k: usize| if k == 0 { 1.0 } else { spec.ratios()[k - 1] };
    let mut rows = vec![vec![0.0; n]; n];
    for k in 0..n {
        for l in 0..n {
            let mut v = ratio(l) / ratio(k);
            if (k, l) == (0, 1) {
                v *= spec.delta();
            } else if (k, l) == (1, 0) {
                v /= spec.delta();
            }
            rows[perm[k]][perm[l]] = v;
        }
    }
    PairwiseComparisonMatrix::from_rows(&rows)
        .expect("a simple perturbed construction is always a valid matrix")
}

/// Result of [`detect_simple_perturbed`].
#[derive(Debug, Clone, PartialEq)]
pub struct DetectionResult {
    pub is_simple_perturbed: bool,
    /// Present iff the matrix is simple perturbed; rebuilding from this spec
    /// reproduces the input within [`CONSISTENCY_TOL`].
    pub recovered: Option<PerturbationSpec>,
    pub is_consistent: bool,
}

/// Decides whether a matrix is consistent, simple perturbed, or neither.
///
/// Pairs `(i, j)` are scanned in lexicographic order. A pair is repairable
/// when all completions `a_ik * a_kj` over `k` outside the pair agree and
/// substituting that value makes the whole matrix consistent. The recovered
/// factor is reported with `delta > 1`, flipping the position orientation if
/// necessary; generator ratios are read off the repaired matrix anchored at
/// the first index of the reported position.
///
/// Every 3x3 matrix is either consistent or simple perturbed; for larger
/// orders at most one pair is repairable.
pub fn detect_simple_perturbed(a: &PairwiseComparisonMatrix) -> DetectionResult {
    if a.is_consistent() {
        return DetectionResult {
            is_simple_perturbed: false,
            recovered: None,
            is_consistent: true,
        };
    }
    let n = a.order();
    for i in 0..n {
        for j in i + 1..n {
            let Some(consistent_value) = repair_value(a, i, j) else {
                continue;
            };
            let mut rows = a.to_rows();
            rows[i][j] = consistent_value;
            rows[j][i] = 1.0 / consistent_value;
            let repaired = PairwiseComparisonMatrix::from_rows(&rows)
                .expect("repairing one entry keeps the matrix valid");
            if !repaired.is_consistent() {
                continue;
            }
            let delta = a.get(i, j) / consistent_value;
            if (delta - 1.0).abs() <= DELTA_TOL {
                continue;
            }
            // Canonical orientation: report the factor above 1.
            let (position, delta) = if delta > 1.0 {
                ((i, j), delta)
            } else {
                ((j, i), 1.0 / delta)
            };
            let ratios = anchored_ratios(&repaired, position);
            let spec = PerturbationSpec::with_position(ratios, delta, position)
                .expect("recovered parameters are in domain");
            return DetectionResult {
                is_simple_perturbed: true,
                recovered: Some(spec),
                is_consistent: false,
            };
        }
    }
    DetectionResult {
        is_simple_perturbed: false,
        recovered: None,
        is_consistent: false,
    }
}

/// The agreed consistent completion `a_ik * a_kj` over all `k` outside
/// `{i, j}`, or `None` if the completions disagree.
fn repair_value(a: &PairwiseComparisonMatrix, i: usize, j: usize) -> Option<f64> {
    let mut value = None;
    for k in 0..a.order() {
        if k == i || k == j {
            continue;
        }
        let candidate = a.get(i, k) * a.get(k, j);
        match value {
            None => value = Some(candidate),
            Some(v) if (candidate / v - 1.0).abs() > CONSISTENCY_TOL => return None,
            Some(_) => {}
        }
    }
    value
}

/// Generator ratios of a consistent matrix anchored at `position.0`: the
/// ratio toward `position.1` first, then toward the remaining indices in
/// ascending order. Matches the slot layout of [`build_simple_perturbed`].
fn anchored_ratios(consistent: &PairwiseComparisonMatrix, position: (usize, usize)) -> Vec<f64> {
    let perm = slot_permutation(consistent.order(), position);
    perm[1..]
        .iter()
        .map(|&t| consistent.get(position.0, t))
        .collect()
}

/// Recovers the perturbation factor of a matrix assumed simple perturbed at
/// the given oriented position. Unlike [`detect_simple_perturbed`] the
/// orientation is taken as given, so factors below 1 are returned as-is.
pub fn recover_delta(
    a: &PairwiseComparisonMatrix,
    position: (usize, usize),
) -> Result<f64, PerturbationError> {
    let (i, j) = position;
    if i == j || i >= a.order() || j >= a.order() {
        return Err(PerturbationError::ParameterDomain(format!(
            "position ({i}, {j}) is not an off-diagonal entry of an order-{} matrix",
            a.order()
        )));
    }
    let consistent_value =
        repair_value(a, i, j).ok_or(PerturbationError::NotPerturbedHere(i, j))?;
    let mut rows = a.to_rows();
    rows[i][j] = consistent_value;
    rows[j][i] = 1.0 / consistent_value;
    let repaired = PairwiseComparisonMatrix::from_rows(&rows)
        .expect("repairing one entry keeps the matrix valid");
    if !repaired.is_consistent() {
        return Err(PerturbationError::NotPerturbedHere(i, j));
    }
    let delta = a.get(i, j) / consistent_value;
    if (delta - 1.0).abs() <= DELTA_TOL {
        return Err(PerturbationError::NotPerturbedHere(i, j));
    }
    Ok(delta)
}

/// The parametric family with inefficient principal eigenvector: first row
/// `(1, p, ..., p)`, first column `1/p` below the diagonal, and a cycle of
/// `q` entries through the remaining block, which is otherwise all ones.
pub fn parametric_inefficient(
    n: usize,
    p: f64,
    q: f64,
) -> Result<PairwiseComparisonMatrix, PerturbationError> {
    if n < 4 {
        return Err(PerturbationError::ParameterDomain(format!(
            "the parametric family needs order >= 4, got {n}"
        )));
    }
    if !(p.is_finite() && p > 0.0) {
        return Err(PerturbationError::ParameterDomain(format!(
            "p must be strictly positive, got {p}"
        )));
    }
    if !(q.is_finite() && q > 0.0) {
        return Err(PerturbationError::ParameterDomain(format!(
            "q must be strictly positive, got {q}"
        )));
    }
    if (q - 1.0).abs() <= DELTA_TOL {
        return Err(PerturbationError::ParameterDomain(format!(
            "q must differ from 1, got {q}"
        )));
    }
    let mut rows = vec![vec![1.0; n]; n];
    rows[0][1..].fill(p);
    for row in rows.iter_mut().skip(1) {
        row[0] = 1.0 / p;
    }
    for k in 1..n - 1 {
        rows[k][k + 1] = q;
        rows[k + 1][k] = 1.0 / q;
    }
    rows[n - 1][1] = q;
    rows[1][n - 1] = 1.0 / q;
    Ok(PairwiseComparisonMatrix::from_rows(&rows)
        .expect("the parametric construction is always a valid matrix"))
}

impl From<MatrixError> for PerturbationError {
    fn from(err: MatrixError) -> Self {
        PerturbationError::ParameterDomain(err.to_string())
    }
}
