//! Core matrix and weight-vector types: validation, consistency testing and
//! ratio-matrix construction.

use thiserror::Error;

/// Relative tolerance on `a_ij * a_ji = 1` during validation.
pub const RECIPROCITY_TOL: f64 = 1e-8;
/// Relative tolerance on the triad products `a_ik * a_kj = a_ij`.
pub const CONSISTENCY_TOL: f64 = 1e-8;
/// Tolerance on the unit-sum normalization of weight vectors.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Smallest admissible matrix order.
pub const MIN_ORDER: usize = 3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatrixError {
    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NonSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("order {0} is too small: pairwise comparison needs at least {MIN_ORDER} alternatives")]
    OrderTooSmall(usize),
    #[error("entry ({row}, {col}) = {value} must be a strictly positive finite number")]
    NonPositiveEntry { row: usize, col: usize, value: f64 },
    #[error("reciprocity violated at ({row}, {col}): a_ij * a_ji = {product}")]
    ReciprocityViolation { row: usize, col: usize, product: f64 },
    #[error("weight {index} = {value} must be a strictly positive finite number")]
    NonPositiveWeight { index: usize, value: f64 },
}

/// A validated pairwise comparison matrix: positive entries, unit diagonal,
/// and bit-exact reciprocity (`a_ji` is stored as `1.0 / a_ij` for `i < j`).
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseComparisonMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl PairwiseComparisonMatrix {
    /// Validates a raw square matrix as a pairwise comparison matrix.
    ///
    /// Entries must be strictly positive, the diagonal must be 1 and every
    /// pair must satisfy `a_ij * a_ji = 1`, all within [`RECIPROCITY_TOL`].
    /// After validation the diagonal is set to exactly 1 and entries below
    /// the diagonal are replaced by exact reciprocals of their upper
    /// counterparts, so reciprocity holds bit-exactly downstream.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::NonSquare {
                    row: i,
                    found: row.len(),
                    expected: n,
                });
            }
        }
        if n < MIN_ORDER {
            return Err(MatrixError::OrderTooSmall(n));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !(v.is_finite() && v > 0.0) {
                    return Err(MatrixError::NonPositiveEntry {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &upper) in row.iter().enumerate().skip(i) {
                let product = upper * rows[j][i];
                if (product - 1.0).abs() > RECIPROCITY_TOL {
                    return Err(MatrixError::ReciprocityViolation {
                        row: i,
                        col: j,
                        product,
                    });
                }
            }
        }

        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
            for j in i + 1..n {
                entries[i * n + j] = rows[i][j];
                entries[j * n + i] = 1.0 / rows[i][j];
            }
        }
        Ok(Self { n, entries })
    }

    /// The consistent matrix generated by a weight vector: entry `(i, j)`
    /// equals `w_i / w_j`.
    pub fn from_weights(weights: &WeightVector) -> Self {
        let n = weights.len();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
            for j in i + 1..n {
                let r = weights.get(i) / weights.get(j);
                entries[i * n + j] = r;
                entries[j * n + i] = 1.0 / r;
            }
        }
        Self { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// The matrix as row vectors, for export and inspection.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Scans every ordered triad `(i, k, j)` and reports the largest relative
    /// deviation of `a_ik * a_kj` from `a_ij`.
    pub fn consistency_report(&self) -> ConsistencyReport {
        let n = self.n;
        let mut worst = (0, 0, 0);
        let mut max_deviation = 0.0_f64;
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    let dev = (self.get(i, k) * self.get(k, j) - self.get(i, j)).abs()
                        / self.get(i, j);
                    if dev > max_deviation {
                        max_deviation = dev;
                        worst = (i, k, j);
                    }
                }
            }
        }
        ConsistencyReport {
            consistent: max_deviation <= CONSISTENCY_TOL,
            worst_triad: worst,
            max_deviation,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.consistency_report().consistent
    }
}

/// Outcome of the triad scan of [`PairwiseComparisonMatrix::consistency_report`].
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub consistent: bool,
    /// Triad `(i, k, j)` maximizing the relative deviation of `a_ik * a_kj`
    /// from `a_ij` (zero-based indices).
    pub worst_triad: (usize, usize, usize),
    pub max_deviation: f64,
}

/// A positive weight vector, stored normalized to unit sum.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    components: Vec<f64>,
}

impl WeightVector {
    /// Normalizes a positive vector to unit sum. Rejects vectors shorter than
    /// [`MIN_ORDER`] and any component that is not strictly positive.
    pub fn new(components: &[f64]) -> Result<Self, MatrixError> {
        if components.len() < MIN_ORDER {
            return Err(MatrixError::OrderTooSmall(components.len()));
        }
        for (index, &value) in components.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(MatrixError::NonPositiveWeight { index, value });
            }
        }
        let sum: f64 = components.iter().sum();
        Ok(Self {
            components: components.iter().map(|v| v / sum).collect(),
        })
    }

    pub fn uniform(n: usize) -> Result<Self, MatrixError> {
        Self::new(&vec![1.0; n.max(1)])
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn get(&self, i: usize) -> f64 {
        self.components[i]
    }

    /// The component ratio `w_i / w_j`.
    pub fn ratio(&self, i: usize, j: usize) -> f64 {
        self.components[i] / self.components[j]
    }

    /// The ratio matrix of the vector: entry `(i, j)` is `w_i / w_j`. This is
    /// always a valid, consistent pairwise comparison matrix.
    pub fn ratio_matrix(&self) -> PairwiseComparisonMatrix {
        PairwiseComparisonMatrix::from_weights(self)
    }
}
