//! Principal (Perron) eigenpair computation: a power-iteration solver for
//! arbitrary pairwise comparison matrices, plus closed forms for simple
//! perturbed matrices whose dominant eigenvalue is a cubic root.

use thiserror::Error;

use crate::matrix::{PairwiseComparisonMatrix, WeightVector};
use crate::perturbation::{slot_permutation, PerturbationSpec};

/// Accepted residual of `A w - lambda w`, relative to `lambda`.
pub const EIGEN_RESIDUAL_TOL: f64 = 1e-10;
/// Accepted residual when the dominant-root value is substituted back into
/// its cubic.
pub const CUBIC_ROOT_TOL: f64 = 1e-9;

const POWER_STEP_TOL: f64 = 1e-14;
const POWER_ITERATION_CAP: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("closed-form eigenvalue broke down: radicand {radicand:e} went negative (factor too close to 1)")]
    NumericalBreakdown { radicand: f64 },
}

/// Dominant eigenpair of a pairwise comparison matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronPair {
    pub lambda_max: f64,
    /// The positive eigenvector, normalized to unit sum.
    pub eigenvector: WeightVector,
    pub iterations: usize,
    /// Max-norm of `A w - lambda w` at the returned pair.
    pub residual: f64,
}

/// Computes the dominant eigenpair by power iteration from a uniform start.
///
/// Every entry is positive, so the iteration converges to the unique positive
/// eigenvector; the eigenvalue always satisfies `lambda_max >= n`, with
/// equality exactly for consistent matrices.
pub fn perron_eigenpair(a: &PairwiseComparisonMatrix) -> Result<PerronPair, SpectralError> {
    let start = vec![1.0; a.order()];
    perron_eigenpair_with_start(a, &start)
}

/// Power iteration from a caller-supplied positive starting vector. The
/// result is independent of any positive rescaling of the start.
pub fn perron_eigenpair_with_start(
    a: &PairwiseComparisonMatrix,
    start: &[f64],
) -> Result<PerronPair, SpectralError> {
    let n = a.order();
    assert_eq!(start.len(), n, "starting vector length must match the order");
    assert!(
        start.iter().all(|&v| v.is_finite() && v > 0.0),
        "starting vector must be strictly positive"
    );

    let sum: f64 = start.iter().sum();
    let mut x: Vec<f64> = start.iter().map(|v| v / sum).collect();
    let mut iterations = 0;
    for iteration in 1..=POWER_ITERATION_CAP {
        iterations = iteration;
        let y = apply(a, &x);
        let scale: f64 = y.iter().sum();
        let next: Vec<f64> = y.iter().map(|v| v / scale).collect();
        let step = next
            .iter()
            .zip(&x)
            .map(|(p, q)| (p - q).abs())
            .fold(0.0, f64::max);
        x = next;
        if step < POWER_STEP_TOL {
            break;
        }
    }

    let y = apply(a, &x);
    let lambda: f64 = y.iter().sum();
    let residual = y
        .iter()
        .zip(&x)
        .map(|(yi, xi)| (yi - lambda * xi).abs())
        .fold(0.0, f64::max);
    if residual > EIGEN_RESIDUAL_TOL * lambda {
        return Err(SpectralError::NoConvergence {
            iterations,
            residual,
        });
    }
    Ok(PerronPair {
        lambda_max: lambda,
        eigenvector: WeightVector::new(&x).expect("iterates of a positive matrix stay positive"),
        iterations,
        residual,
    })
}

fn apply(a: &PairwiseComparisonMatrix, x: &[f64]) -> Vec<f64> {
    let n = a.order();
    (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j) * x[j]).sum())
        .collect()
}

/// Dominant eigenvalue of a simple perturbed matrix of order `n` with factor
/// `delta`, as the unique real root above `n` of
/// `lambda^3 - n lambda^2 - (n - 2)(delta + 1/delta - 2) = 0`.
///
/// Returns exactly `n` for `delta = 1`, the consistent case.
pub fn lambda_from_cubic(n: usize, delta: f64) -> f64 {
    assert!(n >= crate::matrix::MIN_ORDER, "order must be at least 3");
    assert!(delta.is_finite() && delta > 0.0, "factor must be positive");
    let nf = n as f64;
    let offset = (nf - 2.0) * (delta + 1.0 / delta - 2.0);
    if offset == 0.0 {
        return nf;
    }
    let f = |lambda: f64| {
        let value = lambda * lambda * lambda - nf * lambda * lambda - offset;
        let slope = 3.0 * lambda * lambda - 2.0 * nf * lambda;
        (value, slope)
    };
    // f is strictly increasing on [n, hi], negative at n and positive at hi.
    newton_bisect(f, nf, nf + offset.cbrt() + 1.0)
}

/// Safeguarded Newton iteration on a bracket where `f` is increasing with
/// `f(lo) <= 0 <= f(hi)`. Falls back to bisection whenever the Newton step
/// leaves the bracket; terminates at machine precision.
fn newton_bisect(f: impl Fn(f64) -> (f64, f64), mut lo: f64, mut hi: f64) -> f64 {
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (value, slope) = f(x);
        if value == 0.0 {
            return x;
        }
        if value < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - value / slope;
        let next = if newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if next == x || (next <= lo && x <= lo) || (next >= hi && x >= hi) {
            return x;
        }
        if hi - lo <= f64::EPSILON * x.abs() {
            return x;
        }
        x = next;
    }
    x
}

/// Closed-form evaluation of the same dominant root by Cardano's method:
///
/// `lambda = cbrt((B + 12 sqrt(3 C)) / delta) / 6
///         + (2/3) n^2 cbrt(delta / (B + 12 sqrt(3 C))) + n / 3`
///
/// with `B` and `C` polynomials in `n` and `delta`. `C` vanishes at
/// `delta = 1` and its expanded form cancels catastrophically nearby, which
/// can round to a negative radicand; that case is surfaced as
/// [`SpectralError::NumericalBreakdown`] rather than patched over, and
/// [`lambda_from_cubic`] remains the authoritative route.
pub fn lambda_explicit(n: usize, delta: f64) -> Result<f64, SpectralError> {
    assert!(n >= crate::matrix::MIN_ORDER, "order must be at least 3");
    assert!(delta.is_finite() && delta > 0.0, "factor must be positive");
    assert!(delta != 1.0, "the closed form needs delta != 1");
    let nf = n as f64;
    let d = delta;
    let b = 8.0 * nf.powi(3) * d + 108.0 * nf * d * d - 216.0 * nf * d + 108.0 * nf
        - 216.0 * d * d
        + 432.0 * d
        - 216.0;
    let c = 4.0 * nf.powi(4) * d.powi(3) - 8.0 * nf.powi(4) * d.powi(2) + 4.0 * nf.powi(4) * d
        - 8.0 * nf.powi(3) * d.powi(3)
        + 16.0 * nf.powi(3) * d.powi(2)
        - 8.0 * nf.powi(3) * d
        + 27.0 * nf.powi(2) * d.powi(4)
        + 162.0 * nf.powi(2) * d.powi(2)
        - 108.0 * nf.powi(2) * d.powi(3)
        - 108.0 * nf.powi(2) * d
        + 27.0 * nf.powi(2)
        - 108.0 * nf * d.powi(4)
        + 432.0 * nf * d.powi(3)
        - 648.0 * nf * d.powi(2)
        + 432.0 * nf * d
        - 108.0 * nf
        + 108.0 * d.powi(4)
        - 432.0 * d.powi(3)
        + 648.0 * d.powi(2)
        - 432.0 * d
        + 108.0;
    let radicand = 3.0 * c;
    if radicand < 0.0 {
        return Err(SpectralError::NumericalBreakdown { radicand });
    }
    let s = b + 12.0 * radicand.sqrt();
    Ok((s / d).cbrt() / 6.0 + (2.0 / 3.0) * nf * nf * (d / s).cbrt() + nf / 3.0)
}

/// Spectrum data shared by the closed-form eigenvectors of a simple
/// perturbed matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbedSpectrum {
    pub n: usize,
    pub delta: f64,
    /// The dominant eigenvalue, root of the cubic above `n`.
    pub lambda: f64,
    /// The positive scalar relating the two closed-form eigenvectors.
    pub scaling: f64,
}

impl PerturbedSpectrum {
    pub fn new(n: usize, delta: f64) -> Self {
        assert!(
            (delta - 1.0).abs() > crate::perturbation::DELTA_TOL,
            "a simple perturbed matrix needs delta != 1"
        );
        let lambda = lambda_from_cubic(n, delta);
        let nf = n as f64;
        let scaling = (lambda - 1.0 + delta) / (lambda * (lambda - nf + 1.0));
        Self {
            n,
            delta,
            lambda,
            scaling,
        }
    }
}

/// Closed-form dominant eigenvector of a simple perturbed matrix.
///
/// In canonical slots the unnormalized components are
/// `(lambda - 1 + delta, (lambda - 1 + 1/delta) / x_1,
///   lambda (lambda - 2) / ((n - 2) x_{i-1}) for i = 3..n)`;
/// they are scattered through the position relabeling and normalized to unit
/// sum.
pub fn perturbed_eigenvector(spec: &PerturbationSpec) -> WeightVector {
    let n = spec.order();
    let spectrum = PerturbedSpectrum::new(n, spec.delta());
    let lambda = spectrum.lambda;
    let tail = lambda * (lambda - 2.0) / (n as f64 - 2.0);
    let components = |slot: usize| match slot {
        0 => lambda - 1.0 + spec.delta(),
        1 => (lambda - 1.0 + 1.0 / spec.delta()) / spec.ratios()[0],
        k => tail / spec.ratios()[k - 1],
    };
    scatter_and_normalize(spec, components)
}

/// The alternative closed form of the same eigenvector, scaled by
/// [`PerturbedSpectrum::scaling`]:
///
/// `c * (lambda (lambda - n + 1),
///       [lambda - (1 - 1/delta)(lambda - n + 2)] / x_1,
///       (lambda - 1 + 1/delta) / x_{i-1} for i = 3..n)`.
///
/// Agrees with [`perturbed_eigenvector`] after normalization; the two routes
/// are kept separate so they can be checked against each other.
pub fn perturbed_eigenvector_alt(spec: &PerturbationSpec) -> WeightVector {
    let n = spec.order();
    let spectrum = PerturbedSpectrum::new(n, spec.delta());
    let lambda = spectrum.lambda;
    let nf = n as f64;
    let c = spectrum.scaling;
    let components = |slot: usize| match slot {
        0 => c * lambda * (lambda - nf + 1.0),
        1 => c * (lambda - (1.0 - 1.0 / spec.delta()) * (lambda - nf + 2.0)) / spec.ratios()[0],
        k => c * (lambda - 1.0 + 1.0 / spec.delta()) / spec.ratios()[k - 1],
    };
    scatter_and_normalize(spec, components)
}

fn scatter_and_normalize(
    spec: &PerturbationSpec,
    canonical: impl Fn(usize) -> f64,
) -> WeightVector {
    let n = spec.order();
    let perm = slot_permutation(n, spec.position());
    let mut components = vec![0.0; n];
    for slot in 0..n {
        components[perm[slot]] = canonical(slot);
    }
    WeightVector::new(&components).expect("closed-form components are positive")
}
