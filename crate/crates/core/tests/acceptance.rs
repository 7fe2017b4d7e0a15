//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS line (visible with `cargo test --test acceptance -- --nocapture`).

mod common;

use std::time::Instant;

use common::{log_uniform, random_pcm, rng};
use rand::Rng;

use pcm_core::{
    build_digraph, build_simple_perturbed, detect_simple_perturbed, dominance_search, dominates,
    improve_dominating, is_efficient, lambda_from_cubic, parametric_inefficient, perron_eigenpair,
    perturbed_eigenvector, perturbed_eigenvector_alt, PairwiseComparisonMatrix, PerturbationSpec,
    WeightVector,
};

/// Truncation (not rounding) to `k` fractional digits, as an integer in
/// units of `10^-k`. The nudge keeps exact grid values (like a ratio of
/// exactly 2) from flooring down through floating-point noise.
fn trunc(v: f64, k: i32) -> i64 {
    (v * 10f64.powi(k) + 1e-6).floor() as i64
}

fn example_11() -> PairwiseComparisonMatrix {
    PairwiseComparisonMatrix::from_rows(&[
        vec![1.0, 1.0, 1.0 / 5.0, 1.0 / 5.0],
        vec![1.0, 1.0, 1.0 / 3.0, 1.0 / 7.0],
        vec![5.0, 3.0, 1.0, 1.0 / 4.0],
        vec![5.0, 7.0, 4.0, 1.0],
    ])
    .unwrap()
}

fn a_three_halves() -> PairwiseComparisonMatrix {
    build_simple_perturbed(&PerturbationSpec::new(vec![2.0, 4.0, 8.0], 1.5).unwrap())
}

#[test]
fn criterion_1_example_reproduction() {
    let started = Instant::now();
    let a = example_11();
    let pair = perron_eigenpair(&a).unwrap();
    let truncated: Vec<i64> = pair
        .eigenvector
        .components()
        .iter()
        .map(|&v| trunc(v, 8))
        .collect();
    assert_eq!(truncated, vec![7777933, 7732534, 24353753, 60135778]);

    let expected_ratios = [
        [10000, 10058, 3193, 1293],
        [9941, 10000, 3175, 1285],
        [31311, 31495, 10000, 4049],
        [77315, 77769, 24692, 10000],
    ];
    let ratio_matrix = pair.eigenvector.ratio_matrix();
    for (i, row) in expected_ratios.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            assert_eq!(trunc(ratio_matrix.get(i, j), 4), want, "ratio ({i}, {j})");
        }
    }

    let verdict = is_efficient(&a, &pair.eigenvector).unwrap();
    assert!(!verdict.efficient);
    let digraph = build_digraph(&a, &pair.eigenvector).unwrap();
    assert_eq!(digraph.out_degree(1), 0);

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 1 (example reproduction): PASS in {elapsed:?}");
}

#[test]
fn criterion_2_dominating_witness() {
    let a = example_11();
    let w = perron_eigenpair(&a).unwrap().eigenvector;
    let digraph = build_digraph(&a, &w).unwrap();
    let witness = improve_dominating(&a, &w, &digraph).unwrap();

    // Normalized form of (w1, w1, w3, w4): the second coordinate raised to
    // the first.
    let expected = WeightVector::new(&[w.get(0), w.get(0), w.get(2), w.get(3)]).unwrap();
    for (got, want) in witness.components().iter().zip(expected.components()) {
        assert!((got - want).abs() <= 1e-12);
    }

    let eps = 1e-12;
    let mut strict = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            let old_gap = (a.get(i, j) - w.ratio(i, j)).abs();
            let new_gap = (a.get(i, j) - witness.ratio(i, j)).abs();
            assert!(new_gap <= old_gap + eps, "pair ({i}, {j}) got worse");
            if new_gap < old_gap - eps {
                strict.push((i, j));
            } else {
                assert!(
                    (new_gap - old_gap).abs() <= eps,
                    "pair ({i}, {j}) changed without strict improvement"
                );
            }
        }
    }
    assert_eq!(strict, vec![(0, 1), (1, 0), (1, 2), (1, 3), (2, 1), (3, 1)]);
    println!("criterion 2 (dominating witness): PASS");
}

#[test]
fn criterion_3_perturbed_reproduction() {
    let a = a_three_halves();
    let pair = perron_eigenpair(&a).unwrap();
    let truncated: Vec<i64> = pair
        .eigenvector
        .components()
        .iter()
        .map(|&v| trunc(v, 8))
        .collect();
    assert_eq!(truncated, vec![57313428, 23374121, 12874966, 6437483]);

    let detection = detect_simple_perturbed(&a);
    assert!(detection.is_simple_perturbed);
    let spec = detection.recovered.unwrap();
    assert_eq!(spec.position(), (0, 1));
    assert!((spec.delta() - 1.5).abs() <= 1e-8);
    for (got, want) in spec.ratios().iter().zip([2.0, 4.0, 8.0]) {
        assert!((got - want).abs() <= 1e-8);
    }

    let verdict = is_efficient(&a, &pair.eigenvector).unwrap();
    assert!(verdict.efficient);

    let digraph = build_digraph(&a, &pair.eigenvector).unwrap();
    assert_eq!(
        digraph.arcs(),
        vec![(0, 2), (0, 3), (1, 0), (2, 1), (2, 3), (3, 1), (3, 2)]
    );
    println!("criterion 3 (perturbed reproduction): PASS");
}

#[test]
fn criterion_4_spectral_agreement() {
    let started = Instant::now();
    let mut r = rng(0x4ACC);
    for case in 0..500 {
        let n = r.random_range(3..=12);
        let delta = loop {
            let candidate = log_uniform(&mut r, 0.01, 100.0);
            if (candidate - 1.0).abs() > 1e-6 {
                break candidate;
            }
        };
        let ratios: Vec<f64> = (0..n - 1).map(|_| log_uniform(&mut r, 0.1, 10.0)).collect();
        let spec = PerturbationSpec::new(ratios, delta).unwrap();
        let a = build_simple_perturbed(&spec);
        let pair = perron_eigenpair(&a).unwrap();
        let root = lambda_from_cubic(n, delta);
        assert!(
            (root - pair.lambda_max).abs() <= 1e-9 * n as f64,
            "case {case}: cubic {root} vs iterative {}",
            pair.lambda_max
        );
        let w_primary = perturbed_eigenvector(&spec);
        let w_alt = perturbed_eigenvector_alt(&spec);
        for i in 0..n {
            assert!((w_primary.get(i) - w_alt.get(i)).abs() <= 1e-8, "case {case}");
            assert!(
                (w_primary.get(i) - pair.eigenvector.get(i)).abs() <= 1e-8,
                "case {case}"
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!("criterion 4 (spectral agreement, 500 cases): PASS in {elapsed:?}");
}

#[test]
fn criterion_5_perturbed_eigenvectors_are_efficient() {
    let mut r = rng(0x5ACC);
    for case in 0..1000 {
        let n = r.random_range(3..=10);
        let delta = loop {
            let candidate = log_uniform(&mut r, 0.01, 100.0);
            if (candidate - 1.0).abs() > 1e-6 {
                break candidate;
            }
        };
        let ratios: Vec<f64> = (0..n - 1).map(|_| log_uniform(&mut r, 0.1, 10.0)).collect();
        let spec = PerturbationSpec::new(ratios, delta).unwrap();
        let a = build_simple_perturbed(&spec);
        let w = perron_eigenpair(&a).unwrap().eigenvector;

        let verdict = is_efficient(&a, &w).unwrap();
        assert!(verdict.efficient, "case {case} (n={n}, delta={delta})");

        // Strict approximation inequalities with margin, in the directions
        // fixed by the sign of delta - 1: the perturbed entry is always
        // under-approximated, the rest of its row over-approximated, the
        // rest of the partner row under-approximated; roles of the first
        // two indices swap when delta < 1.
        let margin = 1e-12;
        let (hi, lo) = if delta > 1.0 { (0, 1) } else { (1, 0) };
        assert!(a.get(hi, lo) - w.ratio(hi, lo) > margin, "case {case}");
        for j in 2..n {
            assert!(w.ratio(hi, j) - a.get(hi, j) > margin, "case {case}");
            assert!(a.get(lo, j) - w.ratio(lo, j) > margin, "case {case}");
        }

        // Arc pattern of the digraph implied by those inequalities.
        let g = build_digraph(&a, &w).unwrap();
        assert!(g.has_arc(lo, hi) && !g.has_arc(hi, lo), "case {case}");
        for j in 2..n {
            assert!(g.has_arc(hi, j) && !g.has_arc(j, hi), "case {case}");
            assert!(g.has_arc(j, lo) && !g.has_arc(lo, j), "case {case}");
        }
        for i in 2..n {
            for j in 2..n {
                if i != j {
                    assert!(g.has_arc(i, j), "case {case}");
                }
            }
        }
    }
    println!("criterion 5 (1000 perturbed eigenvectors efficient): PASS");
}

#[test]
fn criterion_6_3x3_eigenvectors_are_efficient() {
    let mut r = rng(0x6ACC);
    for case in 0..500 {
        let a = random_pcm(&mut r, 3, 0.1, 10.0);
        let w = perron_eigenpair(&a).unwrap().eigenvector;
        assert!(is_efficient(&a, &w).unwrap().efficient, "case {case}");
        let detection = detect_simple_perturbed(&a);
        assert!(
            detection.is_consistent || detection.is_simple_perturbed,
            "case {case}: 3x3 matrix classified as neither"
        );
    }
    println!("criterion 6 (500 3x3 eigenvectors efficient): PASS");
}

#[test]
fn criterion_7_parametric_family_is_inefficient() {
    for n in 4..=8 {
        for &p in &[0.5, 1.0, 2.0] {
            for &q in &[0.2, 3.0] {
                let a = parametric_inefficient(n, p, q).unwrap();
                let w = perron_eigenpair(&a).unwrap().eigenvector;
                let verdict = is_efficient(&a, &w).unwrap();
                assert!(!verdict.efficient, "A({n}, {p}, {q}) should be inefficient");
                let digraph = build_digraph(&a, &w).unwrap();
                let witness = improve_dominating(&a, &w, &digraph).unwrap();
                assert!(
                    dominates(&a, &w, &witness).is_some(),
                    "A({n}, {p}, {q}) witness fails the dominance check"
                );
            }
        }
    }
    println!("criterion 7 (parametric family, 30 instances): PASS");
}

#[test]
fn criterion_8_oracle_consistency() {
    let mut r = rng(0x8ACC);
    let mut efficient_seen = 0;
    let mut inefficient_seen = 0;
    for case in 0..200 {
        let n = r.random_range(4..=6);
        let a = match case % 4 {
            0 => {
                let weights: Vec<f64> = (0..n).map(|_| log_uniform(&mut r, 0.1, 10.0)).collect();
                PairwiseComparisonMatrix::from_weights(&WeightVector::new(&weights).unwrap())
            }
            1 => {
                let ratios: Vec<f64> =
                    (0..n - 1).map(|_| log_uniform(&mut r, 0.1, 10.0)).collect();
                let delta = loop {
                    let candidate = log_uniform(&mut r, 0.05, 20.0);
                    if (candidate - 1.0).abs() > 0.05 {
                        break candidate;
                    }
                };
                build_simple_perturbed(&PerturbationSpec::new(ratios, delta).unwrap())
            }
            2 => {
                let p = log_uniform(&mut r, 0.5, 2.0);
                let q = if r.random_range(0..2) == 0 { 0.2 } else { 3.0 };
                parametric_inefficient(n, p, q).unwrap()
            }
            _ => random_pcm(&mut r, n, 0.2, 5.0),
        };
        let w = perron_eigenpair(&a).unwrap().eigenvector;
        let verdict = is_efficient(&a, &w).unwrap();
        let found = dominance_search(&a, &w, 10_000, 0x8ACC + case as u64);
        if verdict.efficient {
            efficient_seen += 1;
            assert!(
                found.is_none(),
                "case {case}: search dominated a vector the criterion calls efficient"
            );
        } else {
            inefficient_seen += 1;
            let witness = verdict.witness.expect("inefficient verdicts carry a witness");
            assert!(
                dominates(&a, &w, &witness).is_some(),
                "case {case}: witness fails the dominance check"
            );
        }
        if let Some(candidate) = found {
            assert!(dominates(&a, &w, &candidate).is_some());
        }
    }
    assert!(efficient_seen > 0 && inefficient_seen > 0);
    println!(
        "criterion 8 (oracle consistency, {efficient_seen} efficient / {inefficient_seen} inefficient): PASS"
    );
}

#[test]
fn criterion_9_eigenvalue_floor() {
    let mut r = rng(0x9ACC);
    for case in 0..300 {
        let n = r.random_range(3..=10);
        // Mixed population, kept away from the near-consistent gray zone so
        // the equality side of the check is decidable.
        let a = match case % 3 {
            0 => {
                let weights: Vec<f64> = (0..n).map(|_| log_uniform(&mut r, 0.1, 10.0)).collect();
                PairwiseComparisonMatrix::from_weights(&WeightVector::new(&weights).unwrap())
            }
            1 => {
                let ratios: Vec<f64> =
                    (0..n - 1).map(|_| log_uniform(&mut r, 0.1, 10.0)).collect();
                let delta = loop {
                    let candidate = log_uniform(&mut r, 0.01, 100.0);
                    if (candidate - 1.0).abs() > 0.05 {
                        break candidate;
                    }
                };
                build_simple_perturbed(&PerturbationSpec::new(ratios, delta).unwrap())
            }
            _ => loop {
                let candidate = random_pcm(&mut r, n, 0.1, 10.0);
                if candidate.consistency_report().max_deviation > 1e-3 {
                    break candidate;
                }
            },
        };
        let pair = perron_eigenpair(&a).unwrap();
        let nf = n as f64;
        assert!(pair.lambda_max >= nf - 1e-9, "case {case}");
        let at_floor = pair.lambda_max - nf <= 1e-9;
        assert_eq!(
            at_floor,
            a.is_consistent(),
            "case {case}: lambda = {}, n = {n}, consistent = {}",
            pair.lambda_max,
            a.is_consistent()
        );
    }
    println!("criterion 9 (eigenvalue floor, 300 cases): PASS");
}
