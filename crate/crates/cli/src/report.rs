//! Analysis reports: everything the analyzer derives from one matrix, with a
//! flat key-value rendering and a JSON rendering. All indices are one-based
//! on this surface; numbers are reported at 12 significant digits.

use serde::Serialize;

use pcm_core::{
    build_digraph_with_tolerance, detect_simple_perturbed, dominance_search, is_efficient_with_tolerance,
    perron_eigenpair, PairwiseComparisonMatrix,
};

use crate::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub order: usize,
    pub lambda_max: f64,
    pub eigenvector: Vec<f64>,
    pub consistent: bool,
    pub max_deviation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_triad: Option<[usize; 3]>,
    pub simple_perturbed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<[usize; 2]>,
    pub efficient: bool,
    pub scc_partition: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub improved_positions: Option<Vec<[usize; 2]>>,
    pub arcs: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominance_search_found: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominance_witness: Option<Vec<f64>>,
}

pub struct AnalyzeOptions {
    pub arc_tolerance: f64,
    /// Number of dominance-search trials; 0 skips the search.
    pub trials: usize,
    pub seed: u64,
}

pub fn analyze(
    a: &PairwiseComparisonMatrix,
    label: Option<String>,
    options: &AnalyzeOptions,
) -> Result<AnalysisReport, CliError> {
    let pair = perron_eigenpair(a).map_err(|e| CliError::Numerical(e.to_string()))?;
    let consistency = a.consistency_report();
    let detection = detect_simple_perturbed(a);
    let verdict = is_efficient_with_tolerance(a, &pair.eigenvector, options.arc_tolerance)
        .map_err(|e| CliError::Numerical(e.to_string()))?;
    let digraph = build_digraph_with_tolerance(a, &pair.eigenvector, options.arc_tolerance)
        .map_err(|e| CliError::Numerical(e.to_string()))?;

    let (found, search_witness) = if options.trials > 0 {
        let result = dominance_search(a, &pair.eigenvector, options.trials, options.seed);
        (
            Some(result.is_some()),
            result.map(|w| sig12_vec(w.components())),
        )
    } else {
        (None, None)
    };

    let spec = detection.recovered;
    Ok(AnalysisReport {
        label,
        order: a.order(),
        lambda_max: sig12(pair.lambda_max),
        eigenvector: sig12_vec(pair.eigenvector.components()),
        consistent: consistency.consistent,
        max_deviation: sig12(consistency.max_deviation),
        worst_triad: (!consistency.consistent).then(|| {
            let (i, k, j) = consistency.worst_triad;
            [i + 1, k + 1, j + 1]
        }),
        simple_perturbed: detection.is_simple_perturbed,
        delta: spec.as_ref().map(|s| sig12(s.delta())),
        x: spec.as_ref().map(|s| sig12_vec(s.ratios())),
        position: spec
            .as_ref()
            .map(|s| [s.position().0 + 1, s.position().1 + 1]),
        efficient: verdict.efficient,
        scc_partition: verdict
            .scc_partition
            .iter()
            .map(|component| component.iter().map(|v| v + 1).collect())
            .collect(),
        witness: verdict
            .witness
            .as_ref()
            .map(|w| sig12_vec(w.components())),
        improved_positions: verdict
            .improved_positions
            .as_ref()
            .map(|pairs| pairs.iter().map(|&(i, j)| [i + 1, j + 1]).collect()),
        arcs: digraph.arcs().iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
        dominance_search_found: found,
        dominance_witness: search_witness,
    })
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: String| {
            out.push_str(key);
            out.push_str(": ");
            out.push_str(&value);
            out.push('\n');
        };
        if let Some(label) = &self.label {
            line("label", label.clone());
        }
        line("order", self.order.to_string());
        line("lambda_max", format_sig12(self.lambda_max));
        line("eigenvector", join_numbers(&self.eigenvector));
        line("consistent", self.consistent.to_string());
        line("max_deviation", format_sig12(self.max_deviation));
        if let Some([i, k, j]) = self.worst_triad {
            line("worst_triad", format!("{i},{k},{j}"));
        }
        line("simple_perturbed", self.simple_perturbed.to_string());
        if let Some(delta) = self.delta {
            line("delta", format_sig12(delta));
        }
        if let Some(x) = &self.x {
            line("x", join_numbers(x));
        }
        if let Some([i, j]) = self.position {
            line("position", format!("{i},{j}"));
        }
        line("efficient", self.efficient.to_string());
        line(
            "sccs",
            self.scc_partition
                .iter()
                .map(|component| {
                    let nodes: Vec<String> = component.iter().map(usize::to_string).collect();
                    format!("{{{}}}", nodes.join(","))
                })
                .collect::<Vec<_>>()
                .join(" "),
        );
        if let Some(witness) = &self.witness {
            line("witness", join_numbers(witness));
        }
        if let Some(pairs) = &self.improved_positions {
            line(
                "improved_positions",
                pairs
                    .iter()
                    .map(|[i, j]| format!("({i},{j})"))
                    .collect::<Vec<_>>()
                    .join(" "),
            );
        }
        line(
            "arcs",
            self.arcs
                .iter()
                .map(|[i, j]| format!("{i}->{j}"))
                .collect::<Vec<_>>()
                .join(" "),
        );
        if let Some(found) = self.dominance_search_found {
            line("dominance_search_found", found.to_string());
        }
        if let Some(witness) = &self.dominance_witness {
            line("dominance_witness", join_numbers(witness));
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        text.push('\n');
        text
    }
}

/// Rounds to 12 significant digits, so every reported number carries the
/// same precision in both renderings.
pub fn sig12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().expect("rounded float reparses")
}

fn sig12_vec(values: &[f64]) -> Vec<f64> {
    values.iter().map(|&v| sig12(v)).collect()
}

/// Plain-decimal rendering at 12 significant digits, trailing zeros trimmed.
pub fn format_sig12(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return v.to_string();
    }
    let exponent = v.abs().log10().floor() as i32;
    let decimals = (11 - exponent).clamp(0, 17) as usize;
    let text = format!("{v:.decimals$}");
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        text
    }
}

fn join_numbers(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| format_sig12(v))
        .collect::<Vec<_>>()
        .join(", ")
}
