//! DOT export of preference digraphs. Node labels are one-based; pairs with
//! arcs in both directions become a single edge with `dir=both`.

use pcm_core::PreferenceDigraph;

pub fn render(digraph: &PreferenceDigraph) -> String {
    let n = digraph.node_count();
    let mut out = String::from("digraph preference {\n  rankdir=LR;\n");
    for node in 1..=n {
        out.push_str(&format!("  {node};\n"));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || !digraph.has_arc(i, j) {
                continue;
            }
            if digraph.has_arc(j, i) {
                if i < j {
                    out.push_str(&format!("  {} -> {} [dir=both];\n", i + 1, j + 1));
                }
            } else {
                out.push_str(&format!("  {} -> {};\n", i + 1, j + 1));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcm_core::{build_digraph, PairwiseComparisonMatrix, WeightVector};

    #[test]
    fn ties_render_as_bidirected_edges() {
        let w = WeightVector::uniform(3).unwrap();
        let a = PairwiseComparisonMatrix::from_weights(&w);
        let dot = render(&build_digraph(&a, &w).unwrap());
        assert!(dot.contains("1 -> 2 [dir=both];"));
        assert!(dot.contains("1 -> 3 [dir=both];"));
        assert!(dot.contains("2 -> 3 [dir=both];"));
        assert!(!dot.contains("2 -> 1"));
    }
}
