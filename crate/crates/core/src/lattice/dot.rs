use std::fmt::Write;

use super::FiniteLattice;

/// Hasse diagram in Graphviz DOT, drawn bottom to top. Elements of equal
/// height share a rank; one edge per cover pair, lower element first.
pub fn to_dot<T>(l: &FiniteLattice<T>, label: impl Fn(&T) -> String) -> String {
    let mut out = String::new();
    out.push_str("digraph hasse {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=plaintext];\n");
    out.push_str("  edge [arrowhead=none];\n");
    for (i, t) in l.labels().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", escape(&label(t))).unwrap();
    }
    let heights = l.heights();
    let max = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=max {
        let members: Vec<String> = (0..l.len())
            .filter(|&i| heights[i] == h)
            .map(|i| format!("n{i}"))
            .collect();
        writeln!(out, "  {{ rank=same; {}; }}", members.join("; ")).unwrap();
    }
    let mut covers = l.cover_pairs().to_vec();
    covers.sort_by_key(|&(up, down)| (down, up));
    for (up, down) in covers {
        writeln!(out, "  n{down} -> n{up};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::super::examples::chain;
    use super::*;

    #[test]
    fn chain_of_two() {
        let dot = to_dot(&chain(2), |x| format!("c{x}"));
        assert_eq!(
            dot,
            "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n  n0 [label=\"c0\"];\n  n1 [label=\"c1\"];\n  { rank=same; n0; }\n  { rank=same; n1; }\n  n0 -> n1;\n}\n"
        );
    }

    #[test]
    fn labels_are_escaped() {
        let dot = to_dot(&chain(1), |_| "say \"hi\"".to_string());
        assert!(dot.contains("label=\"say \\\"hi\\\"\""));
    }
}
