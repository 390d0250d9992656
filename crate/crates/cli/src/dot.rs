//! Hasse diagrams in Graphviz DOT.

use std::fmt::Write;

use forest_poset::interval::IntervalPoset;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Bottom-to-top digraph with one node per forest and one edge per cover.
/// Nodes of equal corank share a rank.
pub fn hasse(iv: &IntervalPoset) -> String {
    let mut out = String::new();
    let title = format!("[{}, {}]", iv.lower(), iv.upper());
    writeln!(out, "digraph hasse {{").unwrap();
    writeln!(out, "  label={};", quote(&title)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for (i, h) in iv.elements().iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(&h.to_string())).unwrap();
    }
    let max = iv.corank_of(0);
    for c in (0..=max).rev() {
        let ids: Vec<String> = (0..iv.len())
            .filter(|&i| iv.corank_of(i) == c)
            .map(|i| format!("n{i}"))
            .collect();
        writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
    }
    for &(a, b) in iv.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
