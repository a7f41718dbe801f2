//! Graphviz output of the dual graph.

use crate::tree::{ComponentId, ResolutionTree};
use std::fmt::Write;

/// Dual graph in DOT syntax; `label` may annotate each vertex (for example
/// with a model coefficient). Vertices come in creation order.
pub fn to_dot(tree: &ResolutionTree, label: &dyn Fn(ComponentId) -> Option<String>) -> String {
    let mut out = String::from("graph dual {\n");
    for c in tree.all_components() {
        let shape = match c {
            ComponentId::Exceptional(_) => "box",
            ComponentId::Branch(_) => "ellipse",
        };
        let text = match label(c) {
            Some(l) => format!("{c}\\n{l}"),
            None => c.to_string(),
        };
        writeln!(out, "  {c} [shape={shape}, label=\"{text}\"];").unwrap();
    }
    for (a, b, n) in tree.dual_graph() {
        writeln!(out, "  {a} -- {b} [tooltip=\"{}\"];", tree.nodes[n].address).unwrap();
    }
    out.push_str("}\n");
    out
}
