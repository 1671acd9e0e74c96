//! Graphviz output.

use std::fmt::Write;

use pyrelab::{Digraph, Graph};

pub fn graph(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

pub fn digraph(d: &Digraph, name: &str) -> String {
    let mut out = format!("digraph {} {{\n", quote(name));
    for v in &d.vertices {
        let _ = writeln!(out, "  {v};");
    }
    for (tail, head) in &d.arcs {
        let _ = writeln!(out, "  {tail} -> {head};");
    }
    out.push_str("}\n");
    out
}

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}
