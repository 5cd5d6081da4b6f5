//! DOT rendering of graphs, orbits and contraction DAGs.

use std::fmt::Write;

use crate::graph::Graph;
use crate::orbit::OrbitGraph;

use super::format::serialize_graph;

fn quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\l"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// A digraph with one node per orbit member, labelled by its canonical
/// serialization, and one edge per recorded move, labelled by the move and
/// its vertex set. Sinks are drawn with a double border.
pub fn emit_dot(orbit: &OrbitGraph) -> String {
    let mut out = String::from("digraph orbit {\n  node [shape=box, fontname=\"monospace\"];\n");
    let sinks = orbit.sinks();
    for (i, g) in orbit.nodes().iter().enumerate() {
        let extra = if i == orbit.root() {
            ", style=bold"
        } else if sinks.contains(&i) {
            ", peripheries=2"
        } else {
            ""
        };
        writeln!(out, "  n{i} [label={}{extra}];", quote(&serialize_graph(g))).unwrap();
    }
    for e in orbit.edges() {
        let label = format!("{}{{{}}}", e.kind.symbol(), orbit.edge_names(e).join(","));
        writeln!(out, "  n{} -> n{} [label={}];", e.from, e.to, quote(&label)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// An undirected rendering of one graph; loops become self-edges.
pub fn graph_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for l in g.labels() {
        writeln!(out, "  {};", quote(l)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", quote(g.label(u)), quote(g.label(v))).unwrap();
    }
    for u in g.loops().iter() {
        writeln!(out, "  {0} -- {0};", quote(g.label(u))).unwrap();
    }
    out.push_str("}\n");
    out
}
