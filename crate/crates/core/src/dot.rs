//! Graphviz export with optional colors and cycle/tree edge styling.

use std::fmt::Write;

use crate::coloring::VertexColoring;
use crate::graph::Graph;
use crate::recognition::HalinCertificate;

const PALETTE: [&str; 4] = ["#e41a1c", "#377eb8", "#4daf4a", "#ffd92f"];

/// Renders `g` as an undirected DOT graph. With a certificate, outer-cycle edges
/// are drawn bold and tree edges dashed; with a coloring, nodes are filled and
/// labelled `v:c`, colors numbered from 1.
pub fn to_dot(g: &Graph, cert: Option<&HalinCertificate>, coloring: Option<&VertexColoring>) -> String {
    let mut out = String::from("graph halin {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in g.live_vertices() {
        match coloring.map(|c| c.color[v]) {
            Some(c) => {
                let fill = PALETTE.get(c as usize).copied().unwrap_or("gray");
                writeln!(out, "  {v} [label=\"{v}:{}\", fillcolor=\"{fill}\"];", c + 1).unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        let style = match cert {
            Some(c) if c.is_outer(u) && c.is_outer(v) => " [style=bold, penwidth=2.5]",
            Some(_) => " [style=dashed]",
            None => "",
        };
        writeln!(out, "  {u} -- {v}{style};").unwrap();
    }
    out.push_str("}\n");
    out
}
