//! DOT export of graphs with optional coloring. The fill palette cycles
//! through nine entries and is cosmetic only; the color number in the label
//! is authoritative.

use lidcolor::{Coloring, Error, Graph};

const PALETTE: [&str; 9] = [
    "lightblue",
    "salmon",
    "palegreen",
    "gold",
    "orchid",
    "khaki",
    "turquoise",
    "plum",
    "wheat",
];

/// Renders an undirected DOT graph, filling vertices by color when one is
/// supplied. The coloring must cover every vertex.
pub fn to_dot(g: &Graph, f: Option<&Coloring>) -> lidcolor::Result<String> {
    if let Some(f) = f {
        if f.len() != g.num_vertices() {
            return Err(Error::InvalidColoring(format!(
                "{} colors for {} vertices",
                f.len(),
                g.num_vertices()
            )));
        }
    }
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    for v in 0..g.num_vertices() {
        match f {
            Some(f) => {
                let c = f.color(v);
                let fill = PALETTE[(c as usize - 1) % PALETTE.len()];
                out.push_str(&format!(
                    "  {v} [label=\"{v}:{c}\", style=filled, fillcolor=\"{fill}\"];\n"
                ));
            }
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}
