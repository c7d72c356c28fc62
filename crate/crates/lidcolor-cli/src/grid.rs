//! Textual grid form of a product coloring: one row per line, colors
//! space-separated. Rendering and parsing are mutually inverse.

use lidcolor::{Coloring, Error};

/// Renders a coloring over a rows-by-cols product labeling. The coloring
/// length must match the grid exactly.
pub fn render_grid(f: &Coloring, rows: usize, cols: usize) -> lidcolor::Result<String> {
    if rows == 0 || cols == 0 || f.len() != rows * cols {
        return Err(Error::InvalidParameter(format!(
            "{} colors do not fill a {rows} x {cols} grid",
            f.len()
        )));
    }
    let mut out = String::new();
    for r in 0..rows {
        let row: Vec<String> =
            (0..cols).map(|c| f.color(r * cols + c).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    Ok(out)
}

/// Parses the textual grid form back into its dimensions and coloring.
pub fn parse_grid(text: &str) -> lidcolor::Result<(usize, usize, Coloring)> {
    let mut colors = Vec::new();
    let mut cols = None;
    let mut rows = 0;
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Vec<u32> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| {
                    Error::InvalidParameter(format!("line {}: bad color {tok:?}", lineno + 1))
                })
            })
            .collect::<lidcolor::Result<_>>()?;
        match cols {
            None => cols = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(Error::InvalidParameter(format!(
                    "line {}: expected {w} columns, found {}",
                    lineno + 1,
                    row.len()
                )));
            }
            Some(_) => {}
        }
        colors.extend(row);
        rows += 1;
    }
    let cols = cols.ok_or_else(|| Error::InvalidParameter("empty grid".into()))?;
    Ok((rows, cols, Coloring::new(colors)?))
}
