//! Proper-coloring checks and locally identifying verification reports.
//!
//! A coloring is locally identifying (lid) when it is proper and, for every
//! edge `uv` whose closed neighborhoods differ as vertex sets, the color sets
//! of those closed neighborhoods differ too.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex coloring with positive integer colors, indexed by vertex.
///
/// Color values need not be contiguous; [`Coloring::normalized`] remaps them
/// onto `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    /// Wraps a color vector, rejecting the color 0.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color 0; colors are positive"
            )));
        }
        Ok(Coloring { colors })
    }

    /// Builds a coloring by evaluating `f` on each vertex. Panics on color 0.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> u32) -> Self {
        let colors: Vec<u32> = (0..n).map(f).collect();
        assert!(colors.iter().all(|&c| c > 0), "colors are positive");
        Coloring { colors }
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Number of distinct color values in use.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Remaps the distinct colors onto `1..=k` preserving their relative
    /// order, so `colors_used` equals `max_color` afterwards.
    pub fn normalized(&self) -> Coloring {
        let mut distinct: Vec<u32> = self.colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = self
            .colors
            .iter()
            .map(|c| distinct.binary_search(c).unwrap() as u32 + 1)
            .collect();
        Coloring { colors }
    }
}

/// Outcome of verifying a coloring against a graph.
///
/// `twin_edges` counts edges whose endpoints share a closed neighborhood;
/// those edges can never distinguish their endpoints and are skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LidReport {
    pub proper: bool,
    pub improper_edges: Vec<(usize, usize)>,
    pub bad_edges: Vec<(usize, usize)>,
    pub twin_edges: usize,
    pub colors_used: usize,
}

impl LidReport {
    /// Locally identifying: proper with no bad edges.
    pub fn is_lid(&self) -> bool {
        self.proper && self.bad_edges.is_empty()
    }
}

fn check_len(g: &Graph, f: &Coloring) -> Result<()> {
    if f.len() != g.num_vertices() {
        return Err(Error::param(format!(
            "coloring has {} entries for a graph on {} vertices",
            f.len(),
            g.num_vertices()
        )));
    }
    Ok(())
}

/// True when no edge joins two vertices of the same color.
pub fn is_proper(g: &Graph, f: &Coloring) -> Result<bool> {
    check_len(g, f)?;
    Ok((0..g.num_vertices())
        .all(|u| g.neighbors(u).iter().all(|&v| f.color(u) != f.color(v))))
}

/// Full verification report; edge lists come out in lexicographic order.
pub fn lid_report(g: &Graph, f: &Coloring) -> Result<LidReport> {
    check_len(g, f)?;
    let n = g.num_vertices();
    // Sorted color set of each closed neighborhood.
    let palettes: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let mut p: Vec<u32> =
                g.closed_neighborhood(v).iter().map(|&w| f.color(w)).collect();
            p.sort_unstable();
            p.dedup();
            p
        })
        .collect();
    let mut improper_edges = Vec::new();
    let mut bad_edges = Vec::new();
    let mut twin_edges = 0;
    for (u, v) in g.edges() {
        if f.color(u) == f.color(v) {
            improper_edges.push((u, v));
        }
        if g.closed_neighborhood(u) == g.closed_neighborhood(v) {
            twin_edges += 1;
        } else if palettes[u] == palettes[v] {
            bad_edges.push((u, v));
        }
    }
    Ok(LidReport {
        proper: improper_edges.is_empty(),
        improper_edges,
        bad_edges,
        twin_edges,
        colors_used: f.colors_used(),
    })
}

/// True when the coloring is proper and locally identifying.
pub fn is_lid(g: &Graph, f: &Coloring) -> Result<bool> {
    Ok(lid_report(g, f)?.is_lid())
}

/// Combines per-component lid-chromatic values: the overall value is their
/// maximum. `values` must align with [`Graph::connected_components`].
pub fn chi_lid_of_components(g: &Graph, values: &[u32]) -> Result<u32> {
    if g.num_vertices() == 0 {
        return Err(Error::param("empty graph has no lid-chromatic number"));
    }
    let comps = g.connected_components();
    if comps.len() != values.len() {
        return Err(Error::param(format!(
            "{} values for {} components",
            values.len(),
            comps.len()
        )));
    }
    Ok(*values.iter().max().expect("at least one component"))
}
