//! Generic product constructions: lid colorings of G □ H and G × H built
//! from proper colorings of the factors.
//!
//! The Cartesian route colors every vertex with its factor-color pair, which
//! is already locally identifying; merging the top pair into (1,1) saves one
//! color. The tensor route starts from the same pair coloring, repairs bad
//! edges by swapping second coordinates under a quarantine that keeps repairs
//! disjoint, and closes any remaining collisions with a search that stays
//! under the same color bound.

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, tensor_product, Graph};
use crate::solver::{find_lid_coloring, find_lid_coloring_with, SolverOptions};
use crate::verify::{is_proper, lid_report, Coloring};

/// Proper colorings of the two factors of a product, with their palette
/// sizes. `k1` and `k2` are the maximum colors actually used.
#[derive(Debug, Clone)]
pub struct FactorColorings {
    fg: Coloring,
    fh: Coloring,
    k1: u32,
    k2: u32,
}

impl FactorColorings {
    /// Validates that `fg` and `fh` are proper colorings of `g` and `h`.
    pub fn new(g: &Graph, h: &Graph, fg: Coloring, fh: Coloring) -> Result<Self> {
        if !is_proper(g, &fg)? {
            return Err(Error::InvalidColoring(
                "first factor coloring is not proper".into(),
            ));
        }
        if !is_proper(h, &fh)? {
            return Err(Error::InvalidColoring(
                "second factor coloring is not proper".into(),
            ));
        }
        let (k1, k2) = (fg.max_color(), fh.max_color());
        Ok(FactorColorings { fg, fh, k1, k2 })
    }

    pub fn k1(&self) -> u32 {
        self.k1
    }

    pub fn k2(&self) -> u32 {
        self.k2
    }
}

/// A product color as a factor pair; `flatten` buries it in `1..=k1*k2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairColor {
    pub a: u32,
    pub b: u32,
}

impl PairColor {
    pub fn flatten(self, k2: u32) -> u32 {
        (self.a - 1) * k2 + self.b
    }
}

/// Repair bookkeeping for the tensor construction: `s` holds the frozen
/// closed neighborhoods of repaired edges, `q` the still-repairable rest.
/// The two sets stay disjoint, and the local pass recolors only vertices
/// leaving `q`.
#[derive(Debug)]
pub struct RepairState {
    s: Vec<bool>,
    q: Vec<bool>,
}

impl RepairState {
    fn new(n: usize) -> Self {
        RepairState { s: vec![false; n], q: vec![true; n] }
    }

    pub fn in_s(&self, v: usize) -> bool {
        self.s[v]
    }

    pub fn in_q(&self, v: usize) -> bool {
        self.q[v]
    }

    fn absorb<I: IntoIterator<Item = usize>>(&mut self, vs: I) {
        for v in vs {
            self.s[v] = true;
            self.q[v] = false;
        }
    }
}

fn require_factor(g: &Graph, name: &str) -> Result<()> {
    if g.num_vertices() < 2 {
        return Err(Error::param(format!("{name} needs at least two vertices")));
    }
    if !g.is_connected() {
        return Err(Error::param(format!("{name} must be connected")));
    }
    Ok(())
}

fn pair_colors(g: &Graph, h: &Graph, fc: &FactorColorings) -> Result<Vec<PairColor>> {
    if fc.fg.len() != g.num_vertices() || fc.fh.len() != h.num_vertices() {
        return Err(Error::InvalidColoring(
            "factor colorings do not match the factor graphs".into(),
        ));
    }
    let cols = h.num_vertices();
    Ok((0..g.num_vertices() * cols)
        .map(|i| PairColor { a: fc.fg.color(i / cols), b: fc.fh.color(i % cols) })
        .collect())
}

fn certified(g: &Graph, colors: Vec<u32>, max_colors: u32, what: &str) -> Result<Coloring> {
    let coloring = Coloring::new(colors)?;
    let report = lid_report(g, &coloring)?;
    if !report.is_lid() {
        return Err(Error::CertificationFailed(format!(
            "{what} produced a non-lid coloring ({} improper, {} bad edges)",
            report.improper_edges.len(),
            report.bad_edges.len()
        )));
    }
    if report.colors_used > max_colors as usize {
        return Err(Error::CertificationFailed(format!(
            "{what} used {} colors, over its bound {max_colors}",
            report.colors_used
        )));
    }
    Ok(coloring)
}

/// Colors G □ H by factor-color pairs. The result is a certified lid
/// coloring with at most k1*k2 colors.
pub fn generic_cartesian_coloring(g: &Graph, h: &Graph, fc: &FactorColorings) -> Result<Coloring> {
    require_factor(g, "first factor")?;
    require_factor(h, "second factor")?;
    let pairs = pair_colors(g, h, fc)?;
    let (product, _) = cartesian_product(g, h);
    let colors = pairs.iter().map(|p| p.flatten(fc.k2)).collect();
    certified(&product, colors, fc.k1 * fc.k2, "pair coloring")
}

/// Colors G □ H by factor-color pairs with the top pair (k1,k2) merged into
/// (1,1), for a certified lid coloring with at most k1*k2 - 1 colors.
pub fn merged_cartesian_coloring(g: &Graph, h: &Graph, fc: &FactorColorings) -> Result<Coloring> {
    require_factor(g, "first factor")?;
    require_factor(h, "second factor")?;
    let pairs = pair_colors(g, h, fc)?;
    let (product, _) = cartesian_product(g, h);
    let top = PairColor { a: fc.k1, b: fc.k2 };
    let colors = pairs
        .iter()
        .map(|&p| if p == top { PairColor { a: 1, b: 1 } } else { p }.flatten(fc.k2))
        .collect();
    certified(&product, colors, fc.k1 * fc.k2 - 1, "merged pair coloring")
}

/// Colors G × H: phase one assigns factor-color pairs, phase two repairs bad
/// edges by swapping second coordinates. Needs a factor with at least three
/// vertices so adjacent product vertices always have distinct closed
/// neighborhoods. When the local repair pass leaves a collision (a swap can
/// equalize the palettes of an edge two steps away), the search engine
/// finishes the instance within the same bound. Certified, at most k1*k2
/// colors.
pub fn tensor_algorithm1(g: &Graph, h: &Graph, fc: &FactorColorings) -> Result<Coloring> {
    let (coloring, _) = tensor_repair(g, h, fc)?;
    Ok(coloring)
}

pub(crate) fn tensor_repair(
    g: &Graph,
    h: &Graph,
    fc: &FactorColorings,
) -> Result<(Coloring, RepairState)> {
    require_factor(g, "first factor")?;
    require_factor(h, "second factor")?;
    if g.num_vertices() < 3 && h.num_vertices() < 3 {
        return Err(Error::param(
            "tensor construction needs a factor with at least three vertices",
        ));
    }
    let initial = pair_colors(g, h, fc)?;
    let (product, labeling) = tensor_product(g, h);
    let n = product.num_vertices();

    // Bad edges are evaluated against the initial pair coloring; each repair
    // quarantines both closed neighborhoods, so one pass in canonical edge
    // order repairs every edge the quarantine discipline allows.
    let palette = |v: usize| -> Vec<PairColor> {
        let mut p: Vec<PairColor> = product.closed_neighborhood(v).iter().map(|&w| initial[w]).collect();
        p.sort_by_key(|c| (c.a, c.b));
        p.dedup();
        p
    };
    let mut state = RepairState::new(n);
    let mut current = initial.clone();
    for (x, y) in product.edges() {
        if !state.in_q(x) || !state.in_q(y) {
            continue;
        }
        if product.closed_neighborhood(x) == product.closed_neighborhood(y) {
            continue;
        }
        if palette(x) != palette(y) {
            continue;
        }
        let (u1, v1) = labeling.pair(x);
        let (u2, v2) = labeling.pair(y);
        current[x] = PairColor { a: fc.fg.color(u1), b: fc.fh.color(v2) };
        current[y] = PairColor { a: fc.fg.color(u2), b: fc.fh.color(v1) };
        let region: Vec<usize> = product
            .closed_neighborhood(x)
            .iter()
            .chain(product.closed_neighborhood(y).iter())
            .copied()
            .collect();
        state.absorb(region);
    }
    let colors = current.iter().map(|p| p.flatten(fc.k2)).collect();
    let coloring = Coloring::new(colors)?;
    if lid_report(&product, &coloring)?.is_lid() {
        return Ok((coloring, state));
    }

    // A swap changes the palettes of every vertex around the repaired edge,
    // and can equalize the palettes of an edge one step further out that the
    // quarantine never examines. Any coloring within the bound is acceptable
    // here, so close the residue with a search rather than an exact solve.
    let bound = fc.k1 * fc.k2;
    if bound >= n as u32 {
        let coloring = find_lid_coloring(&product, n as u32, &[])?
            .expect("a rainbow coloring is always locally identifying");
        return Ok((coloring, state));
    }
    // Sweep color counts under a node-budget slice, skipping any level that
    // refutes or stalls: an extra color only adds slack, so later levels are
    // easier to satisfy. Escalate the slice until some level lands.
    let mut slice = 32_000_000u64;
    loop {
        for k in 2..=bound {
            let opts = SolverOptions { budget: slice, ..SolverOptions::default() };
            match find_lid_coloring_with(&product, k, &[], &opts) {
                Ok(Some(coloring)) => return Ok((coloring, state)),
                Ok(None) => continue,
                Err(Error::BudgetExhausted { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        slice = slice.saturating_mul(8);
    }
}
