//! Colored grid tiles and the block composer for large twisted tori.
//!
//! The composer rests on four base tiles (4x4, 4x5, 5x4, 5x5 torus
//! colorings) whose shared boundaries make any block grid of them seamless:
//! matching first/last columns across equal-height tiles and matching first
//! rows across equal-width tiles mean every local window of a composition
//! already occurs inside one tile or across one of the seams the mining
//! instance checked.

use serde::{Deserialize, Serialize};

use super::cache;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{lid_report, Coloring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Wrap,
    Open,
}

/// Which product's adjacency a grid pattern colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Cartesian,
    Tensor,
}

/// Builds the grid graph on rows x cols vertices (flat index r*cols + c)
/// with the product adjacency of `kind`; wrapped axes close cyclically.
pub(crate) fn grid_graph(
    rows: usize,
    cols: usize,
    kind: ProductKind,
    row_wrap: bool,
    col_wrap: bool,
) -> Graph {
    let mut g = Graph::new(rows * cols);
    let flat = |r: usize, c: usize| r * cols + c;
    for r in 0..rows {
        for c in 0..cols {
            match kind {
                ProductKind::Cartesian => {
                    if r + 1 < rows || row_wrap {
                        let r2 = (r + 1) % rows;
                        if (r2, c) != (r, c) {
                            g.add_edge(flat(r, c), flat(r2, c));
                        }
                    }
                    if c + 1 < cols || col_wrap {
                        let c2 = (c + 1) % cols;
                        if (r, c2) != (r, c) {
                            g.add_edge(flat(r, c), flat(r, c2));
                        }
                    }
                }
                ProductKind::Tensor => {
                    if r + 1 < rows || row_wrap {
                        let r2 = (r + 1) % rows;
                        let mut cs = Vec::new();
                        if c + 1 < cols || col_wrap {
                            cs.push((c + 1) % cols);
                        }
                        if c > 0 || col_wrap {
                            cs.push((c + cols - 1) % cols);
                        }
                        for c2 in cs {
                            if (r2, c2) != (r, c) {
                                g.add_edge(flat(r, c), flat(r2, c2));
                            }
                        }
                    }
                }
            }
        }
    }
    g
}

/// A fully colored grid block, lid-valid on its declared topology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tile {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub row_topology: Topology,
    pub col_topology: Topology,
    pub cells: Vec<Vec<u32>>,
    pub colors: u32,
}

impl Tile {
    /// Checks shape, palette, and lid-validity on the tile's own topology
    /// under the given product adjacency.
    pub fn validate(&self, kind: ProductKind) -> Result<()> {
        let fail = |msg: String| Err(Error::CertificationFailed(format!("tile {}: {msg}", self.name)));
        if self.rows == 0 || self.cols == 0 || self.cells.len() != self.rows {
            return fail("shape mismatch".into());
        }
        if self.cells.iter().any(|row| row.len() != self.cols) {
            return fail("ragged cell rows".into());
        }
        let flat: Vec<u32> = self.cells.iter().flatten().copied().collect();
        if flat.iter().any(|&c| c == 0 || c > self.colors) {
            return fail(format!("cell colors outside 1..={}", self.colors));
        }
        let g = grid_graph(
            self.rows,
            self.cols,
            kind,
            self.row_topology == Topology::Wrap,
            self.col_topology == Topology::Wrap,
        );
        let coloring = Coloring::new(flat)?;
        let report = lid_report(&g, &coloring)?;
        if !report.is_lid() {
            return fail(format!(
                "not lid on its topology ({} improper, {} bad edges)",
                report.improper_edges.len(),
                report.bad_edges.len()
            ));
        }
        if report.colors_used != self.colors as usize {
            return fail(format!(
                "uses {} colors, declared {}",
                report.colors_used, self.colors
            ));
        }
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.cells[i]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        self.cells.iter().map(|row| row[j]).collect()
    }
}

/// The four base torus tiles, keyed by (row count, column count).
#[derive(Debug, Clone)]
pub struct TileSet {
    pub t44: Tile,
    pub t45: Tile,
    pub t54: Tile,
    pub t55: Tile,
}

impl TileSet {
    pub fn get(&self, rows: usize, cols: usize) -> Result<&Tile> {
        match (rows, cols) {
            (4, 4) => Ok(&self.t44),
            (4, 5) => Ok(&self.t45),
            (5, 4) => Ok(&self.t54),
            (5, 5) => Ok(&self.t55),
            other => Err(Error::param(format!("no base tile of shape {other:?}"))),
        }
    }

    fn validate(&self) -> Result<()> {
        for t in [&self.t44, &self.t45, &self.t54, &self.t55] {
            t.validate(ProductKind::Cartesian)?;
        }
        // Shared-boundary equalities: first/last columns across equal-height
        // tiles, first two columns across the 5-row pair, first two rows
        // across equal-width pairs.
        let seam = self.t44.column(0) == self.t45.column(0)
            && self.t44.column(3) == self.t45.column(4)
            && self.t54.column(0) == self.t55.column(0)
            && self.t54.column(1) == self.t55.column(1)
            && self.t44.row(0) == self.t54.row(0)
            && self.t44.row(1) == self.t54.row(1)
            && self.t45.row(0) == self.t55.row(0)
            && self.t45.row(1) == self.t55.row(1);
        if !seam {
            return Err(Error::CertificationFailed(
                "base tiles do not share seam boundaries".into(),
            ));
        }
        Ok(())
    }
}

const BASE_NAMES: [(&str, usize, usize); 4] = [
    ("base-4x4", 4, 4),
    ("base-4x5", 4, 5),
    ("base-5x4", 5, 4),
    ("base-5x5", 5, 5),
];

/// Produces the four seam-compatible base tiles, mining them with an exact
/// search the first time and reading the tile cache afterwards.
pub fn mine_base_tiles() -> Result<TileSet> {
    mine_base_tiles_in(&cache::cache_dir())
}

pub(crate) fn mine_base_tiles_in(dir: &std::path::Path) -> Result<TileSet> {
    let cached: Vec<Option<Tile>> = BASE_NAMES
        .iter()
        .map(|(name, _, _)| cache::load_tile_from(dir, name))
        .collect::<Result<_>>()?;
    if let [Some(t44), Some(t45), Some(t54), Some(t55)] = &cached[..] {
        let set = TileSet {
            t44: t44.clone(),
            t45: t45.clone(),
            t54: t54.clone(),
            t55: t55.clone(),
        };
        set.validate().map_err(|e| Error::Cache(format!("stale tile cache: {e}")))?;
        return Ok(set);
    }
    let set = mine_quad()?;
    set.validate()?;
    for tile in [&set.t44, &set.t45, &set.t54, &set.t55] {
        cache::store_tile_in(dir, tile)?;
    }
    Ok(set)
}

/// Slot bookkeeping for the quad-tile search: every cell of the four tiles
/// is a slot, seam-shared slots are unioned, and the search colors the
/// resulting classes against the full 18x18 composed torus.
struct Slots {
    offsets: [usize; 4],
    dims: [(usize, usize); 4],
}

impl Slots {
    fn new() -> Self {
        let dims = [(4, 4), (4, 5), (5, 4), (5, 5)];
        let mut offsets = [0; 4];
        let mut acc = 0;
        for (i, (r, c)) in dims.iter().enumerate() {
            offsets[i] = acc;
            acc += r * c;
        }
        Slots { offsets, dims }
    }

    fn total(&self) -> usize {
        81
    }

    fn slot(&self, tile: usize, r: usize, c: usize) -> usize {
        self.offsets[tile] + r * self.dims[tile].1 + c
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let root = self.find(self.0[x]);
            self.0[x] = root;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[rb.max(ra)] = rb.min(ra);
        }
    }
}

struct QuadConstraint {
    a: usize,
    b: usize,
    nu: Vec<usize>,
    nv: Vec<usize>,
    all: Vec<usize>,
}

const T44: usize = 0;
const T45: usize = 1;
const T54: usize = 2;
const T55: usize = 3;

fn mine_quad() -> Result<TileSet> {
    let slots = Slots::new();
    let mut uf = UnionFind::new(slots.total());
    for r in 0..4 {
        uf.union(slots.slot(T44, r, 0), slots.slot(T45, r, 0));
        uf.union(slots.slot(T44, r, 3), slots.slot(T45, r, 4));
    }
    for r in 0..5 {
        uf.union(slots.slot(T54, r, 0), slots.slot(T55, r, 0));
        uf.union(slots.slot(T54, r, 1), slots.slot(T55, r, 1));
    }
    for c in 0..4 {
        uf.union(slots.slot(T44, 0, c), slots.slot(T54, 0, c));
        uf.union(slots.slot(T44, 1, c), slots.slot(T54, 1, c));
    }
    for c in 0..5 {
        uf.union(slots.slot(T45, 0, c), slots.slot(T55, 0, c));
        uf.union(slots.slot(T45, 1, c), slots.slot(T55, 1, c));
    }
    // Dense class ids in slot order.
    let mut class_of_slot = vec![usize::MAX; slots.total()];
    let mut nclasses = 0;
    for s in 0..slots.total() {
        let root = uf.find(s);
        if class_of_slot[root] == usize::MAX {
            class_of_slot[root] = nclasses;
            nclasses += 1;
        }
        class_of_slot[s] = class_of_slot[root];
    }

    // The composed 18x18 torus with both axes laid out 4,4,5,5 exercises
    // every tile interior, every seam type, and every seam crossing.
    let plan = [4usize, 4, 5, 5];
    let block_of = block_index(&plan);
    let class_at = |r: usize, c: usize| -> usize {
        let (bi, lr) = block_of[r];
        let (bj, lc) = block_of[c];
        let tile = match (plan[bi], plan[bj]) {
            (4, 4) => T44,
            (4, 5) => T45,
            (5, 4) => T54,
            _ => T55,
        };
        class_of_slot[slots.slot(tile, lr, lc)]
    };
    let g = grid_graph(18, 18, ProductKind::Cartesian, true, true);
    let cons: Vec<QuadConstraint> = g
        .edges()
        .iter()
        .map(|&(x, y)| {
            let classes = |v: usize| -> Vec<usize> {
                let mut cl: Vec<usize> = g
                    .closed_neighborhood(v)
                    .iter()
                    .map(|&w| class_at(w / 18, w % 18))
                    .collect();
                cl.sort_unstable();
                cl.dedup();
                cl
            };
            let nu = classes(x);
            let nv = classes(y);
            let mut all = nu.clone();
            all.extend_from_slice(&nv);
            all.sort_unstable();
            all.dedup();
            QuadConstraint { a: class_at(x / 18, x % 18), b: class_at(y / 18, y % 18), nu, nv, all }
        })
        .collect();
    let mut by_var: Vec<Vec<usize>> = vec![Vec::new(); nclasses];
    for (ci, con) in cons.iter().enumerate() {
        for &v in &con.all {
            by_var[v].push(ci);
        }
    }
    for lists in &mut by_var {
        lists.dedup();
    }

    let mut colors = vec![0u32; nclasses];
    let mut nodes = 0u64;
    if !quad_dfs(0, &mut colors, &cons, &by_var, &mut nodes) {
        return Err(Error::CertificationFailed(
            "base tile mining found no seam-compatible solution".into(),
        ));
    }

    let tile = |idx: usize, name: &str| -> Tile {
        let (rows, cols) = slots.dims[idx];
        let cells = (0..rows)
            .map(|r| (0..cols).map(|c| colors[class_of_slot[slots.slot(idx, r, c)]]).collect())
            .collect();
        Tile {
            name: name.into(),
            rows,
            cols,
            row_topology: Topology::Wrap,
            col_topology: Topology::Wrap,
            cells,
            colors: 4,
        }
    };
    Ok(TileSet {
        t44: tile(T44, BASE_NAMES[0].0),
        t45: tile(T45, BASE_NAMES[1].0),
        t54: tile(T54, BASE_NAMES[2].0),
        t55: tile(T55, BASE_NAMES[3].0),
    })
}

const QUAD_NODE_LIMIT: u64 = 200_000_000;

fn quad_dfs(
    i: usize,
    colors: &mut [u32],
    cons: &[QuadConstraint],
    by_var: &[Vec<usize>],
    nodes: &mut u64,
) -> bool {
    if i == colors.len() {
        return true;
    }
    let max_used = colors[..i].iter().copied().max().unwrap_or(0);
    for c in 1..=(max_used + 1).min(4) {
        *nodes += 1;
        if *nodes > QUAD_NODE_LIMIT {
            return false;
        }
        colors[i] = c;
        if quad_ok_after(i, colors, cons, by_var)
            && quad_dfs(i + 1, colors, cons, by_var, nodes)
        {
            return true;
        }
        colors[i] = 0;
    }
    false
}

fn quad_ok_after(vi: usize, colors: &[u32], cons: &[QuadConstraint], by_var: &[Vec<usize>]) -> bool {
    for &ci in &by_var[vi] {
        let con = &cons[ci];
        let (ca, cb) = (colors[con.a], colors[con.b]);
        if ca != 0 && ca == cb {
            return false;
        }
        if con.all.iter().all(|&v| colors[v] != 0) {
            let mask = |vs: &[usize]| vs.iter().fold(0u32, |m, &v| m | 1 << colors[v]);
            if mask(&con.nu) == mask(&con.nv) {
                return false;
            }
        }
    }
    true
}

/// Maps a global index to (block index, local index) for a 1-D block plan.
fn block_index(plan: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(plan.iter().sum());
    for (bi, &size) in plan.iter().enumerate() {
        for local in 0..size {
            out.push((bi, local));
        }
    }
    out
}

/// Composes a certified 4-color lid coloring of the m x n twisted torus from
/// the base tiles, writing m and n as 4a+5b block plans (4-blocks first).
pub fn tile_compose(m: usize, n: usize, tiles: &TileSet) -> Result<Coloring> {
    if m.is_multiple_of(2) || n.is_multiple_of(2) || m < 12 || m > n {
        return Err(Error::param(format!(
            "tile composition needs odd 12 <= m <= n, got ({m}, {n})"
        )));
    }
    let rp = super::frobenius::frobenius_decompose(m, 4, 5)?;
    let cp = super::frobenius::frobenius_decompose(n, 4, 5)?;
    let mut row_plan = vec![4usize; rp.alpha];
    row_plan.extend(std::iter::repeat_n(5, rp.beta));
    let mut col_plan = vec![4usize; cp.alpha];
    col_plan.extend(std::iter::repeat_n(5, cp.beta));
    let rows = block_index(&row_plan);
    let cols = block_index(&col_plan);
    let mut grid = Vec::with_capacity(m * n);
    for &(bi, lr) in &rows {
        for &(bj, lc) in &cols {
            let tile = tiles.get(row_plan[bi], col_plan[bj])?;
            grid.push(tile.cells[lr][lc]);
        }
    }
    let coloring = Coloring::new(grid)?;
    let torus = grid_graph(m, n, ProductKind::Cartesian, true, true);
    let report = lid_report(&torus, &coloring)?;
    if !report.is_lid() || report.colors_used != 4 {
        return Err(Error::CertificationFailed(format!(
            "tile composition for ({m}, {n}) failed verification ({} improper, {} bad, {} colors)",
            report.improper_edges.len(),
            report.bad_edges.len(),
            report.colors_used
        )));
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cartesian_product;
    use crate::verify::is_lid;
    use std::sync::OnceLock;

    // Tests share one cache directory so mining runs once per process.
    fn tiles() -> &'static TileSet {
        static SET: OnceLock<(tempfile::TempDir, TileSet)> = OnceLock::new();
        let (_, set) = SET.get_or_init(|| {
            let dir = tempfile::tempdir().unwrap();
            let set = mine_base_tiles_in(dir.path()).unwrap();
            (dir, set)
        });
        set
    }

    #[test]
    fn grid_graphs_match_product_builders() {
        let torus = grid_graph(4, 7, ProductKind::Cartesian, true, true);
        let (want, _) = cartesian_product(&Graph::cycle(4), &Graph::cycle(7));
        assert_eq!(torus.edges(), want.edges());
        let cyl = grid_graph(5, 2, ProductKind::Cartesian, true, false);
        let (want, _) = cartesian_product(&Graph::cycle(5), &Graph::path(2));
        assert_eq!(cyl.edges(), want.edges());
        let tens = grid_graph(3, 4, ProductKind::Tensor, true, false);
        let (want, _) = crate::graph::tensor_product(&Graph::cycle(3), &Graph::path(4));
        assert_eq!(tens.edges(), want.edges());
    }

    #[test]
    fn mined_tiles_are_valid_and_seam_compatible() {
        let set = tiles();
        set.validate().unwrap();
        assert_eq!(set.t44.column(0), set.t45.column(0));
        assert_eq!(set.t44.column(3), set.t45.column(4));
        assert_eq!(set.t54.column(0), set.t55.column(0));
        assert_eq!(set.t54.column(1), set.t55.column(1));
        assert_eq!(set.t44.row(0), set.t54.row(0));
        assert_eq!(set.t44.row(1), set.t54.row(1));
        assert_eq!(set.t45.row(0), set.t55.row(0));
        assert_eq!(set.t45.row(1), set.t55.row(1));
    }

    #[test]
    fn composition_is_lid_on_small_twisted_tori() {
        let set = tiles();
        for (m, n) in [(13, 13), (13, 17)] {
            let coloring = tile_compose(m, n, set).unwrap();
            let (g, _) = cartesian_product(&Graph::cycle(m), &Graph::cycle(n));
            assert!(is_lid(&g, &coloring).unwrap());
            assert_eq!(coloring.colors_used(), 4);
        }
    }

    #[test]
    fn composition_rejects_out_of_domain_shapes() {
        let set = tiles();
        assert!(tile_compose(12, 13, set).is_err());
        assert!(tile_compose(13, 14, set).is_err());
        assert!(tile_compose(17, 13, set).is_err());
        assert!(tile_compose(11, 13, set).is_err());
    }

    #[test]
    fn tile_json_round_trip() {
        let set = tiles();
        let json = serde_json::to_string(&set.t45).unwrap();
        assert!(json.contains("\"row_topology\":\"wrap\""));
        let back: Tile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, set.t45);
        back.validate(ProductKind::Cartesian).unwrap();
    }

    #[test]
    fn validate_rejects_tampered_cells() {
        let mut t = tiles().t44.clone();
        t.cells[2][2] = t.cells[1][2];
        assert!(t.validate(ProductKind::Cartesian).is_err());
    }
}
