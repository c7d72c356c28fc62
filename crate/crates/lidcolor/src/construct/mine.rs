//! Periodic pattern mining: exact search for class-structured grid colorings
//! whose pumped extensions stay lid-valid across a whole size family.
//!
//! A pattern assigns one color per (row class, column class) pair. Row and
//! column class sequences carry an optional pump block; repeating the block
//! realizes every admissible size. The search runs on a doubly pumped
//! instance and accepts a solution only if a sweep over small pump counts
//! verifies the expanded colorings directly, which covers all larger sizes
//! because wider expansions only repeat window patterns the sweep already
//! contains.

use std::collections::BTreeSet;
use std::path::Path;

use super::cache;
use super::tile::{grid_graph, ProductKind, Tile, Topology};
use crate::closed_form::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{lid_report, Coloring};

/// A class layout along one axis: a base sequence of class ids plus an
/// optional pump block (position, length) whose repetition grows the axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ClassSeq {
    tag: String,
    base: Vec<usize>,
    pump: Option<(usize, usize)>,
}

impl ClassSeq {
    /// One fresh class per position; only size n is reachable.
    fn fixed(n: usize) -> Self {
        ClassSeq { tag: format!("f{n}"), base: (0..n).collect(), pump: None }
    }

    /// Alternating pair, even sizes >= 4.
    fn pair_even() -> Self {
        ClassSeq { tag: "pe".into(), base: vec![0, 1, 0, 1], pump: Some((0, 2)) }
    }

    /// Alternating pair with one odd closing class, odd sizes >= 5.
    fn pair_odd_open() -> Self {
        ClassSeq { tag: "po".into(), base: vec![0, 1, 0, 1, 0], pump: Some((0, 2)) }
    }

    /// Alternating pair with a three-class tail, odd sizes >= 7.
    fn pair_odd3() -> Self {
        ClassSeq { tag: "po3".into(), base: vec![0, 1, 0, 1, 0, 1, 2], pump: Some((0, 2)) }
    }

    /// Alternating pair with a five-class tail, odd sizes >= 7.
    fn pair_odd5() -> Self {
        ClassSeq { tag: "po5".into(), base: vec![0, 1, 0, 1, 2, 3, 4], pump: Some((0, 2)) }
    }

    fn expand(&self, t: usize) -> Vec<usize> {
        match self.pump {
            None => self.base.clone(),
            Some((pos, len)) => {
                let mut out = Vec::with_capacity(self.base.len() + t * len);
                out.extend_from_slice(&self.base[..pos + len]);
                for _ in 0..t {
                    out.extend_from_slice(&self.base[pos..pos + len]);
                }
                out.extend_from_slice(&self.base[pos + len..]);
                out
            }
        }
    }

    /// Pump count that reaches `size`, if the pattern can.
    fn t_for(&self, size: usize) -> Option<usize> {
        match self.pump {
            None => (size == self.base.len()).then_some(0),
            Some((_, len)) => {
                if size >= self.base.len() && (size - self.base.len()).is_multiple_of(len) {
                    Some((size - self.base.len()) / len)
                } else {
                    None
                }
            }
        }
    }

    fn class_count(&self) -> usize {
        self.base.iter().max().copied().unwrap_or(0) + 1
    }
}

/// A mining problem: class layouts on both axes, the product adjacency, the
/// axis topologies, and the exact color count.
#[derive(Debug, Clone)]
pub(crate) struct MineConfig {
    rows: ClassSeq,
    cols: ClassSeq,
    kind: ProductKind,
    row_wrap: bool,
    col_wrap: bool,
    k: u32,
}

impl MineConfig {
    /// Canonical cache name; identical mining problems share one tile.
    fn name(&self) -> String {
        let kind = match self.kind {
            ProductKind::Cartesian => "cart",
            ProductKind::Tensor => "tens",
        };
        let topo = |wrap: bool| if wrap { "w" } else { "o" };
        format!(
            "pattern-{kind}-{}{}-{}{}-k{}",
            self.rows.tag,
            topo(self.row_wrap),
            self.cols.tag,
            topo(self.col_wrap),
            self.k
        )
    }
}

/// Maps a family to its mining problem. Cycle-times-cycle specs must arrive
/// oriented: a 3-cycle or even cycle on the row axis.
pub(crate) fn mining_config(spec: &FamilySpec, k: u32) -> Result<MineConfig> {
    let bad = || {
        Error::param(format!(
            "no periodic pattern family covers {} with {k} colors",
            spec.name()
        ))
    };
    match *spec {
        FamilySpec::CartCyclePath { m, n } => {
            let rows = match m {
                3 => ClassSeq::fixed(3),
                5 => ClassSeq::fixed(5),
                m if m % 2 == 1 && m >= 7 => ClassSeq::pair_odd5(),
                _ => return Err(bad()),
            };
            let cols = match n {
                2 => ClassSeq::fixed(2),
                3 => ClassSeq::fixed(3),
                n if n % 2 == 0 && n >= 4 => ClassSeq::pair_even(),
                n if n >= 5 => ClassSeq::pair_odd_open(),
                _ => return Err(bad()),
            };
            if k != if m == 3 { 5 } else { 4 } {
                return Err(bad());
            }
            Ok(MineConfig { rows, cols, kind: ProductKind::Cartesian, row_wrap: true, col_wrap: false, k })
        }
        FamilySpec::CartCycleCycle { m, n } => {
            let (rows, cols) = if m == 3 {
                let cols = match n {
                    3 => ClassSeq::fixed(3),
                    5 => ClassSeq::fixed(5),
                    n if n % 2 == 0 && n >= 4 => ClassSeq::pair_even(),
                    n if n % 2 == 1 && n >= 7 => ClassSeq::pair_odd3(),
                    _ => return Err(bad()),
                };
                if k != 5 {
                    return Err(bad());
                }
                (ClassSeq::fixed(3), cols)
            } else if m % 2 == 0 && m >= 4 && n % 2 == 1 && n >= 5 {
                if k != 4 {
                    return Err(bad());
                }
                let cols = if n == 5 { ClassSeq::fixed(5) } else { ClassSeq::pair_odd5() };
                (ClassSeq::pair_even(), cols)
            } else if m % 2 == 1 && m >= 5 && n % 2 == 1 && n >= 5 {
                if k != 4 {
                    return Err(bad());
                }
                let side = |len: usize| if len == 5 { ClassSeq::fixed(5) } else { ClassSeq::pair_odd5() };
                (side(m), side(n))
            } else {
                return Err(bad());
            };
            Ok(MineConfig { rows, cols, kind: ProductKind::Cartesian, row_wrap: true, col_wrap: true, k })
        }
        FamilySpec::TensorCyclePath { m, n } => {
            if !(matches!(m, 3 | 5 | 7) && n % 2 == 0 && n >= 4 && k == 4) {
                return Err(bad());
            }
            Ok(MineConfig {
                rows: ClassSeq::fixed(m),
                cols: ClassSeq::pair_even(),
                kind: ProductKind::Tensor,
                row_wrap: true,
                col_wrap: false,
                k,
            })
        }
        _ => Err(bad()),
    }
}

/// One expanded instance: its graph and the class variable of each vertex.
struct SweepInstance {
    graph: Graph,
    vars: Vec<usize>,
}

fn make_instance(config: &MineConfig, tr: usize, tc: usize) -> SweepInstance {
    let rows = config.rows.expand(tr);
    let cols = config.cols.expand(tc);
    let nc = config.cols.class_count();
    let graph = grid_graph(rows.len(), cols.len(), config.kind, config.row_wrap, config.col_wrap);
    let mut vars = Vec::with_capacity(rows.len() * cols.len());
    for &a in &rows {
        for &b in &cols {
            vars.push(a * nc + b);
        }
    }
    SweepInstance { graph, vars }
}

/// All pump combinations checked directly; pumpless axes contribute only 0.
fn sweep_instances(config: &MineConfig) -> Vec<SweepInstance> {
    let ts = |pumped: bool| -> Vec<usize> {
        if pumped {
            (0..=3).collect()
        } else {
            vec![0]
        }
    };
    let mut out = Vec::new();
    for &tr in &ts(config.rows.pump.is_some()) {
        for &tc in &ts(config.cols.pump.is_some()) {
            out.push(make_instance(config, tr, tc));
        }
    }
    out
}

fn sweep_ok(colors: &[u32], sweeps: &[SweepInstance], k: u32) -> bool {
    sweeps.iter().all(|inst| {
        let flat: Vec<u32> = inst.vars.iter().map(|&v| colors[v]).collect();
        let coloring = match Coloring::new(flat) {
            Ok(c) => c,
            Err(_) => return false,
        };
        match lid_report(&inst.graph, &coloring) {
            Ok(r) => r.is_lid() && r.colors_used == k as usize,
            Err(_) => false,
        }
    })
}

/// Palette-distinctness constraint over class variables.
struct PalCons {
    nu: Vec<usize>,
    nv: Vec<usize>,
    all: Vec<usize>,
}

struct PatternCons {
    adj: Vec<(usize, usize)>,
    pal: Vec<PalCons>,
    adj_by_var: Vec<Vec<usize>>,
    pal_by_var: Vec<Vec<usize>>,
}

/// Builds class constraints from the doubly pumped instance: adjacent class
/// pairs must differ, and non-twin edges need distinct class palettes.
fn build_cons(config: &MineConfig, nvars: usize) -> PatternCons {
    let inst = make_instance(config, 2, 2);
    let g = &inst.graph;
    let mut adj = BTreeSet::new();
    let mut pal_keys = BTreeSet::new();
    for &(x, y) in g.edges().iter() {
        let (a, b) = (inst.vars[x], inst.vars[y]);
        adj.insert((a.min(b), a.max(b)));
        if g.closed_neighborhood(x) == g.closed_neighborhood(y) {
            continue;
        }
        let classes = |v: usize| -> Vec<usize> {
            let mut cl: Vec<usize> = g
                .closed_neighborhood(v)
                .iter()
                .map(|&w| inst.vars[w])
                .collect();
            cl.sort_unstable();
            cl.dedup();
            cl
        };
        let (nu, nv) = (classes(x), classes(y));
        let key = if nu <= nv { (nu, nv) } else { (nv, nu) };
        pal_keys.insert(key);
    }
    let adj: Vec<(usize, usize)> = adj.into_iter().collect();
    let pal: Vec<PalCons> = pal_keys
        .into_iter()
        .map(|(nu, nv)| {
            let mut all = nu.clone();
            all.extend_from_slice(&nv);
            all.sort_unstable();
            all.dedup();
            PalCons { nu, nv, all }
        })
        .collect();
    let mut adj_by_var = vec![Vec::new(); nvars];
    for (i, &(a, b)) in adj.iter().enumerate() {
        adj_by_var[a].push(i);
        if b != a {
            adj_by_var[b].push(i);
        }
    }
    let mut pal_by_var = vec![Vec::new(); nvars];
    for (i, con) in pal.iter().enumerate() {
        for &v in &con.all {
            pal_by_var[v].push(i);
        }
    }
    PatternCons { adj, pal, adj_by_var, pal_by_var }
}

fn pattern_ok_after(vi: usize, colors: &[u32], cons: &PatternCons) -> bool {
    for &ei in &cons.adj_by_var[vi] {
        let (a, b) = cons.adj[ei];
        if colors[a] != 0 && colors[a] == colors[b] {
            return false;
        }
    }
    for &ci in &cons.pal_by_var[vi] {
        let con = &cons.pal[ci];
        if con.all.iter().all(|&v| colors[v] != 0) {
            let mask = |vs: &[usize]| vs.iter().fold(0u32, |m, &v| m | 1 << colors[v]);
            if mask(&con.nu) == mask(&con.nv) {
                return false;
            }
        }
    }
    true
}

const PATTERN_NODE_LIMIT: u64 = 50_000_000;

fn pattern_dfs(
    i: usize,
    colors: &mut [u32],
    cons: &PatternCons,
    sweeps: &[SweepInstance],
    k: u32,
    nodes: &mut u64,
) -> bool {
    if i == colors.len() {
        // Constraint satisfaction is necessary but defined on one instance;
        // only the direct sweep certifies the whole family.
        return sweep_ok(colors, sweeps, k);
    }
    let max_used = colors[..i].iter().copied().max().unwrap_or(0);
    for c in 1..=(max_used + 1).min(k) {
        *nodes += 1;
        if *nodes > PATTERN_NODE_LIMIT {
            return false;
        }
        colors[i] = c;
        if pattern_ok_after(i, colors, cons) && pattern_dfs(i + 1, colors, cons, sweeps, k, nodes) {
            return true;
        }
        colors[i] = 0;
    }
    false
}

fn tile_from(config: &MineConfig, name: &str, colors: &[u32]) -> Tile {
    let rows0 = config.rows.expand(0);
    let cols0 = config.cols.expand(0);
    let nc = config.cols.class_count();
    let topo = |wrap: bool| if wrap { Topology::Wrap } else { Topology::Open };
    Tile {
        name: name.into(),
        rows: rows0.len(),
        cols: cols0.len(),
        row_topology: topo(config.row_wrap),
        col_topology: topo(config.col_wrap),
        cells: rows0
            .iter()
            .map(|&a| cols0.iter().map(|&b| colors[a * nc + b]).collect())
            .collect(),
        colors: config.k,
    }
}

/// Recovers the class color matrix from a tile, rejecting tiles whose cells
/// disagree within a class or whose frame does not match the config.
fn class_matrix(config: &MineConfig, tile: &Tile) -> Result<Vec<u32>> {
    let fail = |msg: String| Err(Error::CertificationFailed(format!("tile {}: {msg}", tile.name)));
    let rows0 = config.rows.expand(0);
    let cols0 = config.cols.expand(0);
    let topo = |wrap: bool| if wrap { Topology::Wrap } else { Topology::Open };
    if tile.rows != rows0.len()
        || tile.cols != cols0.len()
        || tile.cells.len() != tile.rows
        || tile.cells.iter().any(|r| r.len() != tile.cols)
        || tile.row_topology != topo(config.row_wrap)
        || tile.col_topology != topo(config.col_wrap)
        || tile.colors != config.k
    {
        return fail("frame does not match its pattern family".into());
    }
    let nc = config.cols.class_count();
    let mut matrix = vec![0u32; config.rows.class_count() * nc];
    for (r, &a) in rows0.iter().enumerate() {
        for (c, &b) in cols0.iter().enumerate() {
            let cell = tile.cells[r][c];
            if cell == 0 || cell > config.k {
                return fail(format!("cell colors outside 1..={}", config.k));
            }
            let slot = &mut matrix[a * nc + b];
            if *slot == 0 {
                *slot = cell;
            } else if *slot != cell {
                return fail("cells break the class structure".into());
            }
        }
    }
    Ok(matrix)
}

fn check_pattern_tile(config: &MineConfig, tile: &Tile) -> Result<()> {
    let matrix = class_matrix(config, tile)?;
    if !sweep_ok(&matrix, &sweep_instances(config), config.k) {
        return Err(Error::CertificationFailed(format!(
            "tile {}: an expanded instance is not lid with {} colors",
            tile.name, config.k
        )));
    }
    Ok(())
}

/// Finds (or loads) the periodic pattern tile for a family, verifying every
/// swept expansion before returning it. The tile's cells are the unpumped
/// base instance.
pub fn mine_periodic_pattern(spec: &FamilySpec, k: u32) -> Result<Tile> {
    mine_periodic_pattern_in(spec, k, &cache::cache_dir())
}

pub(crate) fn mine_periodic_pattern_in(spec: &FamilySpec, k: u32, dir: &Path) -> Result<Tile> {
    let config = mining_config(spec, k)?;
    let name = config.name();
    if let Some(tile) = cache::load_tile_from(dir, &name)? {
        check_pattern_tile(&config, &tile)
            .map_err(|e| Error::Cache(format!("stale tile cache: {e}")))?;
        return Ok(tile);
    }
    let nvars = config.rows.class_count() * config.cols.class_count();
    let cons = build_cons(&config, nvars);
    let sweeps = sweep_instances(&config);
    let mut colors = vec![0u32; nvars];
    let mut nodes = 0u64;
    if !pattern_dfs(0, &mut colors, &cons, &sweeps, config.k, &mut nodes) {
        let why = if nodes > PATTERN_NODE_LIMIT { "exceeded its node budget" } else { "found no solution" };
        return Err(Error::CertificationFailed(format!(
            "pattern mining for {name} {why}"
        )));
    }
    let tile = tile_from(&config, &name, &colors);
    check_pattern_tile(&config, &tile)?;
    cache::store_tile_in(dir, &tile)?;
    Ok(tile)
}

/// Renders the family's pattern at a concrete size as a flat row-major grid.
pub(crate) fn pattern_grid(spec: &FamilySpec, k: u32, dir: &Path) -> Result<Vec<u32>> {
    let (m, n) = match *spec {
        FamilySpec::CartCyclePath { m, n }
        | FamilySpec::CartCycleCycle { m, n }
        | FamilySpec::TensorCyclePath { m, n } => (m, n),
        _ => return Err(Error::param(format!("{} has no grid pattern", spec.name()))),
    };
    let config = mining_config(spec, k)?;
    let tile = mine_periodic_pattern_in(spec, k, dir)?;
    let matrix = class_matrix(&config, &tile)?;
    let reach = |seq: &ClassSeq, size: usize| {
        seq.t_for(size).ok_or_else(|| {
            Error::param(format!("size {size} is not reachable by pattern {}", tile.name))
        })
    };
    let rows = config.rows.expand(reach(&config.rows, m)?);
    let cols = config.cols.expand(reach(&config.cols, n)?);
    let nc = config.cols.class_count();
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for &a in &rows {
        for &b in &cols {
            out.push(matrix[a * nc + b]);
        }
    }
    Ok(out)
}
