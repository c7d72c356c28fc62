//! Exact backtracking search for proper and locally identifying colorings.
//!
//! Branching is deterministic: the lowest-index uncolored vertex is assigned
//! next, colors are tried in ascending order, and (absent caller constraints)
//! at most one brand-new color is tried per node. The lid condition on an edge
//! is enforced as soon as both closed neighborhoods are fully colored, which
//! never refutes a partial assignment that could still be completed.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{self, Coloring};

/// Tuning knobs for the exact search.
#[derive(Debug, Clone)]
pub struct SolverOptions {
    /// Hard cap on search decisions per call; exceeding it is an error, never
    /// an approximate answer.
    pub budget: u64,
    /// Worker threads for splitting the search frontier. Extra workers are
    /// used for refutations and, when `deterministic` is off, for satisfiable
    /// searches too.
    pub jobs: usize,
    /// Keep certificates independent of `jobs` by running every
    /// certificate-producing search on one thread.
    pub deterministic: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { budget: 1_000_000_000, jobs: 1, deterministic: true }
    }
}

/// Exact value with its witness.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub value: u32,
    /// Coloring using exactly `value` colors that passes verification.
    pub certificate: Coloring,
    /// True when the search exhaustively proved no `value - 1` coloring exists.
    pub exhausted_below: bool,
}

/// Search colors are bitmask-encoded, so at most 63 colors are searchable;
/// larger requests are satisfied by a rainbow coloring or rejected.
const MAX_SEARCH_COLORS: u32 = 63;

fn color_bit(c: u32) -> u64 {
    1u64 << c
}

fn full_mask(k: u32) -> u64 {
    ((1u64 << k) - 1) << 1
}

/// Why a search stopped early.
enum Stop {
    Budget,
    Cancelled,
}

/// Shared state for frontier-split workers.
struct SharedCtl {
    stop: AtomicBool,
    over_budget: AtomicBool,
    nodes: AtomicU64,
    budget: u64,
}

struct Search<'a> {
    g: &'a Graph,
    k: u32,
    check_lid: bool,
    symmetry: bool,
    colors: Vec<u32>,
    /// nbr_count[v][c]: colored neighbors of v carrying color c.
    nbr_count: Vec<Vec<u16>>,
    /// Bit c set iff some neighbor of v carries color c.
    nbr_mask: Vec<u64>,
    edge_ends: Vec<(usize, usize)>,
    /// Uncolored vertices of N[u] ∪ N[v] per non-twin edge.
    edge_uncolored: Vec<u32>,
    /// Edges whose union contains each vertex.
    vert_edges: Vec<Vec<u32>>,
    nodes: u64,
    flushed: u64,
    budget: u64,
    shared: Option<&'a SharedCtl>,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        k: u32,
        check_lid: bool,
        symmetry: bool,
        budget: u64,
        shared: Option<&'a SharedCtl>,
    ) -> Self {
        let n = g.num_vertices();
        let mut edge_ends = Vec::new();
        let mut edge_uncolored = Vec::new();
        let mut vert_edges = vec![Vec::new(); n];
        if check_lid {
            for (u, v) in g.edges() {
                let nu = g.closed_neighborhood(u);
                let nv = g.closed_neighborhood(v);
                if nu == nv {
                    continue; // twin edge: can never separate its endpoints
                }
                let mut union = nu;
                for w in nv {
                    if let Err(pos) = union.binary_search(&w) {
                        union.insert(pos, w);
                    }
                }
                let idx = edge_ends.len() as u32;
                for &w in &union {
                    vert_edges[w].push(idx);
                }
                edge_ends.push((u, v));
                edge_uncolored.push(union.len() as u32);
            }
        }
        Search {
            g,
            k,
            check_lid,
            symmetry,
            colors: vec![0; n],
            nbr_count: vec![vec![0; k as usize + 1]; n],
            nbr_mask: vec![0; n],
            edge_ends,
            edge_uncolored,
            vert_edges,
            nodes: 0,
            flushed: 0,
            budget,
            shared,
        }
    }

    fn set(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
        for i in 0..self.g.neighbors(v).len() {
            let w = self.g.neighbors(v)[i];
            self.nbr_count[w][c as usize] += 1;
            self.nbr_mask[w] |= color_bit(c);
        }
        for i in 0..self.vert_edges[v].len() {
            let e = self.vert_edges[v][i] as usize;
            self.edge_uncolored[e] -= 1;
        }
    }

    fn unset(&mut self, v: usize, c: u32) {
        self.colors[v] = 0;
        for i in 0..self.g.neighbors(v).len() {
            let w = self.g.neighbors(v)[i];
            self.nbr_count[w][c as usize] -= 1;
            if self.nbr_count[w][c as usize] == 0 {
                self.nbr_mask[w] &= !color_bit(c);
            }
        }
        for i in 0..self.vert_edges[v].len() {
            let e = self.vert_edges[v][i] as usize;
            self.edge_uncolored[e] += 1;
        }
    }

    /// Color set of the closed neighborhood of `v`; valid once fully colored.
    fn palette(&self, v: usize) -> u64 {
        self.nbr_mask[v] | color_bit(self.colors[v])
    }

    /// Checks run after `set(v, _)`: lid equality on newly completed edges and
    /// a forward check that every uncolored neighbor still has a free color.
    fn consistent_after(&self, v: usize) -> bool {
        if self.check_lid {
            for &e in &self.vert_edges[v] {
                let e = e as usize;
                if self.edge_uncolored[e] == 0 {
                    let (a, b) = self.edge_ends[e];
                    if self.palette(a) == self.palette(b) {
                        return false;
                    }
                }
            }
        }
        let full = full_mask(self.k);
        for &w in self.g.neighbors(v) {
            if self.colors[w] == 0 && self.nbr_mask[w] & full == full {
                return false;
            }
        }
        true
    }

    /// Counts one decision, enforcing the budget and cooperative cancellation.
    fn tick(&mut self) -> std::result::Result<(), Stop> {
        self.nodes += 1;
        if let Some(sh) = self.shared {
            if self.nodes - self.flushed >= 1024 {
                let delta = self.nodes - self.flushed;
                self.flushed = self.nodes;
                let total = sh.nodes.fetch_add(delta, Ordering::Relaxed) + delta;
                if total > sh.budget {
                    sh.over_budget.store(true, Ordering::Relaxed);
                    sh.stop.store(true, Ordering::Relaxed);
                }
                if sh.stop.load(Ordering::Relaxed) {
                    return Err(Stop::Cancelled);
                }
            }
        } else if self.nodes > self.budget {
            return Err(Stop::Budget);
        }
        Ok(())
    }

    fn next_uncolored(&self, from: usize) -> Option<usize> {
        (from..self.colors.len()).find(|&v| self.colors[v] == 0)
    }

    /// Exhaustive search from vertex index `from`; true iff a full coloring
    /// was reached (left in `self.colors`).
    fn dfs(&mut self, from: usize, max_used: u32) -> std::result::Result<bool, Stop> {
        let Some(v) = self.next_uncolored(from) else {
            return Ok(true);
        };
        let limit = if self.symmetry { self.k.min(max_used + 1) } else { self.k };
        for c in 1..=limit {
            if self.nbr_mask[v] & color_bit(c) != 0 {
                continue;
            }
            self.tick()?;
            self.set(v, c);
            if self.consistent_after(v) && self.dfs(v + 1, max_used.max(c))? {
                return Ok(true);
            }
            self.unset(v, c);
        }
        Ok(false)
    }

    /// Applies a partial assignment, running the same consistency checks the
    /// search would. False means the constraints are already contradictory.
    fn apply_constraints(&mut self, constraints: &[(usize, u32)]) -> bool {
        for &(v, c) in constraints {
            if self.colors[v] == c {
                continue;
            }
            if self.colors[v] != 0 || self.nbr_mask[v] & color_bit(c) != 0 {
                return false;
            }
            self.set(v, c);
            if !self.consistent_after(v) {
                return false;
            }
        }
        true
    }
}

enum SearchOutcome {
    Found(Vec<u32>),
    Exhausted,
}

/// Runs one complete search for a `k`-coloring (lid or plain proper) drawing
/// from a shared node pool. `jobs > 1` splits the frontier across threads.
fn run_search(
    g: &Graph,
    k: u32,
    constraints: &[(usize, u32)],
    check_lid: bool,
    pool: &mut u64,
    total_budget: u64,
    jobs: usize,
) -> Result<SearchOutcome> {
    let symmetry = constraints.is_empty();
    if jobs > 1 && constraints.is_empty() {
        return run_search_parallel(g, k, check_lid, pool, total_budget, jobs);
    }
    let mut s = Search::new(g, k, check_lid, symmetry, *pool, None);
    if !s.apply_constraints(constraints) {
        return Ok(SearchOutcome::Exhausted);
    }
    let max_used = constraints.iter().map(|&(_, c)| c).max().unwrap_or(0);
    let found = s.dfs(0, max_used);
    *pool = pool.saturating_sub(s.nodes);
    match found {
        Ok(true) => Ok(SearchOutcome::Found(s.colors)),
        Ok(false) => Ok(SearchOutcome::Exhausted),
        Err(Stop::Budget) => Err(Error::BudgetExhausted { budget: total_budget }),
        Err(Stop::Cancelled) => unreachable!("no cancellation without workers"),
    }
}

/// Frontier-split search: valid prefixes of the branching tree are enumerated
/// breadth-first, then completed in parallel. The SAT/UNSAT answer is
/// schedule-independent; the returned witness is whichever finished first.
fn run_search_parallel(
    g: &Graph,
    k: u32,
    check_lid: bool,
    pool: &mut u64,
    total_budget: u64,
    jobs: usize,
) -> Result<SearchOutcome> {
    let n = g.num_vertices();
    let target = jobs * 8;
    let mut seeds: Vec<(Vec<u32>, u32)> = vec![(Vec::new(), 0)];
    let mut probe = Search::new(g, k, check_lid, true, *pool, None);
    let mut depth = 0;
    // Widen the frontier one vertex at a time, replaying each prefix on the
    // probe so the checks see exactly the state the sequential search would.
    while depth < n && seeds.len() < target {
        let mut next = Vec::new();
        for (prefix, max_used) in &seeds {
            for (v, &c) in prefix.iter().enumerate() {
                probe.set(v, c);
            }
            let limit = k.min(max_used + 1);
            for c in 1..=limit {
                if probe.nbr_mask[depth] & color_bit(c) != 0 {
                    continue;
                }
                if matches!(probe.tick(), Err(Stop::Budget)) {
                    return Err(Error::BudgetExhausted { budget: total_budget });
                }
                probe.set(depth, c);
                if probe.consistent_after(depth) {
                    let mut ext = prefix.clone();
                    ext.push(c);
                    next.push((ext, (*max_used).max(c)));
                }
                probe.unset(depth, c);
            }
            for (v, &c) in prefix.iter().enumerate() {
                probe.unset(v, c);
            }
        }
        seeds = next;
        depth += 1;
        if seeds.is_empty() {
            *pool = pool.saturating_sub(probe.nodes);
            return Ok(SearchOutcome::Exhausted);
        }
    }
    let enum_nodes = probe.nodes;
    drop(probe);
    if depth == n {
        // The frontier reached full assignments; any seed is a solution.
        *pool = pool.saturating_sub(enum_nodes);
        return Ok(SearchOutcome::Found(seeds[0].0.clone()));
    }

    let shared = SharedCtl {
        stop: AtomicBool::new(false),
        over_budget: AtomicBool::new(false),
        nodes: AtomicU64::new(enum_nodes),
        budget: *pool,
    };
    let next_seed = AtomicUsize::new(0);
    let witness = std::sync::Mutex::new(None::<Vec<u32>>);
    let workers = jobs.min(seeds.len());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let mut s = Search::new(g, k, check_lid, true, u64::MAX, Some(&shared));
                loop {
                    if shared.stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let idx = next_seed.fetch_add(1, Ordering::Relaxed);
                    let Some((prefix, max_used)) = seeds.get(idx) else {
                        break;
                    };
                    for (v, &c) in prefix.iter().enumerate() {
                        s.set(v, c);
                    }
                    // After Ok(true) or a cancellation the search state still
                    // carries interior assignments; both set the stop flag, so
                    // the stale state is never reused.
                    match s.dfs(depth, *max_used) {
                        Ok(true) => {
                            *witness.lock().unwrap() = Some(s.colors.clone());
                            shared.stop.store(true, Ordering::Relaxed);
                        }
                        Ok(false) | Err(Stop::Cancelled) => {}
                        Err(Stop::Budget) => unreachable!("workers use the shared budget"),
                    }
                    for (v, &c) in prefix.iter().enumerate() {
                        s.unset(v, c);
                    }
                }
                let delta = s.nodes - s.flushed;
                shared.nodes.fetch_add(delta, Ordering::Relaxed);
            });
        }
    });
    *pool = pool.saturating_sub(shared.nodes.load(Ordering::Relaxed));
    if let Some(colors) = witness.into_inner().unwrap() {
        return Ok(SearchOutcome::Found(colors));
    }
    if shared.over_budget.load(Ordering::Relaxed) {
        return Err(Error::BudgetExhausted { budget: total_budget });
    }
    Ok(SearchOutcome::Exhausted)
}

fn validate_constraints(g: &Graph, k: u32, constraints: &[(usize, u32)]) -> Result<bool> {
    let mut assigned: Vec<u32> = vec![0; g.num_vertices()];
    for &(v, c) in constraints {
        if v >= g.num_vertices() {
            return Err(Error::param(format!("constraint on vertex {v} out of range")));
        }
        if c == 0 || c > k {
            return Err(Error::param(format!(
                "constraint color {c} outside 1..={k} on vertex {v}"
            )));
        }
        if assigned[v] != 0 && assigned[v] != c {
            return Ok(false); // contradictory, not an error
        }
        assigned[v] = c;
    }
    Ok(true)
}

/// Rainbow colorings are always locally identifying: distinct vertices get
/// distinct colors, so distinct closed neighborhoods get distinct color sets.
fn rainbow(n: usize) -> Vec<u32> {
    (1..=n as u32).collect()
}

/// Searches for a lid-coloring of `G` with at most `k` colors extending the
/// partial assignment `constraints`, under default options.
pub fn find_lid_coloring(
    g: &Graph,
    k: u32,
    constraints: &[(usize, u32)],
) -> Result<Option<Coloring>> {
    find_lid_coloring_with(g, k, constraints, &SolverOptions::default())
}

/// [`find_lid_coloring`] with explicit options. Contradictory constraints
/// yield `None`, never an error. Deterministic for fixed inputs whenever
/// `opts.deterministic` holds.
pub fn find_lid_coloring_with(
    g: &Graph,
    k: u32,
    constraints: &[(usize, u32)],
    opts: &SolverOptions,
) -> Result<Option<Coloring>> {
    if k == 0 {
        return Err(Error::param("k must be positive"));
    }
    if !validate_constraints(g, k, constraints)? {
        return Ok(None);
    }
    if constraints.is_empty() && k >= g.num_vertices() as u32 {
        return certified(g, rainbow(g.num_vertices()));
    }
    if k > MAX_SEARCH_COLORS {
        return Err(Error::param(format!(
            "searching with more than {MAX_SEARCH_COLORS} colors is unsupported"
        )));
    }
    let jobs = effective_jobs(opts, true);
    let mut pool = opts.budget;
    match run_search(g, k, constraints, true, &mut pool, opts.budget, jobs)? {
        SearchOutcome::Found(colors) => certified(g, colors),
        SearchOutcome::Exhausted => Ok(None),
    }
}

/// Certificate-producing searches run single-threaded in deterministic mode.
fn effective_jobs(opts: &SolverOptions, wants_certificate: bool) -> usize {
    if wants_certificate && opts.deterministic {
        1
    } else {
        opts.jobs.max(1)
    }
}

fn certified(g: &Graph, colors: Vec<u32>) -> Result<Option<Coloring>> {
    let coloring = Coloring::new(colors)?;
    let report = verify::lid_report(g, &coloring)?;
    if !report.is_lid() {
        return Err(Error::CertificationFailed(
            "search produced a non-lid coloring".into(),
        ));
    }
    Ok(Some(coloring))
}

/// Exact lid-chromatic number with certificate, under default options.
pub fn chi_lid_exact(g: &Graph) -> Result<SolveResult> {
    chi_lid_exact_with(g, &SolverOptions::default())
}

/// Exact chromatic number with certificate, under default options.
pub fn chi_exact(g: &Graph) -> Result<SolveResult> {
    chi_exact_with(g, &SolverOptions::default())
}

/// [`chi_lid_exact`] with explicit options.
pub fn chi_lid_exact_with(g: &Graph, opts: &SolverOptions) -> Result<SolveResult> {
    exact_by_components(g, opts, true)
}

/// [`chi_exact`] with explicit options.
pub fn chi_exact_with(g: &Graph, opts: &SolverOptions) -> Result<SolveResult> {
    exact_by_components(g, opts, false)
}

/// Per-component ascending-k search; the overall value is the component
/// maximum and color names are reused across components.
fn exact_by_components(g: &Graph, opts: &SolverOptions, lid: bool) -> Result<SolveResult> {
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::param("empty graph has no chromatic value"));
    }
    let mut pool = opts.budget;
    let mut value = 0u32;
    let mut assembled = vec![0u32; n];
    for comp in g.connected_components() {
        let sub = g.induced(&comp);
        let colors = component_optimum(&sub, opts, lid, &mut pool)?;
        value = value.max(colors.iter().copied().max().unwrap_or(1));
        for (i, &v) in comp.iter().enumerate() {
            assembled[v] = colors[i];
        }
    }
    let certificate = Coloring::new(assembled)?;
    let report = verify::lid_report(g, &certificate)?;
    let sound = if lid { report.is_lid() } else { report.proper };
    if !sound || certificate.max_color() != value {
        return Err(Error::CertificationFailed(format!(
            "exact search assembled an invalid certificate for value {value}"
        )));
    }
    Ok(SolveResult { value, certificate, exhausted_below: true })
}

/// Minimum-k coloring of one connected component; colors come out as 1..=k.
fn component_optimum(
    sub: &Graph,
    opts: &SolverOptions,
    lid: bool,
    pool: &mut u64,
) -> Result<Vec<u32>> {
    let n = sub.num_vertices() as u32;
    for k in 1..=n {
        if k == n {
            // A rainbow coloring always works, for lid as well as proper.
            return Ok(rainbow(n as usize));
        }
        let jobs = effective_jobs(opts, false);
        match run_search(sub, k, &[], lid, pool, opts.budget, jobs)? {
            SearchOutcome::Exhausted => continue,
            SearchOutcome::Found(_) if opts.deterministic && jobs > 1 => {
                // Redo the satisfiable level single-threaded so the witness
                // does not depend on scheduling.
                match run_search(sub, k, &[], lid, pool, opts.budget, 1)? {
                    SearchOutcome::Found(colors) => return Ok(colors),
                    SearchOutcome::Exhausted => unreachable!("level was satisfiable"),
                }
            }
            SearchOutcome::Found(colors) => return Ok(colors),
        }
    }
    unreachable!("rainbow level is always satisfiable")
}

/// Exhaustively proves that no lid-coloring with at most `k` colors exists,
/// under default options.
pub fn certify_no_lid_coloring(g: &Graph, k: u32) -> Result<bool> {
    certify_no_lid_coloring_with(g, k, &SolverOptions::default())
}

/// [`certify_no_lid_coloring`] with explicit options. The answer is
/// schedule-independent, so refutations always use all configured workers.
pub fn certify_no_lid_coloring_with(g: &Graph, k: u32, opts: &SolverOptions) -> Result<bool> {
    if k == 0 {
        return Err(Error::param("k must be positive"));
    }
    if g.num_vertices() == 0 {
        return Err(Error::param("empty graph"));
    }
    if k >= g.num_vertices() as u32 {
        return Ok(false); // rainbow coloring exists
    }
    let mut pool = opts.budget;
    for comp in g.connected_components() {
        let sub = g.induced(&comp);
        if (sub.num_vertices() as u32) <= k {
            continue;
        }
        let jobs = opts.jobs.max(1);
        match run_search(&sub, k, &[], true, &mut pool, opts.budget, jobs)? {
            SearchOutcome::Exhausted => return Ok(true),
            SearchOutcome::Found(_) => {}
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, tensor_product};

    #[test]
    fn two_vertex_path() {
        let g = Graph::path(2);
        let f = find_lid_coloring(&g, 2, &[]).unwrap().unwrap();
        assert_eq!(f.colors(), &[1, 2]);
        assert!(!certify_no_lid_coloring(&g, 2).unwrap());
    }

    #[test]
    fn cycle_values() {
        assert_eq!(chi_lid_exact(&Graph::cycle(8)).unwrap().value, 3);
        assert!(find_lid_coloring(&Graph::cycle(8), 3, &[]).unwrap().is_some());
        assert!(find_lid_coloring(&Graph::cycle(5), 4, &[]).unwrap().is_none());
        assert_eq!(chi_lid_exact(&Graph::cycle(5)).unwrap().value, 5);
        assert!(certify_no_lid_coloring(&Graph::cycle(4), 2).unwrap());
    }

    #[test]
    fn path_value_with_exhaustion() {
        let res = chi_lid_exact(&Graph::path(4)).unwrap();
        assert_eq!(res.value, 4);
        assert!(res.exhausted_below);
        assert!(verify::is_lid(&Graph::path(4), &res.certificate).unwrap());
    }

    #[test]
    fn plain_chromatic_numbers() {
        assert_eq!(chi_exact(&Graph::cycle(5)).unwrap().value, 3);
        assert_eq!(chi_exact(&Graph::cycle(6)).unwrap().value, 2);
        let (p, _) = cartesian_product(&Graph::cycle(3), &Graph::cycle(5));
        assert_eq!(chi_exact(&p).unwrap().value, 3);
    }

    #[test]
    fn constraints_are_honored_or_contradicted() {
        let g = Graph::path(4);
        let f = find_lid_coloring(&g, 4, &[(0, 2), (3, 4)]).unwrap().unwrap();
        assert_eq!(f.color(0), 2);
        assert_eq!(f.color(3), 4);
        // Equal end colors force equal interior palettes, so no extension
        // exists; unsatisfiable, not an error.
        assert!(find_lid_coloring(&g, 4, &[(0, 2), (3, 2)]).unwrap().is_none());
        // Same vertex, two colors: contradictory, absent but not an error.
        assert!(find_lid_coloring(&g, 4, &[(0, 1), (0, 2)]).unwrap().is_none());
        // Adjacent equal colors can never extend to a proper coloring.
        assert!(find_lid_coloring(&g, 4, &[(0, 1), (1, 1)]).unwrap().is_none());
        // Out-of-range pieces are parameter errors.
        assert!(find_lid_coloring(&g, 3, &[(0, 4)]).is_err());
        assert!(find_lid_coloring(&g, 3, &[(9, 1)]).is_err());
    }

    #[test]
    fn budget_is_a_hard_error() {
        let (p, _) = cartesian_product(&Graph::cycle(5), &Graph::cycle(5));
        let opts = SolverOptions { budget: 50, ..Default::default() };
        match chi_lid_exact_with(&p, &opts) {
            Err(Error::BudgetExhausted { budget: 50 }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn disconnected_graphs_take_component_max() {
        // P2 plus C5: values 2 and 5.
        let mut g = Graph::new(7);
        g.add_edge(0, 1);
        for i in 2..7 {
            g.add_edge(i, if i == 6 { 2 } else { i + 1 });
        }
        let res = chi_lid_exact(&g).unwrap();
        assert_eq!(res.value, 5);
        assert!(verify::is_lid(&g, &res.certificate).unwrap());
    }

    #[test]
    fn deterministic_certificates() {
        let g = Graph::cycle(9);
        let a = chi_lid_exact(&g).unwrap();
        let b = chi_lid_exact(&g).unwrap();
        assert_eq!(a.certificate, b.certificate);
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        let (p, _) = tensor_product(&Graph::cycle(3), &Graph::cycle(5));
        let par = SolverOptions { jobs: 4, ..Default::default() };
        assert!(certify_no_lid_coloring_with(&p, 4, &par).unwrap());
        assert!(certify_no_lid_coloring(&p, 4).unwrap());
        let res = chi_lid_exact_with(&p, &par).unwrap();
        assert_eq!(res.value, 5);
        // Deterministic mode: certificate matches the single-threaded one.
        assert_eq!(res.certificate, chi_lid_exact(&p).unwrap().certificate);
    }

    #[test]
    fn rainbow_shortcut_is_lid() {
        let g = Graph::cycle(5);
        let f = find_lid_coloring(&g, 64, &[]).unwrap().unwrap();
        assert_eq!(f.colors_used(), 5);
    }
}
