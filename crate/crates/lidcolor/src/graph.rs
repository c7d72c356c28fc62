//! Simple undirected graphs as sorted adjacency lists, path/cycle generators,
//! and Cartesian/tensor products with their grid labelings.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted, so neighbor iteration is ordered and edge
/// lookup is a binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Creates a graph with `n` vertices and no edges.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Adds the undirected edge `{u, v}`. Idempotent for existing edges.
    ///
    /// Panics if `u == v` or either endpoint is out of range; callers that
    /// handle untrusted input should use [`Graph::from_edges`].
    pub fn add_edge(&mut self, u: usize, v: usize) {
        let n = self.adj.len();
        assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} vertices");
        assert_ne!(u, v, "self-loop at vertex {u}");
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
    }

    /// Builds a graph from an edge list, validating every endpoint.
    ///
    /// Edges may be given in either orientation; self-loops, out-of-range
    /// endpoints, and duplicates are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::param(format!("duplicate edge ({u}, {v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Path on `n` vertices, edges `{i, i+1}`. Panics if `n == 0`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "path needs at least one vertex");
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Cycle on `n` vertices, edges `{i, i+1 mod n}`. Panics if `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Neighbors of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for u in 0..self.adj.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The closed neighborhood `N[u] = {u} ∪ N(u)`, sorted.
    pub fn closed_neighborhood(&self, u: usize) -> Vec<usize> {
        let mut nb = self.adj[u].clone();
        let pos = nb.binary_search(&u).unwrap_err();
        nb.insert(pos, u);
        nb
    }

    /// Connected components; each component is sorted and the components are
    /// ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced by `vertices` (must be sorted and duplicate-free);
    /// vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &self.adj[u] {
                if let Ok(j) = vertices.binary_search(&v) {
                    if i < j {
                        g.add_edge(i, j);
                    }
                }
            }
        }
        g
    }

    /// True if some three vertices are pairwise adjacent.
    pub fn has_triangle(&self) -> bool {
        for u in 0..self.adj.len() {
            for &v in &self.adj[u] {
                if v <= u {
                    continue;
                }
                // Intersect the sorted neighbor lists of u and v.
                let (mut i, mut j) = (0, 0);
                let (a, b) = (&self.adj[u], &self.adj[v]);
                while i < a.len() && j < b.len() {
                    match a[i].cmp(&b[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => return true,
                    }
                }
            }
        }
        false
    }

    /// Bipartiteness test with an explicit witness either way.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let n = self.adj.len();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        parent[v] = u;
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return Bipartiteness::OddClosedWalk(odd_walk(&parent, u, v));
                    }
                }
            }
        }
        Bipartiteness::Bipartite(side)
    }
}

/// Outcome of [`Graph::is_bipartite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// A 2-coloring: `sides[v]` is 0 or 1 and differs across every edge.
    Bipartite(Vec<u8>),
    /// A closed walk of odd length: consecutive vertices are adjacent and the
    /// first vertex equals the last.
    OddClosedWalk(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }
}

/// Closed odd walk through the conflict edge `{u, v}` of a BFS tree.
fn odd_walk(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let (mut pu, mut pv) = (ancestors(u), ancestors(v));
    // Drop the common tail above the lowest common ancestor, keeping the LCA
    // itself on one side.
    while pu.len() >= 2 && pv.len() >= 2 && pu[pu.len() - 2] == pv[pv.len() - 2] {
        pu.pop();
        pv.pop();
    }
    let mut walk = pu;
    walk.extend(pv.iter().rev().skip(1));
    walk.push(walk[0]);
    walk
}

/// Base family selector for [`family_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseFamily {
    Path,
    Cycle,
}

/// Builds a path `P_n` (n ≥ 1) or cycle `C_n` (n ≥ 3) with validated `n`.
pub fn family_graph(kind: BaseFamily, n: usize) -> Result<Graph> {
    match kind {
        BaseFamily::Path if n >= 1 => Ok(Graph::path(n)),
        BaseFamily::Path => Err(Error::param("path needs n >= 1")),
        BaseFamily::Cycle if n >= 3 => Ok(Graph::cycle(n)),
        BaseFamily::Cycle => Err(Error::param(format!("cycle needs n >= 3, got {n}"))),
    }
}

/// Maps product vertices `(u, v)` to flat ids `u * cols + v` and back.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductLabeling {
    pub rows: usize,
    pub cols: usize,
}

impl ProductLabeling {
    pub fn flat(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.rows && v < self.cols);
        u * self.cols + v
    }

    pub fn pair(&self, id: usize) -> (usize, usize) {
        debug_assert!(id < self.num_vertices());
        (id / self.cols, id % self.cols)
    }

    pub fn num_vertices(&self) -> usize {
        self.rows * self.cols
    }
}

/// Cartesian product `G □ H`: `(u, v) ~ (u', v')` iff one coordinate is equal
/// and the other is adjacent.
pub fn cartesian_product(g: &Graph, h: &Graph) -> (Graph, ProductLabeling) {
    let lab = ProductLabeling { rows: g.num_vertices(), cols: h.num_vertices() };
    let mut p = Graph::new(lab.num_vertices());
    for u in 0..lab.rows {
        for v in 0..lab.cols {
            let a = lab.flat(u, v);
            for &v2 in h.neighbors(v) {
                if v2 > v {
                    p.add_edge(a, lab.flat(u, v2));
                }
            }
            for &u2 in g.neighbors(u) {
                if u2 > u {
                    p.add_edge(a, lab.flat(u2, v));
                }
            }
        }
    }
    (p, lab)
}

/// Tensor product `G × H`: `(u, v) ~ (u', v')` iff both coordinates are
/// adjacent.
pub fn tensor_product(g: &Graph, h: &Graph) -> (Graph, ProductLabeling) {
    let lab = ProductLabeling { rows: g.num_vertices(), cols: h.num_vertices() };
    let mut p = Graph::new(lab.num_vertices());
    for u in 0..lab.rows {
        for &u2 in g.neighbors(u) {
            if u2 <= u {
                continue;
            }
            for v in 0..lab.cols {
                for &v2 in h.neighbors(v) {
                    p.add_edge(lab.flat(u, v), lab.flat(u2, v2));
                }
            }
        }
    }
    (p, lab)
}

/// JSON shape: `{"n": usize, "edges": [[u, v], ...]}` with `u < v` and edges
/// sorted lexicographically, so serialization is canonical.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        Repr { n: self.num_vertices(), edges: self.edges() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let repr = Repr::deserialize(deserializer)?;
        Graph::from_edges(repr.n, &repr.edges).map_err(D::Error::custom)
    }
}
