//! One-dimensional window sequences: the engine behind path and cycle
//! colorings and behind factor-uniform product colorings.
//!
//! A sequence `h[0..n)` over colors `1..=k` is window-valid when consecutive
//! entries differ (including the wrap pair on cycles) and the closed windows
//! `W(i) = {h[i-1], h[i], h[i+1]}` (clipped at path ends, wrapped on cycles)
//! differ across every edge `(i, i+1)`. In non-strict mode the edges whose
//! endpoints have equal closed neighborhoods (path n = 2, cycle n = 3) skip
//! the window check; that matches the lid condition on P_n / C_n exactly.
//! Strict mode is what factor-uniform liftings of product graphs need, since
//! products of that size have no twin edges.

use crate::error::{Error, Result};

/// Upper limit on k: window states are packed as base-(k+1) triples and the
/// search memoizes per (position, state), so large palettes are rejected.
const MAX_SEQ_COLORS: u32 = 8;

/// Finds the lexicographically least window-valid sequence of length `n` over
/// colors `1..=k`, or `None` when no such sequence exists.
pub fn lid_sequence(n: usize, k: u32, cyclic: bool, strict: bool) -> Result<Option<Vec<u32>>> {
    if k == 0 || k > MAX_SEQ_COLORS {
        return Err(Error::param(format!(
            "sequence search supports 1 <= k <= {MAX_SEQ_COLORS}, got {k}"
        )));
    }
    if cyclic && n < 3 {
        return Err(Error::param(format!("cyclic sequence needs n >= 3, got {n}")));
    }
    if n == 0 {
        return Err(Error::param("sequence needs n >= 1"));
    }
    Ok(if cyclic {
        cycle_sequence(n, k, strict)
    } else {
        path_sequence(n, k, strict)
    })
}

/// Checks the window condition on an explicit sequence. Used by tests and by
/// cache revalidation; mirrors `lid_sequence`'s notion of validity.
pub fn sequence_is_valid(h: &[u32], cyclic: bool, strict: bool) -> bool {
    let n = h.len();
    if n == 0 || h.contains(&0) {
        return false;
    }
    if n == 1 {
        return !cyclic;
    }
    let window = |i: usize| -> Window {
        let mut w = Window::new(h[i]);
        if cyclic {
            w.add(h[(i + n - 1) % n]);
            w.add(h[(i + 1) % n]);
        } else {
            if i > 0 {
                w.add(h[i - 1]);
            }
            if i + 1 < n {
                w.add(h[i + 1]);
            }
        }
        w
    };
    let twins = if cyclic { n == 3 } else { n == 2 };
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    if cyclic {
        edges.push((n - 1, 0));
    }
    edges.iter().all(|&(u, v)| {
        h[u] != h[v] && (twins && !strict || window(u) != window(v))
    })
}

/// A small color set; colors fit in u64 bit positions because k <= 8.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Window(u64);

impl Window {
    fn new(c: u32) -> Self {
        Window(1 << c)
    }
    fn add(&mut self, c: u32) {
        self.0 |= 1 << c;
    }
    fn of3(a: u32, b: u32, c: u32) -> Self {
        Window((1 << a) | (1 << b) | (1 << c))
    }
}

/// Failed-state memo: one bit per (position, packed last-three-colors state).
struct Memo {
    bits: Vec<u64>,
    stride: usize,
}

impl Memo {
    fn new(n: usize, k: u32) -> Self {
        let states = ((k as usize) + 1).pow(3);
        Memo { bits: vec![0; (n * states).div_ceil(64)], stride: states }
    }
    fn clear(&mut self) {
        self.bits.fill(0);
    }
    fn index(&self, pos: usize, state: usize) -> usize {
        pos * self.stride + state
    }
    fn seen(&self, pos: usize, state: usize) -> bool {
        let i = self.index(pos, state);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }
    fn mark(&mut self, pos: usize, state: usize) {
        let i = self.index(pos, state);
        self.bits[i / 64] |= 1 << (i % 64);
    }
}

fn pack(k: u32, a: u32, b: u32, c: u32) -> usize {
    let base = (k + 1) as usize;
    ((a as usize * base) + b as usize) * base + c as usize
}

fn path_sequence(n: usize, k: u32, strict: bool) -> Option<Vec<u32>> {
    if n == 1 {
        return Some(vec![1]);
    }
    if n == 2 {
        // The only edge is a twin edge; its windows are always equal.
        return if strict || k < 2 { None } else { Some(vec![1, 2]) };
    }
    let mut h = vec![0u32; n];
    let mut memo = Memo::new(n + 1, k);
    // Places h[j]; entering position j with the last three colors as state.
    // Placing h[j] checks: properness with h[j-1]; the edge (0,1) at j = 2
    // (windows {h0,h1} vs {h0,h1,h2}); interior edges (j-2, j-1) at j >= 3.
    // After the last placement the final edge (n-2, n-1) compares a
    // 3-window against the 2-window at the end.
    fn dfs(h: &mut [u32], j: usize, k: u32, memo: &mut Memo) -> bool {
        let n = h.len();
        if j == n {
            return h[n - 3] != h[n - 1];
        }
        let s = packed_state(h, j, k);
        if memo.seen(j, s) {
            return false;
        }
        for c in 1..=k {
            if j > 0 && c == h[j - 1] {
                continue;
            }
            if j == 2 && c == h[0] {
                // Edge (0,1): W(0) = {h0,h1} equals W(1) = {h0,h1,h2} iff
                // h2 lands inside {h0,h1}; h2 = h1 is already improper.
                continue;
            }
            if j >= 3 {
                let w_prev = Window::of3(h[j - 3], h[j - 2], h[j - 1]);
                let w_cur = Window::of3(h[j - 2], h[j - 1], c);
                if w_prev == w_cur {
                    continue;
                }
            }
            h[j] = c;
            if dfs(h, j + 1, k, memo) {
                return true;
            }
            h[j] = 0;
        }
        memo.mark(j, s);
        false
    }
    if dfs(&mut h, 0, k, &mut memo) {
        Some(h)
    } else {
        None
    }
}

/// The memo state entering position j: the last three placed colors, with
/// zeros standing in for out-of-range positions.
fn packed_state(h: &[u32], j: usize, k: u32) -> usize {
    let get = |i: isize| if i >= 0 { h[i as usize] } else { 0 };
    pack(k, get(j as isize - 3), get(j as isize - 2), get(j as isize - 1))
}

fn cycle_sequence(n: usize, k: u32, strict: bool) -> Option<Vec<u32>> {
    if n == 3 {
        // Every window is the full color triple, so strict mode is
        // unsatisfiable; otherwise all three edges are twins.
        return if strict || k < 3 { None } else { Some(vec![1, 2, 3]) };
    }
    let mut h = vec![0u32; n];
    let mut memo = Memo::new(n + 1, k);
    // Symmetry: rotating a valid cyclic sequence keeps it valid, and any
    // sequence can be rotated so position 0 holds color 1.
    let mut prefixes: Vec<[u32; 3]> = Vec::new();
    for b in 1..=k {
        for c in 1..=k {
            if b != 1 && c != b {
                prefixes.push([1, b, c]);
            }
        }
    }
    for [a, b, c] in prefixes {
        h[0] = a;
        h[1] = b;
        h[2] = c;
        memo.clear();
        if dfs_cycle(&mut h, 3, k, &mut memo) {
            return Some(h);
        }
    }
    h.fill(0);
    None
}

/// Extends h[3..n) for a fixed (h0, h1, h2); placing h[j] checks properness
/// and the interior edge (j-2, j-1). At the leaf the three wrap edges
/// (n-2, n-1), (n-1, 0) and (0, 1) close the cycle.
fn dfs_cycle(h: &mut [u32], j: usize, k: u32, memo: &mut Memo) -> bool {
    let n = h.len();
    if j == n {
        let w = |i: usize| Window::of3(h[(i + n - 1) % n], h[i], h[(i + 1) % n]);
        return h[n - 1] != h[0]
            && w(n - 2) != w(n - 1)
            && w(n - 1) != w(0)
            && w(0) != w(1);
    }
    let s = packed_state(h, j, k);
    if memo.seen(j, s) {
        return false;
    }
    for c in 1..=k {
        if c == h[j - 1] {
            continue;
        }
        let w_prev = Window::of3(h[j - 3], h[j - 2], h[j - 1]);
        let w_cur = Window::of3(h[j - 2], h[j - 1], c);
        if w_prev == w_cur {
            continue;
        }
        h[j] = c;
        if dfs_cycle(h, j + 1, k, memo) {
            return true;
        }
        h[j] = 0;
    }
    memo.mark(j, s);
    false
}
