//! Exhaustive small-graph enumeration and a canonical labelling for
//! deduplicating isomorphic copies.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::graph6::emit_graph6;

/// Largest order accepted by the enumerators.
pub const MAX_ENUM_N: usize = 8;

/// Largest order for which [`canonical_form`] searches relabellings; bigger
/// graphs keep their input labelling.
pub const MAX_CANON_N: usize = 10;

/// Every labelled connected simple graph on `n` vertices, each exactly once.
///
/// Candidate `mask` sets pair bit `k` in graph6 order (`(0,1), (0,2), (1,2),
/// (0,3), ...`); masks are visited in ascending order.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::TooLarge { n, cap: MAX_ENUM_N });
    }
    let pairs: Vec<(Vertex, Vertex)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok(ConnectedGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Iterator returned by [`enumerate_connected`].
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(Vertex, Vertex)>,
    next: u64,
    end: u64,
}

impl ConnectedGraphs {
    fn connected(&self, mask: u64) -> bool {
        let mut rows = [0u16; MAX_ENUM_N];
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        let full = (1u16 << self.n) - 1;
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if self.connected(mask) {
                let edges = self
                    .pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e);
                return Some(Graph::from_edges(self.n, edges).expect("valid pairs"));
            }
        }
        None
    }
}

/// Relabels `g` into a canonical representative of its isomorphism class.
///
/// Vertices are first split into colour classes by iterated degree
/// refinement; the result is the relabelling, among those that keep the
/// classes in order, whose graph6 bit string is lexicographically smallest.
/// Graphs above [`MAX_CANON_N`] vertices are returned unchanged.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n > MAX_CANON_N || n == 1 {
        return g.clone();
    }
    let colors = refine_colors(g);
    let mut search = CanonSearch {
        g,
        colors: &colors,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best_cols: vec![u64::MAX; n],
        best_order: Vec::new(),
        cur_cols: vec![0; n],
    };
    search.run();
    let mut perm = vec![0; n];
    for (new, &old) in search.best_order.iter().enumerate() {
        perm[old] = new;
    }
    g.permuted(&perm)
}

/// graph6 line of [`canonical_form`].
pub fn canonical_graph6(g: &Graph) -> String {
    emit_graph6(&canonical_form(g))
}

/// Stable colour refinement. Colour ids are ranks of isomorphism-invariant
/// signatures, so isomorphic graphs get matching colour classes.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut classes = rank(&colors.iter().map(|&c| vec![c]).collect::<Vec<_>>(), &mut colors);
    loop {
        let sigs: Vec<Vec<usize>> = g
            .vertices()
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                s.sort_unstable();
                s.insert(0, colors[v]);
                s
            })
            .collect();
        let mut next = vec![0; n];
        let count = rank(&sigs, &mut next);
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

fn rank(sigs: &[Vec<usize>], out: &mut [usize]) -> usize {
    let mut distinct: Vec<&Vec<usize>> = sigs.iter().collect();
    distinct.sort();
    distinct.dedup();
    for (v, s) in sigs.iter().enumerate() {
        out[v] = distinct.binary_search(&s).unwrap();
    }
    distinct.len()
}

struct CanonSearch<'a> {
    g: &'a Graph,
    colors: &'a [usize],
    order: Vec<Vertex>,
    used: Vec<bool>,
    best_cols: Vec<u64>,
    best_order: Vec<Vertex>,
    cur_cols: Vec<u64>,
}

impl CanonSearch<'_> {
    /// Assigns the next label. Column `j` of the bit string (pairs `(i, j)`,
    /// `i < j`) is fixed once label `j` is placed, so a prefix that already
    /// exceeds the incumbent's is cut.
    fn run(&mut self) {
        let n = self.g.n();
        let j = self.order.len();
        if j == n {
            if self.best_order.is_empty() || self.cur_cols < self.best_cols {
                self.best_cols.copy_from_slice(&self.cur_cols);
                self.best_order = self.order.clone();
            }
            return;
        }
        // smallest colour not yet exhausted
        let want = (0..n)
            .filter(|&v| !self.used[v])
            .map(|v| self.colors[v])
            .min()
            .unwrap();
        for v in 0..n {
            if self.used[v] || self.colors[v] != want {
                continue;
            }
            let mut col = 0u64;
            for &u in &self.order {
                col = (col << 1) | u64::from(self.g.has_edge(u, v));
            }
            self.cur_cols[j] = col;
            if !self.best_order.is_empty() && self.cur_cols[..=j] > self.best_cols[..=j] {
                continue;
            }
            self.order.push(v);
            self.used[v] = true;
            self.run();
            self.used[v] = false;
            self.order.pop();
        }
    }
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, sorted by graph6 string.
///
/// Built by adding a vertex in every possible way to each class on `n - 1`
/// vertices (connected or not) and deduplicating canonical forms.
pub fn connected_classes(n: usize) -> Result<Vec<Graph>> {
    Ok(all_classes(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// One canonical representative per isomorphism class of all graphs on `n`
/// vertices, sorted by graph6 string.
pub fn all_classes(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::TooLarge { n, cap: MAX_ENUM_N });
    }
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen: HashSet<String> = HashSet::new();
        let mut next = Vec::new();
        for base in &level {
            for mask in 0u32..(1 << (m - 1)) {
                let edges = base
                    .edges()
                    .chain((0..m - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, m - 1)));
                let g = canonical_form(&Graph::from_edges(m, edges).expect("valid"));
                if seen.insert(emit_graph6(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level.sort_by_cached_key(emit_graph6);
    Ok(level)
}
