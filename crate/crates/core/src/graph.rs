//! Simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A simple undirected graph.
///
/// Adjacency is kept twice: as bit rows (`u64` words, one row per vertex) for
/// constant-time membership tests, and as sorted neighbour lists for
/// iteration. Both are fixed at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    nbrs: Vec<Vec<Vertex>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n == 0`; a graph always has at least one vertex.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "a graph needs at least one vertex");
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            nbrs: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Inserts `uv`; a repeated edge is a no-op.
    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.has_edge(u, v) {
            return;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        let pos = self.nbrs[u].partition_point(|&w| w < v);
        self.nbrs[u].insert(pos, v);
        let pos = self.nbrs[v].partition_point(|&w| w < u);
        self.nbrs[v].insert(pos, u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// `true` if `u` lies in the closed neighbourhood of `v`.
    #[inline]
    pub fn dominates(&self, v: Vertex, u: Vertex) -> bool {
        u == v || self.has_edge(u, v)
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.nbrs[v]
    }

    /// `v` followed by its neighbours, ascending except for `v` itself.
    pub fn closed_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::once(v).chain(self.nbrs[v].iter().copied())
    }

    /// Adjacency bit row of `v`, `ceil(n/64)` words.
    #[inline]
    pub fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.nbrs[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.nbrs[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Breadth-first distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.nbrs[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distance table, `usize::MAX` for unreachable pairs.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        self.vertices()
            .map(|v| {
                self.distances_from(v)
                    .into_iter()
                    .map(|d| d.unwrap_or(usize::MAX))
                    .collect()
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            for (v, d) in self.distances_from(s).into_iter().enumerate() {
                if d.is_some() {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Largest shortest-path distance; `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in self.vertices() {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in self.vertices() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.nbrs[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in self.vertices() {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.nbrs[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Subgraph induced on `vertices` (deduplicated and sorted).
    ///
    /// Returns `None` when the vertex list is empty.
    pub fn induced(&self, vertices: &[Vertex]) -> Option<InducedSubgraph> {
        let mut labels = vertices.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if labels.is_empty() {
            return None;
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut graph = Graph::empty(labels.len());
        for (i, &v) in labels.iter().enumerate() {
            for &w in &self.nbrs[v] {
                let j = index[w];
                if j != usize::MAX && j > i {
                    graph.add_edge(i, j);
                }
            }
        }
        Some(InducedSubgraph { graph, labels })
    }

    /// The subgraph induced on `V - N[v]`, or `None` if nothing remains.
    pub fn delete_closed_neighborhood(&self, v: Vertex) -> Result<Option<InducedSubgraph>> {
        self.check_vertex(v)?;
        let keep: Vec<Vertex> = self
            .vertices()
            .filter(|&u| !self.dominates(v, u))
            .collect();
        Ok(self.induced(&keep))
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in self.vertices() {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// An induced subgraph together with the original label of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[i]` is the parent-graph vertex behind local vertex `i`.
    pub labels: Vec<Vertex>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(Graph::from_edges(0, []).is_err());
    }

    #[test]
    fn repeated_edges_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn wide_rows() {
        let g = Graph::from_edges(130, [(0, 129), (64, 65), (63, 64)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(65, 64));
        assert!(!g.has_edge(0, 64));
        assert_eq!(g.row(0).len(), 3);
    }

    #[test]
    fn metrics_on_small_graphs() {
        assert_eq!(complete(5).diameter(), Some(1));
        assert_eq!(complete(1).diameter(), Some(0));
        assert_eq!(cycle(5).diameter(), Some(2));
        assert_eq!(cycle(5).girth(), Some(5));
        assert!(cycle(4).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.diameter(), None);
        assert_eq!(two_edges.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(two_edges.girth(), None);
    }

    #[test]
    fn closed_neighborhood_deletion() {
        assert_eq!(complete(4).delete_closed_neighborhood(2).unwrap(), None);
        let rest = cycle(5).delete_closed_neighborhood(0).unwrap().unwrap();
        assert_eq!(rest.labels, vec![2, 3]);
        assert_eq!(rest.graph.edge_count(), 1);
        assert!(cycle(5).delete_closed_neighborhood(5).is_err());
    }
}
