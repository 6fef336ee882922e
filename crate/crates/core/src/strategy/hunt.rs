use super::plan::check_class;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// The bounded-degree hunt: with at least as many cops as the largest arena
/// degree, shadow every arena neighbour of the robber.
///
/// Each turn, in order:
/// 1. a cop on or next to the robber takes him (lowest cop index);
/// 2. otherwise the robber's arena neighbours `v_1 < ... < v_l` are handed
///    out greedily by ascending cop index, each cop taking the unassigned
///    `v_i` whose closed neighbourhood is nearest (lowest label on ties);
///    cops left over are sent at the robber's own closed neighbourhood;
/// 3. each cop steps to the vertex of its closed neighbourhood nearest its
///    target set, preferring vertices next to the robber, then lowest label.
///
/// In a diameter-two graph every cop enters its target set in one step, so
/// after the first turn any robber move lands next to a cop. A robber who
/// stays put is reached on the following turn, when the cop shadowing `v_1`
/// steps onto it.
///
/// In a bipartite graph a cop can only shadow from the side opposite the
/// robber. Cops on the robber's side are out of phase: they wait while any
/// cop is in phase (a robber move puts them in phase), and when every cop is
/// out of phase one of them steps next to the robber to force him to move.
/// That cop is chosen to leave as many of the robber's neighbours shadowed
/// as possible.
pub struct NeighborhoodCover<'g> {
    g: &'g Graph,
    dist: Vec<Vec<usize>>,
    arena: Vec<bool>,
    max_degree: usize,
    bipartite: bool,
}

impl<'g> NeighborhoodCover<'g> {
    /// `arena` is the vertex set of the robber's induced arena.
    pub fn new(g: &'g Graph, arena: &[Vertex]) -> Result<Self> {
        check_class(g)?;
        let mut inside = vec![false; g.n()];
        for &v in arena {
            g.check_vertex(v)?;
            inside[v] = true;
        }
        let max_degree = arena
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count())
            .max()
            .unwrap_or(0);
        Ok(NeighborhoodCover {
            g,
            dist: g.distance_matrix(),
            arena: inside,
            max_degree,
            bipartite: g.is_bipartite(),
        })
    }

    pub fn max_arena_degree(&self) -> usize {
        self.max_degree
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        self.dist[u][v]
    }

    /// Distance from `w` to the closed neighbourhood of `v`.
    fn to_closed(&self, w: Vertex, v: Vertex) -> usize {
        self.dist[w][v].saturating_sub(1)
    }

    fn in_phase(&self, cop: Vertex, robber: Vertex) -> bool {
        !self.bipartite || self.dist[cop][robber] % 2 == 1
    }

    /// New positions for `cops` (same order) with the robber on `robber`.
    pub fn next_move(&self, cops: &[Vertex], robber: Vertex) -> Result<Vec<Vertex>> {
        let g = self.g;
        g.check_vertex(robber)?;
        if !self.arena[robber] {
            return Err(Error::Precondition(format!(
                "robber vertex {robber} is outside the arena"
            )));
        }
        if self.max_degree > cops.len() {
            return Err(Error::Precondition(format!(
                "arena degree {} exceeds {} cops",
                self.max_degree,
                cops.len()
            )));
        }
        for &c in cops {
            g.check_vertex(c)?;
        }

        if let Some(i) = cops.iter().position(|&c| g.dominates(c, robber)) {
            let mut next = cops.to_vec();
            next[i] = robber;
            return Ok(next);
        }

        let exits: Vec<Vertex> = g
            .neighbors(robber)
            .iter()
            .copied()
            .filter(|&v| self.arena[v])
            .collect();
        let phase: Vec<bool> = cops.iter().map(|&c| self.in_phase(c, robber)).collect();
        let mut order: Vec<usize> = (0..cops.len()).collect();
        order.sort_by_key(|&i| !phase[i]);
        let mut open = exits.clone();
        let mut targets = vec![robber; cops.len()];
        for i in order {
            let c = cops[i];
            if let Some(j) = open
                .iter()
                .enumerate()
                .min_by_key(|&(_, &v)| (self.to_closed(c, v), v))
                .map(|(j, _)| j)
            {
                targets[i] = open.remove(j);
            }
        }

        let step = |c: Vertex, t: Vertex| {
            g.closed_neighbors(c)
                .min_by_key(|&w| (self.to_closed(w, t), !g.has_edge(w, robber), w))
                .expect("closed neighbourhood is nonempty")
        };
        if phase.iter().any(|&p| p) {
            return Ok(cops
                .iter()
                .zip(&targets)
                .zip(&phase)
                .map(|((&c, &t), &p)| if p { step(c, t) } else { c })
                .collect());
        }
        Ok(self.force_move(cops, robber, &exits, &targets))
    }

    /// Every cop is out of phase: one steps next to the robber, the rest wait.
    fn force_move(&self, cops: &[Vertex], robber: Vertex, exits: &[Vertex], targets: &[Vertex]) -> Vec<Vertex> {
        let g = self.g;
        let mut best: Option<((usize, usize, usize, Vertex), usize)> = None;
        for (i, &c) in cops.iter().enumerate() {
            for w in g.closed_neighbors(c) {
                let uncovered = exits
                    .iter()
                    .filter(|&&v| {
                        !g.dominates(w, v)
                            && !cops.iter().enumerate().any(|(j, &d)| j != i && g.dominates(d, v))
                    })
                    .count();
                // closest to the robber, then fewest unshadowed exits
                let key = (self.dist[w][robber], uncovered, self.to_closed(w, targets[i]), w);
                if best.is_none_or(|(k, _)| key < k) {
                    best = Some((key, i));
                }
            }
        }
        let ((.., w), i) = best.expect("at least one cop");
        let mut next = cops.to_vec();
        next[i] = w;
        next
    }
}

/// One turn of the bounded-degree hunt; see [`NeighborhoodCover`].
pub fn lemma2_move(
    g: &Graph,
    arena: &[Vertex],
    cops: &[Vertex],
    robber: Vertex,
) -> Result<Vec<Vertex>> {
    NeighborhoodCover::new(g, arena)?.next_move(cops, robber)
}
