use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::isqrt;

/// A cop parked on `vertex` for the whole game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Guard {
    pub vertex: Vertex,
    /// Index of the guarding cop in the team.
    pub cop: usize,
    /// Order of the robber's arena when the guard was placed.
    pub arena_order: usize,
    /// Degree of `vertex` inside that arena.
    pub arena_degree: usize,
}

/// Cop allocation produced by the shrinking induction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopPlan {
    pub n: usize,
    /// Guards in placement order; guard `i` is cop `i`.
    pub stationary: Vec<Guard>,
    /// Vertices the robber can still use safely (an induced subgraph).
    pub residual: Vec<Vertex>,
    /// Cops hunting inside the residual arena; they follow the guards in
    /// the team numbering.
    pub mobile_cops: usize,
    pub total_cops: usize,
    /// `isqrt(2n)`.
    pub budget: usize,
}

impl CopPlan {
    /// Guard vertex whose closed neighbourhood contains `v`, if any.
    pub fn guard_of(&self, g: &Graph, v: Vertex) -> Option<&Guard> {
        self.stationary.iter().find(|s| g.dominates(s.vertex, v))
    }

    /// Where the hunting cops start: the first guard vertex, else vertex 0.
    pub fn mobile_start(&self) -> Vertex {
        self.stationary.first().map_or(0, |s| s.vertex)
    }

    /// Initial team placement: guards, then hunters.
    pub fn initial_cops(&self) -> Vec<Vertex> {
        self.stationary
            .iter()
            .map(|s| s.vertex)
            .chain(std::iter::repeat_n(self.mobile_start(), self.mobile_cops))
            .collect()
    }
}

/// Checks the graph class the plan is valid for: connected with diameter at
/// most two, or bipartite with diameter three.
pub(crate) fn check_class(g: &Graph) -> Result<()> {
    match g.diameter() {
        None => Err(Error::Disconnected),
        Some(d) if d <= 2 => Ok(()),
        Some(3) if g.is_bipartite() => Ok(()),
        Some(d) => Err(Error::Precondition(format!(
            "diameter {d} graph is neither diameter two nor bipartite of diameter three"
        ))),
    }
}

/// Runs the induction: while the arena (order `m`) has a vertex of degree
/// above `isqrt(2m)`, park a cop on the highest-degree one (lowest label on
/// ties) and delete its closed neighbourhood; then hunt with `isqrt(2m)`
/// mobile cops.
pub fn build_theorem1_plan(g: &Graph) -> Result<CopPlan> {
    check_class(g)?;
    let mut arena: Vec<Vertex> = g.vertices().collect();
    let mut inside = vec![true; g.n()];
    let mut stationary = Vec::new();
    loop {
        let m = arena.len();
        let threshold = isqrt(2 * m as u64) as usize;
        let degree = |v: Vertex| g.neighbors(v).iter().filter(|&&w| inside[w]).count();
        let top = arena
            .iter()
            .map(|&v| (degree(v), v))
            .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
        match top {
            Some((d, v)) if d > threshold => {
                stationary.push(Guard {
                    vertex: v,
                    cop: stationary.len(),
                    arena_order: m,
                    arena_degree: d,
                });
                for u in g.closed_neighbors(v) {
                    inside[u] = false;
                }
                arena.retain(|&u| inside[u]);
            }
            _ => {
                let mobile_cops = threshold;
                let total_cops = stationary.len() + mobile_cops;
                return Ok(CopPlan {
                    n: g.n(),
                    stationary,
                    residual: arena,
                    mobile_cops,
                    total_cops,
                    budget: isqrt(2 * g.n() as u64) as usize,
                });
            }
        }
    }
}
