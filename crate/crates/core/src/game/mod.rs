//! Exact solution of Cops and Robbers games by retrograde analysis.

mod numbers;
mod position;
mod preceq;
mod solver;

pub use numbers::{
    c_g_of_m, cop_number, cop_number_with, restricted_cop_number, teleport_cop_number,
    CopNumber, MAX_SUBARENA_N,
};
pub use position::{multiset_count, PosId, PositionSpace, MAX_GAME_N};
pub use preceq::{preceq, preceq_fixpoint_wins, PreceqRelation};
pub use solver::{cops_win, optimal_robber_move, solve_in, Label, SolveResult};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default cap on the estimated number of game states.
pub const DEFAULT_STATE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    Standard,
    /// Cops jump anywhere except onto the robber; the robber loses when his
    /// move ends inside a cop's neighbourhood.
    Teleport,
}

/// Which neighbourhood of a teleporting cop is deadly to the robber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum TeleportCapture {
    /// On or adjacent to a cop.
    #[default]
    Closed,
    /// Adjacent to a cop; sharing a vertex with a cop is not a loss.
    Open,
}

/// The subgraph a restricted robber moves on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobberArena {
    vertices: u64,
    rows: Vec<u64>,
}

impl RobberArena {
    /// The whole graph.
    pub fn full(g: &Graph) -> Result<Self> {
        let all: Vec<Vertex> = g.vertices().collect();
        Self::induced(g, &all)
    }

    /// Induced subgraph of `g` on `vertices`.
    pub fn induced(g: &Graph, vertices: &[Vertex]) -> Result<Self> {
        let mut arena = Self::bare(g, vertices)?;
        for &v in vertices {
            arena.rows[v] = g
                .neighbors(v)
                .iter()
                .filter(|&&w| arena.vertices >> w & 1 == 1)
                .fold(0, |acc, &w| acc | 1 << w);
        }
        Ok(arena)
    }

    /// `vertices` with an explicit edge set; each edge must be an edge of `g`
    /// between arena vertices.
    pub fn with_edges(g: &Graph, vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut arena = Self::bare(g, vertices)?;
        for &(u, v) in edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(Error::InvalidArena(format!("({u}, {v}) is not an edge of G")));
            }
            if arena.vertices >> u & 1 == 0 || arena.vertices >> v & 1 == 0 {
                return Err(Error::InvalidArena(format!(
                    "edge ({u}, {v}) leaves the arena"
                )));
            }
            arena.rows[u] |= 1 << v;
            arena.rows[v] |= 1 << u;
        }
        Ok(arena)
    }

    fn bare(g: &Graph, vertices: &[Vertex]) -> Result<Self> {
        if g.n() > MAX_GAME_N {
            return Err(Error::TooLarge { n: g.n(), cap: MAX_GAME_N });
        }
        if vertices.is_empty() {
            return Err(Error::EmptyArena);
        }
        let mut mask = 0u64;
        for &v in vertices {
            g.check_vertex(v)?;
            mask |= 1 << v;
        }
        Ok(RobberArena {
            vertices: mask,
            rows: vec![0; g.n()],
        })
    }

    /// Arena vertices as a bit mask.
    pub fn vertex_mask(&self) -> u64 {
        self.vertices
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < 64 && self.vertices >> v & 1 == 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.rows.len()).filter(move |&v| self.contains(v))
    }

    pub fn len(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.vertices == 0
    }

    /// Arena neighbours of `v`.
    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> {
        bits(self.rows[v])
    }

    pub fn max_degree(&self) -> usize {
        self.vertices()
            .map(|v| self.rows[v].count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// `true` if every vertex and edge of `self` also belongs to `other`.
    pub fn is_subarena_of(&self, other: &RobberArena) -> bool {
        self.vertices & !other.vertices == 0
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }
}

/// Iterates set bits of a mask in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Everything that pins down one game instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameConfig {
    pub cops: usize,
    pub variant: Variant,
    pub robber_may_pass: bool,
    /// Standard variant only.
    pub cops_may_pass: bool,
    pub teleport_capture: TeleportCapture,
    /// `None` lets the robber use all of G.
    pub arena: Option<RobberArena>,
    pub budget: u64,
    pub allow_disconnected: bool,
    /// Upper end of cop-number searches; `None` searches up to the arena order.
    pub max_cops: Option<usize>,
}

impl GameConfig {
    pub fn standard(cops: usize) -> Self {
        GameConfig {
            cops,
            variant: Variant::Standard,
            robber_may_pass: true,
            cops_may_pass: true,
            teleport_capture: TeleportCapture::Closed,
            arena: None,
            budget: DEFAULT_STATE_BUDGET,
            allow_disconnected: false,
            max_cops: None,
        }
    }

    pub fn teleport(cops: usize) -> Self {
        GameConfig {
            variant: Variant::Teleport,
            ..GameConfig::standard(cops)
        }
    }

    pub fn with_arena(mut self, arena: RobberArena) -> Self {
        self.arena = Some(arena);
        self
    }

    pub fn no_pass_robber(mut self) -> Self {
        self.robber_may_pass = false;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_max_cops(mut self, max: usize) -> Self {
        self.max_cops = Some(max);
        self
    }

    /// `C(n + k - 1, k) * n * 2`.
    pub fn estimated_states(&self, n: usize) -> u128 {
        multiset_count(n, self.cops).saturating_mul(2 * n as u128)
    }
}

/// Whose move it is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Turn {
    Cops,
    Robber,
}

/// A position of the game: cop multiset (sorted), robber vertex, side to move.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
    pub turn: Turn,
}

impl GameState {
    pub fn new(mut cops: Vec<Vertex>, robber: Vertex, turn: Turn) -> Self {
        cops.sort_unstable();
        GameState { cops, robber, turn }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, petersen};

    #[test]
    fn arena_validation() {
        let g = cycle(5).unwrap();
        assert_eq!(RobberArena::induced(&g, &[]), Err(Error::EmptyArena));
        assert!(RobberArena::induced(&g, &[7]).is_err());
        assert!(RobberArena::with_edges(&g, &[0, 2], &[(0, 2)]).is_err());
        assert!(RobberArena::with_edges(&g, &[0, 1], &[(1, 2)]).is_err());
        let a = RobberArena::with_edges(&g, &[0, 1, 2], &[(0, 1)]).unwrap();
        assert_eq!(a.neighbors(1).collect::<Vec<_>>(), vec![0]);
        let induced = RobberArena::induced(&g, &[0, 1, 2]).unwrap();
        assert!(a.is_subarena_of(&induced));
        assert!(!induced.is_subarena_of(&a));
        assert_eq!(induced.max_degree(), 2);
    }

    #[test]
    fn state_estimate() {
        let g = petersen();
        assert_eq!(GameConfig::standard(3).estimated_states(g.n()), 220 * 20);
    }
}
