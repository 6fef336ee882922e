//! The inductive relation between robber vertices and cop positions.
//!
//! `x ⪯_0 p` when a cop of `p` stands on `x`; `x ⪯_i p` when every neighbour
//! `y` of `x` admits a team move `p -> q` with `y ⪯_j q` for some `j < i`.
//! The robber may not pass, and the cops may (team moves are the reflexive
//! strong product). Computed by forward sweeps, independently of the
//! retrograde solver.

use super::position::{multiset_count, PosId, PositionSpace};
use super::bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const NEVER: u32 = u32::MAX;

/// Stage at which each pair `(x, p)` enters the relation.
pub struct PreceqRelation {
    space: PositionSpace,
    stage: Vec<u32>,
    stable_at: u32,
}

/// Computes `⪯_i` for all `i` up to the fixed point, for `k` cops on `g`.
///
/// The table has `C(n + k - 1, k) * n` entries, capped by `budget`.
pub fn preceq(g: &Graph, k: usize, budget: u64) -> Result<PreceqRelation> {
    let n = g.n();
    let pairs = multiset_count(n, k).saturating_mul(n as u128);
    if pairs > u128::from(budget) {
        return Err(Error::BudgetExceeded {
            states: pairs,
            budget,
        });
    }
    let space = PositionSpace::new(g, k, true, budget)?;
    let positions = space.len();
    let mut stage = vec![NEVER; positions * n];
    for p in 0..positions as PosId {
        for x in bits(space.occupied(p)) {
            stage[p as usize * n + x] = 0;
        }
    }
    let nbr_mask: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();

    let mut i = 0;
    loop {
        i += 1;
        // vertices y with y ⪯_j q for some j < i, per position q
        let settled: Vec<u64> = (0..positions)
            .map(|q| {
                (0..n)
                    .filter(|&y| stage[q * n + y] < i)
                    .fold(0u64, |m, y| m | 1 << y)
            })
            .collect();
        let mut grew = false;
        for p in 0..positions as PosId {
            let reach = space
                .moves(p)
                .iter()
                .fold(0u64, |m, &q| m | settled[q as usize]);
            for (x, &mask) in nbr_mask.iter().enumerate() {
                let s = p as usize * n + x;
                if stage[s] == NEVER && mask & !reach == 0 {
                    stage[s] = i;
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok(PreceqRelation {
        space,
        stage,
        stable_at: i - 1,
    })
}

/// `true` iff some position `p` has `x ⪯ p` for every vertex `x`, i.e. `k`
/// cops win against a robber who may not pass.
pub fn preceq_fixpoint_wins(g: &Graph, k: usize, budget: u64) -> Result<bool> {
    Ok(preceq(g, k, budget)?.has_winning_position())
}

impl PreceqRelation {
    pub fn space(&self) -> &PositionSpace {
        &self.space
    }

    /// First `i` with `⪯_i = ⪯_{i+1}`.
    pub fn stable_at(&self) -> u32 {
        self.stable_at
    }

    /// Least `i` with `x ⪯_i cops`, if any.
    pub fn stage_of(&self, x: Vertex, cops: &[Vertex]) -> Result<Option<u32>> {
        let p = self.space.id_of(cops)?;
        let n = self.space.n();
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
        Ok(match self.stage[p as usize * n + x] {
            NEVER => None,
            s => Some(s),
        })
    }

    pub fn contains(&self, x: Vertex, cops: &[Vertex], i: u32) -> Result<bool> {
        Ok(self.stage_of(x, cops)?.is_some_and(|s| s <= i))
    }

    /// The pairs of `⪯_i`, as `(x, position id)`.
    pub fn members(&self, i: u32) -> impl Iterator<Item = (Vertex, PosId)> + '_ {
        let n = self.space.n();
        self.stage
            .iter()
            .enumerate()
            .filter(move |(_, &s)| s <= i)
            .map(move |(idx, _)| (idx % n, (idx / n) as PosId))
    }

    /// `|⪯_i|`.
    pub fn count(&self, i: u32) -> usize {
        self.stage.iter().filter(|&&s| s <= i).count()
    }

    pub fn has_winning_position(&self) -> bool {
        let n = self.space.n();
        self.stage
            .chunks(n)
            .any(|row| row.iter().all(|&s| s != NEVER))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, petersen};

    const BUDGET: u64 = 10_000_000;

    #[test]
    fn stage_zero_is_occupancy() {
        let g = cycle(5).unwrap();
        let rel = preceq(&g, 2, BUDGET).unwrap();
        for (x, p) in rel.members(0) {
            assert!(rel.space().cops(p).contains(&x));
        }
        assert_eq!(rel.count(0), 15 * 2 - 5); // 15 positions; 5 doubled cops
    }

    #[test]
    fn complete_graph_one_round() {
        let g = complete(5).unwrap();
        let rel = preceq(&g, 1, BUDGET).unwrap();
        assert_eq!(rel.count(1), 25);
        assert!(rel.has_winning_position());
    }

    #[test]
    fn petersen_traps_need_three() {
        let g = petersen();
        let two = preceq(&g, 2, BUDGET).unwrap();
        assert_eq!(two.count(1), two.count(0));
        assert!(!two.has_winning_position());
        let three = preceq(&g, 3, BUDGET).unwrap();
        assert!(three.count(1) > three.count(0));
        assert!(three.has_winning_position());
    }

    #[test]
    fn chain_is_monotone() {
        let g = cycle(6).unwrap();
        let rel = preceq(&g, 2, BUDGET).unwrap();
        let counts: Vec<usize> = (0..=rel.stable_at() + 1).map(|i| rel.count(i)).collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(counts[counts.len() - 1], counts[counts.len() - 2]);
    }
}
