//! Cop positions: sorted k-multisets of vertices, ranked densely.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest graph the game solver accepts; vertex sets are single `u64` masks.
pub const MAX_GAME_N: usize = 64;

/// Dense index of a cop position inside a [`PositionSpace`].
pub type PosId = u32;

/// `C(n + k - 1, k)`, the number of k-multisets over n vertices, saturating.
pub fn multiset_count(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.saturating_mul(n as u128 + i) / (i + 1);
    }
    acc
}

/// All placements of `k` indistinguishable cops on a graph.
///
/// A multiset `a_0 <= ... <= a_{k-1}` maps to the strictly increasing
/// `b_i = a_i + i`, ranked in colex order as `sum C(b_i, i + 1)`. Team moves
/// (each cop steps along an edge, or stays when passing is allowed) form the
/// k-fold strong product; its adjacency is built on first use.
pub struct PositionSpace {
    n: usize,
    k: usize,
    reflexive: bool,
    cops: Vec<u8>,
    occupied: Vec<u64>,
    controlled: Vec<u64>,
    adjacent: Vec<u64>,
    binom: Vec<Vec<u64>>,
    closed_rows: Vec<Vec<Vertex>>,
    moves: OnceLock<Csr>,
}

struct Csr {
    offsets: Vec<u32>,
    targets: Vec<PosId>,
}

impl PositionSpace {
    /// Builds the space for `k` cops on `g`, refusing more than `max_positions`.
    ///
    /// `cops_may_pass = false` removes the stay option from every cop.
    pub fn new(g: &Graph, k: usize, cops_may_pass: bool, max_positions: u64) -> Result<Self> {
        let n = g.n();
        if n > MAX_GAME_N {
            return Err(Error::TooLarge { n, cap: MAX_GAME_N });
        }
        if k == 0 {
            return Err(Error::Precondition("at least one cop is required".into()));
        }
        let count = multiset_count(n, k);
        if count > u128::from(max_positions) || count > u128::from(u32::MAX) {
            return Err(Error::BudgetExceeded {
                states: count,
                budget: max_positions,
            });
        }
        let count = count as usize;

        let top = n + k;
        let mut binom = vec![vec![0u64; k + 2]; top + 1];
        for (m, row) in binom.iter_mut().enumerate() {
            row[0] = 1;
            if m <= k + 1 {
                row[m] = 1;
            }
        }
        for m in 1..=top {
            for j in 1..=(k + 1).min(m) {
                binom[m][j] = binom[m - 1][j - 1].saturating_add(binom[m - 1][j]);
            }
        }

        let mut space = PositionSpace {
            n,
            k,
            reflexive: cops_may_pass,
            cops: vec![0; count * k],
            occupied: vec![0; count],
            controlled: vec![0; count],
            adjacent: vec![0; count],
            binom,
            closed_rows: g
                .vertices()
                .map(|v| {
                    if cops_may_pass {
                        g.closed_neighbors(v).collect()
                    } else {
                        g.neighbors(v).to_vec()
                    }
                })
                .collect(),
            moves: OnceLock::new(),
        };

        let mut tuple = vec![0usize; k];
        loop {
            let id = space.rank(&tuple) as usize;
            let mut occ = 0u64;
            let mut adj = 0u64;
            for (slot, &v) in space.cops[id * k..(id + 1) * k].iter_mut().zip(&tuple) {
                *slot = v as u8;
                occ |= 1 << v;
                for &w in g.neighbors(v) {
                    adj |= 1 << w;
                }
            }
            space.occupied[id] = occ;
            space.adjacent[id] = adj;
            space.controlled[id] = occ | adj;
            // next nondecreasing tuple
            let Some(i) = (0..k).rev().find(|&i| tuple[i] + 1 < n) else {
                break;
            };
            let v = tuple[i] + 1;
            tuple[i..].fill(v);
        }
        Ok(space)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cops.
    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.occupied.len()
    }

    pub fn is_empty(&self) -> bool {
        self.occupied.is_empty()
    }

    pub fn cops_may_pass(&self) -> bool {
        self.reflexive
    }

    /// Rank of a sorted tuple.
    pub fn rank(&self, sorted: &[Vertex]) -> PosId {
        debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
        sorted
            .iter()
            .enumerate()
            .map(|(i, &a)| self.binom[a + i][i + 1])
            .sum::<u64>() as PosId
    }

    /// Rank of an arbitrary cop tuple, after sorting.
    pub fn id_of(&self, cops: &[Vertex]) -> Result<PosId> {
        if cops.len() != self.k {
            return Err(Error::Precondition(format!(
                "expected {} cops, got {}",
                self.k,
                cops.len()
            )));
        }
        if let Some(&v) = cops.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        Ok(self.rank(&sorted))
    }

    pub fn cops(&self, id: PosId) -> Vec<Vertex> {
        let id = id as usize;
        self.cops[id * self.k..(id + 1) * self.k]
            .iter()
            .map(|&v| usize::from(v))
            .collect()
    }

    /// Vertices holding at least one cop.
    #[inline]
    pub fn occupied(&self, id: PosId) -> u64 {
        self.occupied[id as usize]
    }

    /// Vertices on or next to a cop.
    #[inline]
    pub fn controlled(&self, id: PosId) -> u64 {
        self.controlled[id as usize]
    }

    /// Vertices adjacent to some cop (open neighbourhoods).
    #[inline]
    pub fn adjacent(&self, id: PosId) -> u64 {
        self.adjacent[id as usize]
    }

    /// Positions reachable in one team move. Symmetric: `q` is a move from `p`
    /// iff `p` is a move from `q`.
    pub fn moves(&self, id: PosId) -> &[PosId] {
        let csr = self.moves.get_or_init(|| self.build_moves());
        let id = id as usize;
        &csr.targets[csr.offsets[id] as usize..csr.offsets[id + 1] as usize]
    }

    fn build_moves(&self) -> Csr {
        let k = self.k;
        let mut offsets = Vec::with_capacity(self.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        let mut buf: Vec<PosId> = Vec::new();
        let mut choice = vec![0usize; k];
        let mut tuple = vec![0usize; k];
        for id in 0..self.len() {
            let cops = &self.cops[id * k..(id + 1) * k];
            let rows: Vec<&[Vertex]> = cops
                .iter()
                .map(|&v| self.closed_rows[usize::from(v)].as_slice())
                .collect();
            buf.clear();
            if rows.iter().all(|r| !r.is_empty()) {
                choice.fill(0);
                'product: loop {
                    for i in 0..k {
                        tuple[i] = rows[i][choice[i]];
                    }
                    tuple.sort_unstable();
                    buf.push(self.rank(&tuple));
                    for i in (0..k).rev() {
                        choice[i] += 1;
                        if choice[i] < rows[i].len() {
                            continue 'product;
                        }
                        choice[i] = 0;
                    }
                    break;
                }
            }
            buf.sort_unstable();
            buf.dedup();
            targets.extend_from_slice(&buf);
            offsets.push(targets.len() as u32);
        }
        Csr { offsets, targets }
    }
}
