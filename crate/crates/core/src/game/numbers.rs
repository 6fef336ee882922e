//! Cop numbers: plain, restricted-arena, per-order maximum, and teleporting.

use std::sync::Arc;

use super::position::{multiset_count, PositionSpace};
use super::solver::solve_in;
use super::{GameConfig, RobberArena, Variant};
use crate::dismantle::is_dismantlable;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest graph order for [`c_g_of_m`], which solves every `m`-subset.
pub const MAX_SUBARENA_N: usize = 8;

/// Graphs up to this order get the one-cop answer checked against
/// dismantlability.
const DISMANTLE_CROSSCHECK_N: usize = 16;

/// Outcome of an ascending search over cop counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CopNumber {
    Exact(usize),
    /// The search stopped at `lower_bound` cops (all smaller counts lose)
    /// because of `reason`.
    Unresolved { lower_bound: usize, reason: Error },
}

impl CopNumber {
    pub fn exact(&self) -> Option<usize> {
        match self {
            CopNumber::Exact(k) => Some(*k),
            CopNumber::Unresolved { .. } => None,
        }
    }

    /// Largest cop count known to be insufficient, plus one.
    pub fn lower_bound(&self) -> usize {
        match self {
            CopNumber::Exact(k) => *k,
            CopNumber::Unresolved { lower_bound, .. } => *lower_bound,
        }
    }
}

/// Position spaces for one graph, built once per cop count.
struct Spaces<'g> {
    g: &'g Graph,
    cops_may_pass: bool,
    budget: u64,
    built: Vec<Option<Arc<PositionSpace>>>,
}

impl<'g> Spaces<'g> {
    fn new(g: &'g Graph, cfg: &GameConfig) -> Self {
        Spaces {
            g,
            cops_may_pass: cfg.cops_may_pass,
            budget: cfg.budget,
            built: Vec::new(),
        }
    }

    fn get(&mut self, k: usize) -> Result<Arc<PositionSpace>> {
        if self.built.len() <= k {
            self.built.resize(k + 1, None);
        }
        if let Some(space) = &self.built[k] {
            return Ok(Arc::clone(space));
        }
        let states = multiset_count(self.g.n(), k).saturating_mul(2 * self.g.n() as u128);
        if states > u128::from(self.budget) {
            return Err(Error::BudgetExceeded {
                states,
                budget: self.budget,
            });
        }
        let space = Arc::new(PositionSpace::new(self.g, k, self.cops_may_pass, self.budget)?);
        self.built[k] = Some(Arc::clone(&space));
        Ok(space)
    }
}

/// Least winning cop count for `template` (its `cops` field is ignored),
/// searching upward from one to `limit`, or to `template.max_cops` if lower.
fn least_winning(
    g: &Graph,
    template: &GameConfig,
    spaces: &mut Spaces<'_>,
    limit: usize,
) -> Result<CopNumber> {
    if let Some(max) = template.max_cops.filter(|&m| m < limit) {
        return Ok(match least_winning_to(g, template, spaces, max)? {
            Some(found) => found,
            None => CopNumber::Unresolved {
                lower_bound: max + 1,
                reason: Error::CopLimit { max },
            },
        });
    }
    least_winning_to(g, template, spaces, limit)?.ok_or_else(|| {
        Error::Precondition(format!("no cop count up to {limit} wins this game"))
    })
}

fn least_winning_to(
    g: &Graph,
    template: &GameConfig,
    spaces: &mut Spaces<'_>,
    limit: usize,
) -> Result<Option<CopNumber>> {
    for k in 1..=limit {
        let cfg = GameConfig {
            cops: k,
            ..template.clone()
        };
        let outcome = spaces
            .get(k)
            .and_then(|space| solve_in(space, g, &cfg));
        match outcome {
            Ok(res) if res.cops_win() => return Ok(Some(CopNumber::Exact(k))),
            Ok(_) => {}
            Err(e @ Error::BudgetExceeded { .. }) => {
                return Ok(Some(CopNumber::Unresolved {
                    lower_bound: k,
                    reason: e,
                }))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// `c(G)` for the standard game with default rules.
pub fn cop_number(g: &Graph) -> Result<CopNumber> {
    cop_number_with(g, &GameConfig::standard(1))
}

/// Least cop count that wins the game described by `template`.
///
/// With `allow_disconnected` set, a disconnected graph's answer is the sum
/// over its components.
pub fn cop_number_with(g: &Graph, template: &GameConfig) -> Result<CopNumber> {
    if !g.is_connected() {
        if !template.allow_disconnected || template.arena.is_some() {
            return Err(Error::Disconnected);
        }
        let mut total = 0;
        let mut unresolved = None;
        for comp in g.components() {
            let sub = g.induced(&comp).expect("components are nonempty").graph;
            match cop_number_with(&sub, template)? {
                CopNumber::Exact(k) => total += k,
                CopNumber::Unresolved { lower_bound, reason } => {
                    total += lower_bound;
                    unresolved.get_or_insert(reason);
                }
            }
        }
        return Ok(match unresolved {
            None => CopNumber::Exact(total),
            Some(reason) => CopNumber::Unresolved {
                lower_bound: total,
                reason,
            },
        });
    }
    let limit = template.arena.as_ref().map_or(g.n(), RobberArena::len);
    let mut spaces = Spaces::new(g, template);
    let answer = least_winning(g, template, &mut spaces, limit.max(1))?;

    let plain = template.variant == Variant::Standard
        && template.arena.is_none()
        && template.robber_may_pass
        && template.cops_may_pass;
    if plain && g.n() <= DISMANTLE_CROSSCHECK_N {
        if let Some(k) = answer.exact() {
            assert_eq!(
                k == 1,
                is_dismantlable(g)?,
                "one-cop solve disagrees with dismantlability"
            );
        }
    }
    Ok(answer)
}

/// `c_G(H)`: cops needed when the robber may only use `arena`.
pub fn restricted_cop_number(g: &Graph, arena: &RobberArena) -> Result<CopNumber> {
    cop_number_with(g, &GameConfig::standard(1).with_arena(arena.clone()))
}

/// `c_T(G)` under the default (closed-neighbourhood) capture rule.
pub fn teleport_cop_number(g: &Graph) -> Result<CopNumber> {
    cop_number_with(g, &GameConfig::teleport(1))
}

/// `c_G(m)`: the largest restricted cop number over robber arenas with `m`
/// vertices. Only induced arenas are tried; removing robber edges never
/// raises the count.
pub fn c_g_of_m(g: &Graph, m: usize) -> Result<usize> {
    let n = g.n();
    if n > MAX_SUBARENA_N {
        return Err(Error::TooLarge { n, cap: MAX_SUBARENA_N });
    }
    if m == 0 || m > n {
        return Err(Error::Precondition(format!("arena size {m} outside 1..={n}")));
    }
    let template = GameConfig::standard(1);
    let mut spaces = Spaces::new(g, &template);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let verts: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let cfg = template.clone().with_arena(RobberArena::induced(g, &verts)?);
        match least_winning(g, &cfg, &mut spaces, m)? {
            CopNumber::Exact(k) => best = best.max(k),
            CopNumber::Unresolved { reason, .. } => return Err(reason),
        }
    }
    Ok(best)
}
