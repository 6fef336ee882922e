use std::collections::HashMap;

use super::hunt::NeighborhoodCover;
use super::plan::CopPlan;
use super::trace::{Outcome, Round, StrategyTrace};
use crate::error::{Error, Result};
use crate::game::{cops_win, optimal_robber_move, GameConfig, GameState, RobberArena, SolveResult, Turn};
use crate::graph::{Graph, Vertex};

/// How the simulated robber plays.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RobberPolicy {
    /// Exactly optimal against the hunting cops inside the residual arena,
    /// from a solved restricted game. Leaving the residual means stepping
    /// into a guard's neighbourhood, so this robber never does.
    #[default]
    Optimal,
    /// Maximise the distance to the nearest cop, lowest label on ties.
    GreedyDistance,
}

enum Robber {
    Solved(Box<SolveResult>),
    Greedy,
}

impl Robber {
    fn new(g: &Graph, plan: &CopPlan, policy: RobberPolicy) -> Result<Self> {
        match policy {
            RobberPolicy::GreedyDistance => Ok(Robber::Greedy),
            RobberPolicy::Optimal if plan.residual.is_empty() => Ok(Robber::Greedy),
            RobberPolicy::Optimal => {
                let arena = RobberArena::induced(g, &plan.residual)?;
                let cfg = GameConfig::standard(plan.mobile_cops).with_arena(arena);
                Ok(Robber::Solved(Box::new(cops_win(g, &cfg)?)))
            }
        }
    }

    fn place(&self, g: &Graph, dist: &[Vec<usize>], plan: &CopPlan, cops: &[Vertex]) -> Result<Vertex> {
        match self {
            Robber::Solved(res) => res.robber_placement(&cops[plan.stationary.len()..]),
            Robber::Greedy => Ok(farthest(g.vertices(), dist, cops)),
        }
    }

    fn step(&self, g: &Graph, dist: &[Vec<usize>], plan: &CopPlan, cops: &[Vertex], robber: Vertex) -> Result<Vertex> {
        match self {
            Robber::Solved(res) if res.arena().contains(robber) => {
                let state = GameState::new(cops[plan.stationary.len()..].to_vec(), robber, Turn::Robber);
                optimal_robber_move(&state, res)
            }
            _ => Ok(farthest(g.closed_neighbors(robber), dist, cops)),
        }
    }
}

/// Candidate farthest from its nearest cop; lowest label on ties.
fn farthest(candidates: impl Iterator<Item = Vertex>, dist: &[Vec<usize>], cops: &[Vertex]) -> Vertex {
    candidates
        .max_by_key(|&v| {
            let near = cops.iter().map(|&c| dist[c][v]).min().unwrap_or(usize::MAX);
            (near, std::cmp::Reverse(v))
        })
        .expect("candidate set is nonempty")
}

/// The cop side of a plan: guards hold their vertices and take a robber who
/// comes next to them; hunters chase him with [`NeighborhoodCover`] while he
/// is inside the residual arena and wait otherwise.
pub struct PlanCops<'a> {
    g: &'a Graph,
    plan: &'a CopPlan,
    cover: NeighborhoodCover<'a>,
}

impl<'a> PlanCops<'a> {
    pub fn new(g: &'a Graph, plan: &'a CopPlan) -> Result<Self> {
        if plan.n != g.n() {
            return Err(Error::Precondition(format!(
                "plan is for {} vertices, graph has {}",
                plan.n,
                g.n()
            )));
        }
        Ok(PlanCops {
            g,
            plan,
            cover: NeighborhoodCover::new(g, &plan.residual)?,
        })
    }

    pub fn opening(&self) -> Vec<Vertex> {
        self.plan.initial_cops()
    }

    /// Team move (cop-index order) against a robber on `robber`.
    pub fn respond(&self, cops: &[Vertex], robber: Vertex) -> Result<Vec<Vertex>> {
        let guards = self.plan.stationary.len();
        let mut next = cops.to_vec();
        if let Some(i) = (0..guards).find(|&i| self.g.dominates(cops[i], robber)) {
            next[i] = robber;
        } else if self.plan.mobile_cops > 0 && self.plan.residual.contains(&robber) {
            let hunters = self.cover.next_move(&cops[guards..], robber)?;
            next[guards..].copy_from_slice(&hunters);
        }
        Ok(next)
    }
}

/// Plays `plan` against a robber following `policy` for at most `max_rounds`
/// cop moves (default `4n`). Capture is checked at placement, after the cops
/// move and after the robber moves.
pub fn simulate(
    g: &Graph,
    plan: &CopPlan,
    policy: RobberPolicy,
    max_rounds: Option<usize>,
) -> Result<StrategyTrace> {
    let team = PlanCops::new(g, plan)?;
    let round_cap = max_rounds.unwrap_or(4 * g.n());
    let dist = g.distance_matrix();
    let robber_player = Robber::new(g, plan, policy)?;

    let mut cops = team.opening();
    let mut robber = robber_player.place(g, &dist, plan, &cops)?;
    let mut rounds = vec![Round {
        index: 0,
        cops: cops.clone(),
        robber,
    }];
    let finish = |rounds: Vec<Round>, outcome| StrategyTrace {
        rounds,
        outcome,
        round_cap,
    };
    if cops.contains(&robber) {
        return Ok(finish(rounds, Outcome::Captured { round: 0 }));
    }

    for index in 1..=round_cap {
        cops = team.respond(&cops, robber)?;
        if cops.contains(&robber) {
            rounds.push(Round { index, cops: cops.clone(), robber });
            return Ok(finish(rounds, Outcome::Captured { round: index }));
        }
        robber = robber_player.step(g, &dist, plan, &cops, robber)?;
        rounds.push(Round { index, cops: cops.clone(), robber });
        if cops.contains(&robber) {
            return Ok(finish(rounds, Outcome::Captured { round: index }));
        }
    }
    Ok(finish(rounds, Outcome::Survived { rounds: round_cap }))
}

/// Plays the plan against every robber at once: the latest round in which
/// some robber is caught, or `None` if some robber escapes forever.
///
/// The cops' side is deterministic, so this is a longest-path search over
/// the positions the robber can force; a reachable cycle is an escape.
/// Fails with [`Error::BudgetExceeded`] past `max_states` positions.
pub fn worst_case_capture(g: &Graph, plan: &CopPlan, max_states: usize) -> Result<Option<usize>> {
    enum Mark {
        Open,
        Done(usize),
    }
    type Key = (Vec<Vertex>, Vertex);
    struct Frame {
        key: Key,
        succ: Vec<Key>,
        next: usize,
        best: usize,
    }

    let team = PlanCops::new(g, plan)?;
    let mut marks: HashMap<Key, Mark> = HashMap::new();
    let expand = |key: &Key| -> Result<Vec<Key>> {
        let (cops, robber) = key;
        let moved = team.respond(cops, *robber)?;
        if moved.contains(robber) {
            return Ok(Vec::new());
        }
        Ok(g.closed_neighbors(*robber)
            .filter(|r| !moved.contains(r))
            .map(|r| (moved.clone(), r))
            .collect())
    };

    let opening = team.opening();
    let mut worst = 0;
    for start in g.vertices().filter(|v| !opening.contains(v)) {
        let root = (opening.clone(), start);
        if let Some(Mark::Done(d)) = marks.get(&root) {
            worst = worst.max(*d);
            continue;
        }
        marks.insert(root.clone(), Mark::Open);
        let mut stack = vec![Frame { succ: expand(&root)?, key: root, next: 0, best: 0 }];
        while let Some(top) = stack.last_mut() {
            if top.next == top.succ.len() {
                let done = stack.pop().expect("stack is nonempty");
                let depth = done.best + 1;
                marks.insert(done.key, Mark::Done(depth));
                match stack.last_mut() {
                    Some(parent) => parent.best = parent.best.max(depth),
                    None => worst = worst.max(depth),
                }
                continue;
            }
            let key = top.succ[top.next].clone();
            top.next += 1;
            match marks.get(&key) {
                Some(Mark::Open) => return Ok(None),
                Some(Mark::Done(d)) => top.best = top.best.max(*d),
                None => {
                    if marks.len() >= max_states {
                        return Err(Error::BudgetExceeded {
                            states: marks.len() as u128,
                            budget: max_states as u64,
                        });
                    }
                    marks.insert(key.clone(), Mark::Open);
                    let succ = expand(&key)?;
                    stack.push(Frame { key, succ, next: 0, best: 0 });
                }
            }
        }
    }
    Ok(Some(worst))
}
