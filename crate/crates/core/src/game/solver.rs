//! Retrograde (attractor) solver.
//!
//! States are `(position, robber)` pairs, one table for each side to move.
//! Cop-winning states are labelled with their level: the number of cop moves
//! until capture under optimal play by both sides. Levels are filled
//! breadth-first from the terminal states. A robber state becomes winning
//! for the cops once its counter of non-losing moves drops to zero.

use std::sync::Arc;

use super::position::{PosId, PositionSpace};
use super::{bits, GameConfig, GameState, RobberArena, TeleportCapture, Turn, Variant};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const INVALID: u32 = u32::MAX;
/// Undecided while solving; robber-winning afterwards.
const OPEN: u32 = u32::MAX - 1;
const NO_CHOICE: u32 = u32::MAX;
const NO_MOVE: u8 = u8::MAX;

/// Status of one game state in a solved instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    /// The robber is already caught (or lost on arrival, in the teleport game).
    Captured,
    /// The cops force capture within `level` more cop moves, and no sooner.
    CopWin { level: u32 },
    RobberWin,
}

/// An exactly solved game instance with extracted strategies for both sides.
pub struct SolveResult {
    space: Arc<PositionSpace>,
    config: GameConfig,
    arena: RobberArena,
    cop: Vec<u32>,
    rob: Vec<u32>,
    cop_choice: Vec<PosId>,
    robber_choice: Vec<u8>,
    placement: Option<PosId>,
    value: Option<u32>,
}

/// Decides whether `cfg.cops` cops win on `g`.
pub fn cops_win(g: &Graph, cfg: &GameConfig) -> Result<SolveResult> {
    precheck(g, cfg)?;
    let space = PositionSpace::new(g, cfg.cops, cfg.cops_may_pass, cfg.budget)?;
    solve_in(Arc::new(space), g, cfg)
}

fn precheck(g: &Graph, cfg: &GameConfig) -> Result<()> {
    if cfg.cops == 0 {
        return Err(Error::Precondition("at least one cop is required".into()));
    }
    if !cfg.allow_disconnected && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let states = cfg.estimated_states(g.n());
    if states > u128::from(cfg.budget) {
        return Err(Error::BudgetExceeded {
            states,
            budget: cfg.budget,
        });
    }
    Ok(())
}

/// Solves using a prebuilt position space, which must match `g` and `cfg`.
pub fn solve_in(space: Arc<PositionSpace>, g: &Graph, cfg: &GameConfig) -> Result<SolveResult> {
    precheck(g, cfg)?;
    if space.n() != g.n() || space.k() != cfg.cops {
        return Err(Error::Precondition("position space does not match the game".into()));
    }
    if cfg.variant == Variant::Standard && space.cops_may_pass() != cfg.cops_may_pass {
        return Err(Error::Precondition("position space has the wrong pass rule".into()));
    }
    let arena = match &cfg.arena {
        Some(a) => {
            if a.is_empty() {
                return Err(Error::EmptyArena);
            }
            if a.rows.len() != g.n() {
                return Err(Error::InvalidArena("arena built for a different graph".into()));
            }
            a.clone()
        }
        None => RobberArena::full(g)?,
    };
    let mut solver = Solver::new(&space, &arena, cfg);
    match cfg.variant {
        Variant::Standard => solver.run_standard(),
        Variant::Teleport => solver.run_teleport(),
    }
    let (cop_choice, robber_choice) = solver.strategies();
    let Solver { cop, rob, .. } = solver;
    let mut result = SolveResult {
        space,
        config: cfg.clone(),
        arena,
        cop,
        rob,
        cop_choice,
        robber_choice,
        placement: None,
        value: None,
    };
    result.choose_placement();
    Ok(result)
}

struct Solver<'a> {
    space: &'a PositionSpace,
    arena: &'a RobberArena,
    cfg: &'a GameConfig,
    n: usize,
    cop: Vec<u32>,
    rob: Vec<u32>,
    counter: Vec<u8>,
}

impl<'a> Solver<'a> {
    fn new(space: &'a PositionSpace, arena: &'a RobberArena, cfg: &'a GameConfig) -> Self {
        let n = space.n();
        let len = space.len() * n;
        let mut solver = Solver {
            space,
            arena,
            cfg,
            n,
            cop: vec![INVALID; len],
            rob: vec![INVALID; len],
            counter: vec![0; len],
        };
        for p in 0..space.len() as PosId {
            let occ = space.occupied(p);
            let lost = solver.lost_on(p);
            for r in arena.vertices() {
                let s = p as usize * n + r;
                if occ >> r & 1 == 0 {
                    solver.rob[s] = OPEN;
                    solver.counter[s] = (solver.robber_moves(r) & !lost).count_ones() as u8;
                }
                if lost >> r & 1 == 0 {
                    solver.cop[s] = OPEN;
                }
            }
        }
        solver
    }

    /// Vertices where a robber ends his move caught, cops at `p`.
    fn lost_on(&self, p: PosId) -> u64 {
        lost_mask(self.space, self.cfg, p)
    }

    fn robber_moves(&self, r: Vertex) -> u64 {
        robber_moves(self.arena, self.cfg, r)
    }

    /// Robber-to-move states that can step into cop-to-move state `(p, r_to)`.
    fn release_predecessors(&mut self, p: PosId, r_to: Vertex, level: u32, out: &mut Vec<usize>) {
        // robber moves are symmetric: r -> r_to iff r_to -> r
        for r in bits(self.robber_moves(r_to)) {
            let s = p as usize * self.n + r;
            if self.rob[s] == OPEN {
                self.counter[s] -= 1;
                if self.counter[s] == 0 {
                    self.rob[s] = level;
                    out.push(s);
                }
            }
        }
    }

    fn initial_robber_losses(&mut self) -> Vec<usize> {
        let mut out = Vec::new();
        for s in 0..self.rob.len() {
            if self.rob[s] == OPEN && self.counter[s] == 0 {
                self.rob[s] = 0;
                out.push(s);
            }
        }
        out
    }

    fn run_standard(&mut self) {
        let n = self.n;
        let mut rob_cur = self.initial_robber_losses();
        let mut cop_next = Vec::new();
        // capture on the cops' first move
        for p in 0..self.space.len() as PosId {
            let reach = self.space.adjacent(p);
            for r in self.arena.vertices() {
                let s = p as usize * n + r;
                if self.cop[s] == OPEN && reach >> r & 1 == 1 {
                    self.cop[s] = 1;
                    cop_next.push(s);
                }
            }
        }
        let mut level = 0;
        loop {
            for &s in &rob_cur {
                let (p, r) = ((s / n) as PosId, s % n);
                for &q in self.space.moves(p) {
                    let t = q as usize * n + r;
                    if self.cop[t] == OPEN {
                        self.cop[t] = level + 1;
                        cop_next.push(t);
                    }
                }
            }
            if cop_next.is_empty() {
                break;
            }
            level += 1;
            rob_cur.clear();
            for &s in &cop_next {
                let (p, r) = ((s / n) as PosId, s % n);
                self.release_predecessors(p, r, level, &mut rob_cur);
            }
            cop_next.clear();
        }
    }

    /// Cop-to-move values depend only on the robber vertex, since the cops
    /// may jump anywhere; they are settled per vertex and copied out.
    fn run_teleport(&mut self) {
        let n = self.n;
        let positions = self.space.len() as PosId;
        let mut settled = vec![false; n];
        let mut rob_cur = self.initial_robber_losses();
        let mut cop_next: Vec<Vertex> = Vec::new();
        let mut level = 0;
        loop {
            for &s in &rob_cur {
                let r = s % n;
                if !settled[r] {
                    settled[r] = true;
                    cop_next.push(r);
                }
            }
            if cop_next.is_empty() {
                break;
            }
            level += 1;
            rob_cur.clear();
            for &r in &cop_next {
                for p in 0..positions {
                    let s = p as usize * n + r;
                    if self.cop[s] == OPEN {
                        self.cop[s] = level;
                        self.release_predecessors(p, r, level, &mut rob_cur);
                    }
                }
            }
            cop_next.clear();
        }
    }

    fn strategies(&self) -> (Vec<PosId>, Vec<u8>) {
        let n = self.n;
        let mut cop_choice = vec![NO_CHOICE; self.cop.len()];
        let mut robber_choice = vec![NO_MOVE; self.rob.len()];
        let mut teleport_best: Vec<Option<PosId>> = vec![None; n];
        if self.cfg.variant == Variant::Teleport {
            for (r, best) in teleport_best.iter_mut().enumerate() {
                *best = (0..self.space.len() as PosId)
                    .filter(|&q| self.rob[q as usize * n + r] < OPEN)
                    .min_by_key(|&q| (self.rob[q as usize * n + r], q));
            }
        }
        for (s, &level) in self.cop.iter().enumerate() {
            if level >= OPEN {
                continue;
            }
            let (p, r) = ((s / n) as PosId, s % n);
            cop_choice[s] = match self.cfg.variant {
                Variant::Standard => self
                    .space
                    .moves(p)
                    .iter()
                    .copied()
                    .find(|&q| {
                        self.space.occupied(q) >> r & 1 == 1 && level == 1
                            || self.rob[q as usize * n + r] == level - 1
                    })
                    .expect("a cop-winning state has a level-decreasing move"),
                Variant::Teleport => teleport_best[r].expect("settled vertex has a witness"),
            };
        }
        for (s, &level) in self.rob.iter().enumerate() {
            if level != OPEN {
                continue;
            }
            let (p, r) = ((s / n) as PosId, s % n);
            let lost = self.lost_on(p);
            robber_choice[s] = bits(self.robber_moves(r) & !lost)
                .find(|&m| self.cop[p as usize * n + m] == OPEN)
                .expect("a robber-winning state has a safe move") as u8;
        }
        (cop_choice, robber_choice)
    }
}

fn lost_mask(space: &PositionSpace, cfg: &GameConfig, p: PosId) -> u64 {
    match (cfg.variant, cfg.teleport_capture) {
        (Variant::Standard, _) => space.occupied(p),
        (Variant::Teleport, TeleportCapture::Closed) => space.controlled(p),
        (Variant::Teleport, TeleportCapture::Open) => space.adjacent(p),
    }
}

fn robber_moves(arena: &RobberArena, cfg: &GameConfig, r: Vertex) -> u64 {
    let stay = if cfg.robber_may_pass { 1u64 << r } else { 0 };
    arena.neighbor_mask(r) | stay
}

fn label_of(level: u32) -> Label {
    match level {
        INVALID => Label::Captured,
        OPEN => Label::RobberWin,
        level => Label::CopWin { level },
    }
}

impl SolveResult {
    /// `true` if some cop placement wins against every robber reply.
    pub fn cops_win(&self) -> bool {
        self.value.is_some()
    }

    /// Cop moves to capture under optimal play from the best placement;
    /// `Some(0)` means the robber has no safe starting vertex.
    pub fn capture_rounds(&self) -> Option<u32> {
        self.value
    }

    /// A best initial cop placement (lowest rank among the optimal ones).
    pub fn cop_placement(&self) -> Option<Vec<Vertex>> {
        self.placement.map(|p| self.space.cops(p))
    }

    pub fn config(&self) -> &GameConfig {
        &self.config
    }

    pub fn arena(&self) -> &RobberArena {
        &self.arena
    }

    pub fn space(&self) -> &PositionSpace {
        &self.space
    }

    /// Shared handle to the position space, for reuse in further solves.
    pub fn space_handle(&self) -> Arc<PositionSpace> {
        Arc::clone(&self.space)
    }

    fn index(&self, cops: &[Vertex], robber: Vertex) -> Result<(PosId, usize)> {
        let p = self.space.id_of(cops)?;
        if !self.arena.contains(robber) {
            return Err(Error::Precondition(format!(
                "robber vertex {robber} is not in the arena"
            )));
        }
        Ok((p, p as usize * self.space.n() + robber))
    }

    pub fn label(&self, state: &GameState) -> Result<Label> {
        let (_, s) = self.index(&state.cops, state.robber)?;
        Ok(label_of(match state.turn {
            Turn::Cops => self.cop[s],
            Turn::Robber => self.rob[s],
        }))
    }

    /// Value of the robber starting on `robber` against placement `cops`,
    /// cops to move. Starting on a losing vertex gives [`Label::Captured`].
    pub fn placement_label(&self, cops: &[Vertex], robber: Vertex) -> Result<Label> {
        self.label(&GameState::new(cops.to_vec(), robber, Turn::Cops))
    }

    /// The robber's best start against `cops`: a robber-winning vertex if one
    /// exists, else the slowest capture; ties to the lowest label.
    pub fn robber_placement(&self, cops: &[Vertex]) -> Result<Vertex> {
        let p = self.space.id_of(cops)?;
        let n = self.space.n();
        Ok(self
            .arena
            .vertices()
            .max_by_key(|&x| (start_score(self.cop[p as usize * n + x]), std::cmp::Reverse(x)))
            .expect("arena is nonempty"))
    }

    /// The cops' strategy move from a cop-winning cop-to-move state.
    pub fn cop_move(&self, cops: &[Vertex], robber: Vertex) -> Result<Option<Vec<Vertex>>> {
        let (_, s) = self.index(cops, robber)?;
        Ok(match self.cop_choice[s] {
            NO_CHOICE => None,
            q => Some(self.space.cops(q)),
        })
    }

    /// The robber's strategy move from a robber-winning robber-to-move state.
    pub fn robber_strategy_move(&self, cops: &[Vertex], robber: Vertex) -> Result<Option<Vertex>> {
        let (_, s) = self.index(cops, robber)?;
        Ok(match self.robber_choice[s] {
            NO_MOVE => None,
            m => Some(usize::from(m)),
        })
    }

    fn choose_placement(&mut self) {
        let n = self.space.n();
        let mut best: Option<(u32, PosId)> = None;
        for p in 0..self.space.len() as PosId {
            let worst = self
                .arena
                .vertices()
                .map(|x| match self.cop[p as usize * n + x] {
                    INVALID => 0,
                    level => level,
                })
                .max()
                .unwrap_or(0);
            if worst < OPEN && best.is_none_or(|(b, _)| worst < b) {
                best = Some((worst, p));
            }
        }
        self.placement = best.map(|(_, p)| p);
        self.value = best.map(|(v, _)| v);
    }
}

/// Ordering key for robber starts and moves: robber wins beat any level,
/// higher levels beat lower, immediate loss is worst.
fn start_score(level: u32) -> u64 {
    match level {
        OPEN => u64::MAX,
        INVALID => 0,
        level => u64::from(level),
    }
}

/// The robber's best move from a robber-to-move state: stay in the robber's
/// winning region when possible, otherwise delay capture as long as possible.
/// Ties go to the lowest label.
pub fn optimal_robber_move(state: &GameState, result: &SolveResult) -> Result<Vertex> {
    if state.turn != Turn::Robber {
        return Err(Error::Precondition("state is not robber-to-move".into()));
    }
    let (p, s) = result.index(&state.cops, state.robber)?;
    if result.rob[s] == INVALID {
        return Err(Error::Precondition("robber is already caught".into()));
    }
    let n = result.space.n();
    let moves = robber_moves(&result.arena, &result.config, state.robber);
    bits(moves)
        .max_by_key(|&m| {
            (
                start_score(result.cop[p as usize * n + m]),
                std::cmp::Reverse(m),
            )
        })
        .ok_or_else(|| Error::Precondition("robber has no legal move".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, petersen};

    fn solve(g: &Graph, cfg: GameConfig) -> SolveResult {
        cops_win(g, &cfg).unwrap()
    }

    #[test]
    fn petersen_needs_three() {
        let g = petersen();
        assert!(!solve(&g, GameConfig::standard(2)).cops_win());
        assert!(solve(&g, GameConfig::standard(3)).cops_win());
    }

    #[test]
    fn complete_graph_one_cop() {
        let g = complete(5).unwrap();
        let res = solve(&g, GameConfig::standard(1));
        assert!(res.cops_win());
        assert_eq!(res.capture_rounds(), Some(1));
        let k1 = solve(&Graph::empty(1), GameConfig::standard(1));
        assert_eq!(k1.capture_rounds(), Some(0));
    }

    #[test]
    fn four_cycle_escapes_one_cop() {
        let g = cycle(4).unwrap();
        let res = solve(&g, GameConfig::standard(1));
        assert!(!res.cops_win());
        assert!(solve(&g, GameConfig::standard(2)).cops_win());
        // the robber's strategy keeps him safe
        let cops = vec![0];
        let r = res.robber_placement(&cops).unwrap();
        assert_eq!(r, 2);
        assert_eq!(res.placement_label(&cops, r).unwrap(), Label::RobberWin);
    }

    #[test]
    fn path_levels() {
        // cop on 0, robber on 3 of P_4: two cop moves reach 2, robber cornered at 3
        let g = path(4).unwrap();
        let res = solve(&g, GameConfig::standard(1));
        assert!(res.cops_win());
        assert_eq!(
            res.placement_label(&[0], 3).unwrap(),
            Label::CopWin { level: 3 }
        );
        assert_eq!(res.capture_rounds(), Some(2));
        assert_eq!(res.cop_placement(), Some(vec![1]));
    }

    #[test]
    fn errors() {
        let disconnected = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            cops_win(&disconnected, &GameConfig::standard(1)).err(),
            Some(Error::Disconnected)
        );
        let g = petersen();
        assert!(matches!(
            cops_win(&g, &GameConfig::standard(3).with_budget(1000)),
            Err(Error::BudgetExceeded { states: 4400, budget: 1000 })
        ));
        assert!(cops_win(&g, &GameConfig::standard(0)).is_err());
    }

    #[test]
    fn robber_move_contract() {
        let g = cycle(4).unwrap();
        let res = solve(&g, GameConfig::standard(1));
        let st = GameState::new(vec![1], 2, Turn::Robber);
        let m = optimal_robber_move(&st, &res).unwrap();
        assert_eq!(res.placement_label(&[1], m).unwrap(), Label::RobberWin);
        let wrong_turn = GameState::new(vec![1], 2, Turn::Cops);
        assert!(optimal_robber_move(&wrong_turn, &res).is_err());
        let caught = GameState::new(vec![2], 2, Turn::Robber);
        assert!(optimal_robber_move(&caught, &res).is_err());
    }
}
