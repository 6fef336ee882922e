use super::hypergraph::Hypergraph;
use super::transversal::min_transversal;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::isqrt;

/// Fewest cops on `G - v` that control (occupy or neighbour) every neighbour
/// of `v`: the transversal number of the edges `N[u] - {v}`, `u` in `N(v)`.
pub fn trap_threshold(g: &Graph, v: Vertex) -> Result<usize> {
    g.check_vertex(v)?;
    let edges = g
        .neighbors(v)
        .iter()
        .map(|&u| g.closed_neighbors(u).filter(|&w| w != v).collect::<Vec<_>>());
    Ok(min_transversal(&Hypergraph::new(g.n(), edges)?)?.size)
}

/// Cop count allowed by a real trap parameter, `None` when it is negative.
fn floor_count(s: f64) -> Option<usize> {
    (s >= 0.0).then(|| s.floor() as usize)
}

/// `v` is an `s`-trap when `floor(s)` cops suffice.
pub fn is_s_trap(g: &Graph, v: Vertex, s: f64) -> Result<bool> {
    let t = trap_threshold(g, v)?;
    Ok(floor_count(s).is_some_and(|c| t <= c))
}

pub fn count_alpha_traps(g: &Graph, alpha: f64) -> Result<usize> {
    Ok(TrapReport::new(g)?.alpha_trap_count(alpha))
}

/// `true` if some vertex is a `floor(sqrt(n))`-trap.
pub fn check_lemma4(g: &Graph) -> Result<bool> {
    let s = isqrt(g.n() as u64) as usize;
    for v in g.vertices() {
        if trap_threshold(g, v)? <= s {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exact test of `count > alpha - sqrt(n - alpha) - 1` for integer `alpha`.
///
/// With `a = count + 1 - alpha` this is `a > -sqrt(n - alpha)`: true when
/// `a > 0`, and otherwise exactly when `n - alpha > a^2`.
pub fn trap_count_exceeds_bound(n: usize, count: usize, alpha: usize) -> bool {
    let a = count as i64 + 1 - alpha as i64;
    a > 0 || (n as i64 - alpha as i64) > a * a
}

/// Trap thresholds of every vertex of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrapReport {
    pub n: usize,
    pub thresholds: Vec<usize>,
}

impl TrapReport {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(TrapReport {
            n: g.n(),
            thresholds: g
                .vertices()
                .map(|v| trap_threshold(g, v))
                .collect::<Result<_>>()?,
        })
    }

    /// Vertices whose threshold is at most `floor(alpha)`.
    pub fn alpha_trap_count(&self, alpha: f64) -> usize {
        match floor_count(alpha) {
            Some(c) => self.thresholds.iter().filter(|&&t| t <= c).count(),
            None => 0,
        }
    }

    /// `alpha - sqrt(n - alpha) - 1`, for display; use [`Self::lemma5`] to decide.
    pub fn lemma5_bound(&self, alpha: f64) -> f64 {
        alpha - (self.n as f64 - alpha).sqrt() - 1.0
    }

    /// Whether the trap count beats the bound at integer `alpha`, which must
    /// satisfy `sqrt(n) <= alpha <= n`.
    pub fn lemma5(&self, alpha: usize) -> Result<bool> {
        if alpha > self.n || alpha * alpha < self.n {
            return Err(Error::Precondition(format!(
                "alpha {alpha} outside [sqrt({n}), {n}]",
                n = self.n
            )));
        }
        Ok(trap_count_exceeds_bound(self.n, self.alpha_trap_count(alpha as f64), alpha))
    }

    pub fn min_threshold(&self) -> usize {
        self.thresholds.iter().copied().min().unwrap_or(0)
    }
}
