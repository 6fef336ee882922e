//! Per-graph records for the `solve` and `trap` commands.

use copwin::enumerate::canonical_graph6;
use copwin::game::{cop_number_with, cops_win, CopNumber, GameConfig};
use copwin::traps::TrapReport;
use copwin::{isqrt, Error, Graph};

use crate::report::Record;
use crate::scan::{cop_value, Verdict};

/// Cop number of `g` for the game in `template`, with the optimal opening
/// and capture time when it is exact.
pub fn solve_record(g: &Graph, template: &GameConfig) -> Record {
    let mut r = Record::new()
        .with("graph6", canonical_graph6(g))
        .with("n", g.n())
        .with("diameter", g.diameter())
        .with("bipartite", g.is_bipartite());
    match cop_number_with(g, template) {
        Ok(c) => {
            r.push("c", cop_value(&c));
            match &c {
                CopNumber::Exact(k) if g.is_connected() => {
                    let cfg = GameConfig { cops: *k, ..template.clone() };
                    if let Ok(res) = cops_win(g, &cfg) {
                        r.push("placement", res.cop_placement().as_deref());
                        r.push("rounds", res.capture_rounds());
                    }
                    r.push("status", "exact");
                }
                CopNumber::Exact(_) => r.push("status", "exact"),
                CopNumber::Unresolved { reason, .. } => {
                    r.push("status", Verdict::Unresolved.name());
                    r.push("reason", reason.to_string());
                }
            }
        }
        Err(e) => {
            r.push("status", Verdict::Error.name());
            r.push("error", e.to_string());
        }
    }
    r
}

/// Trap thresholds of every vertex and the alpha-trap count at `alpha`
/// (default `sqrt(n)`).
pub fn trap_record(g: &Graph, alpha: Option<f64>) -> Result<Record, Error> {
    let n = g.n();
    let report = TrapReport::new(g)?;
    let alpha = alpha.unwrap_or((n as f64).sqrt());
    let root = isqrt(n as u64) as usize;
    let mut r = Record::new()
        .with("graph6", canonical_graph6(g))
        .with("n", n)
        .with("thresholds", &report.thresholds[..])
        .with("lemma4", report.min_threshold() <= root)
        .with("alpha", alpha)
        .with("alpha_traps", report.alpha_trap_count(alpha))
        .with("lemma5_bound", report.lemma5_bound(alpha));
    if alpha.fract() == 0.0 && alpha >= 0.0 {
        if let Ok(holds) = report.lemma5(alpha as usize) {
            r.push("lemma5", holds);
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use copwin::generators::{complete, petersen};

    #[test]
    fn solve_petersen_and_k2() {
        let r = solve_record(&petersen(), &GameConfig::standard(1));
        assert_eq!(r.get("c").unwrap().to_string(), "3");
        let r = solve_record(&complete(2).unwrap(), &GameConfig::standard(1));
        assert_eq!(r.to_string(), "graph6=A_ n=2 diameter=1 bipartite=yes c=1 placement=0 rounds=1 status=exact");
        let r = solve_record(&petersen(), &GameConfig::standard(1).with_budget(300));
        assert_eq!(r.get("status").unwrap().to_string(), "unresolved");
    }

    #[test]
    fn trap_petersen() {
        let r = trap_record(&petersen(), None).unwrap();
        assert_eq!(r.get("thresholds").unwrap().to_string(), "3,3,3,3,3,3,3,3,3,3");
        assert_eq!(r.get("alpha_traps").unwrap().to_string(), "10");
        let r = trap_record(&petersen(), Some(4.0)).unwrap();
        assert_eq!(r.get("lemma5").unwrap().to_string(), "yes");
    }
}
