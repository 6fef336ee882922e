//! Line-oriented trace format.
//!
//! ```text
//! round=0 cops=4,4,4 robber=7
//! round=1 cops=4,2,9 robber=6
//! outcome=captured round=2 cap=40
//! ```
//!
//! One line per round: the team (in cop-index order) and the robber after
//! both sides have moved; round 0 is the opening placement. The last line is
//! `outcome=captured round=R` or `outcome=survived rounds=R`, plus the cap.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Vertex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub index: usize,
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Captured { round: usize },
    Survived { rounds: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyTrace {
    pub rounds: Vec<Round>,
    pub outcome: Outcome,
    pub round_cap: usize,
}

impl StrategyTrace {
    pub fn captured(&self) -> bool {
        matches!(self.outcome, Outcome::Captured { .. })
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for StrategyTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rounds {
            let cops: Vec<String> = r.cops.iter().map(ToString::to_string).collect();
            writeln!(f, "round={} cops={} robber={}", r.index, cops.join(","), r.robber)?;
        }
        match self.outcome {
            Outcome::Captured { round } => {
                writeln!(f, "outcome=captured round={round} cap={}", self.round_cap)
            }
            Outcome::Survived { rounds } => {
                writeln!(f, "outcome=survived rounds={rounds} cap={}", self.round_cap)
            }
        }
    }
}

fn fields(line: &str) -> Vec<(&str, &str)> {
    line.split_whitespace()
        .map(|kv| kv.split_once('=').unwrap_or((kv, "")))
        .collect()
}

/// Parses the text produced by [`StrategyTrace`]'s `Display`.
pub fn parse_trace(text: &str) -> Result<StrategyTrace> {
    let mut rounds = Vec::new();
    let mut outcome = None;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |reason: String| Error::TraceParse {
            line: line_no,
            reason,
        };
        if line.trim().is_empty() {
            continue;
        }
        if outcome.is_some() {
            return Err(err("content after the outcome line".into()));
        }
        let kv = fields(line);
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(format!("bad number {s:?}")));
        match kv.as_slice() {
            [("round", idx), ("cops", cops), ("robber", robber)] => {
                let index = num(idx)?;
                if index != rounds.len() {
                    return Err(err(format!("expected round {}, found {index}", rounds.len())));
                }
                let cops = if cops.is_empty() {
                    Vec::new()
                } else {
                    cops.split(',').map(num).collect::<Result<Vec<_>>>()?
                };
                rounds.push(Round {
                    index,
                    cops,
                    robber: num(robber)?,
                });
            }
            [("outcome", "captured"), ("round", r), ("cap", cap)] => {
                outcome = Some((Outcome::Captured { round: num(r)? }, num(cap)?));
            }
            [("outcome", "survived"), ("rounds", r), ("cap", cap)] => {
                outcome = Some((Outcome::Survived { rounds: num(r)? }, num(cap)?));
            }
            _ => return Err(err(format!("unrecognised line {line:?}"))),
        }
    }
    let (outcome, round_cap) = outcome.ok_or(Error::TraceParse {
        line: text.lines().count(),
        reason: "missing outcome line".into(),
    })?;
    Ok(StrategyTrace {
        rounds,
        outcome,
        round_cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn format_is_stable() {
        let t = StrategyTrace {
            rounds: vec![
                Round { index: 0, cops: vec![4, 4], robber: 7 },
                Round { index: 1, cops: vec![3, 7], robber: 7 },
            ],
            outcome: Outcome::Captured { round: 1 },
            round_cap: 40,
        };
        let text = t.to_text();
        assert_eq!(
            text,
            "round=0 cops=4,4 robber=7\nround=1 cops=3,7 robber=7\noutcome=captured round=1 cap=40\n"
        );
        assert_eq!(parse_trace(&text).unwrap(), t);
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_trace(""), Err(Error::TraceParse { .. })));
        assert!(matches!(
            parse_trace("round=1 cops=0 robber=1\noutcome=survived rounds=1 cap=1\n"),
            Err(Error::TraceParse { line: 1, .. })
        ));
        assert!(matches!(
            parse_trace("outcome=survived rounds=1 cap=1\nround=0 cops=0 robber=1\n"),
            Err(Error::TraceParse { line: 2, .. })
        ));
        assert!(parse_trace("round=0 cops=x robber=1\noutcome=captured round=0 cap=1").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(
            rounds in proptest::collection::vec((proptest::collection::vec(0usize..64, 0..6), 0usize..64), 0..8),
            captured in any::<bool>(),
            cap in 0usize..500,
        ) {
            let t = StrategyTrace {
                outcome: if captured {
                    Outcome::Captured { round: rounds.len().saturating_sub(1) }
                } else {
                    Outcome::Survived { rounds: rounds.len() }
                },
                rounds: rounds
                    .into_iter()
                    .enumerate()
                    .map(|(index, (cops, robber))| Round { index, cops, robber })
                    .collect(),
                round_cap: cap,
            };
            prop_assert_eq!(parse_trace(&t.to_text()).unwrap(), t);
        }

        #[test]
        fn parser_never_panics(s in "\\PC{0,80}") {
            let _ = parse_trace(&s);
        }
    }
}
