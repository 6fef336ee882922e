//! The constructive diameter-two cop strategy, and a simulator that plays it
//! against an exactly optimal robber.
//!
//! The plan parks a cop on each high-degree vertex while shrinking the
//! robber's territory, then hunts inside the remaining low-degree arena with
//! enough mobile cops to shadow every neighbour of the robber.

mod ineq;
mod hunt;
mod plan;
mod simulate;
mod trace;

pub use ineq::{key_inequality_sides, verify_key_inequality};
pub use hunt::{lemma2_move, NeighborhoodCover};
pub use plan::{build_theorem1_plan, CopPlan, Guard};
pub use simulate::{simulate, worst_case_capture, PlanCops, RobberPolicy};
pub use trace::{parse_trace, Outcome, Round, StrategyTrace};
