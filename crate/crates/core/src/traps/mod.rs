//! Traps: vertices whose whole neighbourhood a few cops can control from
//! elsewhere. Thresholds are exact minimum hypergraph transversals.

mod chvatal;
mod hypergraph;
mod transversal;
mod trap;

pub use chvatal::chvatal_bound;
pub use hypergraph::{parse_hypergraph, Hypergraph};
pub use transversal::{min_transversal, Transversal, MAX_TRANSVERSAL_EDGES, MAX_TRANSVERSAL_N};
pub use trap::{
    check_lemma4, count_alpha_traps, is_s_trap, trap_count_exceeds_bound, trap_threshold, TrapReport,
};
