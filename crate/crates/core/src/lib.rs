//! Exact Cops and Robbers on small graphs.
//!
//! * [`graph`], [`graph6`], [`generators`], [`enumerate`], [`dismantle`]:
//!   the graph substrate, the graph6 line format, the Moore and
//!   projective-plane families, exhaustive enumeration, and the cop-win oracle.
//! * [`game`]: retrograde solver for the standard, restricted-arena and
//!   teleporting games, cop numbers, and the `⪯` relation.
//! * [`strategy`]: the constructive diameter-two cop strategy and a simulator
//!   that plays it against an exactly optimal robber.
//! * [`traps`]: minimum hypergraph transversals, trap thresholds and the
//!   transversal bound for uniform hypergraphs.

pub mod dismantle;
pub mod enumerate;
pub mod error;
pub mod game;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod strategy;
pub mod traps;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};

/// Integer square root, `floor(sqrt(x))`.
#[inline]
pub fn isqrt(x: u64) -> u64 {
    x.isqrt()
}
