//! Cop-win recognition by dominated-vertex elimination.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// `true` iff `g` reduces to a single vertex by repeatedly deleting a vertex
/// `u` whose closed neighbourhood lies inside that of another vertex `w`.
///
/// Deleting a dominated vertex is a retraction, so the greedy order (lowest
/// dominated label first) decides the question.
pub fn is_dismantlable(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(dismantling_order(g).len() + 1 == g.n())
}

/// Vertices in the order they are deleted; stops when no vertex is dominated.
pub fn dismantling_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut order = Vec::new();
    let closed_subset = |u: Vertex, w: Vertex, alive: &[bool]| {
        g.closed_neighbors(u)
            .all(|x| !alive[x] || g.dominates(w, x))
    };
    'outer: while remaining > 1 {
        for u in 0..n {
            if !alive[u] {
                continue;
            }
            let dominated = (0..n).any(|w| w != u && alive[w] && closed_subset(u, w, &alive));
            if dominated {
                alive[u] = false;
                remaining -= 1;
                order.push(u);
                continue 'outer;
            }
        }
        break;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, petersen};

    #[test]
    fn trees_and_chordal_examples() {
        assert!(is_dismantlable(&path(6).unwrap()).unwrap());
        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        assert!(is_dismantlable(&star).unwrap());
        assert!(is_dismantlable(&complete(4).unwrap()).unwrap());
        assert!(is_dismantlable(&Graph::empty(1)).unwrap());
    }

    #[test]
    fn cycles_and_petersen_are_not() {
        assert!(!is_dismantlable(&cycle(4).unwrap()).unwrap());
        assert!(!is_dismantlable(&cycle(5).unwrap()).unwrap());
        assert!(!is_dismantlable(&petersen()).unwrap());
        assert!(dismantling_order(&petersen()).is_empty());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(is_dismantlable(&g), Err(Error::Disconnected));
    }
}
