use super::hypergraph::Hypergraph;
use crate::error::{Error, Result};

pub const MAX_TRANSVERSAL_N: usize = 64;
pub const MAX_TRANSVERSAL_EDGES: usize = 64;

/// A minimum hitting set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    pub size: usize,
    /// Sorted vertices of one optimal set.
    pub witness: Vec<usize>,
}

/// Exact minimum transversal by branch and bound.
///
/// Starts from a greedy cover, branches on the smallest unhit edge (its
/// vertices tried by descending degree, each excluded from later siblings),
/// and prunes with a greedy packing of disjoint unhit edges.
pub fn min_transversal(h: &Hypergraph) -> Result<Transversal> {
    if h.n() > MAX_TRANSVERSAL_N {
        return Err(Error::TooLarge { n: h.n(), cap: MAX_TRANSVERSAL_N });
    }
    if h.m() > MAX_TRANSVERSAL_EDGES {
        return Err(Error::Hypergraph(format!(
            "{} edges exceed the cap of {MAX_TRANSVERSAL_EDGES}",
            h.m()
        )));
    }
    let edges: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect();
    let all = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };

    let greedy = greedy_cover(&edges);
    let mut search = Search {
        best_size: greedy.count_ones() as usize,
        best: greedy,
    };
    search.run(&edges, all, 0);
    Ok(Transversal {
        size: search.best_size,
        witness: crate::game::bits(search.best).collect(),
    })
}

fn degree(edges: &[u64], v: u32) -> usize {
    edges.iter().filter(|&&e| e >> v & 1 == 1).count()
}

fn greedy_cover(edges: &[u64]) -> u64 {
    let mut left = edges.to_vec();
    let mut chosen = 0u64;
    while !left.is_empty() {
        let span = left.iter().fold(0u64, |a, &e| a | e);
        let v = (0..64)
            .filter(|&v| span >> v & 1 == 1)
            .max_by_key(|&v| (degree(&left, v), std::cmp::Reverse(v)))
            .expect("edges are nonempty");
        chosen |= 1 << v;
        left.retain(|&e| e >> v & 1 == 0);
    }
    chosen
}

/// Disjoint edges found greedily, smallest first; each needs its own vertex.
fn packing_bound(edges: &[u64], allowed: u64) -> usize {
    let mut sorted: Vec<u64> = edges.iter().map(|&e| e & allowed).collect();
    sorted.sort_unstable_by_key(|e| e.count_ones());
    let mut used = 0u64;
    let mut count = 0;
    for e in sorted {
        if e & used == 0 {
            used |= e;
            count += 1;
        }
    }
    count
}

struct Search {
    best_size: usize,
    best: u64,
}

impl Search {
    fn run(&mut self, unhit: &[u64], mut allowed: u64, chosen: u64) {
        let depth = chosen.count_ones() as usize;
        if unhit.is_empty() {
            if depth < self.best_size {
                self.best_size = depth;
                self.best = chosen;
            }
            return;
        }
        if depth + packing_bound(unhit, allowed) >= self.best_size {
            return;
        }
        let edge = unhit
            .iter()
            .map(|&e| e & allowed)
            .min_by_key(|e| e.count_ones())
            .expect("unhit is nonempty");
        let mut order: Vec<u32> = crate::game::bits(edge).map(|v| v as u32).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(degree(unhit, v)), v));
        for v in order {
            let rest: Vec<u64> = unhit.iter().copied().filter(|&e| e >> v & 1 == 0).collect();
            self.run(&rest, allowed, chosen | 1 << v);
            allowed &= !(1 << v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Smallest hitting set by trying every subset in order of size.
    fn brute_force(h: &Hypergraph) -> usize {
        let n = h.n();
        (0..=n)
            .find(|&s| {
                (0u32..1 << n).any(|mask| {
                    mask.count_ones() as usize == s
                        && h.edges().iter().all(|e| e.iter().any(|&v| mask >> v & 1 == 1))
                })
            })
            .unwrap()
    }

    fn fano() -> Hypergraph {
        Hypergraph::new(
            7,
            [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]
                .map(|e| e.to_vec()),
        )
        .unwrap()
    }

    #[test]
    fn small_cases() {
        let h = Hypergraph::new(2, [vec![0], vec![1]]).unwrap();
        assert_eq!(min_transversal(&h).unwrap().size, 2);
        let h = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(min_transversal(&h).unwrap().size, 1);
        let h = Hypergraph::new(4, []).unwrap();
        assert_eq!(min_transversal(&h).unwrap(), Transversal { size: 0, witness: vec![] });
    }

    #[test]
    fn fano_needs_three() {
        let t = min_transversal(&fano()).unwrap();
        assert_eq!(t.size, 3);
        assert_eq!(brute_force(&fano()), 3);
        assert!(fano().is_transversal(&t.witness));
    }

    #[test]
    fn caps() {
        let h = Hypergraph::new(65, [vec![64]]).unwrap();
        assert!(matches!(min_transversal(&h), Err(Error::TooLarge { .. })));
        let h = Hypergraph::new(3, vec![vec![0]; 65]).unwrap();
        assert!(min_transversal(&h).is_err());
        let h = Hypergraph::new(64, [vec![63], vec![0, 63]]).unwrap();
        assert_eq!(min_transversal(&h).unwrap().witness, vec![63]);
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..=14).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0..n, 1..=5), 0..12)
                .prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn matches_exhaustive_search(h in arb_hypergraph()) {
            let t = min_transversal(&h).unwrap();
            prop_assert!(h.is_transversal(&t.witness));
            prop_assert_eq!(t.witness.len(), t.size);
            prop_assert_eq!(t.size, brute_force(&h));
        }
    }
}
