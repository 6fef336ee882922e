use num_rational::Ratio;

use super::hypergraph::Hypergraph;
use crate::error::{Error, Result};

/// `(floor(k/2) m + n) / floor(3k/2)` for a k-uniform hypergraph with `n`
/// vertices and `m` edges: an upper bound on its transversal number.
pub fn chvatal_bound(h: &Hypergraph) -> Result<Ratio<u64>> {
    if h.m() == 0 {
        return Err(Error::Hypergraph("bound needs at least one edge".into()));
    }
    let k = h
        .uniformity()
        .ok_or_else(|| Error::Hypergraph("hypergraph is not uniform".into()))? as u64;
    let (n, m) = (h.n() as u64, h.m() as u64);
    Ok(Ratio::new(k / 2 * m + n, 3 * k / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::traps::min_transversal;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn worked_values() {
        let h = Hypergraph::new(4, [vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(chvatal_bound(&h).unwrap(), Ratio::from_integer(2));
        let fano = Hypergraph::new(
            7,
            [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]
                .map(|e| e.to_vec()),
        )
        .unwrap();
        assert_eq!(chvatal_bound(&fano).unwrap(), Ratio::new(7, 2));
        for k in 1..=6usize {
            let h = Hypergraph::new(k, [(0..k).collect()]).unwrap();
            let b = chvatal_bound(&h).unwrap();
            assert!(b >= Ratio::from_integer(1));
            if k % 2 == 0 {
                assert_eq!(b, Ratio::from_integer(1));
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(chvatal_bound(&Hypergraph::new(3, [vec![0], vec![1, 2]]).unwrap()).is_err());
        assert!(chvatal_bound(&Hypergraph::new(3, []).unwrap()).is_err());
    }

    #[test]
    fn random_uniform_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let k = rng.gen_range(2..=5);
            let n = rng.gen_range(k..=15);
            let m = rng.gen_range(1..=12);
            let edges = (0..m).map(|_| rand::seq::index::sample(&mut rng, n, k).into_vec());
            let h = Hypergraph::new(n, edges).unwrap();
            let tau = min_transversal(&h).unwrap().size as u64;
            assert!(Ratio::from_integer(tau) <= chvatal_bound(&h).unwrap(), "{h}");
        }
    }
}
