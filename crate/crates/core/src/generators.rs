//! Deterministic constructions of the graph families used by the checks.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest field order accepted by the projective-plane families.
pub const MAX_PLANE_ORDER: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Petersen,
    HoffmanSingleton,
    /// Erdős–Rényi polarity graph of PG(2, q), q prime.
    Polarity(usize),
    /// Point-line incidence graph of PG(2, q), q prime.
    Incidence(usize),
}

impl GraphFamily {
    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Cycle(_) => "cycle",
            GraphFamily::Path(_) => "path",
            GraphFamily::Complete(_) => "complete",
            GraphFamily::Petersen => "petersen",
            GraphFamily::HoffmanSingleton => "hoffman_singleton",
            GraphFamily::Polarity(_) => "polarity",
            GraphFamily::Incidence(_) => "incidence",
        }
    }

    /// Parses a family name plus its integer parameter (ignored for the
    /// parameterless families).
    pub fn from_name(name: &str, param: Option<usize>) -> Result<Self> {
        let need = |family: &'static str| {
            param.ok_or(Error::UnsupportedParameter {
                family,
                reason: "missing parameter".into(),
            })
        };
        Ok(match name {
            "cycle" => GraphFamily::Cycle(need("cycle")?),
            "path" => GraphFamily::Path(need("path")?),
            "complete" => GraphFamily::Complete(need("complete")?),
            "petersen" => GraphFamily::Petersen,
            "hoffman_singleton" => GraphFamily::HoffmanSingleton,
            "polarity" => GraphFamily::Polarity(need("polarity")?),
            "incidence" => GraphFamily::Incidence(need("incidence")?),
            other => {
                return Err(Error::UnsupportedParameter {
                    family: "graph family",
                    reason: format!("unknown family {other:?}"),
                })
            }
        })
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Cycle(n) | GraphFamily::Path(n) | GraphFamily::Complete(n) => {
                write!(f, "{}:{n}", self.name())
            }
            GraphFamily::Polarity(q) | GraphFamily::Incidence(q) => write!(f, "{}:{q}", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    /// Accepts `name` or `name:param`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = match s.split_once(':') {
            Some((name, p)) => {
                let p = p.trim().parse().map_err(|_| Error::UnsupportedParameter {
                    family: "graph family",
                    reason: format!("bad parameter {p:?}"),
                })?;
                (name, Some(p))
            }
            None => (s, None),
        };
        GraphFamily::from_name(name.trim(), param)
    }
}

pub fn generate(family: GraphFamily) -> Result<Graph> {
    match family {
        GraphFamily::Cycle(n) => cycle(n),
        GraphFamily::Path(n) => path(n),
        GraphFamily::Complete(n) => complete(n),
        GraphFamily::Petersen => Ok(petersen()),
        GraphFamily::HoffmanSingleton => Ok(hoffman_singleton()),
        GraphFamily::Polarity(q) => polarity(q),
        GraphFamily::Incidence(q) => incidence(q),
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::UnsupportedParameter {
            family: "cycle",
            reason: format!("length {n} < 3"),
        });
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::UnsupportedParameter {
            family: "path",
            reason: "no vertices".into(),
        });
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::UnsupportedParameter {
            family: "complete",
            reason: "no vertices".into(),
        });
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order,
/// adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut g = Graph::empty(pairs.len());
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Robertson's construction: pentagons `P_h` (vertex `5h + j`, `j ~ j±1`),
/// pentagrams `Q_i` (vertex `25 + 5i + j`, `j ~ j±2`), and `P_h[j] ~ Q_i[h·i + j]`
/// with all indices mod 5.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut g = Graph::empty(50);
    for a in 0..5 {
        for j in 0..5 {
            g.add_edge(p(a, j), p(a, j + 1));
            g.add_edge(q(a, j), q(a, j + 2));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                g.add_edge(p(h, j), q(i, h * i + j));
            }
        }
    }
    g
}

fn check_plane_order(family: &'static str, q: usize) -> Result<()> {
    let prime = q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d));
    if !prime {
        return Err(Error::UnsupportedParameter {
            family,
            reason: format!("q = {q} is not prime"),
        });
    }
    if q > MAX_PLANE_ORDER {
        return Err(Error::UnsupportedParameter {
            family,
            reason: format!("q = {q} exceeds {MAX_PLANE_ORDER}"),
        });
    }
    Ok(())
}

/// Points of PG(2, q) as normalised vectors: the first nonzero coordinate is 1.
/// Ordered `(0,0,1)`, then `(0,1,z)`, then `(1,y,z)`, each lexicographically.
pub fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = vec![[0, 0, 1]];
    pts.extend((0..q).map(|z| [0, 1, z]));
    pts.extend((0..q).flat_map(|y| (0..q).map(move |z| [1, y, z])));
    pts
}

fn dot(x: &[usize; 3], y: &[usize; 3], q: usize) -> usize {
    (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q
}

/// Polarity graph ER_q on the `q² + q + 1` points of PG(2, q): distinct
/// points are adjacent when orthogonal.
pub fn polarity(q: usize) -> Result<Graph> {
    check_plane_order("polarity", q)?;
    let pts = projective_points(q);
    let mut g = Graph::empty(pts.len());
    for (i, x) in pts.iter().enumerate() {
        for (j, y) in pts.iter().enumerate().skip(i + 1) {
            if dot(x, y, q) == 0 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Incidence graph of PG(2, q): points are `0..N`, lines `N..2N` with
/// `N = q² + q + 1`; line `N + j` has the same coordinates as point `j`.
pub fn incidence(q: usize) -> Result<Graph> {
    check_plane_order("incidence", q)?;
    let pts = projective_points(q);
    let n = pts.len();
    let mut g = Graph::empty(2 * n);
    for (i, x) in pts.iter().enumerate() {
        for (j, line) in pts.iter().enumerate() {
            if dot(x, line, q) == 0 {
                g.add_edge(i, n + j);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_regular(g: &Graph, d: usize) -> bool {
        g.vertices().all(|v| g.degree(v) == d)
    }

    #[test]
    fn petersen_is_the_degree_three_moore_graph() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert!(is_regular(&g, 3));
        assert_eq!(g.girth(), Some(5));
        assert_eq!(g.diameter(), Some(2));
    }

    #[test]
    fn hoffman_singleton_is_the_degree_seven_moore_graph() {
        let g = hoffman_singleton();
        assert_eq!(g.n(), 50);
        assert!(is_regular(&g, 7));
        assert_eq!(g.girth(), Some(5));
        assert_eq!(g.diameter(), Some(2));
    }

    #[test]
    fn polarity_counts() {
        for q in [2, 3, 5, 7, 11, 13] {
            let g = polarity(q).unwrap();
            assert_eq!(g.n(), q * q + q + 1);
            assert!(g.vertices().all(|v| g.degree(v) == q || g.degree(v) == q + 1));
            // absolute points (self-orthogonal) are exactly the q + 1 of degree q
            let absolute = g.vertices().filter(|&v| g.degree(v) == q).count();
            assert_eq!(absolute, q + 1);
            assert_eq!(g.diameter(), Some(2));
        }
    }

    #[test]
    fn incidence_graphs() {
        let heawood = incidence(2).unwrap();
        assert_eq!(heawood.n(), 14);
        assert!(is_regular(&heawood, 3));
        assert!(heawood.is_bipartite());
        assert_eq!(heawood.diameter(), Some(3));
        assert_eq!(heawood.girth(), Some(6));
        for q in [3, 5] {
            let g = incidence(q).unwrap();
            assert!(is_regular(&g, q + 1));
            assert_eq!(g.diameter(), Some(3));
        }
    }

    #[test]
    fn bad_parameters() {
        for q in [0, 1, 4, 9, 17] {
            assert!(polarity(q).is_err(), "q = {q}");
            assert!(incidence(q).is_err(), "q = {q}");
        }
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in [
            GraphFamily::Cycle(5),
            GraphFamily::Path(4),
            GraphFamily::Complete(3),
            GraphFamily::Petersen,
            GraphFamily::HoffmanSingleton,
            GraphFamily::Polarity(3),
            GraphFamily::Incidence(2),
        ] {
            assert_eq!(f.to_string().parse::<GraphFamily>().unwrap(), f);
        }
        assert!("moore".parse::<GraphFamily>().is_err());
        assert!("cycle".parse::<GraphFamily>().is_err());
    }
}
