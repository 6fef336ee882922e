use std::fmt;

use crate::error::{Error, Result};

/// Vertex set `0..n` with a list of nonempty edges (sorted, duplicate-free).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut out = Vec::new();
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::Hypergraph(format!("edge {i} is empty")));
            }
            e.sort_unstable();
            e.dedup();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::Hypergraph(format!("edge {i} has vertex {v} >= {n}")));
            }
            out.push(e);
        }
        Ok(Hypergraph { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Common edge size, if every edge has the same size and there is one.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// `true` if `set` meets every edge.
    pub fn is_transversal(&self, set: &[usize]) -> bool {
        self.edges.iter().all(|e| e.iter().any(|v| set.contains(v)))
    }
}

/// `n m` on the first line, then one edge per line.
impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for e in &self.edges {
            let parts: Vec<String> = e.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the text format: first line `n m`, then `m` lines of
/// space-separated vertex indices. Blank lines after the edges are ignored.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = text.lines().enumerate();
    let err = |line: usize, reason: String| Error::HypergraphParse { line, reason };
    let num = |line: usize, s: &str| {
        s.parse::<usize>()
            .map_err(|_| err(line, format!("bad number {s:?}")))
    };
    let (_, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = head[..] else {
        return Err(err(1, "header must be `n m`".into()));
    };
    let (n, m) = (num(1, n)?, num(1, m)?);
    let mut edges = Vec::new();
    for _ in 0..m {
        let (i, line) = lines
            .next()
            .ok_or_else(|| err(edges.len() + 2, format!("expected {m} edges, found {}", edges.len())))?;
        let e = line
            .split_whitespace()
            .map(|s| num(i + 1, s))
            .collect::<Result<Vec<_>>>()?;
        if e.is_empty() {
            return Err(err(i + 1, "empty edge".into()));
        }
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(err(i + 1, format!("vertex {v} out of range for n = {n}")));
        }
        edges.push(e);
    }
    if let Some((i, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(err(i + 1, "trailing content after the edges".into()));
    }
    Hypergraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_fano() {
        let text = "7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!((h.n(), h.m(), h.uniformity()), (7, 7, Some(3)));
        assert_eq!(h.to_string(), text);
    }

    #[test]
    fn parse_errors() {
        let line = |text: &str| match parse_hypergraph(text) {
            Err(Error::HypergraphParse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line(""), 1);
        assert_eq!(line("3"), 1);
        assert_eq!(line("3 2\n0 1\n"), 3);
        assert_eq!(line("3 1\n0 3\n"), 2);
        assert_eq!(line("3 1\n\n"), 2);
        assert_eq!(line("3 1\n0 x\n"), 2);
        assert_eq!(line("3 1\n0\n1\n"), 3);
        assert!(Hypergraph::new(2, [vec![]]).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..20, raw in proptest::collection::vec(proptest::collection::vec(0usize..20, 1..5), 0..8)) {
            let edges: Vec<Vec<usize>> = raw.into_iter().map(|e| e.into_iter().map(|v| v % n).collect()).collect();
            let h = Hypergraph::new(n, edges).unwrap();
            prop_assert_eq!(parse_hypergraph(&h.to_string()).unwrap(), h);
        }

        #[test]
        fn parser_never_panics(s in "\\PC{0,60}") {
            let _ = parse_hypergraph(&s);
        }
    }
}
