//! The graph6 line format.
//!
//! A line is a size header followed by the upper triangle of the adjacency
//! matrix, column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed six
//! bits per byte and offset by 63. Parsing is strict: only the shortest size
//! header is accepted and padding bits must be zero, so every line that parses
//! re-encodes to itself.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Tolerated on read, never written.
pub const HEADER: &str = ">>graph6<<";

/// Default vertex cap for parsed graphs.
pub const DEFAULT_MAX_N: usize = 64;

const SMALL_N: usize = 62;
const MEDIUM_N: usize = 258_047;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_with_cap(text, DEFAULT_MAX_N)
}

/// Parses one graph6 line, rejecting graphs with more than `max_n` vertices.
///
/// A trailing `\n` or `\r\n` is ignored. Error offsets count bytes of the
/// original input, header included.
pub fn parse_graph6_with_cap(text: &str, max_n: usize) -> Result<Graph> {
    let bytes = text.as_bytes();
    let bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);
    let (base, body) = match bytes.strip_prefix(HEADER.as_bytes()) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, bytes),
    };
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: base + offset,
        reason: reason.to_string(),
    };

    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, &format!("byte {:#04x} outside 63..=126", body[pos])));
    }
    let (n, header_len) = decode_size(body).map_err(|(off, why)| err(off, why))?;
    if n == 0 {
        return Err(err(0, "graph has no vertices"));
    }
    if n > max_n {
        return Err(Error::TooLarge { n, cap: max_n });
    }

    let bits = n * (n - 1) / 2;
    let data_len = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < data_len {
        return Err(err(body.len(), "truncated adjacency section"));
    }
    if data.len() > data_len {
        return Err(err(header_len + data_len, "trailing bytes after adjacency section"));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[data_len - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(header_len + data_len - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn decode_size(body: &[u8]) -> std::result::Result<(usize, usize), (usize, &'static str)> {
    let field = |from: usize, len: usize| -> std::result::Result<usize, (usize, &'static str)> {
        let chunk = body
            .get(from..from + len)
            .ok_or((body.len(), "truncated size header"))?;
        Ok(chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63)))
    };
    match body.first() {
        None => Err((0, "empty input")),
        Some(&b) if b != 126 => Ok((usize::from(b - 63), 1)),
        Some(_) if body.get(1) == Some(&126) => {
            let n = field(2, 6)?;
            if n <= MEDIUM_N {
                return Err((0, "size header is not in shortest form"));
            }
            Ok((n, 8))
        }
        Some(_) => {
            let n = field(1, 3)?;
            if n <= SMALL_N {
                return Err((0, "size header is not in shortest form"));
            }
            Ok((n, 4))
        }
    }
}

/// Encodes `g` as a graph6 line without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    if n <= SMALL_N {
        out.push(n as u8 + 63);
    } else {
        let len = if n <= MEDIUM_N { 3 } else { 6 };
        if len == 6 {
            out.push(126);
        }
        out.push(126);
        for i in (0..len).rev() {
            out.push(((n >> (6 * i)) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent encoder written straight from the format description:
    /// build the bit string, pad, chunk.
    fn oracle_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((63 + n as u8) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| a * 2 + u8::from(b));
            s.push((63 + v) as char);
        }
        s
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(oracle_encode(1, &[]), "@");
        assert_eq!(oracle_encode(2, &[(0, 1)]), "A_");
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let k2 = parse_graph6("A_").unwrap();
        assert!(k2.has_edge(0, 1));
        assert_eq!(emit_graph6(&k2), "A_");
        assert_eq!(emit_graph6(&k1), "@");
        let e5 = parse_graph6("D??").unwrap();
        assert_eq!((e5.n(), e5.edge_count()), (5, 0));
    }

    #[test]
    fn known_encoding() {
        // Edges a-c, a-e, b-d, d-e on five vertices.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn header_and_newline_tolerated() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(parse_graph6("A_\r\n").is_ok());
    }

    #[test]
    fn errors_name_offsets() {
        assert!(matches!(parse_graph6("A "), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(
            parse_graph6(">>graph6<<A "),
            Err(Error::Graph6 { offset: 11, .. })
        ));
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6 { offset: 2, .. })));
        // padding bit set: K_2 uses one bit, "A`" sets the second one
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("?"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("~??"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn size_cap() {
        let mut line = String::from("~?@?"); // n = 64
        line.extend(std::iter::repeat_n('?', 64 * 63 / 2 / 6));
        assert_eq!(parse_graph6(&line).unwrap().n(), 64);
        let mut big = String::from("~?@@"); // n = 65
        big.extend(std::iter::repeat_n('?', (65 * 64 / 2usize).div_ceil(6)));
        assert_eq!(parse_graph6(&big), Err(Error::TooLarge { n: 65, cap: 64 }));
        let g = parse_graph6_with_cap(&big, 100).unwrap();
        assert_eq!(g.n(), 65);
        assert_eq!(emit_graph6(&g), big);
    }

    #[test]
    fn non_minimal_header_rejected() {
        let line = format!("~??{}{}", (63 + 5) as u8 as char, "??");
        assert!(matches!(parse_graph6(&line), Err(Error::Graph6 { offset: 0, .. })));
    }

    fn arb_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
        (1usize..=20).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            (n, edges)
        })
    }

    proptest! {
        #[test]
        fn emit_matches_oracle_and_round_trips((n, edges) in arb_graph()) {
            let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
            let line = emit_graph6(&g);
            prop_assert_eq!(&line, &oracle_encode(n, &edges));
            prop_assert_eq!(parse_graph6(&line).unwrap(), g);
        }

        #[test]
        fn parse_then_emit_is_identity(s in "[?-~]{0,12}") {
            if let Ok(g) = parse_graph6(&s) {
                prop_assert_eq!(emit_graph6(&g), s);
            }
        }
    }
}
