//! Replays the checked-in fuzz corpus through the parsers.

use std::fs;
use std::path::PathBuf;

use copwin::graph6::{emit_graph6, parse_graph6};
use copwin::strategy::parse_trace;
use copwin::traps::parse_hypergraph;

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            let text = fs::read_to_string(&path).unwrap();
            (path, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn graph6_seeds_parse_and_round_trip() {
    for (path, text) in seeds("parse_graph6") {
        let g = parse_graph6(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn hypergraph_seeds_parse_and_round_trip() {
    for (path, text) in seeds("parse_hypergraph") {
        let h = parse_hypergraph(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(h.to_string(), text);
    }
}

#[test]
fn trace_seeds_parse_and_round_trip() {
    for (path, text) in seeds("parse_trace") {
        let t = parse_trace(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(t.to_text(), text);
    }
}
