#![no_main]

use copwin::traps::parse_hypergraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(h) = parse_hypergraph(text) {
        assert_eq!(parse_hypergraph(&h.to_string()).expect("emitted text parses"), h);
    }
});
