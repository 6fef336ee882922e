#![no_main]

use copwin::graph6::{emit_graph6, parse_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_graph6(text) {
        let again = parse_graph6(&emit_graph6(&g)).expect("emitted graph6 parses");
        assert_eq!(again, g);
    }
});
