#![no_main]

use copwin::strategy::parse_trace;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = parse_trace(text) {
        assert_eq!(parse_trace(&t.to_text()).expect("emitted trace parses"), t);
    }
});
