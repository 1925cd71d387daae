#![no_main]

use libfuzzer_sys::fuzz_target;
use stackcoh::io::{parse_group_value, render_group_value};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(v) = parse_group_value(text) {
            let again = parse_group_value(&render_group_value(&v)).expect("rendering parses");
            assert_eq!(again, v);
        }
    }
});
