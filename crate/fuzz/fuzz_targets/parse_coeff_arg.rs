#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = stackcoh::io::parse_coeff_arg(text, 0);
        let _ = stackcoh::io::parse_coeff_arg(text, 5);
    }
});
