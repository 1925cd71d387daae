#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(desc) = stackcoh::io::parse_descriptor(text) {
            for r in 0..3 {
                let _ = stackcoh::stackcurve::cohomology(&desc, r);
            }
        }
    }
});
