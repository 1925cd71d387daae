#![no_main]

use libfuzzer_sys::fuzz_target;
use stackcoh::gcoh::{group_cohomology, ModuleDescriptor};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = stackcoh::io::parse_group_arg(text) {
            let _ = group_cohomology(&g, &ModuleDescriptor::integers(), 2);
        }
    }
});
