#![no_main]

use libfuzzer_sys::fuzz_target;

// The generators-file parser must never panic on arbitrary input.
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = stabkit::parse::parse_generators_file(text);
    }
});
