#![no_main]

use libfuzzer_sys::fuzz_target;

// The expression parser must never panic on arbitrary input. The file:
// resolver is stubbed out so fuzzing stays hermetic.
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = stabkit::parse::parse_group_expr_with(text, &|_| {
            Err(stabkit::Error::rejected("no file access under fuzzing".to_string()))
        });
    }
});
