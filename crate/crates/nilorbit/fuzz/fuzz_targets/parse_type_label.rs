#![no_main]

use libfuzzer_sys::fuzz_target;

// The type-label parser must never panic, and every label it accepts must be
// constructible (or rejected with a typed error) without panicking.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((series, Some(rank))) = nilorbit::input::parse_type_label(s) {
        let _ = nilorbit::rootsys::RootSystem::build(series, rank);
    }
});
