#![no_main]

use libfuzzer_sys::fuzz_target;
use nilorbit::report::ComputeReport;

// Any JSON that deserializes into a report must re-serialize and re-parse to
// the same value: the determinism contract of the report schema.
fuzz_target!(|data: &[u8]| {
    let Ok(report) = serde_json::from_slice::<ComputeReport>(data) else {
        return;
    };
    let json = serde_json::to_string(&report).expect("report reserializes");
    let again: ComputeReport = serde_json::from_str(&json).expect("round trip parses");
    assert_eq!(again, report);
});
