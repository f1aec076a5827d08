#![no_main]

use libfuzzer_sys::fuzz_target;
use nilorbit::grading::{coweight_from_diagram, g2_model_grading, grade_roots};
use nilorbit::input::parse_int_vector;
use nilorbit::multiplicity::multiplicity;
use nilorbit::rootsys::{RootSystem, Weight};

// The integer-vector parser must never panic. Parsed pairs are then driven
// through the G2 entry points: the full diagram path for any value (the
// library bounds labels itself), and the weight paths for small values
// (weights are exact i64 lattice arithmetic; magnitudes are the caller's
// contract).
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(v) = parse_int_vector(s) else {
        return;
    };
    let rs = RootSystem::g2();
    if v.len() != 2 {
        let _ = coweight_from_diagram(&rs, &v);
        return;
    }
    if let Ok(h) = coweight_from_diagram(&rs, &v) {
        let _ = grade_roots(&rs, &h);
    }
    if v.iter().all(|&c| c.abs() <= 1_000) {
        let lambda = Weight(v);
        let _ = rs.weyl_dimension(&lambda);
        if lambda.is_dominant() && lambda.coord_sum() <= 12 {
            let g = g2_model_grading(&rs);
            let _ = multiplicity(&rs, &g, &lambda);
        }
    }
});
