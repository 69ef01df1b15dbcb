#![no_main]

use lunebound::{build_lune, LuneSpec};

libfuzzer_sys::fuzz_target!(|data: [u8; 24]| {
    let v: Vec<f64> = data
        .chunks_exact(8)
        .map(|b| f64::from_le_bytes(b.try_into().unwrap()))
        .collect();
    let (c, lambda, length) = (v[0], v[1], v[2]);
    if let Ok(spec) = LuneSpec::new(c, lambda, length) {
        assert!(spec.theta > 0.0 && spec.theta <= std::f64::consts::PI);
        assert!(spec.turn() >= 0.0);
    }
    if let Ok(lune) = build_lune(c, lambda, length) {
        assert_eq!(lune.arcs().len(), 2);
        let _ = lune.area();
    }
});
