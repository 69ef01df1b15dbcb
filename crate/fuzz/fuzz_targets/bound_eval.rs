#![no_main]

use lunebound::{perimeter_cap, reverse_bound, BoundQuery};

fn f64_at(data: &[u8], i: usize) -> f64 {
    let mut b = [0u8; 8];
    b.copy_from_slice(&data[8 * i..8 * i + 8]);
    f64::from_le_bytes(b)
}

libfuzzer_sys::fuzz_target!(|data: &[u8]| {
    if data.len() < 24 {
        return;
    }
    let (c, lambda, length) = (f64_at(data, 0), f64_at(data, 1), f64_at(data, 2));
    if let Ok(r) = reverse_bound(&BoundQuery::new(c, lambda, length)) {
        assert!(r.f_min.is_finite() && r.f_min >= 0.0, "{c} {lambda} {length} -> {r:?}");
        assert_eq!(r.cap, perimeter_cap(c, lambda).unwrap());
        assert!(length <= r.cap * (1.0 + 1e-12));
    }
});
