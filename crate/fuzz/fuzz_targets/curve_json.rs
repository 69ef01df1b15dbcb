#![no_main]

use lunebound::ClosedCurve;

libfuzzer_sys::fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(curve) = ClosedCurve::from_json_str(text) else {
        return;
    };
    // anything accepted must survive measurement and re-serialization
    let _ = curve.area();
    let _ = curve.is_lambda_convex(1.0);
    let _ = curve.is_simple(8);
    let again = serde_json::to_string(&curve.to_json()).unwrap();
    assert_eq!(ClosedCurve::from_json_str(&again).unwrap(), curve);
});
