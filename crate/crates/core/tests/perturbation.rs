use std::f64::consts::PI;

use lunebound::verify::perturb_lune_test;

#[test]
fn flat_lune_is_locally_minimal() {
    let r = perturb_lune_test(0.0, 1.0, PI, 100, 1e-3, 0).unwrap();
    assert!(r.ok, "{r:?}");
    assert!(r.min_slack >= -1e-9);
}

#[test]
fn horocyclic_lune_is_locally_minimal() {
    let r = perturb_lune_test(-1.0, 1.0, 4.0, 100, 1e-3, 0).unwrap();
    assert!(r.ok, "{r:?}");
}

#[test]
fn zero_magnitude_reproduces_the_lune() {
    for (c, lambda, length) in [(0.0, 1.0, PI), (1.0, 1.0, 3.0), (-1.0, 0.5, 10.0)] {
        let r = perturb_lune_test(c, lambda, length, 5, 0.0, 0).unwrap();
        assert_eq!(r.completed, 5);
        assert!(r.min_slack.abs() <= 1e-10 * r.f_min.max(1.0), "{r:?}");
    }
}

#[test]
fn slack_grows_with_magnitude() {
    let small = perturb_lune_test(1.0, 1.0, 3.0, 20, 1e-4, 1).unwrap();
    let large = perturb_lune_test(1.0, 1.0, 3.0, 20, 1e-2, 1).unwrap();
    assert!(large.max_slack > small.max_slack);
    assert!(small.min_slack >= -1e-9 && large.min_slack >= -1e-9);
}

#[test]
fn bad_inputs() {
    assert!(perturb_lune_test(0.0, 1.0, PI, 0, 1e-3, 0).is_err());
    assert!(perturb_lune_test(0.0, 1.0, PI, 1, -1.0, 0).is_err());
    assert!(perturb_lune_test(1.0, 1.0, 10.0, 1, 1e-3, 0).is_err());
}
