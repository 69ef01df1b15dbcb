use std::f64::consts::PI;

use lunebound::verify::{run_inequality_suite, sample_curve, trial_rng, Family, SamplerConfig};
use lunebound::{perimeter_cap, Error};

const CASES: [(f64, f64); 5] = [(0.0, 1.0), (1.0, 1.0), (-1.0, 2.0), (-1.0, 1.0), (-1.0, 0.5)];

#[test]
fn samples_are_simple_closed_and_convex() {
    for (c, lambda) in CASES {
        let cfg = SamplerConfig::new(c, lambda);
        for t in 0..40 {
            let curve = sample_curve(&cfg, &mut trial_rng(0, t)).unwrap();
            assert!(curve.closure_residual() <= 1e-9);
            assert!(curve.is_lambda_convex(lambda).unwrap().convex);
            assert!(curve.is_simple(512).unwrap(), "c={c} λ={lambda} trial {t}");
            assert!(curve.gauss_bonnet_residual().unwrap().abs() <= 1e-8);
            assert!(curve.length() <= perimeter_cap(c, lambda).unwrap() + 1e-9);
        }
    }
}

#[test]
fn eight_piece_flat_profile() {
    let mut cfg = SamplerConfig::new(0.0, 1.0);
    cfg.arc_count = (8, 8);
    let curve = sample_curve(&cfg, &mut trial_rng(0, 0)).unwrap();
    assert!(curve.length() <= 2.0 * PI);
    assert!(curve.is_lambda_convex(1.0).unwrap().convex);
    assert!((2..=8).contains(&curve.arcs().len()));
}

#[test]
fn suites_are_deterministic() {
    for (c, lambda) in [(0.0, 1.0), (-1.0, 0.5)] {
        let mut cfg = SamplerConfig::new(c, lambda);
        cfg.trials = 100;
        cfg.seed = 17;
        let a = run_inequality_suite(&cfg).unwrap();
        let b = run_inequality_suite(&cfg).unwrap();
        let mut x = Vec::new();
        let mut y = Vec::new();
        a.write_records(&mut x).unwrap();
        b.write_records(&mut y).unwrap();
        assert_eq!(x, y);
        assert_eq!(
            serde_json::to_string(&a.summary).unwrap(),
            serde_json::to_string(&b.summary).unwrap()
        );
    }
}

#[test]
fn serial_and_parallel_runs_agree() {
    let mut cfg = SamplerConfig::new(1.0, 1.0);
    cfg.trials = 50;
    let parallel = run_inequality_suite(&cfg).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let serial = pool.install(|| run_inequality_suite(&cfg).unwrap());
    assert_eq!(parallel, serial);
}

#[test]
fn pinned_lunes_attain_the_bound() {
    for (c, lambda) in CASES {
        let mut cfg = SamplerConfig::new(c, lambda);
        cfg.family = Family::PinnedLune;
        cfg.trials = 50;
        let out = run_inequality_suite(&cfg).unwrap();
        assert!(out.summary.ok);
        for r in &out.records {
            assert!(r.slack.abs() <= 1e-8 * r.f_min.max(1.0), "{r:?}");
        }
    }
}

#[test]
fn non_convex_curves_are_not_counterexamples() {
    for (c, lambda) in CASES {
        let mut cfg = SamplerConfig::new(c, lambda);
        cfg.violate_convexity = true;
        cfg.trials = 50;
        let out = run_inequality_suite(&cfg).unwrap();
        assert_eq!(out.summary.failed, 0, "c={c} λ={lambda}");
        assert!(out.summary.out_of_hypothesis >= 45, "c={c} λ={lambda}: {:?}", out.summary);
    }
}

#[test]
fn invalid_configs_are_rejected() {
    let mut cfg = SamplerConfig::new(0.0, 0.0);
    assert!(matches!(run_inequality_suite(&cfg), Err(Error::Input(_))));
    cfg.lambda = 1.0;
    cfg.trials = 0;
    assert!(matches!(run_inequality_suite(&cfg), Err(Error::Input(_))));
}
