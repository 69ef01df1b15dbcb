//! Randomized and perturbative verification of the reverse isoperimetric
//! inequality.
//!
//! Every trial draws its randomness from its own ChaCha20 stream
//! (`seed`, stream = trial index), so results do not depend on the number of
//! worker threads or the order in which trials finish.

mod newton;
mod sampler;

use std::io::Write;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, alexandrov_upper_bound, classical_isoperimetric_gap, BoundQuery};
use crate::curves::{closure_defect, Arc, ClosedCurve, CurveJson};
use crate::error::{Error, Result};
use crate::lune::LuneSpec;
use crate::modelspace::{ModelSpace, Pose};

pub use newton::{reduce, solve, Best, NewtonOptions};
pub use sampler::{arc_between, sample_curve, trial_rng, Family, SamplerConfig};

/// Absolute tolerance of the sandwich checks. The classical gap, a
/// difference of terms of size `L²`, is checked against this times
/// `max(1, L²)`.
pub const SANDWICH_TOLERANCE: f64 = 1e-9;
/// Gauss–Bonnet residual allowed for a sampled curve, times `max(1, F)`.
pub const GAUSS_BONNET_TOLERANCE: f64 = 1e-8;
/// Largest tolerated fraction of skipped trials.
pub const MAX_SKIP_RATE: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The curve is not λ-convex, so the inequality makes no claim about it.
    OutOfHypothesis,
    /// Sampling failed; nothing was measured.
    Skipped,
}

/// One trial. Quantities that could not be measured are NaN (`null` in JSON).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    #[serde(rename = "L")]
    pub length: f64,
    #[serde(rename = "F")]
    pub area: f64,
    pub min_curvature: f64,
    pub corner_count: usize,
    #[serde(rename = "F_min")]
    pub f_min: f64,
    pub slack: f64,
    pub classical_gap: f64,
    pub upper_bound: f64,
    pub gauss_bonnet_residual: f64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl TrialRecord {
    fn skipped(trial: u64, reason: String) -> Self {
        TrialRecord {
            trial,
            length: f64::NAN,
            area: f64::NAN,
            min_curvature: f64::NAN,
            corner_count: 0,
            f_min: f64::NAN,
            slack: f64::NAN,
            classical_gap: f64::NAN,
            upper_bound: f64::NAN,
            gauss_bonnet_residual: f64::NAN,
            verdict: Verdict::Skipped,
            reason: Some(reason),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub c: f64,
    pub lambda: f64,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub out_of_hypothesis: usize,
    pub skipped: usize,
    pub skip_rate: f64,
    /// Sampled perimeters above the cap (counted among the failures).
    pub cap_violations: usize,
    pub max_length: f64,
    #[serde(serialize_with = "bounds::serialize_cap")]
    pub cap: f64,
    /// Smallest `F − F_min` over in-hypothesis trials.
    pub min_slack: f64,
    pub min_slack_trial: Option<u64>,
    pub min_slack_curve: Option<CurveJson>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub records: Vec<TrialRecord>,
    pub summary: SuiteSummary,
}

impl SuiteOutcome {
    /// Writes one JSON object per trial.
    pub fn write_records(&self, mut out: impl Write) -> std::io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

/// Samples `config.trials` curves and checks
/// `F_min(L) ≤ F ≤ L²/(2(2π − ω⁺))` and `L² − 4πF + cF² ≥ 0` on each.
pub fn run_inequality_suite(config: &SamplerConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let cap = bounds::perimeter_cap(config.c, config.lambda)?;
    let results: Vec<(TrialRecord, Option<ClosedCurve>)> = (0..config.trials as u64)
        .into_par_iter()
        .map(|i| run_trial(config, i))
        .collect();

    let mut summary = SuiteSummary {
        c: config.c,
        lambda: config.lambda,
        seed: config.seed,
        trials: config.trials,
        passed: 0,
        failed: 0,
        out_of_hypothesis: 0,
        skipped: 0,
        skip_rate: 0.0,
        cap_violations: 0,
        max_length: 0.0,
        cap,
        min_slack: f64::INFINITY,
        min_slack_trial: None,
        min_slack_curve: None,
        ok: false,
    };
    let mut records = Vec::with_capacity(results.len());
    for (record, curve) in results {
        match record.verdict {
            Verdict::Pass => summary.passed += 1,
            Verdict::Fail => summary.failed += 1,
            Verdict::OutOfHypothesis => summary.out_of_hypothesis += 1,
            Verdict::Skipped => summary.skipped += 1,
        }
        if matches!(record.verdict, Verdict::Pass | Verdict::Fail) {
            summary.max_length = summary.max_length.max(record.length);
            if record.length > cap + SANDWICH_TOLERANCE {
                summary.cap_violations += 1;
            }
            if record.slack < summary.min_slack {
                summary.min_slack = record.slack;
                summary.min_slack_trial = Some(record.trial);
                summary.min_slack_curve = curve.map(|c| c.to_json());
            }
        }
        records.push(record);
    }
    summary.skip_rate = summary.skipped as f64 / config.trials as f64;
    summary.ok = summary.failed == 0 && summary.skip_rate <= MAX_SKIP_RATE;
    Ok(SuiteOutcome { records, summary })
}

fn run_trial(config: &SamplerConfig, trial: u64) -> (TrialRecord, Option<ClosedCurve>) {
    let mut rng = trial_rng(config.seed, trial);
    let curve = match sample_curve(config, &mut rng) {
        Ok(curve) => curve,
        Err(e) => return (TrialRecord::skipped(trial, e.to_string()), None),
    };
    let record = match measure(config, trial, &curve) {
        Ok(r) => r,
        Err(e) => {
            let mut r = TrialRecord::skipped(trial, e.to_string());
            r.length = curve.length();
            r.min_curvature = curve.min_curvature();
            r.corner_count = curve.corner_count();
            r.verdict = Verdict::Fail;
            r
        }
    };
    (record, Some(curve))
}

fn measure(config: &SamplerConfig, trial: u64, curve: &ClosedCurve) -> Result<TrialRecord> {
    let c = config.c;
    let length = curve.length();
    // Gauss-Bonnet gives the area from arc data alone, far more precisely
    // than quadrature on large curves; quadrature enters via the residual.
    let area = match curve.area_gauss_bonnet() {
        Some(a) => a,
        None => curve.area_quadrature()?,
    };
    let mut record = TrialRecord {
        trial,
        length,
        area,
        min_curvature: curve.min_curvature(),
        corner_count: curve.corner_count(),
        f_min: f64::NAN,
        slack: f64::NAN,
        classical_gap: classical_isoperimetric_gap(c, length, area),
        upper_bound: f64::NAN,
        gauss_bonnet_residual: curve.gauss_bonnet_residual()?,
        verdict: Verdict::Pass,
        reason: None,
    };
    if !curve.is_lambda_convex(config.lambda)?.convex {
        record.verdict = Verdict::OutOfHypothesis;
        return Ok(record);
    }
    let mut failures = Vec::new();
    match bounds::reverse_bound(&BoundQuery::new(c, config.lambda, length)) {
        Ok(b) => {
            record.f_min = b.f_min + config.bound_bias;
            record.slack = area - record.f_min;
            if !(record.slack >= -SANDWICH_TOLERANCE) {
                failures.push(format!("area below bound by {:e}", -record.slack));
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    match alexandrov_upper_bound(c, area, length) {
        Ok(upper) => {
            record.upper_bound = upper;
            if !(area <= upper + SANDWICH_TOLERANCE) {
                failures.push(format!("area exceeds upper bound {upper}"));
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    if !(record.classical_gap >= -SANDWICH_TOLERANCE * (length * length).max(1.0)) {
        failures.push(format!("classical gap {:e}", record.classical_gap));
    }
    if !(record.gauss_bonnet_residual.abs() <= GAUSS_BONNET_TOLERANCE * area.max(1.0)) {
        failures.push(format!("Gauss-Bonnet residual {:e}", record.gauss_bonnet_residual));
    }
    if !failures.is_empty() {
        record.verdict = Verdict::Fail;
        record.reason = Some(failures.join("; "));
    }
    Ok(record)
}

/// Result of [`perturb_lune_test`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerturbationReport {
    pub c: f64,
    pub lambda: f64,
    #[serde(rename = "L")]
    pub length: f64,
    #[serde(rename = "F_min")]
    pub f_min: f64,
    pub magnitude: f64,
    pub requested: usize,
    pub completed: usize,
    pub skipped: Vec<String>,
    /// Smallest `F − F_min(L)` over completed perturbations.
    pub min_slack: f64,
    pub max_slack: f64,
    pub ok: bool,
}

/// Pieces per lune half in a perturbation.
const PIECES: usize = 4;

/// Perturbs the lune for `(c, lambda, length)` and measures the area excess.
///
/// Each half of the lune is split into four arcs whose curvatures are raised
/// to `λ(1 + magnitude·|X|)` and whose length shares are jittered by the
/// same relative amount; small convex corners are inserted at random between
/// pieces. The two half-length scales and the two vertex turns are then
/// re-solved by Newton so that the curve closes with perimeter exactly
/// `length`. Perturbations whose solved turns come out negative are skipped.
pub fn perturb_lune_test(
    c: f64,
    lambda: f64,
    length: f64,
    n_perturbations: usize,
    magnitude: f64,
    seed: u64,
) -> Result<PerturbationReport> {
    let spec = LuneSpec::new(c, lambda, length)?;
    if spec.at_cap {
        return Err(Error::input("the perturbation test needs a perimeter strictly below the cap"));
    }
    if !(magnitude >= 0.0) || !magnitude.is_finite() {
        return Err(Error::input(format!("invalid magnitude {magnitude}")));
    }
    if n_perturbations == 0 {
        return Err(Error::input("at least one perturbation is required"));
    }
    let space = ModelSpace::new(c)?;
    let outcomes: Vec<Result<f64>> = (0..n_perturbations as u64)
        .into_par_iter()
        .map(|i| perturbed_slack(&space, &spec, magnitude, &mut trial_rng(seed, i)))
        .collect();

    let mut report = PerturbationReport {
        c,
        lambda,
        length,
        f_min: spec.f_min,
        magnitude,
        requested: n_perturbations,
        completed: 0,
        skipped: Vec::new(),
        min_slack: f64::INFINITY,
        max_slack: f64::NEG_INFINITY,
        ok: false,
    };
    for (i, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok(slack) => {
                report.completed += 1;
                report.min_slack = report.min_slack.min(slack);
                report.max_slack = report.max_slack.max(slack);
            }
            Err(e) => report.skipped.push(format!("perturbation {i}: {e}")),
        }
    }
    let skip_rate = report.skipped.len() as f64 / n_perturbations as f64;
    report.ok = report.completed > 0
        && report.min_slack >= -SANDWICH_TOLERANCE
        && skip_rate <= MAX_SKIP_RATE;
    Ok(report)
}

struct Half {
    kappas: [f64; PIECES],
    shares: [f64; PIECES],
    corners: [f64; PIECES - 1],
}

impl Half {
    fn sample(lambda: f64, magnitude: f64, rng: &mut impl Rng) -> Self {
        let mut normal = || -> f64 { StandardNormal.sample(rng) };
        let kappas = std::array::from_fn(|_| lambda * (1.0 + magnitude * normal().abs()));
        let raw: [f64; PIECES] = std::array::from_fn(|_| (1.0 + magnitude * normal()).max(0.5));
        let total: f64 = raw.iter().sum();
        let shares = raw.map(|w| w / total);
        let corners = std::array::from_fn(|_| {
            let x = normal();
            if x > 1.0 {
                magnitude * (x - 1.0)
            } else {
                0.0
            }
        });
        Half {
            kappas,
            shares,
            corners,
        }
    }

    fn push(&self, half_length: f64, vertex_turn: f64, arcs: &mut Vec<Arc>, turns: &mut Vec<f64>) -> Result<()> {
        for j in 0..PIECES {
            arcs.push(Arc::new(self.kappas[j], self.shares[j] * half_length)?);
            turns.push(if j + 1 < PIECES { self.corners[j] } else { vertex_turn });
        }
        Ok(())
    }
}

fn perturbed_slack(space: &ModelSpace, spec: &LuneSpec, magnitude: f64, rng: &mut impl Rng) -> Result<f64> {
    let halves = [
        Half::sample(spec.lambda, magnitude, rng),
        Half::sample(spec.lambda, magnitude, rng),
    ];
    let half = 0.5 * spec.length;
    let build = |x: &[f64; 4]| -> Result<(Vec<Arc>, Vec<f64>)> {
        let mut arcs = Vec::with_capacity(2 * PIECES);
        let mut turns = Vec::with_capacity(2 * PIECES);
        halves[0].push(x[0] * half, x[2], &mut arcs, &mut turns)?;
        halves[1].push(x[1] * half, x[3], &mut arcs, &mut turns)?;
        Ok((arcs, turns))
    };
    let residual = |x: &[f64; 4]| -> Result<[f64; 4]> {
        let (arcs, turns) = build(x)?;
        let d = closure_defect(space, &Pose::origin(), &arcs, &turns)?;
        Ok([d[0], d[1], d[2], (x[0] + x[1] - 2.0) * half])
    };
    let turn = spec.turn();
    // closure defects of long curves bottom out near 1e-10 per unit length
    let opts = NewtonOptions {
        target: NewtonOptions::default().target * spec.length.max(1.0),
        ..NewtonOptions::default()
    };
    let x = solve(residual, [1.0, 1.0, turn, turn], &opts)?;
    if x[2] < 0.0 || x[3] < 0.0 {
        return Err(Error::Consistency(format!(
            "solved vertex turns ({}, {}) are not convex",
            x[2], x[3]
        )));
    }
    let (arcs, turns) = build(&x)?;
    let curve = ClosedCurve::new(*space, Pose::origin(), arcs, turns)?;
    if !curve.is_lambda_convex(spec.lambda)?.convex {
        return Err(Error::Consistency("perturbed curve is not λ-convex".into()));
    }
    let f_min = bounds::reverse_bound(&BoundQuery::new(space.c(), spec.lambda, curve.length()))?.f_min;
    Ok(curve.area_quadrature()? - f_min)
}
