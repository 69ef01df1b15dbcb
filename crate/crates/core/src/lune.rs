//! The extremal λ-convex lune: two arcs of geodesic curvature λ and length
//! `L/2` meeting at two equal corners.

use std::f64::consts::PI;

use serde::Serialize;

use crate::bounds::{self, BoundCase, BoundQuery};
use crate::curves::{Arc, ClosedCurve};
use crate::error::{Error, Result};
use crate::modelspace::{ModelSpace, Pose};

/// Turns within this distance below zero (rounding at the cap) are clamped.
const TURN_SLACK: f64 = 1e-12;

/// Parameters of a lune and its derived vertex angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LuneSpec {
    pub c: f64,
    pub lambda: f64,
    #[serde(rename = "L")]
    pub length: f64,
    #[serde(rename = "F_min")]
    pub f_min: f64,
    /// Interior angle at each vertex, `(λL + c·F_min)/2` by Gauss–Bonnet.
    pub theta: f64,
    pub case: BoundCase,
    #[serde(serialize_with = "bounds::serialize_cap")]
    pub cap: f64,
    pub at_cap: bool,
}

impl LuneSpec {
    pub fn new(c: f64, lambda: f64, length: f64) -> Result<Self> {
        let bound = bounds::reverse_bound(&BoundQuery::new(c, lambda, length))?;
        let theta = 0.5 * (lambda * length + c * bound.f_min);
        if !(theta > 0.0) || theta > PI + TURN_SLACK {
            return Err(Error::Consistency(format!(
                "vertex angle {theta} outside (0, π]"
            )));
        }
        Ok(LuneSpec {
            c,
            lambda,
            length,
            f_min: bound.f_min,
            theta: theta.min(PI),
            case: bound.case,
            cap: bound.cap,
            at_cap: bound.at_cap,
        })
    }

    /// Exterior turn at each vertex.
    pub fn turn(&self) -> f64 {
        let t = PI - self.theta;
        if t < 0.0 && t > -TURN_SLACK {
            0.0
        } else {
            t
        }
    }
}

/// Builds the lune from the canonical pose: arc, turn, arc, turn.
pub fn build_lune(c: f64, lambda: f64, length: f64) -> Result<ClosedCurve> {
    let spec = LuneSpec::new(c, lambda, length)?;
    lune_from_spec(&spec)
}

pub fn lune_from_spec(spec: &LuneSpec) -> Result<ClosedCurve> {
    let space = ModelSpace::new(spec.c)?;
    let arc = Arc::new(spec.lambda, 0.5 * spec.length)?;
    let turn = spec.turn();
    ClosedCurve::new(space, Pose::origin(), vec![arc, arc], vec![turn, turn])
}

/// Certification of a lune against the bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityReport {
    pub c: f64,
    pub lambda: f64,
    #[serde(rename = "L")]
    pub length: f64,
    pub area: f64,
    #[serde(rename = "F_min")]
    pub f_min: f64,
    pub case: BoundCase,
    pub relative_gap: f64,
    pub lambda_convex: bool,
    pub gauss_bonnet_residual: f64,
    pub closure_residual: f64,
    /// Interior angle at the closing vertex, measured from the traced tangents.
    pub measured_theta: f64,
    pub theta: f64,
    /// The lune has degenerated into a smooth circle (perimeter at the cap).
    pub smooth_circle: bool,
    pub failures: Vec<String>,
}

impl EqualityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Relative equality gap tolerated when certifying a lune.
pub const EQUALITY_TOLERANCE: f64 = 1e-8;
/// Gauss–Bonnet residual tolerated when certifying a lune.
pub const GAUSS_BONNET_TOLERANCE: f64 = 1e-8;

/// Measures the curve and compares it with the bound for `lambda`.
pub fn equality_report(curve: &ClosedCurve, lambda: f64) -> Result<EqualityReport> {
    let c = curve.space().c();
    let length = curve.length();
    let spec = LuneSpec::new(c, lambda, length)?;
    let area = curve.area_quadrature()?;
    let relative_gap = (area - spec.f_min).abs() / spec.f_min;
    let convexity = curve.is_lambda_convex(lambda)?;
    let gb = curve.gauss_bonnet_residual()?;
    let ends = curve.arc_end_poses();
    let last = ends.last().expect("curve has arcs");
    let measured_turn = curve.space().angle_between(last, &curve.start().direction);
    let measured_theta = PI - measured_turn;

    let mut failures = Vec::new();
    if curve.arcs().len() != 2 {
        failures.push(format!("expected 2 arcs, found {}", curve.arcs().len()));
    }
    if !(relative_gap <= EQUALITY_TOLERANCE) {
        failures.push(format!("equality gap {relative_gap:e} exceeds {EQUALITY_TOLERANCE:e}"));
    }
    if !convexity.convex {
        failures.push(format!("curve is not {lambda}-convex"));
    }
    if !(gb.abs() <= GAUSS_BONNET_TOLERANCE) {
        failures.push(format!("Gauss-Bonnet residual {gb:e} exceeds {GAUSS_BONNET_TOLERANCE:e}"));
    }
    Ok(EqualityReport {
        c,
        lambda,
        length,
        area,
        f_min: spec.f_min,
        case: spec.case,
        relative_gap,
        lambda_convex: convexity.convex,
        gauss_bonnet_residual: gb,
        closure_residual: curve.closure_residual(),
        measured_theta,
        theta: spec.theta,
        smooth_circle: spec.at_cap,
        failures,
    })
}

/// Certifies that `curve` attains the bound; fails listing every violated check.
pub fn certify_equality(curve: &ClosedCurve, lambda: f64) -> Result<EqualityReport> {
    let report = equality_report(curve, lambda)?;
    if report.passed() {
        Ok(report)
    } else {
        Err(Error::Certification(report.failures))
    }
}
