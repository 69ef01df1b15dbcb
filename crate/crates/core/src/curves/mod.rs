//! Closed curves built from arcs of constant geodesic curvature joined at
//! corners.
//!
//! A [`ClosedCurve`] is a start pose followed by the cyclic word
//! `arc₀ turn₀ arc₁ turn₁ … arcₙ₋₁ turnₙ₋₁`; `turnᵢ` is the exterior angle at
//! the junction after `arcᵢ`. For this class of curves the integral geodesic
//! curvature of a piece is `∫κ ds` over its smooth parts plus the corner
//! turns it passes through.

mod json;
mod simple;

pub use json::{ArcJson, CurveJson, PoseJson};

use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::modelspace::{ModelSpace, Point, Pose};
use crate::quadrature;

/// Arcs shorter than this are rejected at construction.
pub const MIN_ARC_LENGTH: f64 = 1e-12;

/// A segment of constant geodesic curvature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub kappa: f64,
    pub s: f64,
}

impl Arc {
    pub fn new(kappa: f64, s: f64) -> Result<Self> {
        ensure_finite("kappa", kappa)?;
        ensure_finite("arc length", s)?;
        if s < MIN_ARC_LENGTH {
            return Err(Error::input(format!(
                "arc length {s:e} is below the minimum {MIN_ARC_LENGTH:e}"
            )));
        }
        Ok(Arc { kappa, s })
    }

    pub fn turning(&self) -> f64 {
        self.kappa * self.s
    }
}

/// A piece of a closed curve: starts `offset` into arc `start_arc` and runs
/// forward for `extent`, wrapping around the curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubArc {
    pub start_arc: usize,
    pub offset: f64,
    pub extent: f64,
}

/// Outcome of the λ-convexity test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Convexity {
    pub convex: bool,
    /// A piece whose turning-to-length ratio falls below λ, with that ratio.
    pub witness: Option<(SubArc, f64)>,
}

/// A closed curve in a model plane.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedCurve {
    space: ModelSpace,
    start: Pose,
    arcs: Vec<Arc>,
    turns: Vec<f64>,
}

/// Frenet frames at the start of every arc, and the frame after the last
/// turn.
///
/// Frames are carried as matrix products rather than rebuilt from poses:
/// recomputing the normal far from the origin loses digits to cancellation.
pub fn frames(space: &ModelSpace, start: &Pose, arcs: &[Arc], turns: &[f64]) -> (Vec<Matrix3<f64>>, Matrix3<f64>) {
    let mut f = space.frame(start);
    let mut starts = Vec::with_capacity(arcs.len());
    for (arc, turn) in arcs.iter().zip(turns) {
        starts.push(f);
        f = ModelSpace::turn_matrix(*turn) * (space.arc_transfer(arc.kappa, arc.s) * f);
    }
    (starts, f)
}

/// Pose reached after tracing `arcs` interleaved with `turns` from `start`.
pub fn trace(space: &ModelSpace, start: &Pose, arcs: &[Arc], turns: &[f64]) -> Pose {
    ModelSpace::pose_of(&frames(space, start, arcs, turns).1)
}

/// Relative closure residual: the largest coordinate mismatch between the
/// traced end pose and `start`, relative to the largest coordinate seen.
pub fn closure_residual(space: &ModelSpace, start: &Pose, arcs: &[Arc], turns: &[f64]) -> f64 {
    let (starts, end) = frames(space, start, arcs, turns);
    let scale = starts
        .iter()
        .map(|f| f.row(0).amax())
        .fold(start.position.0.amax().max(1.0), f64::max);
    let pose = ModelSpace::pose_of(&end);
    let dp = (pose.position.0 - start.position.0).amax();
    let dt = (pose.direction - start.direction).amax();
    dp.max(dt) / scale
}

/// Closure defect as three numbers in the chart of `start`: the two planar
/// coordinates of the traced end point and the heading error.
pub fn closure_defect(
    space: &ModelSpace,
    start: &Pose,
    arcs: &[Arc],
    turns: &[f64],
) -> Result<[f64; 3]> {
    let chart = space.chart_at(start)?;
    let end = trace(space, start, arcs, turns);
    let p = chart.coords(&end.position.0);
    let t = chart.coords(&end.direction);
    Ok([p[1], p[2], t[2].atan2(t[1])])
}

impl ClosedCurve {
    /// Validates the pieces and checks that the curve closes.
    pub fn new(space: ModelSpace, start: Pose, arcs: Vec<Arc>, turns: Vec<f64>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::input("a closed curve needs at least one arc"));
        }
        if arcs.len() != turns.len() {
            return Err(Error::input(format!(
                "{} arcs but {} turns; expected one turn per arc",
                arcs.len(),
                turns.len()
            )));
        }
        for arc in &arcs {
            Arc::new(arc.kappa, arc.s)?;
        }
        for &t in &turns {
            ensure_finite("turn", t)?;
        }
        space.validate_pose(&start)?;
        let residual = closure_residual(&space, &start, &arcs, &turns);
        let tolerance = space.tolerances().closure;
        if !(residual <= tolerance) {
            return Err(Error::NotClosed {
                residual,
                tolerance,
            });
        }
        Ok(ClosedCurve {
            space,
            start,
            arcs,
            turns,
        })
    }

    /// Single-arc circle of geodesic curvature `kappa` starting at the origin.
    pub fn circle(space: ModelSpace, kappa: f64) -> Result<Self> {
        let d = kappa * kappa + space.c();
        if !(d > 0.0) {
            return Err(Error::input(format!(
                "curvature {kappa} does not close into a circle for c = {}",
                space.c()
            )));
        }
        let s = 2.0 * std::f64::consts::PI / d.sqrt();
        Self::new(space, Pose::origin(), vec![Arc::new(kappa, s)?], vec![0.0])
    }

    pub fn space(&self) -> &ModelSpace {
        &self.space
    }

    pub fn start(&self) -> &Pose {
        &self.start
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn turns(&self) -> &[f64] {
        &self.turns
    }

    pub fn closure_residual(&self) -> f64 {
        closure_residual(&self.space, &self.start, &self.arcs, &self.turns)
    }

    /// Perimeter.
    pub fn length(&self) -> f64 {
        self.arcs.iter().map(|a| a.s).sum()
    }

    /// Number of junctions with a nonzero turn.
    pub fn corner_count(&self) -> usize {
        self.turns.iter().filter(|t| **t != 0.0).count()
    }

    pub fn min_curvature(&self) -> f64 {
        self.arcs.iter().map(|a| a.kappa).fold(f64::INFINITY, f64::min)
    }

    /// Pose at the start of each arc (after the preceding turn).
    pub fn arc_start_poses(&self) -> Vec<Pose> {
        self.start_frames().iter().map(ModelSpace::pose_of).collect()
    }

    fn start_frames(&self) -> Vec<Matrix3<f64>> {
        frames(&self.space, &self.start, &self.arcs, &self.turns).0
    }

    /// Pose at the end of each arc, before its turn is applied.
    pub fn arc_end_poses(&self) -> Vec<Pose> {
        self.start_frames()
            .iter()
            .zip(&self.arcs)
            .map(|(f, a)| ModelSpace::pose_of(&(self.space.arc_transfer(a.kappa, a.s) * f)))
            .collect()
    }

    /// Points spaced evenly in arclength, `per_arc` per arc (arc ends excluded).
    pub fn sample_points(&self, per_arc: usize) -> Vec<Point> {
        let mut pts = Vec::with_capacity(per_arc * self.arcs.len());
        for (frame, arc) in self.start_frames().iter().zip(&self.arcs) {
            for j in 0..per_arc {
                let s = arc.s * j as f64 / per_arc as f64;
                let f = self.space.arc_transfer(arc.kappa, s) * frame;
                pts.push(Point(f.row(0).transpose()));
            }
        }
        pts
    }

    /// Total turning: `Σ κᵢ sᵢ + Σ turnᵢ`.
    pub fn total_turning(&self) -> f64 {
        self.arcs.iter().map(Arc::turning).sum::<f64>() + self.turns.iter().sum::<f64>()
    }

    /// Integral geodesic curvature of a piece: `∫κ ds` plus the corners
    /// strictly inside it. A piece spanning the whole curve is the closed
    /// loop and picks up every corner.
    ///
    /// Joining two consecutive pieces adds the corner at the joint, if any:
    /// `turning(a ⊕ b) = turning(a) + turning(b) + corner_at(joint)`.
    pub fn turning(&self, part: &SubArc) -> Result<f64> {
        let total = self.length();
        self.check_part(part, total)?;
        let eps = 1e-14 * total;
        if part.extent >= total - eps {
            return Ok(self.total_turning());
        }
        let n = self.arcs.len();
        let mut i = part.start_arc;
        let mut pos = part.offset;
        let mut remaining = part.extent;
        let mut acc = 0.0;
        loop {
            let arc = &self.arcs[i];
            let take = (arc.s - pos).min(remaining);
            acc += arc.kappa * take;
            remaining -= take;
            if remaining <= eps {
                break;
            }
            acc += self.turns[i];
            i = (i + 1) % n;
            pos = 0.0;
        }
        Ok(acc)
    }

    /// The turn located at arclength `offset` into arc `arc` (nonzero only at
    /// an arc start, where it is the preceding junction's turn).
    pub fn corner_at(&self, arc: usize, offset: f64) -> f64 {
        let n = self.arcs.len();
        if offset == 0.0 {
            self.turns[(arc + n - 1) % n]
        } else if offset >= self.arcs[arc].s {
            self.turns[arc]
        } else {
            0.0
        }
    }

    fn check_part(&self, part: &SubArc, total: f64) -> Result<()> {
        if part.start_arc >= self.arcs.len() {
            return Err(Error::input(format!("arc index {} out of range", part.start_arc)));
        }
        ensure_finite("sub-arc offset", part.offset)?;
        ensure_finite("sub-arc extent", part.extent)?;
        if part.offset < 0.0 || part.offset >= self.arcs[part.start_arc].s {
            return Err(Error::input("sub-arc offset outside its arc"));
        }
        if !(part.extent > 0.0) {
            return Err(Error::input("sub-arc must have positive extent"));
        }
        if part.extent > total * (1.0 + 1e-14) {
            return Err(Error::input("sub-arc longer than the curve"));
        }
        Ok(())
    }

    /// λ-convexity: every piece turns at least λ per unit length.
    ///
    /// For piecewise constant-curvature curves the infimum of
    /// `turning/extent` over pieces is `min κᵢ` as long as every turn is
    /// nonnegative (a corner adds turning at zero length, while pieces inside
    /// a single arc attain `κᵢ` exactly), so the test reduces to
    /// `κᵢ ≥ λ` and `turnᵢ ≥ 0`.
    pub fn is_lambda_convex(&self, lambda: f64) -> Result<Convexity> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::input(format!("lambda must be positive, got {lambda}")));
        }
        let n = self.arcs.len();
        if let Some((i, arc)) = self
            .arcs
            .iter()
            .enumerate()
            .find(|(_, a)| a.kappa < lambda)
        {
            let part = SubArc {
                start_arc: i,
                offset: 0.25 * arc.s,
                extent: 0.5 * arc.s,
            };
            return Ok(Convexity {
                convex: false,
                witness: Some((part, arc.kappa)),
            });
        }
        if let Some(i) = self.turns.iter().position(|t| *t < 0.0) {
            // a short piece straddling the reflex corner
            let j = (i + 1) % n;
            let (a, b) = (&self.arcs[i], &self.arcs[j]);
            let bound = a.kappa.abs().max(b.kappa.abs()) + lambda + 1.0;
            let half = (0.25 * a.s.min(b.s)).min(0.5 * self.turns[i].abs() / bound);
            let part = SubArc {
                start_arc: i,
                offset: a.s - half,
                extent: 2.0 * half,
            };
            let ratio = self.turning(&part)? / part.extent;
            return Ok(Convexity {
                convex: false,
                witness: Some((part, ratio)),
            });
        }
        Ok(Convexity {
            convex: true,
            witness: None,
        })
    }

    /// A pose at an interior reference point: the normalized mean of points
    /// sampled along the curve.
    fn interior_pose(&self) -> Result<Pose> {
        let pts = self.sample_points(4);
        let mean = pts.iter().fold(nalgebra::Vector3::zeros(), |acc, p| acc + p.0) / pts.len() as f64;
        let center = self.space.normalize_point(&mean)?;
        self.space.pose_at(center)
    }

    /// Enclosed area by Green's theorem.
    ///
    /// In a chart centered at an interior point, with coordinates
    /// `(a, x, y)`, the 1-form `(x dy − y dx)/(1 + a)` has exterior derivative
    /// equal to the area form in every model plane (it is `vc(r) dθ` in
    /// geodesic polar coordinates), so the area is its integral along the
    /// positively oriented boundary. Each arc is integrated with adaptive
    /// Gauss–Legendre quadrature.
    pub fn area_quadrature(&self) -> Result<f64> {
        let chart = self.space.chart_at(&self.interior_pose()?)?;
        let tol = self.space.tolerances().quadrature;
        let mut total = 0.0;
        for (frame, arc) in self.start_frames().iter().zip(&self.arcs) {
            let integrand = |t: f64| {
                let f = self.space.arc_transfer(arc.kappa, t) * frame;
                let p = chart.coords(&f.row(0).transpose());
                let v = chart.coords(&f.row(1).transpose());
                (p[1] * v[2] - p[2] * v[1]) / (1.0 + p[0])
            };
            total += quadrature::integrate(integrand, 0.0, arc.s, tol);
        }
        Ok(total)
    }

    /// Area from Gauss–Bonnet, `(2π − total turning)/c`; `None` when `c = 0`.
    pub fn area_gauss_bonnet(&self) -> Option<f64> {
        let c = self.space.c();
        (c != 0.0).then(|| (2.0 * std::f64::consts::PI - self.total_turning()) / c)
    }

    /// Enclosed area. Returns the quadrature value after checking it against
    /// the Gauss–Bonnet value when `c ≠ 0`.
    pub fn area(&self) -> Result<f64> {
        let quad = self.area_quadrature()?;
        if let Some(gb) = self.area_gauss_bonnet() {
            let rel = (quad - gb).abs() / quad.abs().max(gb.abs()).max(f64::MIN_POSITIVE);
            let tol = self.space.tolerances().area_agreement;
            if !(rel <= tol) {
                return Err(Error::Consistency(format!(
                    "quadrature area {quad} and Gauss-Bonnet area {gb} differ by {rel:e} (relative)"
                )));
            }
        }
        Ok(quad)
    }

    /// `c·area + total turning − 2π` with the quadrature area.
    pub fn gauss_bonnet_residual(&self) -> Result<f64> {
        Ok(self.space.c() * self.area_quadrature()? + self.total_turning()
            - 2.0 * std::f64::consts::PI)
    }

    /// True when a polyline through `per_arc` samples per arc has no
    /// crossing between non-adjacent segments.
    pub fn is_simple(&self, per_arc: usize) -> Result<bool> {
        let chart = self.space.chart_at(&self.interior_pose()?)?;
        let mut pts = Vec::new();
        for p in self.sample_points(per_arc.max(2)) {
            let u = chart.coords(&p.0);
            if !(u[0] > 0.0) {
                return Err(Error::input("curve leaves the projectable hemisphere"));
            }
            // geodesics become straight lines under this projection
            pts.push([u[1] / u[0], u[2] / u[0]]);
        }
        Ok(!simple::polygon_self_intersects(&pts))
    }

    /// Splits arc `index` at `at` into two arcs with a zero turn between them.
    pub fn split_arc(&self, index: usize, at: f64) -> Result<Self> {
        let arc = *self
            .arcs
            .get(index)
            .ok_or_else(|| Error::input("arc index out of range"))?;
        let first = Arc::new(arc.kappa, at)?;
        let second = Arc::new(arc.kappa, arc.s - at)?;
        let mut arcs = self.arcs.clone();
        let mut turns = self.turns.clone();
        arcs.splice(index..=index, [first, second]);
        turns.insert(index, 0.0);
        Self::new(self.space, self.start, arcs, turns)
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson::from(self)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: CurveJson =
            serde_json::from_str(s).map_err(|e| Error::input(format!("curve JSON: {e}")))?;
        Self::try_from(raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn unit_circle() -> ClosedCurve {
        ClosedCurve::circle(ModelSpace::euclidean(), 1.0).unwrap()
    }

    /// Square with side `a` in the plane, as four straight arcs.
    fn square(a: f64) -> ClosedCurve {
        ClosedCurve::new(
            ModelSpace::euclidean(),
            Pose::origin(),
            vec![Arc::new(0.0, a).unwrap(); 4],
            vec![PI / 2.0; 4],
        )
        .unwrap()
    }

    #[test]
    fn length_examples() {
        assert_relative_eq!(unit_circle().length(), 2.0 * PI);
        // two semicircles of curvature 0.5·π each of length 2
        let kappa = PI / 2.0;
        let c = ClosedCurve::new(
            ModelSpace::euclidean(),
            Pose::origin(),
            vec![Arc::new(kappa, 2.0).unwrap(); 2],
            vec![0.0; 2],
        )
        .unwrap();
        assert_eq!(c.length(), 4.0);
    }

    #[test]
    fn turning_examples() {
        let circle = unit_circle();
        let whole = SubArc { start_arc: 0, offset: 0.0, extent: 2.0 * PI };
        assert_relative_eq!(circle.turning(&whole).unwrap(), 2.0 * PI);
        let piece = SubArc { start_arc: 0, offset: 0.3, extent: 1.1 };
        assert_relative_eq!(circle.turning(&piece).unwrap(), 1.1, max_relative = 1e-15);

        let sq = square(1.0);
        // from the middle of side 0 to the middle of side 2: two corners
        let part = SubArc { start_arc: 0, offset: 0.5, extent: 2.0 };
        assert_relative_eq!(sq.turning(&part).unwrap(), PI);
        // exactly one side: no interior corner
        let side = SubArc { start_arc: 1, offset: 0.0, extent: 1.0 };
        assert_eq!(sq.turning(&side).unwrap(), 0.0);
        assert!(sq
            .turning(&SubArc { start_arc: 0, offset: 0.0, extent: 0.0 })
            .is_err());
    }

    #[test]
    fn turning_is_additive_up_to_the_joint_corner() {
        let sq = square(2.0);
        let a = SubArc { start_arc: 0, offset: 0.7, extent: 1.3 };
        let b = SubArc { start_arc: 1, offset: 0.0, extent: 3.1 };
        let joined = SubArc { start_arc: 0, offset: 0.7, extent: 4.4 };
        let lhs = sq.turning(&joined).unwrap();
        let rhs = sq.turning(&a).unwrap() + sq.turning(&b).unwrap() + sq.corner_at(1, 0.0);
        assert_relative_eq!(lhs, rhs, max_relative = 1e-15);
    }

    #[test]
    fn convexity_examples() {
        let circle = unit_circle();
        assert!(circle.is_lambda_convex(1.0).unwrap().convex);
        let v = circle.is_lambda_convex(1.01).unwrap();
        assert!(!v.convex);
        let (part, ratio) = v.witness.unwrap();
        assert!(ratio < 1.01);
        assert_relative_eq!(circle.turning(&part).unwrap() / part.extent, ratio);
        assert!(circle.is_lambda_convex(0.0).is_err());
        assert!(circle.is_lambda_convex(-1.0).is_err());
    }

    #[test]
    fn reflex_corner_witness() {
        // Unit-square-like curve with one reflex corner is not closed, so build
        // an arrow: triangle-ish with one negative turn.
        let e = ModelSpace::euclidean();
        let pts: [[f64; 2]; 5] = [[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [1.0, 1.0], [0.0, 2.0]];
        let mut arcs = Vec::new();
        let mut turns = Vec::new();
        let heading = |a: [f64; 2], b: [f64; 2]| (b[1] - a[1]).atan2(b[0] - a[0]);
        for i in 0..5 {
            let (a, b, c) = (pts[i], pts[(i + 1) % 5], pts[(i + 2) % 5]);
            arcs.push(Arc::new(0.0, ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt()).unwrap());
            let mut t = heading(b, c) - heading(a, b);
            if t > PI {
                t -= 2.0 * PI;
            }
            if t < -PI {
                t += 2.0 * PI;
            }
            turns.push(t);
        }
        let curve = ClosedCurve::new(e, Pose::origin(), arcs, turns).unwrap();
        let v = curve.is_lambda_convex(1e-3).unwrap();
        assert!(!v.convex);
        // arcs are straight so the first witness is the zero-curvature arc
        assert_eq!(v.witness.unwrap().1, 0.0);
    }

    #[test]
    fn circle_areas_match_cap_formulas() {
        assert_relative_eq!(unit_circle().area().unwrap(), PI, max_relative = 1e-12);
        let s = ClosedCurve::circle(ModelSpace::spherical(1.0).unwrap(), 1.0).unwrap();
        // cot r = 1, cap area 2π(1 − cos r)
        let cap = 2.0 * PI * (1.0 - (PI / 4.0).cos());
        assert_relative_eq!(s.area().unwrap(), cap, max_relative = 1e-10);
        assert_relative_eq!(cap, 1.840_302_369_021_220_2, max_relative = 1e-15);
        let h = ClosedCurve::circle(ModelSpace::hyperbolic(1.0).unwrap(), 2.0).unwrap();
        // coth r = 2, area 2π(cosh r − 1)
        let r = 0.5 * (3.0f64).ln();
        assert_relative_eq!(h.area().unwrap(), 2.0 * PI * (r.cosh() - 1.0), max_relative = 1e-10);
        assert_relative_eq!(h.area().unwrap(), 0.972_012_149_757_284_9, max_relative = 1e-10);
    }

    #[test]
    fn square_area_and_residual() {
        let sq = square(1.5);
        assert_relative_eq!(sq.area().unwrap(), 2.25, max_relative = 1e-12);
        assert!(sq.gauss_bonnet_residual().unwrap().abs() < 1e-12);
    }

    #[test]
    fn gauss_bonnet_examples() {
        assert!(unit_circle().gauss_bonnet_residual().unwrap().abs() < 1e-12);
        let s = ClosedCurve::circle(ModelSpace::spherical(1.0).unwrap(), 1.0).unwrap();
        assert!(s.gauss_bonnet_residual().unwrap().abs() < 1e-8);
    }

    #[test]
    fn open_curve_is_rejected() {
        let e = ModelSpace::euclidean();
        let err = ClosedCurve::new(e, Pose::origin(), vec![Arc::new(1.0, 3.0).unwrap()], vec![0.0]);
        assert!(matches!(err, Err(Error::NotClosed { .. })));
        assert!(ClosedCurve::new(e, Pose::origin(), vec![], vec![]).is_err());
        assert!(Arc::new(1.0, 1e-13).is_err());
        assert!(ClosedCurve::new(e, Pose::origin(), vec![Arc::new(1.0, 2.0 * PI).unwrap()], vec![]).is_err());
    }

    #[test]
    fn split_preserves_observables() {
        let s = ClosedCurve::circle(ModelSpace::spherical(1.0).unwrap(), 1.3).unwrap();
        let t = s.split_arc(0, 1.0).unwrap();
        assert_eq!(t.arcs().len(), 2);
        assert!((s.length() - t.length()).abs() < 1e-12);
        assert!((s.total_turning() - t.total_turning()).abs() < 1e-12);
        assert!((s.area().unwrap() - t.area().unwrap()).abs() < 1e-12);
    }

    #[test]
    fn simplicity_scan() {
        assert!(unit_circle().is_simple(512).unwrap());
        assert!(square(1.0).is_simple(64).unwrap());
        // a circle traversed twice is closed but not simple
        let twice = ClosedCurve::new(
            ModelSpace::euclidean(),
            Pose::origin(),
            vec![Arc::new(1.0, 3.0 * PI).unwrap(), Arc::new(1.0, PI).unwrap()],
            vec![0.0, 0.0],
        )
        .unwrap();
        assert!(!twice.is_simple(64).unwrap());
    }
}
