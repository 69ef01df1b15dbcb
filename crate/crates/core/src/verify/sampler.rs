//! Random λ-convex closed curves.
//!
//! Three families are available:
//!
//! - [`Family::Profile`] (flat plane only): a piecewise-constant radius of
//!   curvature `ρ(θ) ≤ 1/λ` over the tangent angle `θ ∈ [0, 2π)`, with some
//!   pieces of zero radius (corners). The curve closes iff
//!   `∫ ρ(θ)·(cos θ, sin θ) dθ = 0`; a sampled profile is corrected to satisfy
//!   this by the multiplicative factor `exp(−u·mᵢ)` per piece, where `u ∈ ℝ²`
//!   minimizes a strictly convex potential whose gradient is the closure gap.
//! - [`Family::Inscribed`] (any curvature): vertices on a circle of geodesic
//!   curvature `κ₀ ≥ λ`, consecutive vertices joined by arcs with curvature in
//!   `[λ, κ₀]`. Flatter arcs through the same chord stay inside the circle
//!   and meet at convex corners, so the curve closes and is λ-convex by
//!   construction.
//! - [`Family::PinnedLune`]: the extremal lune for a random perimeter.

use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha20Rng;
use rand::SeedableRng;
use rand_distr::{Distribution, Exp1, StandardNormal};
use serde::Serialize;

use crate::bounds::perimeter_cap;
use crate::curves::{closure_defect, Arc, ClosedCurve};
use crate::error::{Error, Result};
use crate::lune::build_lune;
use crate::modelspace::{GenTrig, ModelSpace, Point, Pose};

use super::newton::{reduce, NewtonOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `Profile` in the flat plane, `Inscribed` otherwise.
    Auto,
    Profile,
    Inscribed,
    PinnedLune,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplerConfig {
    pub c: f64,
    pub lambda: f64,
    /// Inclusive range for the number of profile pieces / inscribed vertices.
    pub arc_count: (usize, usize),
    /// Arc curvatures are drawn as `λ·(1 + excess_scale·|X|)`, `X` standard normal.
    pub excess_scale: f64,
    /// Probability that a profile piece is a corner.
    pub corner_probability: f64,
    pub family: Family,
    pub seed: u64,
    pub trials: usize,
    /// Resampling attempts per trial before the trial is skipped.
    pub max_retries: usize,
    /// Largest pinned-lune perimeter when the perimeter is uncapped.
    pub max_length: f64,
    /// Replace one arc curvature by `λ/2` (produces out-of-hypothesis curves).
    pub violate_convexity: bool,
    /// Added to every bound value; a nonzero value makes the suite fail.
    pub bound_bias: f64,
}

impl SamplerConfig {
    pub fn new(c: f64, lambda: f64) -> Self {
        SamplerConfig {
            c,
            lambda,
            arc_count: (2, 12),
            excess_scale: 1.0,
            corner_probability: 0.25,
            family: Family::Auto,
            seed: 0,
            trials: 1000,
            max_retries: 20,
            max_length: 10.0,
            violate_convexity: false,
            bound_bias: 0.0,
        }
    }

    pub fn space(&self) -> Result<ModelSpace> {
        ModelSpace::new(self.c)
    }

    pub fn validate(&self) -> Result<()> {
        self.space()?;
        if !(self.lambda > 0.0) || !self.lambda.is_finite() {
            return Err(Error::input(format!("lambda must be positive, got {}", self.lambda)));
        }
        if self.arc_count.0 < 2 || self.arc_count.0 > self.arc_count.1 {
            return Err(Error::input("arc_count must be a range with minimum at least 2"));
        }
        if self.trials == 0 {
            return Err(Error::input("trials must be positive"));
        }
        if !(self.excess_scale >= 0.0) || !(0.0..1.0).contains(&self.corner_probability) {
            return Err(Error::input("invalid curvature excess or corner probability"));
        }
        if self.family == Family::Profile && self.c != 0.0 {
            return Err(Error::input("the profile family exists only in the flat plane"));
        }
        if !(self.max_length > 0.0) {
            return Err(Error::input("max_length must be positive"));
        }
        Ok(())
    }

    fn resolved_family(&self) -> Family {
        match self.family {
            Family::Auto if self.c == 0.0 => Family::Profile,
            Family::Auto => Family::Inscribed,
            f => f,
        }
    }
}

/// PRNG for one trial: ChaCha20 keyed by the seed, with the trial index as
/// the stream number, so trial streams are independent of execution order.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Samples one curve, resampling up to `max_retries` times.
pub fn sample_curve(config: &SamplerConfig, rng: &mut impl Rng) -> Result<ClosedCurve> {
    config.validate()?;
    let mut last = Error::Solver {
        iterations: 0,
        residual: f64::NAN,
    };
    for _ in 0..=config.max_retries {
        let attempt = match config.resolved_family() {
            Family::Profile => sample_profile(config, rng),
            Family::Inscribed => sample_inscribed(config, rng),
            Family::PinnedLune => sample_pinned_lune(config, rng),
            Family::Auto => unreachable!(),
        };
        match attempt {
            Ok(curve) => return Ok(curve),
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn excess_curvature(config: &SamplerConfig, rng: &mut impl Rng) -> f64 {
    let x: f64 = StandardNormal.sample(rng);
    config.lambda * (1.0 + config.excess_scale * x.abs())
}

fn sample_pinned_lune(config: &SamplerConfig, rng: &mut impl Rng) -> Result<ClosedCurve> {
    let cap = perimeter_cap(config.c, config.lambda)?;
    let length = if cap.is_finite() {
        cap * rng.random_range(0.05..0.999)
    } else {
        config.max_length * rng.random_range(0.05..1.0)
    };
    build_lune(config.c, config.lambda, length)
}

struct Piece {
    /// Tangent-angle extent.
    sweep: f64,
    /// Radius of curvature; zero for a corner.
    radius: f64,
}

fn sample_profile(config: &SamplerConfig, rng: &mut impl Rng) -> Result<ClosedCurve> {
    let n = rng.random_range(config.arc_count.0..=config.arc_count.1);
    let weights: Vec<f64> = (0..n).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = weights.iter().sum();
    let mut pieces: Vec<Piece> = weights
        .iter()
        .map(|w| Piece {
            sweep: 2.0 * PI * w / total,
            radius: 0.0,
        })
        .collect();
    let mut arcs = 0;
    for piece in pieces.iter_mut() {
        if !rng.random_bool(config.corner_probability) {
            piece.radius = 1.0 / excess_curvature(config, rng);
            arcs += 1;
        }
    }
    // at least two arcs
    for piece in pieces.iter_mut() {
        if arcs >= 2 {
            break;
        }
        if piece.radius == 0.0 {
            piece.radius = 1.0 / excess_curvature(config, rng);
            arcs += 1;
        }
    }
    if config.violate_convexity {
        if let Some(p) = pieces.iter_mut().find(|p| p.radius > 0.0) {
            p.radius = 2.0 / config.lambda;
        }
    }

    close_profile(&mut pieces)?;
    if !config.violate_convexity {
        let max_radius = pieces.iter().map(|p| p.radius).fold(0.0, f64::max);
        let shrink = (1.0 / (config.lambda * max_radius)).min(1.0);
        for p in pieces.iter_mut() {
            p.radius *= shrink;
        }
    }
    profile_curve(&pieces)
}

/// Multiplies each radius by `exp(−u·mᵢ)` so that the profile closes.
///
/// With `wᵢ = ρᵢ·2 sin(Δᵢ/2)` the closure gap is `Σ wᵢ e^{−u·mᵢ} mᵢ`, the
/// negative gradient of `Φ(u) = Σ wᵢ e^{−u·mᵢ}`. `Φ` is strictly convex and
/// coercive whenever the piece directions `mᵢ` are not confined to a closed
/// half-plane, so Newton with backtracking finds the unique minimizer.
fn close_profile(pieces: &mut [Piece]) -> Result<()> {
    let mut theta = 0.0;
    let mut terms = Vec::with_capacity(pieces.len());
    for p in pieces.iter() {
        let mid = theta + 0.5 * p.sweep;
        theta += p.sweep;
        if p.radius > 0.0 {
            terms.push((p.radius * 2.0 * (0.5 * p.sweep).sin(), [mid.cos(), mid.sin()]));
        } else {
            terms.push((0.0, [mid.cos(), mid.sin()]));
        }
    }
    let phi = |u: [f64; 2]| -> f64 {
        terms
            .iter()
            .map(|(w, m)| w * (-(u[0] * m[0] + u[1] * m[1])).exp())
            .sum()
    };
    let scale: f64 = terms.iter().map(|t| t.0).sum();
    let mut u = [0.0f64; 2];
    for _ in 0..100 {
        let mut g = [0.0; 2];
        let mut h = [[0.0; 2]; 2];
        for (w, m) in &terms {
            let e = w * (-(u[0] * m[0] + u[1] * m[1])).exp();
            for a in 0..2 {
                g[a] -= e * m[a];
                for b in 0..2 {
                    h[a][b] += e * m[a] * m[b];
                }
            }
        }
        if g[0].hypot(g[1]) <= 1e-15 * scale {
            for (p, (_, m)) in pieces.iter_mut().zip(&terms) {
                p.radius *= (-(u[0] * m[0] + u[1] * m[1])).exp();
            }
            return Ok(());
        }
        let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
        if !(det > 0.0) || !det.is_finite() {
            break;
        }
        let step = [
            (h[1][1] * g[0] - h[0][1] * g[1]) / det,
            (h[0][0] * g[1] - h[1][0] * g[0]) / det,
        ];
        let base = phi(u);
        let mut t = 1.0;
        loop {
            let trial = [u[0] - t * step[0], u[1] - t * step[1]];
            if phi(trial) <= base || t < 1e-12 {
                u = trial;
                break;
            }
            t *= 0.5;
        }
    }
    Err(Error::Solver {
        iterations: 100,
        residual: f64::NAN,
    })
}

fn profile_curve(pieces: &[Piece]) -> Result<ClosedCurve> {
    // rotate so that an arc comes first
    let first = pieces
        .iter()
        .position(|p| p.radius > 0.0)
        .ok_or_else(|| Error::input("profile has no arcs"))?;
    let mut arcs: Vec<Arc> = Vec::new();
    let mut turns: Vec<f64> = Vec::new();
    for i in 0..pieces.len() {
        let p = &pieces[(first + i) % pieces.len()];
        if p.radius > 0.0 {
            arcs.push(Arc::new(1.0 / p.radius, p.radius * p.sweep)?);
            turns.push(0.0);
        } else {
            *turns.last_mut().expect("first piece is an arc") += p.sweep;
        }
    }
    ClosedCurve::new(ModelSpace::euclidean(), Pose::origin(), arcs, turns)
}

/// Arc of curvature `kappa` from `p` to `q`, turning left, along the
/// shorter branch. Returns the start pose and the arc.
///
/// In the frame of the geodesic chord the arc's start direction is rotated
/// right by `ψ` with `tan ψ = κ·V/sn_D(s)`, where `V = vc_c(d)` depends only
/// on the chord length `d` and the arc length solves `vc_D(s) = V`,
/// `D = κ² + c`.
pub fn arc_between(space: &ModelSpace, p: &Point, q: &Point, kappa: f64) -> Result<(Pose, Arc)> {
    let (d, e) = space.direction_to(p, q)?;
    let v = space.trig().vc(d);
    let t = GenTrig::new(kappa * kappa + space.c());
    let s = t.avc(v);
    let psi = (kappa * v).atan2(t.sn(s));
    let chord = Pose {
        position: *p,
        direction: e,
    };
    Ok((space.rotate(&chord, -psi), Arc::new(kappa, s)?))
}

fn sample_inscribed(config: &SamplerConfig, rng: &mut impl Rng) -> Result<ClosedCurve> {
    let space = config.space()?;
    let c = config.c;
    let lambda = config.lambda;
    let floor = 0.01 * (lambda * lambda).max(c.abs());
    let base = if lambda * lambda + c > 0.0 { lambda } else { (-c).sqrt() };
    let x: f64 = StandardNormal.sample(rng);
    let mut kappa0 = base * (1.0 + config.excess_scale * x.abs());
    if kappa0 * kappa0 + c < floor {
        kappa0 = (floor - c).sqrt();
    }
    let perimeter = 2.0 * PI / (kappa0 * kappa0 + c).sqrt();

    let m = rng.random_range(config.arc_count.0..=config.arc_count.1);
    let offset: f64 = rng.random_range(0.0..1.0);
    let gaps: Vec<f64> = if m == 2 {
        vec![0.5, 0.5]
    } else {
        let mut found = None;
        for _ in 0..200 {
            let w: Vec<f64> = (0..m).map(|_| Exp1.sample(rng)).collect();
            let total: f64 = w.iter().sum();
            let g: Vec<f64> = w.iter().map(|v| v / total).collect();
            if g.iter().all(|v| *v < 0.5 && *v > 1e-6) {
                found = Some(g);
                break;
            }
        }
        found.ok_or_else(|| Error::input("could not place vertices"))?
    };
    // C is centered at the origin, which keeps coordinates small
    let radius = space.trig().asn(1.0 / (kappa0 * kappa0 + c).sqrt());
    let on_c = space.rotate(&space.propagate_unchecked(&Pose::origin(), 0.0, radius), 0.5 * PI);
    let mut vertices = Vec::with_capacity(m);
    let mut at = offset;
    for _ in &gaps {
        vertices.push(space.propagate_unchecked(&on_c, kappa0, perimeter * at));
        at += gaps[vertices.len() - 1];
    }

    let mut sides = Vec::with_capacity(m);
    for i in 0..m {
        let kappa = if config.violate_convexity && i == 0 {
            0.5 * lambda
        } else if rng.random_bool(0.2) {
            kappa0
        } else {
            excess_curvature(config, rng).min(kappa0)
        };
        if kappa == kappa0 {
            // follow C itself; inverting the chord is ill-conditioned near a half circle
            sides.push((vertices[i], Arc::new(kappa0, perimeter * gaps[i])?));
        } else {
            let next = &vertices[(i + 1) % m].position;
            sides.push(arc_between(&space, &vertices[i].position, next, kappa)?);
        }
    }
    let mut arcs = Vec::with_capacity(m);
    let mut turns = Vec::with_capacity(m);
    for i in 0..m {
        let (start, arc) = sides[i];
        let end = space.propagate_unchecked(&start, arc.kappa, arc.s);
        let next = &sides[(i + 1) % m].0;
        let mut turn = space.angle_between(&end, &next.direction);
        if turn < 0.0 && turn > -1e-12 {
            turn = 0.0;
        }
        arcs.push(arc);
        turns.push(turn);
    }
    // Polish closure over the last arc length and the last two turns; the
    // chord inversions above leave defects near 1e-10.
    let start = sides[0].0;
    let last = m - 1;
    let with = |x: &[f64; 3]| -> Result<(Vec<Arc>, Vec<f64>)> {
        let mut a = arcs.clone();
        let mut t = turns.clone();
        a[last] = Arc::new(a[last].kappa, x[0])?;
        t[last] = x[1];
        t[last - 1] = x[2];
        Ok((a, t))
    };
    let polish = NewtonOptions {
        target: 1e-14,
        ..NewtonOptions::default()
    };
    let best = reduce(
        |x| {
            let (a, t) = with(x)?;
            closure_defect(&space, &start, &a, &t)
        },
        [arcs[last].s, turns[last], turns[last - 1]],
        &polish,
    )?;
    if best.residual > NewtonOptions::default().target {
        return Err(Error::Solver {
            iterations: best.iterations,
            residual: best.residual,
        });
    }
    let (arcs, mut turns) = with(&best.x)?;
    for t in turns.iter_mut() {
        if *t < 0.0 && *t > -1e-12 {
            *t = 0.0;
        }
    }
    let curve = ClosedCurve::new(space, start, arcs, turns)?;
    if !config.violate_convexity && !curve.is_lambda_convex(lambda)?.convex {
        return Err(Error::Consistency("inscribed curve is not λ-convex".into()));
    }
    Ok(curve)
}
