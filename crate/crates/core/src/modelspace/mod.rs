//! The simply connected model planes of constant curvature `c`.
//!
//! Points are stored in a single embedding chart that covers all three
//! geometries. A point is a vector `u = (u0, u1, u2)` with
//!
//! ```text
//! u0² + c·(u1² + u2²) = 1
//! ```
//!
//! For `c = 0` this is the plane `u0 = 1` and `(u1, u2)` are Cartesian
//! coordinates. For `c > 0` the map `(u0/k, u1, u2)` lands on the sphere of
//! radius `1/k` in ℝ³, and for `c < 0` on the upper sheet of the hyperboloid
//! of radius `1/k` in Minkowski space. Tangent vectors satisfy
//! `u0·v0 + c·(u1·v1 + u2·v2) = 0` and have squared length
//! `v0²/c + v1² + v2²` (the `v0` term is absent when `c = 0`).
//!
//! In this chart a unit-speed curve of geodesic curvature κ obeys the linear
//! Frenet system
//!
//! ```text
//! p' = T,   T' = -c·p + κ·N,   N' = -κ·T
//! ```
//!
//! whose generator `A` satisfies `A³ = -(κ² + c)·A`, so the transfer matrix
//! over length `s` is `I + sn(s)·A + vc(s)·A²` with the generalized trig
//! functions of parameter `κ² + c`.

mod trig;

pub use trig::GenTrig;

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::tolerance::Tolerances;

/// Which of the three model planes a curvature value describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Euclidean,
    Spherical,
    Hyperbolic,
}

/// A model plane of constant curvature `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelSpace {
    c: f64,
    k: f64,
    tol: Tolerances,
}

/// A point in the embedding chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point(pub Vector3<f64>);

/// A point together with a unit tangent direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    pub position: Point,
    pub direction: Vector3<f64>,
}

impl Pose {
    /// The canonical pose: chart origin, heading along the first axis.
    pub fn origin() -> Self {
        Pose {
            position: Point(Vector3::new(1.0, 0.0, 0.0)),
            direction: Vector3::new(0.0, 1.0, 0.0),
        }
    }
}

impl ModelSpace {
    pub fn new(c: f64) -> Result<Self> {
        ensure_finite("curvature c", c)?;
        Ok(ModelSpace {
            c,
            k: c.abs().sqrt(),
            tol: Tolerances::DEFAULT,
        })
    }

    pub fn euclidean() -> Self {
        ModelSpace {
            c: 0.0,
            k: 0.0,
            tol: Tolerances::DEFAULT,
        }
    }

    /// Sphere of curvature `k²`.
    pub fn spherical(k: f64) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::input(format!("k must be positive, got {k}")));
        }
        Self::new(k * k)
    }

    /// Hyperbolic plane of curvature `-k²`.
    pub fn hyperbolic(k: f64) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::input(format!("k must be positive, got {k}")));
        }
        Self::new(-k * k)
    }

    pub fn with_tolerances(mut self, tol: Tolerances) -> Self {
        self.tol = tol;
        self
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn geometry(&self) -> Geometry {
        if self.c > 0.0 {
            Geometry::Spherical
        } else if self.c < 0.0 {
            Geometry::Hyperbolic
        } else {
            Geometry::Euclidean
        }
    }

    /// Generalized trig functions for this space's curvature.
    pub fn trig(&self) -> GenTrig {
        GenTrig::with_series_threshold(self.c, self.tol.series)
    }

    /// The ambient quadratic form `u0·v0 + c·(u1·v1 + u2·v2)`.
    #[inline]
    pub fn form(&self, u: &Vector3<f64>, v: &Vector3<f64>) -> f64 {
        u[0] * v[0] + self.c * (u[1] * v[1] + u[2] * v[2])
    }

    /// Riemannian inner product of two tangent vectors (or of chart differences).
    #[inline]
    pub fn metric(&self, v: &Vector3<f64>, w: &Vector3<f64>) -> f64 {
        let planar = v[1] * w[1] + v[2] * w[2];
        if self.c == 0.0 {
            planar
        } else {
            v[0] * w[0] / self.c + planar
        }
    }

    /// Unit normal to the left of `direction` at `position`.
    pub fn normal(&self, pose: &Pose) -> Vector3<f64> {
        let p = &pose.position.0;
        let t = &pose.direction;
        Vector3::new(
            self.c * (p[1] * t[2] - p[2] * t[1]),
            p[2] * t[0] - p[0] * t[2],
            p[0] * t[1] - p[1] * t[0],
        )
    }

    /// Point at geodesic polar coordinates `(r, bearing)` about the chart origin.
    pub fn point_polar(&self, r: f64, bearing: f64) -> Point {
        let t = self.trig();
        let sn = t.sn(r);
        Point(Vector3::new(t.cs(r), sn * bearing.cos(), sn * bearing.sin()))
    }

    fn scale(v: &Vector3<f64>) -> f64 {
        v.amax().max(1.0)
    }

    pub fn validate_point(&self, p: &Point) -> Result<()> {
        let u = &p.0;
        if !u.iter().all(|x| x.is_finite()) {
            return Err(Error::input("point has non-finite coordinates"));
        }
        let scale = Self::scale(u).powi(2);
        let q = self.form(u, u);
        if (q - 1.0).abs() > self.tol.pose * scale {
            return Err(Error::input(format!(
                "point violates the embedding constraint (residual {:e})",
                q - 1.0
            )));
        }
        if self.c <= 0.0 && u[0] <= 0.0 {
            return Err(Error::input("point must have a positive first coordinate"));
        }
        Ok(())
    }

    pub fn validate_pose(&self, pose: &Pose) -> Result<()> {
        self.validate_point(&pose.position)?;
        let p = &pose.position.0;
        let t = &pose.direction;
        if !t.iter().all(|x| x.is_finite()) {
            return Err(Error::input("direction has non-finite coordinates"));
        }
        let scale = Self::scale(p).max(Self::scale(t)).powi(2);
        let tangency = self.form(p, t);
        if tangency.abs() > self.tol.pose * scale {
            return Err(Error::input(format!(
                "direction is not tangent at position (residual {tangency:e})"
            )));
        }
        let norm = self.metric(t, t);
        if (norm - 1.0).abs() > self.tol.pose * scale {
            return Err(Error::input(format!(
                "direction is not a unit vector (squared norm {norm})"
            )));
        }
        Ok(())
    }

    /// Transfer matrix of the Frenet frame `(p, T, N)` along an arc of
    /// geodesic curvature `kappa` and length `s`.
    pub fn arc_transfer(&self, kappa: f64, s: f64) -> Matrix3<f64> {
        let a = Matrix3::new(0.0, 1.0, 0.0, -self.c, 0.0, kappa, 0.0, -kappa, 0.0);
        let t = GenTrig::with_series_threshold(kappa * kappa + self.c, self.tol.series);
        Matrix3::identity() + a * t.sn(s) + a * a * t.vc(s)
    }

    /// Frenet frame of a pose as the rows of a matrix.
    pub fn frame(&self, pose: &Pose) -> Matrix3<f64> {
        Matrix3::from_rows(&[
            pose.position.0.transpose(),
            pose.direction.transpose(),
            self.normal(pose).transpose(),
        ])
    }

    /// Traces length `s` along the curve of constant geodesic curvature
    /// `kappa` (turning left when positive) starting at `start`.
    pub fn propagate(&self, start: &Pose, kappa: f64, s: f64) -> Result<Pose> {
        ensure_finite("kappa", kappa)?;
        ensure_finite("arc length", s)?;
        if s < 0.0 {
            return Err(Error::input(format!("arc length must be nonnegative, got {s}")));
        }
        self.validate_pose(start)?;
        Ok(self.propagate_unchecked(start, kappa, s))
    }

    pub(crate) fn propagate_unchecked(&self, start: &Pose, kappa: f64, s: f64) -> Pose {
        Self::pose_of(&(self.arc_transfer(kappa, s) * self.frame(start)))
    }

    /// Acts on a frame (rows `p, T, N`) as a turn by `angle` to the left.
    pub fn turn_matrix(angle: f64) -> Matrix3<f64> {
        let (s, c) = angle.sin_cos();
        Matrix3::new(1.0, 0.0, 0.0, 0.0, c, s, 0.0, -s, c)
    }

    /// The pose held in the first two rows of a frame.
    pub fn pose_of(frame: &Matrix3<f64>) -> Pose {
        Pose {
            position: Point(frame.row(0).transpose()),
            direction: frame.row(1).transpose(),
        }
    }

    /// Rotates the direction by `angle` in the tangent plane (positive = left).
    pub fn rotate(&self, start: &Pose, angle: f64) -> Pose {
        let n = self.normal(start);
        Pose {
            position: start.position,
            direction: start.direction * angle.cos() + n * angle.sin(),
        }
    }

    /// Signed angle from tangent `from` to tangent `to` at `pose.position`
    /// (`from` is taken as `pose.direction`).
    pub fn angle_between(&self, pose: &Pose, to: &Vector3<f64>) -> f64 {
        let n = self.normal(pose);
        self.metric(to, &n).atan2(self.metric(to, &pose.direction))
    }

    /// Geodesic distance between two points.
    pub fn distance(&self, p: &Point, q: &Point) -> Result<f64> {
        self.validate_point(p)?;
        self.validate_point(q)?;
        Ok(self.distance_unchecked(p, q))
    }

    pub(crate) fn distance_unchecked(&self, p: &Point, q: &Point) -> f64 {
        let d = p.0 - q.0;
        let chord = self.metric(&d, &d).max(0.0).sqrt();
        2.0 * self.trig().asn(0.5 * chord)
    }

    /// Distance to `q` and the unit tangent at `p` pointing along the geodesic to `q`.
    pub fn direction_to(&self, p: &Point, q: &Point) -> Result<(f64, Vector3<f64>)> {
        let d = self.distance(p, q)?;
        let t = self.trig();
        let sn = t.sn(d);
        if sn <= 0.0 || d == 0.0 {
            return Err(Error::input("geodesic direction undefined for coincident or antipodal points"));
        }
        let e = (q.0 - p.0 * t.cs(d)) / sn;
        // re-project onto the tangent plane and renormalize
        let e = e - p.0 * (self.form(&p.0, &e) / self.form(&p.0, &p.0));
        let n = self.metric(&e, &e).sqrt();
        Ok((d, e / n))
    }

    /// Chart centered at `center`: coordinates of a point relative to the
    /// orthonormal frame of `center` are again embedding coordinates, with
    /// `center` mapped to the origin and its direction to the first axis.
    pub fn chart_at(&self, center: &Pose) -> Result<Chart> {
        self.validate_pose(center)?;
        let m = Matrix3::from_columns(&[
            center.position.0,
            center.direction,
            self.normal(center),
        ]);
        let inverse = m
            .try_inverse()
            .ok_or_else(|| Error::Consistency("singular chart frame".into()))?;
        Ok(Chart { inverse })
    }

    /// A unit-direction pose at `position`, heading as close as possible to
    /// the first chart axis.
    pub fn pose_at(&self, position: Point) -> Result<Pose> {
        self.validate_point(&position)?;
        let p = position.0;
        let q = self.form(&p, &p);
        for axis in [Vector3::new(0.0, 1.0, 0.0), Vector3::new(0.0, 0.0, 1.0)] {
            let v = axis - p * (self.form(&p, &axis) / q);
            let n = self.metric(&v, &v);
            if n > 1e-6 {
                return Ok(Pose {
                    position,
                    direction: v / n.sqrt(),
                });
            }
        }
        Err(Error::Consistency("no tangent direction found".into()))
    }

    /// Projects an arbitrary chart vector onto the model (scaling to the constraint).
    pub fn normalize_point(&self, v: &Vector3<f64>) -> Result<Point> {
        if self.c == 0.0 {
            if v[0].abs() < f64::EPSILON {
                return Err(Error::input("cannot normalize a point at infinity"));
            }
            return Ok(Point(v / v[0]));
        }
        let q = self.form(v, v);
        if q <= 0.0 || !q.is_finite() {
            return Err(Error::input("vector has no projection onto the model"));
        }
        let mut p = v / q.sqrt();
        if self.c < 0.0 && p[0] < 0.0 {
            p = -p;
        }
        Ok(Point(p))
    }
}

/// Linear change of embedding coordinates to a frame-centered chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chart {
    inverse: Matrix3<f64>,
}

impl Chart {
    pub fn coords(&self, v: &Vector3<f64>) -> Vector3<f64> {
        self.inverse * v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn spaces() -> Vec<ModelSpace> {
        [0.0, 1.0, -1.0, 2.5, -0.3]
            .iter()
            .map(|&c| ModelSpace::new(c).unwrap())
            .collect()
    }

    fn pose_close(a: &Pose, b: &Pose, tol: f64) -> bool {
        (a.position.0 - b.position.0).amax() <= tol && (a.direction - b.direction).amax() <= tol
    }

    #[test]
    fn geometry_tags() {
        assert_eq!(ModelSpace::euclidean().geometry(), Geometry::Euclidean);
        assert_eq!(ModelSpace::spherical(2.0).unwrap().geometry(), Geometry::Spherical);
        let h = ModelSpace::hyperbolic(2.0).unwrap();
        assert_eq!(h.geometry(), Geometry::Hyperbolic);
        assert_eq!(h.c(), -4.0);
        assert_eq!(h.k(), 2.0);
        assert!(ModelSpace::new(f64::NAN).is_err());
        assert!(ModelSpace::spherical(0.0).is_err());
    }

    #[test]
    fn frame_is_orthonormal() {
        for space in spaces() {
            let pose = space.rotate(&space.propagate(&Pose::origin(), 0.7, 1.3).unwrap(), 0.4);
            let n = space.normal(&pose);
            let p = pose.position.0;
            assert!((space.metric(&n, &n) - 1.0).abs() < 1e-12);
            assert!(space.metric(&n, &pose.direction).abs() < 1e-12);
            assert!(space.form(&p, &n).abs() < 1e-12);
        }
    }

    #[test]
    fn straight_line_in_the_plane() {
        let e = ModelSpace::euclidean();
        let p = e.propagate(&Pose::origin(), 0.0, 1.0).unwrap();
        assert_eq!(p.position.0, Vector3::new(1.0, 1.0, 0.0));
        assert_eq!(p.direction, Vector3::new(0.0, 1.0, 0.0));
    }

    #[test]
    fn unit_circle_closes() {
        let e = ModelSpace::euclidean();
        let p = e.propagate(&Pose::origin(), 1.0, 2.0 * PI).unwrap();
        assert!(pose_close(&p, &Pose::origin(), 1e-9));
    }

    #[test]
    fn circles_close_after_their_circumference() {
        for (c, kappa) in [(1.0, 1.0), (-1.0, 2.0), (0.0, 3.0), (2.0, 0.0), (-0.5, 0.9)] {
            let space = ModelSpace::new(c).unwrap();
            let s = 2.0 * PI / (kappa * kappa + c).sqrt();
            let p = space.propagate(&Pose::origin(), kappa, s).unwrap();
            assert!(pose_close(&p, &Pose::origin(), 1e-9), "c={c} kappa={kappa}");
            // and not before
            let half = space.propagate(&Pose::origin(), kappa, 0.5 * s).unwrap();
            assert!(!pose_close(&half, &Pose::origin(), 1e-3));
        }
    }

    #[test]
    fn rotation_examples() {
        for space in spaces() {
            let o = Pose::origin();
            assert_eq!(space.rotate(&o, 0.0), o);
            assert!(pose_close(&space.rotate(&o, 2.0 * PI), &o, 1e-12));
        }
        let e = ModelSpace::euclidean();
        let r = e.rotate(&Pose::origin(), PI / 2.0);
        assert!((r.direction - Vector3::new(0.0, 0.0, 1.0)).amax() < 1e-15);
    }

    #[test]
    fn distance_examples() {
        let e = ModelSpace::euclidean();
        let o = Point(Vector3::new(1.0, 0.0, 0.0));
        assert_eq!(e.distance(&o, &o).unwrap(), 0.0);
        let q = Point(Vector3::new(1.0, 3.0, 4.0));
        assert_relative_eq!(e.distance(&o, &q).unwrap(), 5.0, max_relative = 1e-15);
        let s = ModelSpace::spherical(1.0).unwrap();
        let anti = Point(Vector3::new(-1.0, 0.0, 0.0));
        assert_relative_eq!(s.distance(&o, &anti).unwrap(), PI, max_relative = 1e-15);
        let bad = Point(Vector3::new(2.0, 0.0, 0.0));
        assert!(s.distance(&o, &bad).is_err());
    }

    #[test]
    fn polar_points_have_the_right_distance() {
        for space in spaces() {
            let o = Point(Vector3::new(1.0, 0.0, 0.0));
            let p = space.point_polar(0.8, 1.1);
            assert_relative_eq!(space.distance(&o, &p).unwrap(), 0.8, max_relative = 1e-12);
        }
    }

    #[test]
    fn direction_to_reaches_the_target() {
        for space in spaces() {
            let p = space.propagate(&Pose::origin(), 0.3, 0.5).unwrap().position;
            let q = space.point_polar(0.9, 2.0);
            let (d, e) = space.direction_to(&p, &q).unwrap();
            let end = space
                .propagate(&Pose { position: p, direction: e }, 0.0, d)
                .unwrap();
            assert!((end.position.0 - q.0).amax() < 1e-12);
        }
    }

    #[test]
    fn invalid_pose_is_rejected() {
        let e = ModelSpace::euclidean();
        let bad = Pose {
            position: Point(Vector3::new(1.0, 0.0, 0.0)),
            direction: Vector3::new(0.0, 2.0, 0.0),
        };
        assert!(matches!(e.propagate(&bad, 1.0, 1.0), Err(Error::Input(_))));
        assert!(e.propagate(&Pose::origin(), 1.0, -1.0).is_err());
        let h = ModelSpace::hyperbolic(1.0).unwrap();
        let lower = Pose {
            position: Point(Vector3::new(-1.0, 0.0, 0.0)),
            direction: Vector3::new(0.0, 1.0, 0.0),
        };
        assert!(h.validate_pose(&lower).is_err());
    }

    #[test]
    fn chart_at_maps_center_to_origin() {
        for space in spaces() {
            let pose = space.rotate(&space.propagate(&Pose::origin(), 1.2, 0.7).unwrap(), 0.3);
            let chart = space.chart_at(&pose).unwrap();
            let o = chart.coords(&pose.position.0);
            assert!((o - Vector3::new(1.0, 0.0, 0.0)).amax() < 1e-12);
            let t = chart.coords(&pose.direction);
            assert!((t - Vector3::new(0.0, 1.0, 0.0)).amax() < 1e-12);
        }
    }
}
