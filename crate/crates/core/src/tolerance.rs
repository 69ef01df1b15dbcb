/// Numerical tolerances shared across the crate.
///
/// Every check that compares floating-point quantities reads its threshold
/// from here; [`Tolerances::default`] holds the values the test suites pin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Pose constraint residual (unit tangent, embedding constraint).
    pub pose: f64,
    /// Relative closure residual of a composed curve.
    pub closure: f64,
    /// Absolute quadrature tolerance per arc.
    pub quadrature: f64,
    /// Relative agreement between the Gauss–Bonnet and quadrature areas.
    pub area_agreement: f64,
    /// Below this value of |curvature|·x², generalized trig switches to series.
    pub series: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        pose: 1e-12,
        closure: 1e-9,
        quadrature: 1e-10,
        area_agreement: 1e-8,
        series: 1e-8,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
