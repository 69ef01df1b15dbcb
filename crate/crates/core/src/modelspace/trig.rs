//! Curvature-parameterized trigonometry.
//!
//! For a parameter `c` with `k = sqrt(|c|)`:
//!
//! | c     | sn(x)        | cs(x)      |
//! |-------|--------------|------------|
//! | c > 0 | sin(kx)/k    | cos(kx)    |
//! | c = 0 | x            | 1          |
//! | c < 0 | sinh(kx)/k   | cosh(kx)   |
//!
//! so that `sn'' = -c sn`, `sn' = cs`, `cs' = -c sn` and everything is
//! analytic in `c` through zero. When `|c|·x²` is tiny the functions are
//! evaluated from truncated series to stay continuous at `c = 0`.

use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenTrig {
    c: f64,
    k: f64,
    series: f64,
}

impl GenTrig {
    pub fn new(c: f64) -> Self {
        Self::with_series_threshold(c, Tolerances::DEFAULT.series)
    }

    pub fn with_series_threshold(c: f64, series: f64) -> Self {
        GenTrig {
            c,
            k: c.abs().sqrt(),
            series,
        }
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    #[inline]
    fn use_series(&self, x: f64) -> bool {
        self.c == 0.0 || (self.c * x * x).abs() < self.series
    }

    /// Generalized sine.
    pub fn sn(&self, x: f64) -> f64 {
        if self.use_series(x) {
            let z = self.c * x * x;
            x * (1.0 - z / 6.0 * (1.0 - z / 20.0))
        } else if self.c > 0.0 {
            (self.k * x).sin() / self.k
        } else {
            (self.k * x).sinh() / self.k
        }
    }

    /// Generalized cosine, the derivative of [`GenTrig::sn`].
    pub fn cs(&self, x: f64) -> f64 {
        if self.use_series(x) {
            let z = self.c * x * x;
            1.0 - z / 2.0 * (1.0 - z / 12.0)
        } else if self.c > 0.0 {
            (self.k * x).cos()
        } else {
            (self.k * x).cosh()
        }
    }

    /// `∫₀ˣ sn = (1 - cs(x))/c`, evaluated without cancellation (`x²/2` at `c = 0`).
    pub fn vc(&self, x: f64) -> f64 {
        if self.use_series(x) {
            let z = self.c * x * x;
            0.5 * x * x * (1.0 - z / 12.0 * (1.0 - z / 30.0))
        } else if self.c > 0.0 {
            let h = (0.5 * self.k * x).sin();
            2.0 * h * h / self.c
        } else {
            let h = (0.5 * self.k * x).sinh();
            2.0 * h * h / -self.c
        }
    }

    /// Generalized tangent `sn/cs`.
    pub fn tn(&self, x: f64) -> f64 {
        if self.use_series(x) {
            let z = self.c * x * x;
            x * (1.0 + z / 3.0 + 2.0 * z * z / 15.0)
        } else if self.c > 0.0 {
            (self.k * x).tan() / self.k
        } else {
            (self.k * x).tanh() / self.k
        }
    }

    /// Inverse of `sn` on its principal branch (`[0, π/(2k)]` when `c > 0`).
    /// Arguments beyond `1/k` are clamped when `c > 0`.
    pub fn asn(&self, y: f64) -> f64 {
        if self.c == 0.0 {
            y
        } else if self.c > 0.0 {
            (self.k * y).clamp(-1.0, 1.0).asin() / self.k
        } else {
            (self.k * y).asinh() / self.k
        }
    }

    /// Inverse of `vc` on `[0, π/k]` (c > 0) or `[0, ∞)` otherwise.
    pub fn avc(&self, v: f64) -> f64 {
        let v = v.max(0.0);
        if self.c == 0.0 {
            (2.0 * v).sqrt()
        } else if self.c > 0.0 {
            2.0 * (self.k * (0.5 * v).sqrt()).clamp(0.0, 1.0).asin() / self.k
        } else {
            2.0 * (self.k * (0.5 * v).sqrt()).asinh() / self.k
        }
    }
}
