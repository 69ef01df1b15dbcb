//! Shared test oracles.
#![allow(dead_code)]

use nalgebra::Vector3;

/// Integrates a curve of constant geodesic curvature `kappa` for length `s`
/// in the conformal chart `4|dz|²/(1 + c|z|²)²`, starting at `z = 0` heading
/// along `+x`, with classical RK4. Returns the point in the embedding chart.
///
/// Independent of the closed-form transfer matrices: the state is
/// `(x, y, ψ)` with `z' = e^{−φ}(cos ψ, sin ψ)` and
/// `ψ' = κ + e^{−φ} ∂φ/∂n`, `e^{φ} = 2/(1 + c|z|²)`.
pub fn frenet_ode(c: f64, kappa: f64, s: f64, steps: usize) -> Vector3<f64> {
    let rhs = |y: [f64; 3]| -> [f64; 3] {
        let (x, yy, psi) = (y[0], y[1], y[2]);
        let q = 1.0 + c * (x * x + yy * yy);
        let em = 0.5 * q;
        let (sp, cp) = psi.sin_cos();
        // ∇φ = −2c z / q, n = (−sin ψ, cos ψ)
        let dn = -2.0 * c * (-x * sp + yy * cp) / q;
        [em * cp, em * sp, kappa + em * dn]
    };
    let h = s / steps as f64;
    let mut y = [0.0; 3];
    for _ in 0..steps {
        let k1 = rhs(y);
        let k2 = rhs(std::array::from_fn(|i| y[i] + 0.5 * h * k1[i]));
        let k3 = rhs(std::array::from_fn(|i| y[i] + 0.5 * h * k2[i]));
        let k4 = rhs(std::array::from_fn(|i| y[i] + h * k3[i]));
        for i in 0..3 {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    let r2 = y[0] * y[0] + y[1] * y[1];
    let q = 1.0 + c * r2;
    Vector3::new((1.0 - c * r2) / q, 2.0 * y[0] / q, 2.0 * y[1] / q)
}
