//! Damped Newton iteration with a central-difference Jacobian.

use nalgebra::{DMatrix, DVector, SVector};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonOptions {
    pub max_iterations: usize,
    /// Converged once the residual's max-norm falls to this value.
    pub target: f64,
    /// Central-difference step for the Jacobian.
    pub step: f64,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions {
            max_iterations: 50,
            target: 1e-10,
            step: 1e-7,
        }
    }
}

/// Solves `f(x) = 0` from `x0`.
pub fn solve<const N: usize, F>(f: F, x0: [f64; N], opts: &NewtonOptions) -> Result<[f64; N]>
where
    F: Fn(&[f64; N]) -> Result<[f64; N]>,
{
    let best = reduce(f, x0, opts)?;
    if best.residual <= opts.target {
        Ok(best.x)
    } else {
        Err(Error::Solver {
            iterations: best.iterations,
            residual: best.residual,
        })
    }
}

/// Outcome of [`reduce`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Best<const N: usize> {
    pub x: [f64; N],
    /// Max-norm of `f(x)`.
    pub residual: f64,
    pub iterations: usize,
}

/// Runs the damped iteration until the residual reaches the target or
/// stops decreasing, and returns the best point found.
pub fn reduce<const N: usize, F>(f: F, x0: [f64; N], opts: &NewtonOptions) -> Result<Best<N>>
where
    F: Fn(&[f64; N]) -> Result<[f64; N]>,
{
    let eval = |x: &SVector<f64, N>| -> Result<SVector<f64, N>> {
        let r = f(&(*x).into())?;
        if r.iter().all(|v| v.is_finite()) {
            Ok(SVector::from(r))
        } else {
            Err(Error::Solver {
                iterations: 0,
                residual: f64::INFINITY,
            })
        }
    };
    let mut x = SVector::<f64, N>::from(x0);
    let mut r = eval(&x)?;
    let mut iterations = 0;
    while iterations < opts.max_iterations && r.amax() > opts.target {
        let norm = r.amax();
        let mut jac = DMatrix::<f64>::zeros(N, N);
        for j in 0..N {
            let mut xp = x;
            let mut xm = x;
            xp[j] += opts.step;
            xm[j] -= opts.step;
            let col = (eval(&xp)? - eval(&xm)?) / (2.0 * opts.step);
            jac.set_column(j, &col);
        }
        let Some(delta) = jac.lu().solve(&DVector::from_column_slice(r.as_slice())) else {
            break;
        };
        let delta = SVector::<f64, N>::from_column_slice(delta.as_slice());
        let mut scale = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let trial = x - delta * scale;
            if let Ok(rt) = eval(&trial) {
                if rt.amax() < norm {
                    x = trial;
                    r = rt;
                    accepted = true;
                    break;
                }
            }
            scale *= 0.5;
        }
        iterations += 1;
        if !accepted {
            break;
        }
    }
    Ok(Best {
        x: x.into(),
        residual: r.amax(),
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_a_small_nonlinear_system() {
        let f = |x: &[f64; 2]| Ok([x[0] * x[0] + x[1] * x[1] - 4.0, x[0] - x[1].exp()]);
        let x = solve(f, [2.0, 0.5], &NewtonOptions::default()).unwrap();
        assert!((x[0] * x[0] + x[1] * x[1] - 4.0).abs() < 1e-10);
        assert!((x[0] - x[1].exp()).abs() < 1e-10);
    }

    #[test]
    fn reports_failure() {
        let f = |x: &[f64; 1]| Ok([x[0] * x[0] + 1.0]);
        assert!(matches!(
            solve(f, [1.0], &NewtonOptions::default()),
            Err(Error::Solver { .. })
        ));
    }
}
