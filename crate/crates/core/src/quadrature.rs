//! Adaptive Gauss–Legendre quadrature on an interval.

use std::sync::OnceLock;

const ORDER: usize = 15;
const MAX_DEPTH: u32 = 40;
const MAX_PANELS: u32 = 1 << 16;

struct Rule {
    nodes: [f64; ORDER],
    weights: [f64; ORDER],
}

/// Gauss–Legendre nodes and weights on [-1, 1], from Newton iteration on P_n.
fn rule() -> &'static Rule {
    static RULE: OnceLock<Rule> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = ORDER;
        let mut nodes = [0.0; ORDER];
        let mut weights = [0.0; ORDER];
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for j in 2..=n {
                    let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        Rule { nodes, weights }
    })
}

fn fixed<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let r = rule();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for (x, w) in r.nodes.iter().zip(r.weights.iter()) {
        sum += w * f(mid + half * x);
    }
    sum * half
}

/// Integrates `f` over `[a, b]`, bisecting until a panel and its two halves
/// agree within `tol` (split evenly between the halves on recursion).
///
/// At most `MAX_PANELS` panels are refined; past that, or on a non-finite
/// value, the current estimate is returned as is.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    let whole = fixed(&f, a, b);
    let mut budget = MAX_PANELS;
    recurse(&f, a, b, whole, tol, 0, &mut budget)
}

fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    budget: &mut u32,
) -> f64 {
    let mid = 0.5 * (a + b);
    let left = fixed(f, a, mid);
    let right = fixed(f, mid, b);
    let refined = left + right;
    if (refined - whole).abs() <= tol || depth >= MAX_DEPTH || !refined.is_finite() || *budget == 0 {
        return refined;
    }
    *budget -= 1;
    recurse(f, a, mid, left, 0.5 * tol, depth + 1, budget)
        + recurse(f, mid, b, right, 0.5 * tol, depth + 1, budget)
}
