//! Self-intersection scan for closed planar polylines.

/// Twice the signed area of the triangle `(a, b, c)`.
fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn segments_cross(p: [f64; 2], q: [f64; 2], r: [f64; 2], s: [f64; 2]) -> bool {
    let d1 = orient(p, q, r);
    let d2 = orient(p, q, s);
    let d3 = orient(r, s, p);
    let d4 = orient(r, s, q);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// True if two non-adjacent edges of the closed polygon `pts` cross.
///
/// Edges are swept in order of their left x-extent; each edge is compared
/// only against the active edges whose x-range still overlaps it.
pub(crate) fn polygon_self_intersects(pts: &[[f64; 2]]) -> bool {
    let n = pts.len();
    if n < 4 {
        return false;
    }
    let edge = |i: usize| (pts[i], pts[(i + 1) % n]);
    let mut order: Vec<usize> = (0..n).collect();
    let min_x = |i: usize| {
        let (a, b) = edge(i);
        a[0].min(b[0])
    };
    let max_x = |i: usize| {
        let (a, b) = edge(i);
        a[0].max(b[0])
    };
    order.sort_by(|&a, &b| min_x(a).total_cmp(&min_x(b)));

    let mut active: Vec<usize> = Vec::new();
    for &i in &order {
        let x = min_x(i);
        active.retain(|&j| max_x(j) >= x);
        let (p, q) = edge(i);
        for &j in &active {
            let adjacent = (i + 1) % n == j || (j + 1) % n == i;
            if adjacent {
                continue;
            }
            let (r, s) = edge(j);
            if segments_cross(p, q, r, s) {
                return true;
            }
        }
        active.push(i);
    }
    false
}
