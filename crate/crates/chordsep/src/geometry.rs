//! Exact integer geometry for the moment-curve embedding.
//!
//! The cyclic configuration uses vectors `v_i = (1, x_i, x_i²)` with strictly
//! increasing positive integers `x_i` (default `x_i = i`). A subset embeds as
//! `v_S = Σ_{i∈S} v_i`; its first coordinate is `|S|`, so a level slice lives
//! in the plane `z = k` and the remaining two coordinates embed it in 2D.
//! All predicates are integer determinant signs, no floating point.

use crate::subset::Subset;

pub type P2 = (i64, i64);

/// `(Σ x_i, Σ x_i²)` over `i ∈ S`: the 2D embedding of a level-slice vertex.
pub fn plane_point(xs: &[i64], s: Subset) -> P2 {
    let mut a = 0i64;
    let mut b = 0i64;
    for i in s.elems() {
        let x = xs[(i - 1) as usize];
        a += x;
        b += x * x;
    }
    (a, b)
}

/// Sign of the cross product (q − p) × (r − p): positive for a left turn.
pub fn orient(p: P2, q: P2, r: P2) -> i128 {
    let ux = (q.0 - p.0) as i128;
    let uy = (q.1 - p.1) as i128;
    let vx = (r.0 - p.0) as i128;
    let vy = (r.1 - p.1) as i128;
    (ux * vy - uy * vx).signum()
}

fn between_1d(a: i64, b: i64, p: i64) -> bool {
    a.min(b) <= p && p <= a.max(b)
}

/// `p` lies on the closed segment `[a, b]`.
pub fn on_segment(a: P2, b: P2, p: P2) -> bool {
    orient(a, b, p) == 0 && between_1d(a.0, b.0, p.0) && between_1d(a.1, b.1, p.1)
}

/// Closed segments `[a,b]` and `[c,d]` share at least one point.
pub fn segments_intersect(a: P2, b: P2, c: P2, d: P2) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return true;
    }
    on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)
}

/// Segments hanging off a common endpoint `v` overlap beyond it.
pub fn overlap_at_shared(v: P2, p: P2, q: P2) -> bool {
    if orient(v, p, q) != 0 {
        return false;
    }
    let dx1 = (p.0 - v.0) as i128;
    let dy1 = (p.1 - v.1) as i128;
    let dx2 = (q.0 - v.0) as i128;
    let dy2 = (q.1 - v.1) as i128;
    dx1 * dx2 + dy1 * dy2 > 0
}

/// Twice the signed area of a polygon (positive when counterclockwise).
pub fn polygon_area2(pts: &[P2]) -> i128 {
    let mut acc = 0i128;
    for (k, &p) in pts.iter().enumerate() {
        let q = pts[(k + 1) % pts.len()];
        acc += p.0 as i128 * q.1 as i128 - q.0 as i128 * p.1 as i128;
    }
    acc
}

/// Strictly convex in counterclockwise order: every consecutive triple turns
/// left.
pub fn is_strictly_convex_ccw(pts: &[P2]) -> bool {
    let m = pts.len();
    if m < 3 {
        return false;
    }
    (0..m).all(|k| orient(pts[k], pts[(k + 1) % m], pts[(k + 2) % m]) > 0)
}

/// Determinant of the 3×3 matrix with rows `(1, x, x²)` for `x = xa, xb, xc`:
/// the Vandermonde `(xb − xa)(xc − xa)(xc − xb)`.
pub fn vandermonde(xa: i64, xb: i64, xc: i64) -> i128 {
    (xb - xa) as i128 * (xc - xa) as i128 * (xc - xb) as i128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Subset;

    #[test]
    fn plane_points() {
        let xs: Vec<i64> = (1..=6).collect();
        assert_eq!(plane_point(&xs, Subset::from_elems(&[1, 3, 5])), (9, 35));
        assert_eq!(plane_point(&xs, Subset::EMPTY), (0, 0));
    }

    #[test]
    fn orientation_and_segments() {
        assert_eq!(orient((0, 0), (1, 0), (0, 1)), 1);
        assert_eq!(orient((0, 0), (1, 0), (2, 0)), 0);
        assert!(segments_intersect((0, 0), (2, 2), (0, 2), (2, 0)));
        assert!(!segments_intersect((0, 0), (1, 0), (0, 1), (1, 1)));
        assert!(segments_intersect((0, 0), (2, 0), (1, 0), (3, 0)));
        assert!(overlap_at_shared((0, 0), (2, 0), (1, 0)));
        assert!(!overlap_at_shared((0, 0), (2, 0), (-1, 0)));
        assert!(!overlap_at_shared((0, 0), (2, 0), (1, 1)));
    }

    #[test]
    fn areas() {
        let square = [(0, 0), (2, 0), (2, 2), (0, 2)];
        assert_eq!(polygon_area2(&square), 8);
        assert!(is_strictly_convex_ccw(&square));
        let cw: Vec<_> = square.iter().rev().copied().collect();
        assert_eq!(polygon_area2(&cw), -8);
        assert!(!is_strictly_convex_ccw(&cw));
    }

    #[test]
    fn vandermonde_values() {
        assert_eq!(vandermonde(1, 2, 3), 2);
        assert_eq!(vandermonde(1, 3, 5), 16);
    }
}
