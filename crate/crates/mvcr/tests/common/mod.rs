//! Test-only oracles, independent of the library's implementation paths.

use mvcr::rootdata::{WeylElt, WeylGroup};

/// Subword-property oracle for the Bruhat order: enumerates every subset of
/// positions of the ShortLex word of `y` and checks whether some subset
/// multiplies to `x` reducedly.
pub fn bruhat_leq_subword_oracle(group: &WeylGroup, x: WeylElt, y: WeylElt) -> bool {
    let word = group.word(y);
    let m = word.len();
    let lx = group.length(x);
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != lx {
            continue;
        }
        let letters: Vec<u8> = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| word[i])
            .collect();
        if group.eval_word(&letters) == x {
            return true;
        }
    }
    lx == 0
}

/// Exact 2-d convex hull membership over the integers (barycentric /
/// orientation tests over every triangle and segment of the point set).
/// Only meaningful for rank-2 fundamental coordinates.
pub fn point_in_hull_2d(points: &[(i64, i64)], p: (i64, i64)) -> bool {
    let cross = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| -> i64 {
        (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
    };
    let on_segment = |a: (i64, i64), b: (i64, i64)| -> bool {
        cross(a, b, p) == 0
            && p.0 >= a.0.min(b.0)
            && p.0 <= a.0.max(b.0)
            && p.1 >= a.1.min(b.1)
            && p.1 <= a.1.max(b.1)
    };
    if points.contains(&p) {
        return true;
    }
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i + 1..] {
            if on_segment(a, b) {
                return true;
            }
        }
    }
    for (i, &a) in points.iter().enumerate() {
        for (j, &b) in points.iter().enumerate().skip(i + 1) {
            for &c in &points[j + 1..] {
                if cross(a, b, c) == 0 {
                    // degenerate triangle; covered by the segment checks
                    continue;
                }
                let d1 = cross(a, b, p);
                let d2 = cross(b, c, p);
                let d3 = cross(c, a, p);
                let has_neg = d1 < 0 || d2 < 0 || d3 < 0;
                let has_pos = d1 > 0 || d2 > 0 || d3 > 0;
                if !(has_neg && has_pos) {
                    return true;
                }
            }
        }
    }
    false
}
