//! Product of the four-piece arc gadget: `4^k` pairwise strictly antipodal
//! points in `R^{3k}`.
//!
//! The gadget has three circular arcs through the endpoints of the skew edges
//! `(t, 1, −1)`, `(−1, t, 1)`, `(1, −1, t)` of `[−1, 1]^3`, bulging away from
//! the origin by `1/q = 1/4`, plus one free cube vertex. Only finitely many rational
//! points per arc are used, and every cross-piece pair is checked exactly.

use num_traits::Zero;

use super::TUNING_CAP;
use crate::antipodality::{count_pairs, pair_test, Mode};
use crate::config::{ConstructionSpec, PointConfig};
use crate::error::{Error, Result};
use crate::hull::hull_vertices;
use crate::rational::{centroid, format_rational, frac, int, point, Point, Rational};

/// Edge direction `e` and offset direction `f`; the edge is `b = 1`.
fn edge_frame(arc: usize) -> (Point, Point) {
    match arc {
        0 => (point(&[1, 0, 0]), point(&[0, 1, -1])),
        1 => (point(&[0, 1, 0]), point(&[-1, 0, 1])),
        _ => (point(&[0, 0, 1]), point(&[1, -1, 0])),
    }
}

/// Point on arc `arc` at tangent-half-angle parameter `t`, `|t| < 1/q`.
fn arc_point(arc: usize, q: i64, t: &Rational) -> Point {
    let qq = int(q);
    let m = (&qq * &qq - int(1)) / (int(2) * &qq);
    let rho = (&qq * &qq + int(1)) / (int(2) * &qq);
    let den = int(1) + t * t;
    let a = &rho * int(2) * t / &den;
    let b = int(1) - &m + &rho * (int(1) - t * t) / &den;
    let (e, f) = edge_frame(arc);
    e.iter().zip(&f).map(|(x, y)| &a * x + &b * y).collect()
}

/// Gadget with `per_arc` points on each arc, spread evenly over the middle
/// part `|t| < width/q`; returns the pieces in order arc 0, arc 1, arc 2,
/// vertex.
///
/// Points near the arc ends fail: two arcs meeting near a cube vertex force
/// a supporting normal that the free vertex beats. Keeping `a` below about
/// `√5 − 2` avoids this, hence the width factor.
fn gadget(q: i64, width: &Rational, per_arc: usize, vertex: &Point) -> Vec<Vec<Point>> {
    let nn = per_arc as i64;
    let mut pieces: Vec<Vec<Point>> = (0..3)
        .map(|arc| {
            (0..nn)
                .map(|m| arc_point(arc, q, &(width * frac(2 * (m + 1) - (nn + 1), (nn + 1) * q))))
                .collect()
        })
        .collect();
    pieces.push(vec![vertex.clone()]);
    pieces
}

/// Exact check that points from different pieces are strictly antipodal
/// with respect to the whole gadget.
fn gadget_ok(pieces: &[Vec<Point>]) -> Result<bool> {
    let mut owner = Vec::new();
    let mut pts = Vec::new();
    for (p, piece) in pieces.iter().enumerate() {
        for x in piece {
            owner.push(p);
            pts.push(x.clone());
        }
    }
    let cfg = PointConfig::new(3, pts)?;
    for i in 0..cfg.len() {
        for j in i + 1..cfg.len() {
            if owner[i] != owner[j] && pair_test(&cfg, i, j, Mode::Strict)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Position of `index` among its siblings in factor `l`: the base-4 number
/// formed by the other factors' digits.
fn sibling_rank(digits: &[usize], l: usize) -> usize {
    digits
        .iter()
        .enumerate()
        .filter(|&(m, _)| m != l)
        .fold(0, |acc, (_, &dgt)| acc * 4 + dgt)
}

pub fn arcs_product(k: usize, pad: usize, seed: u64) -> Result<PointConfig> {
    if k == 0 || k > 3 {
        return Err(Error::Range(format!("arcs_product needs 1 <= k <= 3, got {k}")));
    }
    if pad > 2 {
        return Err(Error::Range(format!("pad must be 0, 1 or 2, got {pad}")));
    }
    let vertex = if seed.is_multiple_of(2) {
        point(&[1, 1, 1])
    } else {
        point(&[-1, -1, -1])
    };
    let per_arc = 4usize.pow(k as u32 - 1);
    let q = 4i64;
    let mut width = frac(1, 4);
    for _ in 0..TUNING_CAP {
        let pieces = gadget(q, &width, per_arc, &vertex);
        if gadget_ok(&pieces)? {
            let total = 4usize.pow(k as u32);
            let mut pts: Vec<Point> = Vec::with_capacity(total + pad);
            for idx in 0..total {
                let digits: Vec<usize> = (0..k).map(|l| (idx / 4usize.pow((k - 1 - l) as u32)) % 4).collect();
                let mut x: Point = Vec::with_capacity(3 * k + pad);
                for (l, &dgt) in digits.iter().enumerate() {
                    let piece = &pieces[dgt];
                    let p = if dgt == 3 {
                        &piece[0]
                    } else {
                        &piece[sibling_rank(&digits, l)]
                    };
                    x.extend(p.iter().cloned());
                }
                pts.push(x);
            }
            for level in 0..pad {
                let mut apex = centroid(&pts);
                for p in pts.iter_mut() {
                    p.push(Rational::zero());
                }
                apex.push(int(1));
                debug_assert_eq!(apex.len(), 3 * k + level + 1);
                pts.push(apex);
            }
            let cfg = PointConfig::new(3 * k + pad, pts)?;
            let n = cfg.len();
            let strict = count_pairs(&cfg, Mode::Strict)?.count;
            if strict != n * (n - 1) / 2 {
                return Err(Error::Verification(format!(
                    "arcs product: {strict} of {} pairs strictly antipodal",
                    n * (n - 1) / 2
                )));
            }
            if hull_vertices(cfg.points())?.len() != n {
                return Err(Error::Verification("arcs product is not in convex position".into()));
            }
            let spec = ConstructionSpec::new("arcs_product")
                .with("k", k)
                .with("pad", pad)
                .with("seed", seed)
                .with("q", q)
                .with("width", format_rational(&width));
            return Ok(cfg.with_construction(spec));
        }
        width *= frac(1, 2);
    }
    Err(Error::RetryCapExceeded("arcs_product gadget".into(), TUNING_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_endpoints_are_edge_endpoints() {
        let q = 3;
        let end = arc_point(0, q, &frac(1, q));
        assert_eq!(end, point(&[1, 1, -1]));
        let mid = arc_point(0, q, &Rational::zero());
        assert_eq!(mid, vec![int(0), frac(4, 3), frac(-4, 3)]);
    }

    #[test]
    fn single_gadget() {
        let c = arcs_product(1, 0, 0).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.dim(), 3);
    }

    #[test]
    fn ranks_are_distinct() {
        let mut seen = std::collections::BTreeSet::new();
        for a in 0..4 {
            for b in 0..4 {
                seen.insert(sibling_rank(&[1, a, b], 0));
            }
        }
        assert_eq!(seen.len(), 16);
    }
}
