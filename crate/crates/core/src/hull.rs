//! Convex-hull membership, vertices and relative interiors by exact LP.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lp::{lp_witness, LinearSystem, LpOutcome, VarKind};
use crate::rational::{sub, Point, Rational};

fn check(points: &[Point], z: &[Rational]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    for p in points {
        if p.len() != z.len() {
            return Err(Error::DimensionMismatch {
                expected: z.len(),
                found: p.len(),
            });
        }
    }
    Ok(())
}

/// Whether `z` is a convex combination of `points`.
pub fn in_hull(points: &[&Point], z: &[Rational]) -> Result<bool> {
    if points.is_empty() {
        return Ok(false);
    }
    let d = z.len();
    let mut sys = LinearSystem::with_kinds(vec![VarKind::NonNeg; points.len()]);
    for c in 0..d {
        sys.eq(points.iter().map(|p| p[c].clone()).collect(), z[c].clone());
    }
    sys.eq(vec![Rational::one(); points.len()], Rational::one());
    Ok(lp_witness(&sys)?.is_feasible())
}

/// Indices of the points that are vertices of their convex hull. Of several
/// equal points only the lowest index can be reported.
pub fn hull_vertices(points: &[Point]) -> Result<Vec<usize>> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    check(points, first)?;
    let mut out = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            continue;
        }
        let others: Vec<&Point> = points.iter().filter(|q| *q != p).collect();
        if !in_hull(&others, p)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// Decides `z ∈ relint conv(points)`.
///
/// Returns `None` when `z` is in the relative interior. Otherwise returns a
/// vector `y` with `<y, w> <= <y, z>` for every point `w` and strict inequality
/// for at least one of them.
///
/// The test asks for weights `λ_w >= 1` with `Σ λ_w (w − z) = 0`, written with
/// `μ = λ − 1 >= 0` so that only `d` rows are needed.
pub fn relint_separator(points: &[Point], z: &[Rational]) -> Result<Option<Point>> {
    check(points, z)?;
    let d = z.len();
    let m = points.len();
    let diffs: Vec<Point> = points.iter().map(|w| sub(w, z)).collect();
    let mut sys = LinearSystem::with_kinds(vec![VarKind::NonNeg; m]);
    for c in 0..d {
        let rhs = -diffs.iter().fold(Rational::zero(), |acc, v| acc + &v[c]);
        sys.eq(diffs.iter().map(|v| v[c].clone()).collect(), rhs);
    }
    Ok(match lp_witness(&sys)? {
        LpOutcome::Feasible(_) => None,
        LpOutcome::Infeasible(y) => Some(y),
    })
}

pub fn in_relative_interior(points: &[Point], z: &[Rational]) -> Result<bool> {
    Ok(relint_separator(points, z)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{dot, frac, int, point};

    fn square() -> Vec<Point> {
        vec![point(&[0, 0]), point(&[1, 0]), point(&[1, 1]), point(&[0, 1])]
    }

    #[test]
    fn square_with_center() {
        let mut pts = square();
        pts.push(vec![frac(1, 2), frac(1, 2)]);
        assert_eq!(hull_vertices(&pts).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn simplex_vertices() {
        let pts = vec![
            point(&[0, 0, 0]),
            point(&[1, 0, 0]),
            point(&[0, 1, 0]),
            point(&[0, 0, 1]),
        ];
        assert_eq!(hull_vertices(&pts).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn collinear_and_duplicates() {
        let pts = vec![point(&[0, 0]), point(&[1, 1]), point(&[2, 2])];
        assert_eq!(hull_vertices(&pts).unwrap(), vec![0, 2]);
        let dup = vec![point(&[1, 1]), point(&[0, 0]), point(&[1, 1]), point(&[2, 0])];
        assert_eq!(hull_vertices(&dup).unwrap(), vec![0, 1, 3]);
    }

    #[test]
    fn interior_and_boundary() {
        let pts = square();
        assert!(in_relative_interior(&pts, &[frac(1, 2), frac(1, 3)]).unwrap());
        let mid = [frac(1, 2), int(0)];
        let y = relint_separator(&pts, &mid).unwrap().unwrap();
        let top = dot(&y, &mid);
        assert!(pts.iter().all(|w| dot(&y, w) <= top));
        assert!(pts.iter().any(|w| dot(&y, w) < top));
        assert!(!in_relative_interior(&pts, &[int(2), int(2)]).unwrap());
        // Relative interior of a segment in the plane.
        let seg = vec![point(&[0, 0]), point(&[2, 2])];
        assert!(in_relative_interior(&seg, &point(&[1, 1])).unwrap());
        assert!(!in_relative_interior(&seg, &point(&[0, 0])).unwrap());
    }
}
