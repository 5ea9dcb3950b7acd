//! Floating-point pair counter used only to steer the annealing.
//!
//! Every test has the shape "is there `u` with `a_r·u ≥ c_r t` for all rows
//! and `t > 0`", solved by a small dense simplex that starts from the
//! feasible point `u = 0, t = 0` and maximises `t ≤ 1`.

use crate::antipodality::Mode;

use super::Position;

const EPS: f64 = 1e-9;

/// Rows `(a, c)` meaning `a·u − c·t ≥ 0`. True when some feasible point has
/// `t > 0`.
pub(crate) fn positive_slack(rows: &[(Vec<f64>, f64)], dim: usize) -> bool {
    let m = rows.len() + 1;
    // Columns: u+ (dim), u− (dim), t, one slack per row.
    let ncols = 2 * dim + 1 + m;
    let t_col = 2 * dim;
    let mut tab = vec![vec![0.0f64; ncols + 1]; m];
    for (r, (a, c)) in rows.iter().enumerate() {
        let row = &mut tab[r];
        for k in 0..dim {
            row[k] = -a[k];
            row[dim + k] = a[k];
        }
        row[t_col] = *c;
        row[t_col + 1 + r] = 1.0;
    }
    // t + s = 1
    tab[m - 1][t_col] = 1.0;
    tab[m - 1][ncols - 1] = 1.0;
    tab[m - 1][ncols] = 1.0;
    let mut basis: Vec<usize> = (0..m).map(|r| t_col + 1 + r).collect();
    let mut cost = vec![0.0f64; ncols + 1];
    cost[t_col] = -1.0;
    for _ in 0..10 * ncols {
        if cost[ncols] > EPS {
            return true;
        }
        let Some(enter) = (0..ncols).find(|&j| cost[j] < -EPS) else {
            return false;
        };
        let mut leave: Option<(usize, f64)> = None;
        for r in 0..m {
            let a = tab[r][enter];
            if a > EPS {
                let ratio = tab[r][ncols] / a;
                match leave {
                    None => leave = Some((r, ratio)),
                    Some((lr, lratio)) => {
                        if ratio < lratio - EPS || (ratio <= lratio + EPS && basis[r] < basis[lr]) {
                            leave = Some((r, ratio));
                        }
                    }
                }
            }
        }
        let Some((pr, _)) = leave else {
            // t cannot grow without bound; an unbounded ray only moves u.
            return true;
        };
        let piv = tab[pr][enter];
        for v in tab[pr].iter_mut() {
            *v /= piv;
        }
        let pivot_row = tab[pr].clone();
        for (r, row) in tab.iter_mut().enumerate() {
            if r != pr {
                let f = row[enter];
                if f != 0.0 {
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x -= f * p;
                    }
                }
            }
        }
        let f = cost[enter];
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            *x -= f * p;
        }
        basis[pr] = enter;
    }
    false
}

fn diff(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn pair_holds(pts: &[Vec<f64>], i: usize, j: usize, mode: Mode) -> bool {
    let dim = pts[0].len();
    let c = match mode {
        Mode::Antipodal => 0.0,
        Mode::Strict => 1.0,
    };
    let mut rows = Vec::with_capacity(2 * pts.len());
    for (k, x) in pts.iter().enumerate() {
        if k != i && k != j {
            rows.push((diff(&pts[i], x), c));
            rows.push((diff(x, &pts[j]), c));
        }
    }
    rows.push((diff(&pts[i], &pts[j]), 1.0));
    positive_slack(&rows, dim)
}

fn is_vertex(pts: &[Vec<f64>], i: usize) -> bool {
    let rows: Vec<(Vec<f64>, f64)> = pts
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, x)| (diff(&pts[i], x), 1.0))
        .collect();
    positive_slack(&rows, pts[0].len())
}

fn on_boundary(pts: &[Vec<f64>], i: usize) -> bool {
    let dim = pts[0].len();
    let mut total = vec![0.0; dim];
    let mut rows: Vec<(Vec<f64>, f64)> = Vec::with_capacity(pts.len());
    for (k, x) in pts.iter().enumerate() {
        if k != i {
            let r = diff(&pts[i], x);
            for (s, v) in total.iter_mut().zip(&r) {
                *s += v;
            }
            rows.push((r, 0.0));
        }
    }
    rows.push((total, 1.0));
    positive_slack(&rows, dim)
}

/// Numerical rank test for full affine dimension.
pub(crate) fn full_dimensional(pts: &[Vec<f64>]) -> bool {
    let dim = pts[0].len();
    let mut m: Vec<Vec<f64>> = pts[1..].iter().map(|p| diff(p, &pts[0])).collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(p) = (rank..m.len()).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs())) else {
            break;
        };
        if m[p][col].abs() < EPS {
            continue;
        }
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank {
                let f = row[col] / pivot[col];
                if f != 0.0 {
                    for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                        *x -= f * p;
                    }
                }
            }
        }
        rank += 1;
    }
    rank == dim
}

pub(crate) fn position_ok(pts: &[Vec<f64>], position: Position) -> bool {
    match position {
        Position::StrictlyConvex => (0..pts.len()).all(|i| is_vertex(pts, i)),
        Position::Convex => (0..pts.len()).all(|i| is_vertex(pts, i) || on_boundary(pts, i)),
    }
}

/// Estimated pair count, or `None` when the position requirement fails.
pub fn estimate(pts: &[Vec<f64>], mode: Mode, position: Position) -> Option<usize> {
    if pts.len() < 2 || !full_dimensional(pts) || !position_ok(pts, position) {
        return None;
    }
    let n = pts.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if pair_holds(pts, i, j, mode) {
                count += 1;
            }
        }
    }
    Some(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(rows: &[&[f64]]) -> Vec<Vec<f64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn square_and_octahedron() {
        let sq = f(&[&[0.0, 0.0], &[1.0, 0.0], &[1.0, 1.0], &[0.0, 1.0]]);
        assert_eq!(estimate(&sq, Mode::Strict, Position::StrictlyConvex), Some(2));
        assert_eq!(estimate(&sq, Mode::Antipodal, Position::StrictlyConvex), Some(6));
        let oct = f(&[
            &[1.0, 0.0, 0.0],
            &[-1.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0],
            &[0.0, -1.0, 0.0],
            &[0.0, 0.0, 1.0],
            &[0.0, 0.0, -1.0],
        ]);
        assert_eq!(estimate(&oct, Mode::Strict, Position::StrictlyConvex), Some(3));
        assert_eq!(estimate(&oct, Mode::Antipodal, Position::StrictlyConvex), Some(15));
    }

    #[test]
    fn positions() {
        let with_mid = f(&[&[0.0, 0.0], &[2.0, 0.0], &[1.0, 0.0], &[0.0, 2.0]]);
        assert!(!position_ok(&with_mid, Position::StrictlyConvex));
        assert!(position_ok(&with_mid, Position::Convex));
        let inner = f(&[&[0.0, 0.0], &[3.0, 0.0], &[1.0, 1.0], &[0.0, 3.0]]);
        assert!(!position_ok(&inner, Position::Convex));
        assert!(!full_dimensional(&f(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 2.0]])));
    }
}
