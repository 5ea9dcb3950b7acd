//! Seeded random inputs for property checks.

use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::{ConstructionSpec, PointConfig};
use crate::error::{Error, Result};
use crate::hull::hull_vertices;
use crate::rational::{frac, int, Point, Rational};

fn cross(a: &(i64, i64), b: &(i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn half(v: &(i64, i64)) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

/// Convex lattice polygon built from edge vectors sorted by angle.
///
/// Some edges come with their negatives, so the polygon has a random number
/// of parallel side pairs; the count is left for the caller to compute.
pub fn random_convex_polygon(n: usize, seed: u64) -> Result<PointConfig> {
    if n < 3 {
        return Err(Error::Range("a polygon needs at least 3 vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..1000 {
        let mut edges: Vec<(i64, i64)> = Vec::with_capacity(n);
        let pairs = rng.gen_range(0..=n / 2);
        let same_direction =
            |edges: &[(i64, i64)], v: &(i64, i64)| edges.iter().any(|e| cross(e, v) == 0 && e.0 * v.0 + e.1 * v.1 > 0);
        let mut twins = 0;
        while edges.len() < n - 1 {
            let v = (rng.gen_range(-6..=6), rng.gen_range(-6..=6));
            if v == (0, 0) || same_direction(&edges, &v) {
                continue;
            }
            let twin = (-v.0, -v.1);
            let wants_twin = twins < pairs && edges.len() + 2 < n;
            if wants_twin && !same_direction(&edges, &twin) {
                twins += 1;
                edges.push(v);
                edges.push(twin);
            } else {
                edges.push(v);
            }
        }
        let sum = edges.iter().fold((0, 0), |s, e| (s.0 + e.0, s.1 + e.1));
        let close = (-sum.0, -sum.1);
        if close == (0, 0) || same_direction(&edges, &close) {
            continue 'attempt;
        }
        edges.push(close);
        edges.sort_by(|a, b| half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b))));
        let mut pts: Vec<Point> = Vec::with_capacity(n);
        let mut cur = (0i64, 0i64);
        for e in &edges {
            pts.push(vec![int(cur.0), int(cur.1)]);
            cur = (cur.0 + e.0, cur.1 + e.1);
        }
        let Ok(cfg) = PointConfig::new(2, pts) else {
            continue 'attempt;
        };
        if !cfg.is_full_dimensional() || hull_vertices(cfg.points())?.len() != n {
            continue 'attempt;
        }
        return Ok(cfg.with_construction(
            ConstructionSpec::new("random_convex_polygon")
                .with("n", n)
                .with("seed", seed),
        ));
    }
    Err(Error::RetryCapExceeded("random_convex_polygon".into(), 1000))
}

/// Rational point on the unit sphere by inverse stereographic projection.
fn sphere_point(y: &[Rational]) -> Point {
    let s: Rational = y.iter().map(|c| c * c).sum();
    let den = &s + Rational::one();
    let mut p: Point = y.iter().map(|c| int(2) * c / &den).collect();
    p.push((s - Rational::one()) / den);
    p
}

/// Random strictly convex full-dimensional set of `n` points in `R^d`.
///
/// Alternates between points on a sphere (generic) and vertex sets of
/// random small lattice polytopes (with parallel edges and faces).
pub fn random_strictly_convex(d: usize, n: usize, seed: u64) -> Result<PointConfig> {
    if d < 2 || n < d + 1 {
        return Err(Error::Range(format!(
            "need d >= 2 and n >= d + 1, got d = {d}, n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lattice = seed % 2 == 1;
    for _ in 0..1000 {
        let pts: Vec<Point> = if lattice {
            let mut pool: Vec<Point> = Vec::new();
            let r = if d <= 2 { 4 } else { 2 };
            let mut guard = 0;
            while guard < 400 {
                guard += 1;
                let p: Point = (0..d).map(|_| int(rng.gen_range(-r..=r))).collect();
                if pool.contains(&p) {
                    continue;
                }
                pool.push(p);
                let verts = hull_vertices(&pool)?;
                if verts.len() < pool.len() {
                    pool.pop();
                }
                if pool.len() == n {
                    break;
                }
            }
            pool
        } else {
            (0..n)
                .map(|_| {
                    let y: Vec<Rational> = (0..d - 1)
                        .map(|_| frac(rng.gen_range(-12..=12), rng.gen_range(1..=6)))
                        .collect();
                    sphere_point(&y)
                })
                .collect()
        };
        if pts.len() != n {
            continue;
        }
        let Ok(cfg) = PointConfig::new(d, pts) else {
            continue;
        };
        if !cfg.is_full_dimensional() {
            continue;
        }
        if hull_vertices(cfg.points())?.len() == n {
            return Ok(cfg.with_construction(
                ConstructionSpec::new("random_strictly_convex")
                    .with("d", d)
                    .with("n", n)
                    .with("seed", seed),
            ));
        }
    }
    Err(Error::RetryCapExceeded("random_strictly_convex".into(), 1000))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::parallel_side_pairs;

    #[test]
    fn polygons_are_strictly_convex() {
        let mut ks = Vec::new();
        for seed in 0..20 {
            let n = 3 + (seed as usize % 10);
            let p = random_convex_polygon(n, seed).unwrap();
            assert_eq!(p.len(), n);
            ks.push(parallel_side_pairs(&p).unwrap());
        }
        assert!(ks.contains(&0));
        assert!(ks.iter().any(|&k| k >= 2));
    }

    #[test]
    fn random_sets_have_requested_size() {
        for seed in 0..6 {
            let c = random_strictly_convex(3, 7, seed).unwrap();
            assert_eq!(c.len(), 7);
            assert!(c.is_full_dimensional());
        }
    }
}
