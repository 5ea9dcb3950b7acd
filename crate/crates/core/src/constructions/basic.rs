use std::cmp::Ordering;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{strict_count, strictly_convex, verify_sa, TUNING_CAP};
use crate::antipodality::{position_class, PositionClass};
use crate::config::{ConstructionSpec, PointConfig};
use crate::error::{Error, Result};
use crate::rational::{best_approximation, centroid, format_rational, frac, int, point, Point, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseKind {
    Simplex,
    CrossPolytope,
    Cube,
    RegularNgon,
    Parallelogram,
    Trapezoid,
    GenericQuadrangle,
}

impl FromStr for BaseKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "simplex" => BaseKind::Simplex,
            "cross_polytope" => BaseKind::CrossPolytope,
            "cube" => BaseKind::Cube,
            "regular_ngon" => BaseKind::RegularNgon,
            "parallelogram" => BaseKind::Parallelogram,
            "trapezoid" => BaseKind::Trapezoid,
            "generic_quadrangle" => BaseKind::GenericQuadrangle,
            other => return Err(Error::Parse(format!("unknown base kind '{other}'"))),
        })
    }
}

impl BaseKind {
    pub fn name(self) -> &'static str {
        match self {
            BaseKind::Simplex => "simplex",
            BaseKind::CrossPolytope => "cross_polytope",
            BaseKind::Cube => "cube",
            BaseKind::RegularNgon => "regular_ngon",
            BaseKind::Parallelogram => "parallelogram",
            BaseKind::Trapezoid => "trapezoid",
            BaseKind::GenericQuadrangle => "generic_quadrangle",
        }
    }
}

fn unit(d: usize, i: usize, sign: i64) -> Point {
    let mut p = vec![Rational::zero(); d];
    p[i] = int(sign);
    p
}

/// Rational point on the unit circle near angle `theta`, via `t = tan(θ/2)`.
fn circle_point(theta: f64) -> Point {
    let half = theta / 2.0;
    if (half.abs() - std::f64::consts::FRAC_PI_2).abs() < 1e-12 {
        return point(&[-1, 0]);
    }
    let t = best_approximation(half.tan(), 1000).unwrap_or_else(Rational::zero);
    let den = Rational::one() + &t * &t;
    vec![(Rational::one() - &t * &t) / &den, (int(2) * &t) / den]
}

fn regular_ngon(n: usize) -> Result<Vec<Point>> {
    if n < 3 {
        return Err(Error::Range("regular_ngon needs n >= 3".into()));
    }
    let step = std::f64::consts::TAU / n as f64;
    if n.is_multiple_of(2) {
        // Centrally symmetric: every side has a parallel partner.
        let half: Vec<Point> = (0..n / 2).map(|m| circle_point(m as f64 * step)).collect();
        let mut out = half.clone();
        out.extend(half.iter().map(|p| p.iter().map(|c| -c).collect::<Point>()));
        Ok(out)
    } else {
        Ok((0..n)
            .map(|m| {
                let mut a = m as f64 * step;
                if a > std::f64::consts::PI {
                    a -= std::f64::consts::TAU;
                }
                circle_point(a)
            })
            .collect())
    }
}

/// Standard vertex sets.
pub fn base_polytope(kind: BaseKind, d: usize, n: Option<usize>) -> Result<PointConfig> {
    if d < 1 {
        return Err(Error::Range("dimension must be at least 1".into()));
    }
    let planar = |pts: &[&[i64]]| -> Result<Vec<Point>> {
        if d != 2 {
            return Err(Error::Range(format!("{} requires d = 2", kind.name())));
        }
        Ok(pts.iter().map(|p| point(p)).collect())
    };
    let pts: Vec<Point> = match kind {
        BaseKind::Simplex => {
            let mut v = vec![vec![Rational::zero(); d]];
            v.extend((0..d).map(|i| unit(d, i, 1)));
            v
        }
        BaseKind::CrossPolytope => (0..d).flat_map(|i| [unit(d, i, 1), unit(d, i, -1)]).collect(),
        BaseKind::Cube => {
            if d > 16 {
                return Err(Error::Range("cube dimension too large".into()));
            }
            (0..1u32 << d)
                .map(|m| (0..d).map(|i| int(((m >> i) & 1) as i64)).collect())
                .collect()
        }
        BaseKind::RegularNgon => {
            if d != 2 {
                return Err(Error::Range("regular_ngon requires d = 2".into()));
            }
            regular_ngon(n.ok_or_else(|| Error::Parse("regular_ngon needs n".into()))?)?
        }
        BaseKind::Parallelogram => planar(&[&[0, 0], &[2, 0], &[3, 1], &[1, 1]])?,
        BaseKind::Trapezoid => planar(&[&[0, 0], &[3, 0], &[2, 1], &[1, 1]])?,
        BaseKind::GenericQuadrangle => planar(&[&[0, 0], &[3, 0], &[2, 2], &[0, 1]])?,
    };
    let mut spec = ConstructionSpec::new(kind.name()).with("d", d);
    if let Some(n) = n {
        spec = spec.with("n", n);
    }
    Ok(PointConfig::new(d, pts)?.with_construction(spec))
}

fn cross2(a: &[Rational], b: &[Rational]) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Counterclockwise vertex order of a strictly convex planar set.
pub fn polygon_order(config: &PointConfig) -> Result<Vec<usize>> {
    if config.dim() != 2 {
        return Err(Error::Range("polygon_order needs planar points".into()));
    }
    let pts = config.points();
    let start = (0..pts.len())
        .min_by(|&a, &b| (&pts[a][1], &pts[a][0]).cmp(&(&pts[b][1], &pts[b][0])))
        .ok_or(Error::EmptyInput)?;
    let p0 = &pts[start];
    let mut rest: Vec<usize> = (0..pts.len()).filter(|&k| k != start).collect();
    rest.sort_by(|&a, &b| {
        let da: Point = pts[a].iter().zip(p0).map(|(x, y)| x - y).collect();
        let db: Point = pts[b].iter().zip(p0).map(|(x, y)| x - y).collect();
        let c = cross2(&da, &db);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    });
    let mut order = vec![start];
    order.extend(rest);
    Ok(order)
}

/// Number of pairs of parallel sides of a strictly convex polygon.
pub fn parallel_side_pairs(config: &PointConfig) -> Result<usize> {
    if position_class(config)? != PositionClass::StrictlyConvex {
        return Err(Error::Range("polygon is not strictly convex".into()));
    }
    let order = polygon_order(config)?;
    let pts = config.points();
    let n = order.len();
    let sides: Vec<Point> = (0..n)
        .map(|m| {
            let (a, b) = (&pts[order[m]], &pts[order[(m + 1) % n]]);
            b.iter().zip(a).map(|(x, y)| x - y).collect()
        })
        .collect();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if cross2(&sides[i], &sides[j]).is_zero() {
                k += 1;
            }
        }
    }
    Ok(k)
}

/// Iterated pyramid: each step adds one coordinate and an apex above the
/// centroid of the current set.
pub fn pyramid_over(base: &PointConfig, times: usize, heights: Option<&[Rational]>) -> Result<PointConfig> {
    if times < 1 {
        return Err(Error::Range("times must be at least 1".into()));
    }
    if let Some(h) = heights {
        if h.len() != times || h.iter().any(|x| !x.is_positive()) {
            return Err(Error::Range("need one positive height per apex".into()));
        }
    }
    if position_class(base)? != PositionClass::StrictlyConvex {
        return Err(Error::Range("pyramid base must be in strictly convex position".into()));
    }
    let mut cur = if base.is_full_dimensional() {
        base.clone()
    } else {
        base.reembed()?
    };
    let mut expected = strict_count(&cur)?;
    for step in 0..times {
        expected += cur.len();
        let h = heights.map_or_else(Rational::one, |h| h[step].clone());
        let mut apex = centroid(cur.points());
        apex.push(h);
        let mut pts: Vec<Point> = cur
            .points()
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.push(Rational::zero());
                q
            })
            .collect();
        pts.push(apex);
        cur = PointConfig::new(cur.dim() + 1, pts)?;
    }
    verify_sa(&cur, expected)?;
    let mut spec = ConstructionSpec::new("pyramid_over").with("times", times);
    if let Some(b) = &base.construction {
        spec = spec.with("base", &b.name);
    }
    if let Some(h) = heights {
        let text: Vec<String> = h.iter().map(format_rational).collect();
        spec = spec.with("heights", text.join(";"));
    }
    Ok(cur.with_construction(spec))
}

/// Simplex `{0, e_1, …, e_d}` with `k − 1` points just outside distinct
/// facet barycentres.
pub fn simplex_barycenter(d: usize, k: usize, eps0: Rational, seed: u64) -> Result<PointConfig> {
    if d < 2 || k < 1 || k > d + 2 {
        return Err(Error::Range(format!(
            "simplex_barycenter needs d >= 2 and 1 <= k <= d + 2, got d = {d}, k = {k}"
        )));
    }
    if !eps0.is_positive() {
        return Err(Error::Range("eps0 must be positive".into()));
    }
    let mut facets: Vec<usize> = (0..=d).collect();
    facets.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    facets.truncate(k - 1);
    let target = d * (d + 1) / 2 + k - 1;
    let dim_r = int(d as i64);
    let mut simplex = vec![vec![Rational::zero(); d]];
    simplex.extend((0..d).map(|i| unit(d, i, 1)));
    let mut eps = eps0.clone();
    for _ in 0..TUNING_CAP {
        let mut pts = simplex.clone();
        for &f in &facets {
            // Facet f omits vertex f; vertex 0 is the origin.
            let bary: Point = (0..d)
                .map(|c| {
                    if f == c + 1 {
                        Rational::zero()
                    } else {
                        Rational::one() / &dim_r
                    }
                })
                .collect();
            let normal: Point = if f == 0 {
                vec![Rational::one(); d]
            } else {
                unit(d, f - 1, -1)
            };
            pts.push(bary.iter().zip(&normal).map(|(b, n)| b + &eps * n).collect());
        }
        let cfg = PointConfig::new(d, pts)?;
        if strictly_convex(&cfg)? && strict_count(&cfg)? == target {
            verify_sa(&cfg, target)?;
            let spec = ConstructionSpec::new("simplex_barycenter")
                .with("d", d)
                .with("k", k)
                .with("eps0", format_rational(&eps0))
                .with("eps", format_rational(&eps))
                .with("seed", seed);
            return Ok(cfg.with_construction(spec));
        }
        eps *= frac(1, 2);
    }
    Err(Error::RetryCapExceeded("simplex_barycenter".into(), TUNING_CAP))
}

/// `{±e_1, …, ±e_k, e_{k+1}, …, e_d}`.
pub fn crosspoly_pyramid(d: usize, k: usize) -> Result<PointConfig> {
    if k < 1 || k > d {
        return Err(Error::Range(format!(
            "crosspoly_pyramid needs 1 <= k <= d, got d = {d}, k = {k}"
        )));
    }
    let mut pts: Vec<Point> = (0..k).flat_map(|i| [unit(d, i, 1), unit(d, i, -1)]).collect();
    pts.extend((k..d).map(|i| unit(d, i, 1)));
    let cfg = PointConfig::new(d, pts)?;
    let expected = k + (d + k) * (d + k - 1) / 2 - k * (2 * k - 1);
    verify_sa(&cfg, expected)?;
    Ok(cfg.with_construction(ConstructionSpec::new("crosspoly_pyramid").with("d", d).with("k", k)))
}
