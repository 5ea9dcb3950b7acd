//! Triangular bipyramids.

use std::str::FromStr;

use num_traits::{One, Signed};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{strict_count, strictly_convex, verify_sa, TUNING_CAP};
use crate::config::{ConstructionSpec, PointConfig};
use crate::error::{Error, Result};
use crate::rational::{format_rational, frac, int, point, Point, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipyramidVariant {
    /// Regular tetrahedron glued to a flat regular pyramid: `sa = 7`.
    Seven,
    /// Seeded shape search for `sa = 10`.
    SearchMax,
}

impl FromStr for BipyramidVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "seven" => Ok(BipyramidVariant::Seven),
            "search_max" => Ok(BipyramidVariant::SearchMax),
            other => Err(Error::Parse(format!("unknown bipyramid variant '{other}'"))),
        }
    }
}

/// Equilateral face of the tetrahedron inscribed in `[-1, 1]^3`.
fn regular_base() -> Vec<Point> {
    vec![point(&[1, -1, -1]), point(&[-1, 1, -1]), point(&[-1, -1, 1])]
}

/// Base triangle plus `c + h1 w` and `c − h2 w`.
fn assemble(base: &[Point], c: &[Rational], w: &[Rational], h1: &Rational, h2: &Rational) -> Result<PointConfig> {
    let mut pts = base.to_vec();
    pts.push(c.iter().zip(w).map(|(a, b)| a + h1 * b).collect());
    pts.push(c.iter().zip(w).map(|(a, b)| a - h2 * b).collect());
    PointConfig::new(3, pts)
}

pub fn bipyramid_triangle(variant: BipyramidVariant, eps: Rational, seed: u64) -> Result<PointConfig> {
    let base = regular_base();
    let center = vec![frac(-1, 3); 3];
    let axis = vec![Rational::one(); 3];
    // Apex (1,1,1) sits at height 4/3 along the axis: a regular tetrahedron.
    let tall = frac(4, 3);
    match variant {
        BipyramidVariant::Seven => {
            if !eps.is_positive() {
                return Err(Error::Range("eps must be positive".into()));
            }
            let mut e = eps.clone();
            for _ in 0..TUNING_CAP {
                let cfg = assemble(&base, &center, &axis, &tall, &e)?;
                if strictly_convex(&cfg)? && strict_count(&cfg)? == 7 {
                    verify_sa(&cfg, 7)?;
                    let spec = ConstructionSpec::new("bipyramid_triangle")
                        .with("variant", "seven")
                        .with("eps", format_rational(&e));
                    return Ok(cfg.with_construction(spec));
                }
                e *= frac(1, 2);
            }
            Err(Error::RetryCapExceeded("bipyramid_triangle seven".into(), TUNING_CAP))
        }
        BipyramidVariant::SearchMax => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..TUNING_CAP {
                let h2 = frac(rng.gen_range(1..=48), 12);
                let shift: Vec<Rational> = (0..3).map(|_| frac(rng.gen_range(-4..=4), 24)).collect();
                let c: Point = center.iter().zip(&shift).map(|(a, b)| a + b).collect();
                let top: Point = vec![int(1); 3];
                let mut pts = base.clone();
                pts.push(top);
                pts.push(c.iter().zip(&axis).map(|(a, b)| a - &h2 * b).collect());
                let cfg = PointConfig::new(3, pts)?;
                if strictly_convex(&cfg)? && strict_count(&cfg)? == 10 {
                    verify_sa(&cfg, 10)?;
                    let spec = ConstructionSpec::new("bipyramid_triangle")
                        .with("variant", "search_max")
                        .with("seed", seed)
                        .with("h2", format_rational(&h2));
                    return Ok(cfg.with_construction(spec));
                }
            }
            Err(Error::RetryCapExceeded(
                "bipyramid_triangle search_max".into(),
                TUNING_CAP,
            ))
        }
    }
}

/// Random triangle with apexes on both sides along a line through an
/// interior point of the triangle.
pub fn random_bipyramid(seed: u64) -> Result<PointConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let base: Vec<Point> = (0..3)
            .map(|_| {
                vec![
                    int(rng.gen_range(-9..=9)),
                    int(rng.gen_range(-9..=9)),
                    int(rng.gen_range(-2..=2)),
                ]
            })
            .collect();
        let wts: Vec<i64> = (0..3).map(|_| rng.gen_range(1..=5)).collect();
        let total: i64 = wts.iter().sum();
        let c: Point = (0..3)
            .map(|k| base.iter().zip(&wts).map(|(p, &wt)| &p[k] * int(wt)).sum::<Rational>() / int(total))
            .collect();
        let w: Point = vec![
            frac(rng.gen_range(-3..=3), 4),
            frac(rng.gen_range(-3..=3), 4),
            Rational::one(),
        ];
        let h1 = frac(rng.gen_range(1..=40), 4);
        let h2 = frac(rng.gen_range(1..=40), 4);
        let Ok(cfg) = assemble(&base, &c, &w, &h1, &h2) else {
            continue;
        };
        if strictly_convex(&cfg)? {
            return Ok(cfg.with_construction(ConstructionSpec::new("random_bipyramid").with("seed", seed)));
        }
    }
    Err(Error::RetryCapExceeded("random_bipyramid".into(), 1000))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_and_ten() {
        let s = bipyramid_triangle(BipyramidVariant::Seven, frac(1, 2), 0).unwrap();
        assert_eq!(strict_count(&s).unwrap(), 7);
        let m = bipyramid_triangle(BipyramidVariant::SearchMax, frac(1, 2), 0).unwrap();
        assert_eq!(strict_count(&m).unwrap(), 10);
    }

    #[test]
    fn random_bipyramids_in_range() {
        for seed in 0..5 {
            let b = random_bipyramid(seed).unwrap();
            let sa = strict_count(&b).unwrap();
            assert!((7..=10).contains(&sa), "seed {seed}: {sa}");
        }
    }
}
