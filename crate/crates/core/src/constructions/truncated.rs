//! Truncated cross-polytope with `sa = 2d` and a prescribed vertex count.
//!
//! Start from `conv{±e_i, ±v}`, `v = (1/(d−2), …, 1/(d−2))`, and cut near `v`
//! and `−v` with parallel hyperplanes `H+`, `H−`. `H−` passes through `k`
//! chosen points `−e_i` and through points `q_j` on the edges `(−e_j, −v)` of
//! the others. Vertex counts:
//!
//! | n            | H+                        | k          |
//! |--------------|---------------------------|------------|
//! | 2d+1 ..= 3d+1 | through `v`               | 3d + 1 − n |
//! | 3d+2 ..= 4d   | cuts every edge `(e_i, v)` | 4d − n     |

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::TUNING_CAP;
use crate::antipodality::{count_pairs, difference_body_counts, Mode};
use crate::config::{ConstructionSpec, PointConfig};
use crate::error::{Error, Result};
use crate::hull::hull_vertices;
use crate::linalg::solve;
use crate::rational::{dot, format_rational, frac, int, Point, Rational};

pub fn truncated_crosspolytope(d: usize, n: usize, seed: u64) -> Result<PointConfig> {
    if d < 3 {
        return Err(Error::Range("truncated_crosspolytope needs d >= 3".into()));
    }
    if n < 2 * d + 1 || n > 4 * d {
        return Err(Error::Range(format!(
            "n must lie in [{}, {}] for d = {d}, got {n}",
            2 * d + 1,
            4 * d
        )));
    }
    let through_v = n <= 3 * d + 1;
    let k = if through_v { 3 * d + 1 - n } else { 4 * d - n };
    let mut order: Vec<usize> = (0..d).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut chosen = vec![false; d];
    for &i in &order[..k] {
        chosen[i] = true;
    }

    let unit = |i: usize, s: i64| -> Point {
        let mut p = vec![Rational::zero(); d];
        p[i] = int(s);
        p
    };
    let v: Point = vec![frac(1, d as i64 - 2); d];
    let neg_v: Point = v.iter().map(|c| -c).collect();

    let mut t = frac(1, 4);
    for _ in 0..TUNING_CAP {
        let attempt = (|| -> Result<Option<PointConfig>> {
            // Points spanning H−.
            let span: Vec<Point> = (0..d)
                .map(|j| {
                    if chosen[j] {
                        unit(j, -1)
                    } else {
                        (0..d)
                            .map(|c| {
                                let e = if c == j { Rational::one() } else { Rational::zero() };
                                -((Rational::one() - &t) * e + &t * &v[c])
                            })
                            .collect()
                    }
                })
                .collect();
            // H− = {<w, x> = −1}; P lies on the side <w, x> >= −1.
            let Some(w) = solve(&span, &vec![int(-1); d]) else {
                return Ok(None);
            };
            let level = |x: &Point| dot(&w, x);
            if level(&neg_v) >= int(-1) {
                return Ok(None);
            }
            let kept_ok = (0..d).all(|i| level(&unit(i, 1)) > int(-1) && (chosen[i] || level(&unit(i, -1)) > int(-1)))
                && level(&v) > int(-1);
            if !kept_ok {
                return Ok(None);
            }
            let mut pts: Vec<Point> = (0..d).flat_map(|i| [unit(i, 1), unit(i, -1)]).collect();
            pts.extend((0..d).filter(|&j| !chosen[j]).map(|j| span[j].clone()));
            if through_v {
                pts.push(v.clone());
            } else {
                let top = (0..d).map(|i| level(&unit(i, 1))).max().expect("d >= 3");
                let hv = level(&v);
                if top >= hv {
                    return Ok(None);
                }
                let c_plus = (&top + &hv) / int(2);
                for i in 0..d {
                    let ei = unit(i, 1);
                    let le = level(&ei);
                    let s = (&c_plus - &le) / (&hv - &le);
                    pts.push(ei.iter().zip(&v).map(|(a, b)| a + &s * (b - a)).collect());
                }
            }
            let cfg = PointConfig::new(d, pts)?;
            if hull_vertices(cfg.points())?.len() != n || cfg.len() != n {
                return Ok(None);
            }
            Ok(Some(cfg))
        })()?;
        if let Some(cfg) = attempt {
            let db = difference_body_counts(&cfg)?;
            let lp = count_pairs(&cfg, Mode::Strict)?.count;
            if db.db_vertices == 4 * d && db.sa == 2 * d && lp == 2 * d {
                let chosen_list: Vec<String> = (0..d).filter(|&i| chosen[i]).map(|i| i.to_string()).collect();
                let spec = ConstructionSpec::new("truncated_crosspolytope")
                    .with("d", d)
                    .with("n", n)
                    .with("seed", seed)
                    .with("k", k)
                    .with("upper_cut", if through_v { "through_v" } else { "edges" })
                    .with("chosen", chosen_list.join(";"))
                    .with("t", format_rational(&t));
                return Ok(cfg.with_construction(spec));
            }
        }
        t *= frac(1, 2);
        if !t.is_positive() {
            break;
        }
    }
    Err(Error::RetryCapExceeded("truncated_crosspolytope".into(), TUNING_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_plus_v() {
        let c = truncated_crosspolytope(3, 7, 0).unwrap();
        assert_eq!(c.len(), 7);
        assert!(c.points().contains(&vec![int(1), int(1), int(1)]));
    }

    #[test]
    fn all_sizes_in_dimension_three() {
        for n in 7..=12 {
            let c = truncated_crosspolytope(3, n, n as u64).unwrap();
            assert_eq!(c.len(), n);
        }
    }

    #[test]
    fn range_errors() {
        assert!(truncated_crosspolytope(3, 6, 0).is_err());
        assert!(truncated_crosspolytope(3, 13, 0).is_err());
        assert!(truncated_crosspolytope(2, 6, 0).is_err());
    }
}
