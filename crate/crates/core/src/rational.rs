//! Exact rational scalars and their text form.
//!
//! Every verification path in this crate works over [`Rational`]; floats only
//! appear inside the search heuristics and never in a reported number.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// A point (or vector) with exact coordinates.
pub type Point = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn point(coords: &[i64]) -> Point {
    coords.iter().map(|&c| int(c)).collect()
}

/// Parses `"p"` or `"p/q"` with `q > 0`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("invalid rational '{text}'"));
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if !q.is_positive() {
                return Err(Error::Parse(format!(
                    "invalid rational '{text}': denominator must be positive"
                )));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rational], s: &Rational) -> Point {
    a.iter().map(|x| x * s).collect()
}

pub fn centroid(points: &[Point]) -> Point {
    let dim = points.first().map_or(0, Vec::len);
    let mut acc = vec![Rational::zero(); dim];
    for p in points {
        for (a, x) in acc.iter_mut().zip(p) {
            *a += x;
        }
    }
    let n = int(points.len() as i64);
    acc.into_iter().map(|a| a / &n).collect()
}

/// Least common multiple of the denominators, used to clear fractions.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// via continued-fraction convergents and the last admissible semiconvergent.
pub fn best_approximation(x: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() || max_den == 0 {
        return None;
    }
    let neg = x < 0.0;
    let ax = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0u128, 1u128, 1u128, 0u128);
    let mut rest = ax;
    let max = max_den as u128;
    loop {
        let a = rest.floor();
        if a > 1e30 {
            break;
        }
        let a = a as u128;
        let p2 = a.saturating_mul(p1).saturating_add(p0);
        let q2 = a.saturating_mul(q1).saturating_add(q0);
        if q2 > max {
            // Largest semiconvergent that still fits.
            let t = (max - q0) / q1.max(1);
            if q1 > 0 && t > 0 {
                let ps = t * p1 + p0;
                let qs = t * q1 + q0;
                let err_semi = (ps as f64 / qs as f64 - ax).abs();
                let err_conv = (p1 as f64 / q1 as f64 - ax).abs();
                if err_semi < err_conv {
                    p1 = ps;
                    q1 = qs;
                }
            }
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac_part = rest - rest.floor();
        if frac_part <= f64::EPSILON * rest.max(1.0) {
            break;
        }
        rest = 1.0 / frac_part;
    }
    if q1 == 0 {
        return None;
    }
    let value = Rational::new(BigInt::from(p1), BigInt::from(q1));
    Some(if neg { -value } else { value })
}

/// Exact ceiling of a rational as an integer.
pub fn ceil_int(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(format_rational(&frac(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(0)), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn approximation_recovers_simple_fractions() {
        assert_eq!(best_approximation(0.5, 1_000_000).unwrap(), frac(1, 2));
        assert_eq!(best_approximation(0.4999999, 1_000_000).unwrap(), frac(1, 2));
        assert_eq!(best_approximation(-1.0 / 3.0, 1000).unwrap(), frac(-1, 3));
        assert_eq!(best_approximation(2.0, 10).unwrap(), int(2));
        let pi = best_approximation(std::f64::consts::PI, 1000).unwrap();
        assert_eq!(pi, frac(355, 113));
        assert_eq!(best_approximation(std::f64::consts::PI, 7).unwrap(), frac(22, 7));
        assert!(best_approximation(f64::NAN, 10).is_none());
    }

    #[test]
    fn approximation_respects_bound() {
        for &x in &[0.123456789, 7.77777, -2.5137, 1e-7, 12345.678] {
            for &q in &[1u64, 3, 17, 1000, 1_000_000] {
                let r = best_approximation(x, q).unwrap();
                assert!(r.denom() <= &BigInt::from(q), "{x} {q} {r}");
            }
        }
    }
}
