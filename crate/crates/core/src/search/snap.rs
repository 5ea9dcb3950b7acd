use crate::antipodality::{count_pairs, position_class, Mode, PairReport, PositionClass};
use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::rational::{best_approximation, Point};

use super::Position;

/// Rounds every coordinate to the closest rational with denominator at most
/// `denominator_bound`, then counts pairs exactly.
pub fn snap_and_verify(
    points: &[Vec<f64>],
    denominator_bound: u64,
    mode: Mode,
    position: Position,
) -> Result<(PointConfig, PairReport)> {
    let dim = points.first().map(Vec::len).ok_or(Error::EmptyInput)?;
    let snapped: Vec<Point> = points
        .iter()
        .map(|p| {
            p.iter()
                .map(|&x| {
                    best_approximation(x, denominator_bound)
                        .ok_or_else(|| Error::Parse(format!("coordinate {x} is not finite")))
                })
                .collect::<Result<Point>>()
        })
        .collect::<Result<_>>()?;
    let config = PointConfig::new(dim, snapped)?;
    config.require_full_dimensional()?;
    let class = position_class(&config)?;
    let ok = match position {
        Position::StrictlyConvex => class == PositionClass::StrictlyConvex,
        Position::Convex => class != PositionClass::NotConvex,
    };
    if !ok {
        return Err(Error::Verification(format!(
            "snapped configuration is {class}, required {position}"
        )));
    }
    let report = count_pairs(&config, mode)?;
    Ok((config, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn exact_input_is_unchanged() {
        let pts = vec![vec![0.0, 0.0], vec![0.5, 0.0], vec![0.0, 0.25]];
        let (c, r) = snap_and_verify(&pts, 1_000_000, Mode::Strict, Position::StrictlyConvex).unwrap();
        assert_eq!(c.point(1)[0], frac(1, 2));
        assert_eq!(c.point(2)[1], frac(1, 4));
        assert_eq!(r.count, 3);
    }

    #[test]
    fn float_octahedron() {
        let mut pts = Vec::new();
        for k in 0..3 {
            for s in [1.0, -1.0] {
                let mut p = vec![1e-9; 3];
                p[k] = s * (1.0 - 1e-9);
                pts.push(p);
            }
        }
        let (c, r) = snap_and_verify(&pts, 1_000, Mode::Strict, Position::StrictlyConvex).unwrap();
        assert!(c.points().iter().all(|p| p.iter().all(|x| x.denom() == &1.into())));
        assert_eq!(r.count, 3);
    }

    #[test]
    fn coplanar_is_rejected() {
        let pts: Vec<Vec<f64>> = (0..5).map(|i| vec![i as f64, (i * i) as f64, 0.0]).collect();
        assert!(matches!(
            snap_and_verify(&pts, 1000, Mode::Strict, Position::StrictlyConvex),
            Err(Error::Degenerate { dim: 3, affine: 2 })
        ));
    }
}
