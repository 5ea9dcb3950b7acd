//! Labeled point configurations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{affine_dimension, spanning_coordinates};
use crate::rational::{point, Point};

/// Name and parameters of the generator that produced a configuration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

impl ConstructionSpec {
    pub fn new(name: &str) -> Self {
        ConstructionSpec {
            name: name.to_string(),
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }
}

/// A finite set of distinct rational points in `R^dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfig {
    dim: usize,
    points: Vec<Point>,
    affine_dim: usize,
    pub label: Option<String>,
    pub construction: Option<ConstructionSpec>,
}

impl PointConfig {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
        let mut sorted: Vec<(&Point, usize)> = points.iter().zip(0..).collect();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                let (a, b) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
                return Err(Error::DuplicatePoint(a, b));
            }
        }
        let affine_dim = affine_dimension(&points)?;
        Ok(PointConfig {
            dim,
            points,
            affine_dim,
            label: None,
            construction: None,
        })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.len());
        Self::new(dim, rows.iter().map(|r| point(r)).collect())
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_construction(mut self, spec: ConstructionSpec) -> Self {
        self.construction = Some(spec);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    pub fn require_full_dimensional(&self) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(Error::Degenerate {
                dim: self.dim,
                affine: self.affine_dim,
            })
        }
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            })
        }
    }

    /// Re-embeds into `R^k`, `k` the affine dimension, by keeping a set of
    /// coordinates on which the projection of the affine hull is injective.
    /// Point order is preserved.
    pub fn reembed(&self) -> Result<Self> {
        let coords = spanning_coordinates(&self.points)?;
        let pts = self
            .points
            .iter()
            .map(|p| coords.iter().map(|&c| p[c].clone()).collect())
            .collect();
        let mut out = PointConfig::new(coords.len(), pts)?;
        out.label = self.label.clone();
        out.construction = self.construction.clone();
        Ok(out)
    }

    /// Applies `x -> m x + t` to every point.
    pub fn map_affine(&self, m: &[Vec<crate::Rational>], t: &[crate::Rational]) -> Result<Self> {
        let pts = self
            .points
            .iter()
            .map(|p| {
                m.iter()
                    .zip(t)
                    .map(|(row, ti)| crate::rational::dot(row, p) + ti)
                    .collect()
            })
            .collect();
        PointConfig::new(t.len(), pts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_mixed_lengths() {
        assert!(matches!(
            PointConfig::from_ints(&[&[0, 0], &[1, 0], &[0, 0]]),
            Err(Error::DuplicatePoint(0, 2))
        ));
        assert!(matches!(
            PointConfig::new(2, vec![point(&[0, 0]), point(&[1])]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(PointConfig::new(2, vec![]), Err(Error::EmptyInput)));
    }

    #[test]
    fn reembed_planar_square() {
        let c = PointConfig::from_ints(&[&[0, 0, 5], &[1, 0, 5], &[1, 1, 5], &[0, 1, 5]]).unwrap();
        assert!(!c.is_full_dimensional());
        let r = c.reembed().unwrap();
        assert_eq!(r.dim(), 2);
        assert!(r.is_full_dimensional());
    }
}
