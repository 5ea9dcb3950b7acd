//! Antipodal and strictly antipodal pairs.
//!
//! Two independent oracles count pairs: [`count_pairs`] solves one
//! supporting-hyperplane LP per pair, [`difference_body_counts`] looks at the
//! vertices and boundary of the difference body `P − P`.

mod projection;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use projection::{
    coordinate_projection, lift_pair, project_at_vertex, unique_max_chord, CoordinateProjection, VertexProjection,
};

use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::hull::{hull_vertices, in_relative_interior};
use crate::lp::{lp_witness, LinearSystem, LpOutcome};
use crate::rational::{dot, sub, Point, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Antipodal,
    Strict,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Antipodal => "antipodal",
            Mode::Strict => "strict",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "antipodal" => Ok(Mode::Antipodal),
            "strict" => Ok(Mode::Strict),
            other => Err(Error::Parse(format!("unknown mode '{other}'"))),
        }
    }
}

/// Direction `u` with `<u, x_i> = hi` and `<u, x_j> = lo`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub direction: Point,
    pub hi: Rational,
    pub lo: Rational,
}

impl Certificate {
    /// Exact check of the certificate for pair `(i, j)`.
    pub fn validates(&self, config: &PointConfig, i: usize, j: usize, mode: Mode) -> bool {
        let pts = config.points();
        if i >= pts.len() || j >= pts.len() || i == j || self.direction.len() != config.dim() {
            return false;
        }
        let u = &self.direction;
        if self.hi <= self.lo || dot(u, &pts[i]) != self.hi || dot(u, &pts[j]) != self.lo {
            return false;
        }
        pts.iter().enumerate().all(|(k, x)| {
            let v = dot(u, x);
            match mode {
                Mode::Antipodal => v >= self.lo && v <= self.hi,
                Mode::Strict => (k == i || v < self.hi) && (k == j || v > self.lo),
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairReport {
    pub mode: Mode,
    pub count: usize,
    pub pairs: Vec<(usize, usize)>,
    pub certificates: Vec<Certificate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffBodyCounts {
    pub a: usize,
    pub sa: usize,
    pub db_vertices: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PositionClass {
    StrictlyConvex,
    ConvexNotStrict,
    NotConvex,
}

impl fmt::Display for PositionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PositionClass::StrictlyConvex => "strictly_convex",
            PositionClass::ConvexNotStrict => "convex_not_strict",
            PositionClass::NotConvex => "not_convex",
        })
    }
}

fn pair_system(config: &PointConfig, i: usize, j: usize, mode: Mode) -> LinearSystem {
    let pts = config.points();
    let (xi, xj) = (&pts[i], &pts[j]);
    let margin = match mode {
        Mode::Antipodal => Rational::zero(),
        Mode::Strict => Rational::one(),
    };
    let mut sys = LinearSystem::new(config.dim());
    for (k, x) in pts.iter().enumerate() {
        if k != i {
            sys.ge(sub(xi, x), margin.clone());
        }
        if k != j {
            sys.ge(sub(x, xj), margin.clone());
        }
    }
    if mode == Mode::Antipodal {
        sys.ge(sub(xi, xj), Rational::one());
    }
    sys
}

/// Finds a certificate that `x_i` and `x_j` are a (strictly) antipodal pair,
/// with `x_i` on the upper hyperplane.
pub fn pair_test(config: &PointConfig, i: usize, j: usize, mode: Mode) -> Result<Option<Certificate>> {
    config.check_index(i)?;
    config.check_index(j)?;
    if i == j {
        return Err(Error::InvalidPair(i, j));
    }
    config.require_full_dimensional()?;
    pair_test_unchecked(config, i, j, mode)
}

fn pair_test_unchecked(config: &PointConfig, i: usize, j: usize, mode: Mode) -> Result<Option<Certificate>> {
    let sys = pair_system(config, i, j, mode);
    Ok(match lp_witness(&sys)? {
        LpOutcome::Infeasible(_) => None,
        LpOutcome::Feasible(u) => {
            let cert = Certificate {
                hi: dot(&u, config.point(i)),
                lo: dot(&u, config.point(j)),
                direction: u,
            };
            if !cert.validates(config, i, j, mode) {
                return Err(Error::Verification(format!(
                    "certificate for pair ({i}, {j}) does not validate"
                )));
            }
            Some(cert)
        }
    })
}

/// All pairs `i < j` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Exhaustive pair test: `a(X)` or `sa(X)` with explicit certificates.
pub fn count_pairs(config: &PointConfig, mode: Mode) -> Result<PairReport> {
    config.require_full_dimensional()?;
    let pairs = all_pairs(config.len());
    let results: Vec<Result<Option<Certificate>>> = pairs
        .par_iter()
        .map(|&(i, j)| pair_test_unchecked(config, i, j, mode))
        .collect();
    let mut report = PairReport {
        mode,
        count: 0,
        pairs: Vec::new(),
        certificates: Vec::new(),
    };
    for (pair, res) in pairs.into_iter().zip(results) {
        if let Some(cert) = res? {
            report.pairs.push(pair);
            report.certificates.push(cert);
        }
    }
    report.count = report.pairs.len();
    Ok(report)
}

/// Strict-pair degree of every point.
pub fn strict_degrees(report: &PairReport, n: usize) -> Vec<usize> {
    let mut deg = vec![0; n];
    for &(i, j) in &report.pairs {
        deg[i] += 1;
        deg[j] += 1;
    }
    deg
}

/// Counts through the difference body `conv D`, `D = {x_i − x_j : i ≠ j}`.
///
/// A pair is strictly antipodal iff its difference is a vertex of `conv D`,
/// and antipodal iff the difference lies on its boundary.
pub fn difference_body_counts(config: &PointConfig) -> Result<DiffBodyCounts> {
    config.require_full_dimensional()?;
    let pts = config.points();
    let n = pts.len();
    let mut diffs: Vec<Point> = Vec::with_capacity(n * (n - 1));
    let mut upper: Vec<usize> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                if i < j {
                    upper.push(diffs.len());
                }
                diffs.push(sub(&pts[i], &pts[j]));
            }
        }
    }
    let vertices = hull_vertices(&diffs)?;
    let is_vertex = |k: usize| vertices.binary_search(&k).is_ok();
    let sa = upper.iter().filter(|&&k| is_vertex(k)).count();
    let boundary: Vec<Result<bool>> = upper
        .par_iter()
        .map(|&k| {
            if is_vertex(k) {
                Ok(true)
            } else {
                in_relative_interior(&diffs, &diffs[k]).map(|inside| !inside)
            }
        })
        .collect();
    let mut a = 0;
    for b in boundary {
        if b? {
            a += 1;
        }
    }
    Ok(DiffBodyCounts {
        a,
        sa,
        db_vertices: vertices.len(),
    })
}

/// Whether the points are vertices of, or lie on the boundary of, their hull.
pub fn position_class(config: &PointConfig) -> Result<PositionClass> {
    let pts = config.points();
    let vertices = hull_vertices(pts)?;
    if vertices.len() == pts.len() {
        return Ok(PositionClass::StrictlyConvex);
    }
    for (k, p) in pts.iter().enumerate() {
        if vertices.binary_search(&k).is_err() && in_relative_interior(pts, p)? {
            return Ok(PositionClass::NotConvex);
        }
    }
    Ok(PositionClass::ConvexNotStrict)
}

/// True when `mode` pair count is at most `limit`, stopping early otherwise.
pub fn count_at_most(config: &PointConfig, mode: Mode, limit: usize) -> Result<bool> {
    config.require_full_dimensional()?;
    let mut seen = 0;
    for (i, j) in all_pairs(config.len()) {
        if pair_test_unchecked(config, i, j, mode)?.is_some() {
            seen += 1;
            if seen > limit {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The same hyperplane pair read with the roles of `i` and `j` swapped.
pub fn negate(cert: &Certificate) -> Certificate {
    Certificate {
        direction: cert.direction.iter().map(|c| -c).collect(),
        hi: -cert.lo.clone(),
        lo: -cert.hi.clone(),
    }
}
