//! Antipodal and strictly antipodal families of segments in `R^3`.
//!
//! Every test is an LP on the endpoints; the hull of the family is never
//! built.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::antipodality::Mode;
use crate::error::{Error, Result};
use crate::linalg::affine_dimension;
use crate::lp::{lp_witness, LinearSystem, LpOutcome};
use crate::rational::{dot, frac, int, point, sub, Point, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment3 {
    a: Point,
    b: Point,
}

impl Segment3 {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        for p in [&a, &b] {
            if p.len() != 3 {
                return Err(Error::DimensionMismatch {
                    expected: 3,
                    found: p.len(),
                });
            }
        }
        if a == b {
            return Err(Error::Parse("segment endpoints coincide".into()));
        }
        Ok(Segment3 { a, b })
    }

    pub fn from_ints(a: [i64; 3], b: [i64; 3]) -> Self {
        Segment3::new(point(&a), point(&b)).expect("distinct integer endpoints")
    }

    pub fn endpoints(&self) -> [&Point; 2] {
        [&self.a, &self.b]
    }

    pub fn direction(&self) -> Point {
        sub(&self.b, &self.a)
    }

    /// Middle part: drops a fraction `r` at each end, `0 <= r < 1/2`.
    pub fn shrink(&self, r: &Rational) -> Result<Self> {
        if r.is_zero() {
            return Ok(self.clone());
        }
        if *r < Rational::zero() || *r >= frac(1, 2) {
            return Err(Error::Range("shrink ratio must lie in [0, 1/2)".into()));
        }
        let d = self.direction();
        let a = self.a.iter().zip(&d).map(|(x, y)| x + r * y).collect();
        let b = self.b.iter().zip(&d).map(|(x, y)| x - r * y).collect();
        Segment3::new(a, b)
    }

    fn map_affine(&self, m: &[Vec<Rational>], t: &[Rational]) -> Result<Self> {
        let f = |p: &Point| -> Point { m.iter().zip(t).map(|(row, s)| dot(row, p) + s).collect() };
        Segment3::new(f(&self.a), f(&self.b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentFamily {
    pub segments: Vec<Segment3>,
}

/// Direction `u`: both endpoints of `s_i` at level `hi`, both of `s_j` at `lo`.
#[derive(Clone, Debug, PartialEq)]
pub struct SegmentCertificate {
    pub direction: Point,
    pub hi: Rational,
    pub lo: Rational,
}

impl SegmentFamily {
    pub fn new(segments: Vec<Segment3>) -> Self {
        SegmentFamily { segments }
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn endpoints(&self) -> Vec<Point> {
        self.segments.iter().flat_map(|s| [s.a.clone(), s.b.clone()]).collect()
    }

    pub fn is_spanning(&self) -> bool {
        !self.is_empty() && matches!(affine_dimension(&self.endpoints()), Ok(3))
    }

    fn require_spanning(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptyInput);
        }
        let affine = affine_dimension(&self.endpoints())?;
        if affine != 3 {
            return Err(Error::Degenerate { dim: 3, affine });
        }
        Ok(())
    }

    pub fn shrink(&self, r: &Rational) -> Result<Self> {
        Ok(SegmentFamily::new(
            self.segments.iter().map(|s| s.shrink(r)).collect::<Result<_>>()?,
        ))
    }

    pub fn map_affine(&self, m: &[Vec<Rational>], t: &[Rational]) -> Result<Self> {
        Ok(SegmentFamily::new(
            self.segments
                .iter()
                .map(|s| s.map_affine(m, t))
                .collect::<Result<_>>()?,
        ))
    }
}

impl SegmentCertificate {
    pub fn validates(&self, family: &SegmentFamily, i: usize, j: usize, mode: Mode) -> bool {
        let u = &self.direction;
        if i == j || i >= family.len() || j >= family.len() || u.len() != 3 || self.hi <= self.lo {
            return false;
        }
        let level = |p: &Point| dot(u, p);
        let on = |s: &Segment3, v: &Rational| s.endpoints().iter().all(|p| level(p) == *v);
        if !on(&family.segments[i], &self.hi) || !on(&family.segments[j], &self.lo) {
            return false;
        }
        family
            .segments
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .all(|(_, s)| {
                s.endpoints().iter().all(|p| {
                    let v = level(p);
                    match mode {
                        Mode::Antipodal => v >= self.lo && v <= self.hi,
                        Mode::Strict => v > self.lo && v < self.hi,
                    }
                })
            })
    }
}

fn pair_system(family: &SegmentFamily, i: usize, j: usize, mode: Mode) -> LinearSystem {
    let margin = match mode {
        Mode::Antipodal => Rational::zero(),
        Mode::Strict => Rational::one(),
    };
    let (si, sj) = (&family.segments[i], &family.segments[j]);
    let mut sys = LinearSystem::new(3);
    sys.eq(si.direction(), Rational::zero());
    sys.eq(sj.direction(), Rational::zero());
    sys.ge(sub(&si.a, &sj.a), Rational::one());
    for (k, s) in family.segments.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        for p in s.endpoints() {
            sys.ge(sub(&si.a, p), margin.clone());
            sys.ge(sub(p, &sj.a), margin.clone());
        }
    }
    sys
}

/// Parallel planes through `s_i` and `s_j` with the rest of the family
/// between them (strictly between in strict mode).
pub fn segment_pair_test(family: &SegmentFamily, i: usize, j: usize, mode: Mode) -> Result<Option<SegmentCertificate>> {
    for idx in [i, j] {
        if idx >= family.len() {
            return Err(Error::IndexOutOfRange {
                index: idx,
                len: family.len(),
            });
        }
    }
    if i == j {
        return Err(Error::InvalidPair(i, j));
    }
    family.require_spanning()?;
    Ok(match lp_witness(&pair_system(family, i, j, mode))? {
        LpOutcome::Infeasible(_) => None,
        LpOutcome::Feasible(u) => {
            let cert = SegmentCertificate {
                hi: dot(&u, &family.segments[i].a),
                lo: dot(&u, &family.segments[j].a),
                direction: u,
            };
            if !cert.validates(family, i, j, mode) {
                return Err(Error::Verification(format!(
                    "segment certificate for ({i}, {j}) does not validate"
                )));
            }
            Some(cert)
        }
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyReport {
    pub holds: bool,
    pub failing_pair: Option<(usize, usize)>,
}

/// Every pair passes [`segment_pair_test`]; stops at the first failure.
pub fn family_test(family: &SegmentFamily, mode: Mode) -> Result<FamilyReport> {
    family.require_spanning()?;
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if segment_pair_test(family, i, j, mode)?.is_none() {
                return Ok(FamilyReport {
                    holds: false,
                    failing_pair: Some((i, j)),
                });
            }
        }
    }
    Ok(FamilyReport {
        holds: true,
        failing_pair: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentKind {
    ParallelFour,
    OppositeFacesFour,
    PrismThree,
    SkewInteriorThree,
}

impl SegmentKind {
    pub const ALL: [SegmentKind; 4] = [
        SegmentKind::ParallelFour,
        SegmentKind::OppositeFacesFour,
        SegmentKind::PrismThree,
        SegmentKind::SkewInteriorThree,
    ];

    /// Mode in which the family is extremal.
    pub fn mode(self) -> Mode {
        match self {
            SegmentKind::ParallelFour | SegmentKind::OppositeFacesFour => Mode::Antipodal,
            SegmentKind::PrismThree | SegmentKind::SkewInteriorThree => Mode::Strict,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SegmentKind::ParallelFour => "parallel_four",
            SegmentKind::OppositeFacesFour => "opposite_faces_four",
            SegmentKind::PrismThree => "prism_three",
            SegmentKind::SkewInteriorThree => "skew_interior_three",
        }
    }
}

impl fmt::Display for SegmentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SegmentKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SegmentKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown segment construction '{s}'")))
    }
}

/// Three mutually skew edges of `[-1, 1]^3`.
fn skew_edges() -> SegmentFamily {
    SegmentFamily::new(vec![
        Segment3::from_ints([-1, 1, -1], [1, 1, -1]),
        Segment3::from_ints([-1, -1, 1], [-1, 1, 1]),
        Segment3::from_ints([1, -1, -1], [1, -1, 1]),
    ])
}

pub fn segment_construction(kind: SegmentKind) -> SegmentFamily {
    match kind {
        // Vertical edges of a parallelepiped with a parallelogram base.
        SegmentKind::ParallelFour => SegmentFamily::new(vec![
            Segment3::from_ints([0, 0, 0], [0, 0, 1]),
            Segment3::from_ints([2, 0, 0], [2, 0, 1]),
            Segment3::from_ints([3, 1, 0], [3, 1, 1]),
            Segment3::from_ints([1, 1, 0], [1, 1, 1]),
        ]),
        // x-parallel edges on the bottom face, y-parallel edges on the top.
        SegmentKind::OppositeFacesFour => SegmentFamily::new(vec![
            Segment3::from_ints([0, 0, 0], [1, 0, 0]),
            Segment3::from_ints([0, 1, 0], [1, 1, 0]),
            Segment3::from_ints([0, 0, 1], [0, 1, 1]),
            Segment3::from_ints([1, 0, 1], [1, 1, 1]),
        ]),
        SegmentKind::PrismThree => SegmentFamily::new(vec![
            Segment3::from_ints([0, 0, 0], [0, 0, 1]),
            Segment3::from_ints([1, 0, 0], [1, 0, 1]),
            Segment3::from_ints([0, 1, 0], [0, 1, 1]),
        ]),
        SegmentKind::SkewInteriorThree => skew_edges().shrink(&frac(1, 3)).expect("ratio below 1/2"),
    }
}

/// Closed skew cube edges: strictness fails at shared facets.
pub fn closed_skew_edges() -> SegmentFamily {
    skew_edges()
}

/// Vertical unit segments over a convex pentagon without parallel sides.
pub fn parallel_pentagon() -> SegmentFamily {
    let base = [[0, 0], [4, 0], [5, 3], [2, 5], [-1, 2]];
    SegmentFamily::new(
        base.iter()
            .map(|&[x, y]| Segment3::from_ints([x, y, 0], [x, y, 1]))
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeReport {
    pub trials: usize,
    pub spanning_trials: usize,
    pub found: Option<SegmentFamily>,
}

fn random_segment(rng: &mut ChaCha8Rng, r: i64) -> Segment3 {
    loop {
        let a: Point = (0..3).map(|_| int(rng.gen_range(-r..=r))).collect();
        let b: Point = (0..3).map(|_| int(rng.gen_range(-r..=r))).collect();
        if let Ok(s) = Segment3::new(a, b) {
            return s;
        }
    }
}

fn jitter(rng: &mut ChaCha8Rng, s: &Segment3) -> Segment3 {
    let mut wiggle = |p: &Point| -> Point { p.iter().map(|c| c + frac(rng.gen_range(-2..=2), 12)).collect() };
    let (a, b) = (wiggle(&s.a), wiggle(&s.b));
    Segment3::new(a, b).unwrap_or_else(|_| s.clone())
}

/// Random search for a strictly antipodal family of four segments. Half the
/// trials are uniform lattice segments, half perturb an extremal family and
/// add a fourth segment.
pub fn probe_strict_four(trials: usize, seed: u64) -> Result<ProbeReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases = [
        segment_construction(SegmentKind::PrismThree),
        segment_construction(SegmentKind::SkewInteriorThree),
    ];
    let mut spanning = 0;
    for t in 0..trials {
        let segs: Vec<Segment3> = if t % 2 == 0 {
            (0..4).map(|_| random_segment(&mut rng, 3)).collect()
        } else {
            let base = &bases[rng.gen_range(0..bases.len())];
            let mut v: Vec<Segment3> = base.segments.iter().map(|s| jitter(&mut rng, s)).collect();
            v.push(random_segment(&mut rng, 2));
            v
        };
        let family = SegmentFamily::new(segs);
        if !family.is_spanning() {
            continue;
        }
        spanning += 1;
        if family_test(&family, Mode::Strict)?.holds {
            return Ok(ProbeReport {
                trials: t + 1,
                spanning_trials: spanning,
                found: Some(family),
            });
        }
    }
    Ok(ProbeReport {
        trials,
        spanning_trials: spanning,
        found: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions_pass_their_modes() {
        for kind in SegmentKind::ALL {
            let f = segment_construction(kind);
            assert!(family_test(&f, kind.mode()).unwrap().holds, "{kind}");
        }
    }

    #[test]
    fn four_families_are_not_strict() {
        for kind in [SegmentKind::ParallelFour, SegmentKind::OppositeFacesFour] {
            assert!(!family_test(&segment_construction(kind), Mode::Strict).unwrap().holds);
        }
    }

    #[test]
    fn closed_skew_edges_fail_strictness() {
        let f = closed_skew_edges();
        assert!(family_test(&f, Mode::Antipodal).unwrap().holds);
        assert!(!family_test(&f, Mode::Strict).unwrap().holds);
    }

    #[test]
    fn pentagon_fails() {
        let r = family_test(&parallel_pentagon(), Mode::Antipodal).unwrap();
        assert!(!r.holds);
        assert!(r.failing_pair.is_some());
    }

    #[test]
    fn errors() {
        let f = segment_construction(SegmentKind::PrismThree);
        assert!(matches!(
            segment_pair_test(&f, 1, 1, Mode::Strict),
            Err(Error::InvalidPair(1, 1))
        ));
        let flat = SegmentFamily::new(vec![
            Segment3::from_ints([0, 0, 0], [1, 0, 0]),
            Segment3::from_ints([0, 1, 0], [1, 1, 0]),
        ]);
        assert!(matches!(
            family_test(&flat, Mode::Antipodal),
            Err(Error::Degenerate { .. })
        ));
        assert!(Segment3::new(point(&[1, 1, 1]), point(&[1, 1, 1])).is_err());
    }

    #[test]
    fn small_probe_finds_nothing() {
        let r = probe_strict_four(200, 7).unwrap();
        assert!(r.found.is_none());
        assert!(r.spanning_trials > 0);
    }
}
