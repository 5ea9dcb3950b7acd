//! Numbered verification suite shared by `antipod verify` and the acceptance
//! tests. Every entry is deterministic: all randomness comes from the seeds
//! listed in [`SEEDS`].

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::antipodality::{count_pairs, difference_body_counts, position_class, Mode, PositionClass};
use crate::bounds::{
    known_value, lower_bound_closed, lower_bound_recursive_with, upper_bound, upper_crosspoly_family,
    upper_simplex_family, RecursionRule,
};
use crate::config::PointConfig;
use crate::constructions::{
    arcs_product, base_polytope, bipyramid_triangle, crosspoly_pyramid, parallel_side_pairs, pyramid_over,
    random_bipyramid, random_convex_polygon, random_strictly_convex, simplex_barycenter, truncated_crosspolytope,
    BaseKind, BipyramidVariant,
};
use crate::error::{Error, Result};
use crate::hull::hull_vertices;
use crate::rational::frac;
use crate::search::{danzer_probe, search_extremal, Objective, Position, SearchParams, SearchTask};
use crate::segments::{
    closed_skew_edges, family_test, parallel_pentagon, probe_strict_four, segment_construction, SegmentKind,
};

pub const ORACLE_SEED: u64 = 1_000;
pub const POLYGON_SEED: u64 = 2_000;
pub const BIPYRAMID_SEED: u64 = 3_000;
pub const SEGMENT_PROBE_SEED: u64 = 4_000;
pub const SEARCH_SEED: u64 = 1;
pub const DANZER_SEED: u64 = 5;
pub const CONSTRUCTION_SEED: u64 = 0;

pub const SEEDS: &[(&str, u64)] = &[
    ("oracle_configs_base", ORACLE_SEED),
    ("polygons_base", POLYGON_SEED),
    ("bipyramids_base", BIPYRAMID_SEED),
    ("segment_probe", SEGMENT_PROBE_SEED),
    ("search", SEARCH_SEED),
    ("danzer_probe", DANZER_SEED),
    ("constructions", CONSTRUCTION_SEED),
];

pub const ORACLE_CONFIGS: usize = 200;
pub const POLYGONS: usize = 50;
pub const BIPYRAMIDS: usize = 30;
pub const SEGMENT_TRIALS: usize = 10_000;
pub const DANZER_BUDGET: usize = 20_000;
pub const DANZER_RESTARTS: usize = 4;

/// Criterion ids and names, in suite order.
pub const CRITERIA: &[(u32, &str)] = &[
    (1, "oracle_equivalence"),
    (2, "planar_law"),
    (3, "known_minima"),
    (4, "three_space_cases"),
    (5, "truncated_internals"),
    (6, "arcs_product"),
    (7, "segment_families"),
    (8, "bounds_consistency"),
    (9, "convex_position_value"),
    (10, "search_minima"),
    (11, "danzer_probe"),
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub id: u32,
    pub name: String,
    pub description: String,
    /// The mathematical statement being checked.
    pub statement: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub tool_version: String,
    pub seeds: BTreeMap<String, u64>,
    pub entries: Vec<VerifyEntry>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Accepts `all`, a criterion number, or a criterion name.
pub fn resolve_suite(name: &str) -> Result<Vec<u32>> {
    if name == "all" {
        return Ok(CRITERIA.iter().map(|&(id, _)| id).collect());
    }
    CRITERIA
        .iter()
        .find(|&&(id, n)| n == name || id.to_string() == name)
        .map(|&(id, _)| vec![id])
        .ok_or_else(|| {
            let names: Vec<&str> = CRITERIA.iter().map(|&(_, n)| n).collect();
            Error::Parse(format!(
                "unknown suite '{name}' (expected all or one of {})",
                names.join(", ")
            ))
        })
}

pub fn run_suite(name: &str) -> Result<VerifyReport> {
    let entries: Vec<VerifyEntry> = resolve_suite(name)?.into_iter().map(run_criterion).collect();
    let passed = entries.iter().filter(|e| e.pass).count();
    Ok(VerifyReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        seeds: SEEDS.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        summary: Summary {
            total: entries.len(),
            passed,
            failed: entries.len() - passed,
        },
        entries,
    })
}

/// Collects failures while a criterion runs.
struct Check {
    checked: usize,
    failures: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn value<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: Result<T>, want: T) {
        match got {
            Ok(v) => self.expect(v == want, || format!("{label}: expected {want:?}, got {v:?}")),
            Err(e) => self.expect(false, || format!("{label}: {e}")),
        }
    }

    fn error(&mut self, label: &str, e: Error) {
        self.expect(false, || format!("{label}: {e}"));
    }
}

fn entry(
    id: u32,
    description: &str,
    statement: &str,
    expected: String,
    check: Check,
    actual: Option<String>,
) -> VerifyEntry {
    let name = CRITERIA.iter().find(|&&(i, _)| i == id).map_or("", |&(_, n)| n);
    let pass = check.failures.is_empty();
    let actual = actual.unwrap_or_else(|| {
        if pass {
            format!("{} checks hold", check.checked)
        } else {
            format!("{} of {} checks failed", check.failures.len(), check.checked)
        }
    });
    VerifyEntry {
        id,
        name: name.to_string(),
        description: description.to_string(),
        statement: statement.to_string(),
        expected,
        actual,
        pass,
        failures: check.failures,
    }
}

pub fn run_criterion(id: u32) -> VerifyEntry {
    match id {
        1 => oracle_equivalence(),
        2 => planar_law(),
        3 => known_minima(),
        4 => three_space_cases(),
        5 => truncated_internals(),
        6 => arcs(),
        7 => segment_families(),
        8 => bounds_consistency(),
        9 => convex_position_value(),
        10 => search_minima(),
        11 => danzer(),
        _ => panic!("no criterion {id}"),
    }
}

fn both_counts(config: &PointConfig) -> Result<(usize, usize)> {
    Ok((
        count_pairs(config, Mode::Antipodal)?.count,
        count_pairs(config, Mode::Strict)?.count,
    ))
}

fn sa(config: Result<PointConfig>) -> Result<usize> {
    Ok(count_pairs(&config?, Mode::Strict)?.count)
}

fn oracle_equivalence() -> VerifyEntry {
    let mut check = Check::new();
    for i in 0..ORACLE_CONFIGS {
        let seed = ORACLE_SEED + i as u64;
        let d = [2, 3, 4][i % 3];
        let n = ChaCha8Rng::seed_from_u64(seed).gen_range(d + 1..=10);
        let label = format!("config {i} (d = {d}, n = {n}, seed {seed})");
        let run = || -> Result<((usize, usize), (usize, usize))> {
            let c = random_strictly_convex(d, n, seed)?;
            let db = difference_body_counts(&c)?;
            Ok((both_counts(&c)?, (db.a, db.sa)))
        };
        match run() {
            Ok((lp, db)) => check.expect(lp == db, || {
                format!("{label}: LP (a, sa) = {lp:?}, difference body {db:?}")
            }),
            Err(e) => check.error(&label, e),
        }
    }
    entry(
        1,
        "pair LP and difference-body oracles agree on random strictly convex sets",
        "a and sa computed from supporting hyperplanes equal those read off the difference body",
        format!("{ORACLE_CONFIGS} exact agreements"),
        check,
        None,
    )
}

fn planar_law() -> VerifyEntry {
    let mut check = Check::new();
    for i in 0..POLYGONS {
        let seed = POLYGON_SEED + i as u64;
        let n = 3 + i % 10;
        let label = format!("polygon {i} (n = {n}, seed {seed})");
        let run = || -> Result<(usize, usize, usize)> {
            let c = random_convex_polygon(n, seed)?;
            let (a, sa) = both_counts(&c)?;
            Ok((a, sa, parallel_side_pairs(&c)?))
        };
        match run() {
            Ok((a, sa, k)) => check.expect(a == n + k && sa == n - k, || {
                format!("{label}: a = {a}, sa = {sa}, parallel side pairs = {k}")
            }),
            Err(e) => check.error(&label, e),
        }
    }
    entry(
        2,
        "convex polygons satisfy a = n + k and sa = n - k",
        "k is the number of pairs of parallel sides",
        format!("{POLYGONS} polygons obey both identities"),
        check,
        None,
    )
}

struct TruncatedRow {
    d: usize,
    n: usize,
    outcome: Result<(usize, usize, usize, usize)>,
}

/// `(sa by LP, sa by difference body, difference-body vertices, hull vertices)`
/// for every truncated cross-polytope, computed once per process.
fn truncated_rows() -> &'static [TruncatedRow] {
    static ROWS: OnceLock<Vec<TruncatedRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        let mut rows = Vec::new();
        for d in 3..=5 {
            for n in 2 * d + 1..=4 * d {
                let outcome = (|| {
                    let c = truncated_crosspolytope(d, n, CONSTRUCTION_SEED)?;
                    let db = difference_body_counts(&c)?;
                    let lp = count_pairs(&c, Mode::Strict)?.count;
                    Ok((lp, db.sa, db.db_vertices, hull_vertices(c.points())?.len()))
                })();
                rows.push(TruncatedRow { d, n, outcome });
            }
        }
        rows
    })
}

fn known_minima() -> VerifyEntry {
    let mut check = Check::new();
    for d in 2..=5 {
        check.value(
            &format!("simplex d = {d}"),
            sa(base_polytope(BaseKind::Simplex, d, None)),
            d * (d + 1) / 2,
        );
        check.value(
            &format!("cross-polytope d = {d}"),
            sa(base_polytope(BaseKind::CrossPolytope, d, None)),
            d,
        );
    }
    let parallelogram = base_polytope(BaseKind::Parallelogram, 2, None);
    check.value(
        "pyramid over parallelogram",
        sa(parallelogram
            .as_ref()
            .map_err(clone_err)
            .and_then(|b| pyramid_over(b, 1, None))),
        6,
    );
    check.value(
        "two-fold pyramid over parallelogram",
        sa(parallelogram
            .as_ref()
            .map_err(clone_err)
            .and_then(|b| pyramid_over(b, 2, None))),
        11,
    );
    check.value(
        "simplex_barycenter(4, 2)",
        sa(simplex_barycenter(4, 2, frac(1, 4), CONSTRUCTION_SEED)),
        11,
    );
    for d in 2..=6 {
        check.value(
            &format!("crosspoly_pyramid({d}, {})", d - 1),
            sa(crosspoly_pyramid(d, d - 1)),
            3 * (d - 1),
        );
    }
    for row in truncated_rows() {
        let label = format!("truncated_crosspolytope({}, {})", row.d, row.n);
        match &row.outcome {
            Ok((lp, db, _, _)) => check.expect(*lp == 2 * row.d && *db == 2 * row.d, || {
                format!(
                    "{label}: sa = {lp} (LP), {db} (difference body), expected {}",
                    2 * row.d
                )
            }),
            Err(e) => check.expect(false, || format!("{label}: {e}")),
        }
    }
    entry(
        3,
        "constructions reproduce the known minimal sa values",
        "simplex d(d+1)/2, cross-polytope d, pyramid over parallelogram 6, truncated cross-polytope 2d, \
         crosspoly_pyramid(d, d-1) 3(d-1), two-fold pyramid over parallelogram and simplex_barycenter(4, 2) 11",
        "every construction attains its value".into(),
        check,
        None,
    )
}

fn clone_err(e: &Error) -> Error {
    Error::Verification(e.to_string())
}

fn three_space_cases() -> VerifyEntry {
    let mut check = Check::new();
    for (kind, want) in [
        (BaseKind::Parallelogram, 6),
        (BaseKind::Trapezoid, 7),
        (BaseKind::GenericQuadrangle, 8),
    ] {
        let c = base_polytope(kind, 2, None).and_then(|b| pyramid_over(&b, 1, None));
        check.value(&format!("pyramid over {}", kind.name()), sa(c), want);
    }
    check.value(
        "bipyramid seven",
        sa(bipyramid_triangle(
            BipyramidVariant::Seven,
            frac(1, 4),
            CONSTRUCTION_SEED,
        )),
        7,
    );
    check.value(
        "bipyramid search_max",
        sa(bipyramid_triangle(
            BipyramidVariant::SearchMax,
            frac(1, 4),
            CONSTRUCTION_SEED,
        )),
        10,
    );
    let mut seen = Vec::new();
    for i in 0..BIPYRAMIDS {
        let seed = BIPYRAMID_SEED + i as u64;
        match sa(random_bipyramid(seed)) {
            Ok(v) => {
                seen.push(v);
                check.expect((7..=10).contains(&v), || {
                    format!("random bipyramid seed {seed}: sa = {v}")
                })
            }
            Err(e) => check.error(&format!("random bipyramid seed {seed}"), e),
        }
    }
    let range = match (seen.iter().min(), seen.iter().max()) {
        (Some(lo), Some(hi)) => format!("random bipyramids sa in [{lo}, {hi}]"),
        _ => "no random bipyramids".into(),
    };
    let actual = if check.failures.is_empty() {
        format!("{} checks hold; {range}", check.checked)
    } else {
        format!("{} of {} checks failed; {range}", check.failures.len(), check.checked)
    };
    entry(
        4,
        "five points in three-space",
        "pyramids over parallelogram, trapezoid and generic quadrangle give 6, 7, 8; \
         bipyramids over a triangle give 7 through 10",
        "6, 7, 8; bipyramid variants 7 and 10; 30 random bipyramids in [7, 10]".into(),
        check,
        Some(actual),
    )
}

fn truncated_internals() -> VerifyEntry {
    let mut check = Check::new();
    for row in truncated_rows() {
        let label = format!("truncated_crosspolytope({}, {})", row.d, row.n);
        match &row.outcome {
            Ok((_, _, dbv, hv)) => check.expect(*dbv == 4 * row.d && *hv == row.n, || {
                format!(
                    "{label}: difference body has {dbv} vertices (want {}), hull has {hv} (want {})",
                    4 * row.d,
                    row.n
                )
            }),
            Err(e) => check.expect(false, || format!("{label}: {e}")),
        }
    }
    entry(
        5,
        "truncated cross-polytope keeps its difference body",
        "(P - P)/2 has 4d vertices and P has the requested n vertices",
        "4d difference-body vertices and n hull vertices for d = 3, 4, 5".into(),
        check,
        None,
    )
}

fn arcs() -> VerifyEntry {
    let mut check = Check::new();
    for (k, pad, n, dim) in [(1usize, 0usize, 4usize, 3usize), (2, 0, 16, 6), (2, 1, 17, 7)] {
        let label = format!("arcs_product(k = {k}, pad = {pad})");
        let run = || -> Result<(usize, usize, usize, PositionClass)> {
            let c = arcs_product(k, pad, CONSTRUCTION_SEED)?;
            Ok((
                c.dim(),
                c.len(),
                count_pairs(&c, Mode::Strict)?.count,
                position_class(&c)?,
            ))
        };
        match run() {
            Ok((d, len, s, class)) => check.expect(
                d == dim && len == n && s == n * (n - 1) / 2 && class == PositionClass::StrictlyConvex,
                || format!("{label}: {len} points in R^{d}, sa = {s}, {class}"),
            ),
            Err(e) => check.error(&label, e),
        }
    }
    entry(
        6,
        "pairwise strictly antipodal sets from products of arcs",
        "4 points in R^3, 16 in R^6 and 17 in R^7, every pair strictly antipodal",
        "sa = 6, 120, 136".into(),
        check,
        None,
    )
}

fn segment_families() -> VerifyEntry {
    let mut check = Check::new();
    for kind in SegmentKind::ALL {
        match family_test(&segment_construction(kind), kind.mode()) {
            Ok(r) => check.expect(r.holds, || {
                format!("{kind}: pair {:?} fails {}", r.failing_pair, kind.mode())
            }),
            Err(e) => check.error(kind.name(), e),
        }
    }
    match family_test(&closed_skew_edges(), Mode::Strict) {
        Ok(r) => check.expect(!r.holds, || "closed skew edges unexpectedly strictly antipodal".into()),
        Err(e) => check.error("closed skew edges", e),
    }
    match family_test(&parallel_pentagon(), Mode::Antipodal) {
        Ok(r) => check.expect(!r.holds, || "five parallel segments unexpectedly antipodal".into()),
        Err(e) => check.error("five parallel segments", e),
    }
    let mut probe_note = String::new();
    match probe_strict_four(SEGMENT_TRIALS, SEGMENT_PROBE_SEED) {
        Ok(p) => {
            probe_note = format!(
                "; probe: {} spanning of {} trials, found = {}",
                p.spanning_trials,
                p.trials,
                p.found.is_some()
            );
            check.expect(p.found.is_none(), || {
                "probe found a strictly antipodal family of 4 segments".into()
            })
        }
        Err(e) => check.error("segment probe", e),
    }
    let actual = if check.failures.is_empty() {
        format!("{} checks hold{probe_note}", check.checked)
    } else {
        format!(
            "{} of {} checks failed{probe_note}",
            check.failures.len(),
            check.checked
        )
    };
    entry(
        7,
        "families of segments in three-space",
        "four segments can be antipodal, three can be strictly antipodal, five parallel segments cannot be antipodal, \
         and no four segments are strictly antipodal",
        "named families hold; five parallel segments fail; probe finds nothing".into(),
        check,
        Some(actual),
    )
}

/// `f(d, k) = (d² − k² + d + k)/2` as an exact integer.
fn f_closed(d: i64, k: i64) -> BigInt {
    BigInt::from((d * d - k * k + d + k) / 2)
}

fn bounds_consistency() -> VerifyEntry {
    let mut check = Check::new();
    for d in 2..=12usize {
        for k in 1..d {
            let label = format!("(d, k) = ({d}, {k})");
            let run = || -> Result<(u64, u64, u64, Option<u64>)> {
                Ok((
                    lower_bound_recursive_with(d, k, RecursionRule::Literal)?,
                    lower_bound_recursive_with(d, k, RecursionRule::AdjacentIndex)?,
                    upper_bound(d, k)?,
                    known_value(d, d + k)?,
                ))
            };
            match run() {
                Ok((lit, adj, up, known)) => {
                    check.expect(lit <= up && adj <= up, || {
                        format!("{label}: lower {lit}/{adj} above upper {up}")
                    });
                    if let Some(v) = known {
                        check.expect(lit.max(adj) <= v && v <= up, || {
                            format!("{label}: known {v} outside [{}, {up}]", lit.max(adj))
                        });
                    }
                }
                Err(e) => check.error(&label, e),
            }
        }
    }
    for d in 4..=12i64 {
        for k in 2..=d - 2 {
            let lhs = (f_closed(d - 1, k) + BigInt::from(d + k - 1)) * BigInt::from(d + k - 2);
            let rhs = f_closed(d - 1, k - 1) * BigInt::from(d + k);
            check.expect(lhs >= rhs, || {
                format!("recursion inequality fails at (d, k) = ({d}, {k})")
            });
        }
    }
    for d in 3..=200usize {
        for k in 2..d {
            match (upper_bound(d, k), lower_bound_closed(d, k)) {
                (Ok(up), Ok(lo)) => check.expect(up <= 2 * lo, || format!("ratio above 2 at ({d}, {k}): {up}/{lo}")),
                (Err(e), _) | (_, Err(e)) => check.error(&format!("ratio ({d}, {k})"), e),
            }
        }
    }
    for d in 2..=200usize {
        if (2 * d - 2) % 3 == 0 {
            let k = (2 * d - 2) / 3;
            if k >= 1 {
                let (s, c) = (upper_simplex_family(d, k), upper_crosspoly_family(d, k));
                check.expect(s == c, || format!("upper formulas differ at ({d}, {k}): {s} vs {c}"));
            }
        }
    }
    entry(
        8,
        "lower and upper bound tables are consistent",
        "lower <= known <= upper for d <= 12; f(d-1,k) + (d+k-1) >= f(d-1,k-1)(d+k)/(d+k-2) for 4 <= d <= 12, \
         2 <= k <= d-2; upper/closed lower <= 2 for d <= 200; both upper formulas agree when 3k = 2d - 2",
        "all inequalities hold".into(),
        check,
        None,
    )
}

fn convex_value(d: usize, n: usize) -> usize {
    n + d * (d - 1) / 2 - 1
}

fn convex_position_value() -> VerifyEntry {
    let mut check = Check::new();
    for d in 2..=4 {
        for k in 1..=4 {
            let n = d + k;
            let label = format!("simplex_barycenter({d}, {k})");
            let a = simplex_barycenter(d, k, frac(1, 4), CONSTRUCTION_SEED)
                .and_then(|c| Ok(count_pairs(&c, Mode::Antipodal)?.count));
            check.value(&label, a, convex_value(d, n));
        }
    }
    let params = SearchParams::default();
    let mut found = Vec::new();
    for d in 2..=3 {
        for n in d + 1..=7 {
            let mut task = SearchTask::new(d, n, Mode::Antipodal, Objective::Minimize, SEARCH_SEED);
            task.position = Position::Convex;
            let label = format!("minimize a at (d, n) = ({d}, {n})");
            match search_extremal(&task, &params) {
                Ok(r) => {
                    found.push(format!("({d},{n})={}", r.best_value));
                    check.expect(r.best_value >= convex_value(d, n), || {
                        format!(
                            "{label}: search found a = {} below {}",
                            r.best_value,
                            convex_value(d, n)
                        )
                    })
                }
                Err(e) => check.error(&label, e),
            }
        }
    }
    let summary = format!("search minima {}", found.join(" "));
    let actual = if check.failures.is_empty() {
        format!("{} checks hold; {summary}", check.checked)
    } else {
        format!("{} of {} checks failed; {summary}", check.failures.len(), check.checked)
    };
    entry(
        9,
        "minimum number of antipodal pairs in convex position",
        "n points in convex position in R^d have at least n + d(d-1)/2 - 1 antipodal pairs, and this is attained",
        "construction attains the value for d <= 4, n <= d + 4; search never goes below it for d <= 3, n <= 7".into(),
        check,
        Some(actual),
    )
}

/// `(d, n)` cases the strict minimum search must reproduce.
pub fn search_cases() -> Vec<(usize, usize)> {
    let mut cases: Vec<(usize, usize)> = (4..=8).map(|n| (2, n)).collect();
    cases.extend((4..=9).map(|n| (3, n)));
    cases.extend([(4, 5), (4, 6), (4, 7)]);
    cases
}

fn search_minima() -> VerifyEntry {
    let mut check = Check::new();
    let params = SearchParams::default();
    for (d, n) in search_cases() {
        let label = format!("(d, n) = ({d}, {n})");
        let want = match known_value(d, n) {
            Ok(Some(v)) => v as usize,
            Ok(None) => {
                check.expect(false, || format!("{label}: no known value"));
                continue;
            }
            Err(e) => {
                check.error(&label, e);
                continue;
            }
        };
        let mut task = SearchTask::new(d, n, Mode::Strict, Objective::Minimize, SEARCH_SEED);
        task.stop_at = Some(want);
        check.value(&label, search_extremal(&task, &params).map(|r| r.best_value), want);
    }
    entry(
        10,
        "minimum-sa search reproduces the known values",
        "the least number of strictly antipodal pairs of n points in strictly convex position in R^d",
        "search attains the known value in every case".into(),
        check,
        None,
    )
}

fn danzer() -> VerifyEntry {
    let mut check = Check::new();
    let params = SearchParams::default();
    let mut notes = Vec::new();
    for d in 2..=3 {
        match danzer_probe(d, DANZER_BUDGET, DANZER_RESTARTS, DANZER_SEED, &params) {
            Ok(p) => {
                notes.push(format!(
                    "d = {d}: best {}/{} pairs among {} points",
                    p.best_antipodal_pairs, p.all_pairs, p.n
                ));
                check.expect(!p.found, || {
                    format!("d = {d}: found an antipodal set of {} points", p.n)
                })
            }
            Err(e) => check.error(&format!("d = {d}"), e),
        }
    }
    let actual = if check.failures.is_empty() {
        format!("no antipodal set above 2^d found; {}", notes.join("; "))
    } else {
        format!("{}; {}", check.failures.join("; "), notes.join("; "))
    };
    entry(
        11,
        "no antipodal set larger than 2^d",
        "an antipodal set in R^d has at most 2^d points",
        "search finds no antipodal set of 2^d + 1 points for d = 2, 3".into(),
        check,
        Some(actual),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_resolve() {
        assert_eq!(resolve_suite("all").unwrap().len(), 11);
        assert_eq!(resolve_suite("8").unwrap(), vec![8]);
        assert_eq!(resolve_suite("bounds_consistency").unwrap(), vec![8]);
        assert!(resolve_suite("nope").is_err());
    }

    #[test]
    fn bounds_entry_passes() {
        let report = run_suite("bounds_consistency").unwrap();
        assert!(report.all_pass(), "{:?}", report.entries[0].failures);
        assert_eq!(report.seeds["search"], SEARCH_SEED);
    }
}
