use proptest::prelude::*;

use antipodal::antipodality::{count_pairs, difference_body_counts, position_class, Mode, PositionClass};
use antipodal::bounds::{
    bound_result, lower_bound_closed, upper_bound, upper_crosspoly_family, upper_simplex_family, RecursionRule,
};
use antipodal::constructions::{
    crosspoly_pyramid, parallel_side_pairs, pyramid_over, random_convex_polygon, random_strictly_convex,
    simplex_barycenter,
};
use antipodal::hull::hull_vertices;
use antipodal::io::{config_from_json, config_to_json, segments_from_json, segments_to_json};
use antipodal::rational::frac;
use antipodal::segments::{family_test, segment_construction, segment_pair_test, SegmentFamily, SegmentKind};
use antipodal::{PointConfig, Rational};

fn config() -> impl Strategy<Value = PointConfig> {
    (2usize..=3, 0usize..=4, any::<u64>())
        .prop_map(|(d, extra, seed)| random_strictly_convex(d, d + 1 + extra, seed).unwrap())
}

/// `L·U` with unit lower `L` and nonzero diagonal in `U`, so always invertible.
fn invertible(d: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (
        prop::collection::vec(-2i64..=2, d * d),
        prop::collection::vec(prop::sample::select(vec![-2i64, -1, 1, 3]), d),
    )
        .prop_map(move |(entries, diag)| {
            let l = |i: usize, j: usize| match i.cmp(&j) {
                std::cmp::Ordering::Greater => entries[i * d + j],
                std::cmp::Ordering::Equal => 1,
                std::cmp::Ordering::Less => 0,
            };
            let u = |i: usize, j: usize| match i.cmp(&j) {
                std::cmp::Ordering::Less => entries[i * d + j],
                std::cmp::Ordering::Equal => diag[i],
                std::cmp::Ordering::Greater => 0,
            };
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| frac((0..d).map(|m| l(i, m) * u(m, j)).sum(), 1))
                        .collect()
                })
                .collect()
        })
}

fn translation(d: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=4), d).prop_map(|v| v.into_iter().map(|(p, q)| frac(p, q)).collect())
}

fn config_with_map() -> impl Strategy<Value = (PointConfig, Vec<Vec<Rational>>, Vec<Rational>)> {
    config().prop_flat_map(|c| {
        let d = c.dim();
        (Just(c), invertible(d), translation(d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn oracles_agree(c in config()) {
        let a = count_pairs(&c, Mode::Antipodal).unwrap();
        let s = count_pairs(&c, Mode::Strict).unwrap();
        let db = difference_body_counts(&c).unwrap();
        prop_assert_eq!((a.count, s.count), (db.a, db.sa));
        prop_assert_eq!(db.db_vertices, 2 * s.count);
        for (&(i, j), cert) in s.pairs.iter().zip(&s.certificates) {
            prop_assert!(cert.validates(&c, i, j, Mode::Strict));
        }
    }

    #[test]
    fn strict_pairs_are_antipodal(c in config()) {
        let a = count_pairs(&c, Mode::Antipodal).unwrap();
        let s = count_pairs(&c, Mode::Strict).unwrap();
        for p in &s.pairs {
            prop_assert!(a.pairs.contains(p));
        }
    }

    #[test]
    fn affine_maps_preserve_pairs((c, m, t) in config_with_map()) {
        let image = c.map_affine(&m, &t).unwrap();
        for mode in [Mode::Antipodal, Mode::Strict] {
            prop_assert_eq!(count_pairs(&c, mode).unwrap().pairs, count_pairs(&image, mode).unwrap().pairs);
        }
        prop_assert_eq!(hull_vertices(c.points()).unwrap(), hull_vertices(image.points()).unwrap());
    }

    #[test]
    fn hull_ignores_order(c in config(), shift in 1usize..8) {
        let mut pts = c.points().to_vec();
        let n = pts.len();
        pts.rotate_left(shift % n);
        let mut back: Vec<usize> = hull_vertices(&pts).unwrap().into_iter().map(|i| (i + shift) % n).collect();
        back.sort_unstable();
        prop_assert_eq!(back, hull_vertices(c.points()).unwrap());
    }

    #[test]
    fn planar_law(n in 3usize..=12, seed in any::<u64>()) {
        let c = random_convex_polygon(n, seed).unwrap();
        let k = parallel_side_pairs(&c).unwrap();
        prop_assert_eq!(count_pairs(&c, Mode::Antipodal).unwrap().count, n + k);
        prop_assert_eq!(count_pairs(&c, Mode::Strict).unwrap().count, n - k);
    }

    #[test]
    fn pyramid_adds_base_size(n in 3usize..=7, seed in any::<u64>()) {
        let base = random_convex_polygon(n, seed).unwrap();
        let apex = pyramid_over(&base, 1, None).unwrap();
        for mode in [Mode::Antipodal, Mode::Strict] {
            let before = count_pairs(&base, mode).unwrap().count;
            prop_assert_eq!(count_pairs(&apex, mode).unwrap().count, before + n);
        }
    }

    #[test]
    fn json_round_trip(rows in prop::collection::vec(prop::collection::vec((-1000i64..1000, 1i64..50), 3), 4..8)) {
        let pts: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&(p, q)| frac(p, q)).collect()).collect();
        let mut distinct = pts.clone();
        distinct.sort();
        distinct.dedup();
        prop_assume!(distinct.len() == pts.len());
        let c = PointConfig::new(3, pts).unwrap();
        prop_assert_eq!(config_from_json(&config_to_json(&c)).unwrap(), c);
    }

    #[test]
    fn bounds_invariants(d in 2usize..=60, k_seed in any::<usize>()) {
        let k = 1 + k_seed % (d - 1);
        for rule in [RecursionRule::Literal, RecursionRule::AdjacentIndex] {
            let r = bound_result(d, k, rule).unwrap();
            prop_assert!(r.lower <= r.upper);
            prop_assert!(r.lower >= lower_bound_closed(d, k).unwrap());
            if let Some(e) = r.exact {
                prop_assert!(r.lower <= e && e <= r.upper);
            }
        }
        if k >= 2 {
            prop_assert!(upper_bound(d, k).unwrap() <= 2 * lower_bound_closed(d, k).unwrap());
        }
    }
}

fn segment_maps() -> impl Strategy<Value = (Vec<Vec<Rational>>, Vec<Rational>)> {
    (invertible(3), translation(3))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn segment_families_are_affine_invariant((m, t) in segment_maps()) {
        for kind in SegmentKind::ALL {
            let family = segment_construction(kind);
            let image = family.map_affine(&m, &t).unwrap();
            for mode in [Mode::Antipodal, Mode::Strict] {
                prop_assert_eq!(family_test(&family, mode).unwrap().holds, family_test(&image, mode).unwrap().holds);
            }
        }
    }

    #[test]
    fn shrinking_keeps_strictness(num in 1i64..20) {
        let r = frac(num, 41);
        let strict = segment_construction(SegmentKind::PrismThree);
        prop_assert!(family_test(&strict.shrink(&r).unwrap(), Mode::Strict).unwrap().holds);
        let skew = segment_construction(SegmentKind::SkewInteriorThree);
        prop_assert!(family_test(&skew.shrink(&r).unwrap(), Mode::Strict).unwrap().holds);
    }
}

#[test]
fn strict_segment_pairs_are_antipodal() {
    for kind in SegmentKind::ALL {
        let family = segment_construction(kind);
        for i in 0..family.len() {
            for j in 0..family.len() {
                if i != j && segment_pair_test(&family, i, j, Mode::Strict).unwrap().is_some() {
                    assert!(segment_pair_test(&family, i, j, Mode::Antipodal).unwrap().is_some());
                }
            }
        }
    }
}

#[test]
fn shrinking_closed_skew_edges_makes_them_strict() {
    let closed = antipodal::segments::closed_skew_edges();
    assert!(family_test(&closed, Mode::Antipodal).unwrap().holds);
    assert!(!family_test(&closed, Mode::Strict).unwrap().holds);
    assert!(
        family_test(&closed.shrink(&frac(1, 10)).unwrap(), Mode::Strict)
            .unwrap()
            .holds
    );
    let text = segments_to_json(&closed);
    let back: SegmentFamily = segments_from_json(&text).unwrap();
    assert_eq!(back, closed);
}

#[test]
fn crossover_identity() {
    for d in 2usize..=200 {
        if (2 * d - 2) % 3 == 0 && d >= 4 {
            let k = (2 * d - 2) / 3;
            assert_eq!(upper_simplex_family(d, k), upper_crosspoly_family(d, k), "d = {d}");
        }
    }
    // Exact check at (d, k) = (4, 2): both constructions have six points.
    let a = count_pairs(&crosspoly_pyramid(4, 2).unwrap(), Mode::Strict)
        .unwrap()
        .count;
    let b = count_pairs(&simplex_barycenter(4, 2, frac(1, 4), 3).unwrap(), Mode::Strict)
        .unwrap()
        .count;
    assert_eq!((a, b), (11, 11));
}

#[test]
fn generator_outputs_are_strictly_convex() {
    for c in [
        crosspoly_pyramid(5, 2).unwrap(),
        simplex_barycenter(3, 4, frac(1, 4), 1).unwrap(),
    ] {
        assert_eq!(position_class(&c).unwrap(), PositionClass::StrictlyConvex);
    }
}
