//! Generators for the extremal configurations, each verified by the exact
//! oracles before it is returned.

mod arcs;
mod basic;
mod bipyramid;
mod random;
mod truncated;

pub use arcs::arcs_product;
pub use basic::{
    base_polytope, crosspoly_pyramid, parallel_side_pairs, polygon_order, pyramid_over, simplex_barycenter, BaseKind,
};
pub use bipyramid::{bipyramid_triangle, random_bipyramid, BipyramidVariant};
pub use random::{random_convex_polygon, random_strictly_convex};
pub use truncated::truncated_crosspolytope;

use std::collections::BTreeMap;

use crate::antipodality::{count_pairs, difference_body_counts, position_class, Mode, PositionClass};
use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

/// Cap on parameter-halving loops.
pub const TUNING_CAP: usize = 40;

pub(crate) fn strictly_convex(config: &PointConfig) -> Result<bool> {
    Ok(config.is_full_dimensional() && position_class(config)? == PositionClass::StrictlyConvex)
}

pub(crate) fn strict_count(config: &PointConfig) -> Result<usize> {
    Ok(count_pairs(config, Mode::Strict)?.count)
}

/// Both oracles must report `sa = expected` on a strictly convex input.
pub(crate) fn verify_sa(config: &PointConfig, expected: usize) -> Result<()> {
    if !strictly_convex(config)? {
        return Err(Error::Verification("output is not in strictly convex position".into()));
    }
    let lp = strict_count(config)?;
    let db = difference_body_counts(config)?;
    if lp != expected || db.sa != expected {
        return Err(Error::Verification(format!(
            "expected sa = {expected}, pair LP gave {lp}, difference body gave {}",
            db.sa
        )));
    }
    Ok(())
}

/// Named generator dispatch used by the command line.
pub fn construct(name: &str, params: &BTreeMap<String, String>) -> Result<PointConfig> {
    let int = |key: &str| -> Result<Option<i64>> {
        params
            .get(key)
            .map(|v| {
                v.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("parameter {key}='{v}' is not an integer")))
            })
            .transpose()
    };
    let need =
        |key: &str| -> Result<i64> { int(key)?.ok_or_else(|| Error::Parse(format!("missing parameter '{key}'"))) };
    let uint = |key: &str| -> Result<usize> {
        let v = need(key)?;
        usize::try_from(v).map_err(|_| Error::Range(format!("{key} must be nonnegative")))
    };
    let seed = int("seed")?.unwrap_or(0) as u64;
    let rat = |key: &str, default: Rational| -> Result<Rational> {
        params.get(key).map_or(Ok(default), |v| parse_rational(v))
    };
    if let Ok(kind) = name.parse::<BaseKind>() {
        let d = int("d")?.unwrap_or(2) as usize;
        let n = int("n")?.map(|v| v as usize);
        return base_polytope(kind, d, n);
    }
    match name {
        "pyramid_over" => {
            let kind: BaseKind = params
                .get("base")
                .ok_or_else(|| Error::Parse("missing parameter 'base'".into()))?
                .parse()?;
            let d = int("d")?.unwrap_or(2) as usize;
            let n = int("n")?.map(|v| v as usize);
            let base = base_polytope(kind, d, n)?;
            pyramid_over(&base, uint("times")?, None)
        }
        "simplex_barycenter" => simplex_barycenter(
            uint("d")?,
            uint("k")?,
            rat("eps0", Rational::new(1.into(), 4.into()))?,
            seed,
        ),
        "crosspoly_pyramid" => crosspoly_pyramid(uint("d")?, uint("k")?),
        "truncated_crosspolytope" => truncated_crosspolytope(uint("d")?, uint("n")?, seed),
        "bipyramid_triangle" => {
            let variant: BipyramidVariant = params.get("variant").map_or("seven", String::as_str).parse()?;
            bipyramid_triangle(variant, rat("eps", Rational::new(1.into(), 4.into()))?, seed)
        }
        "arcs_product" => arcs_product(uint("k")?, int("pad")?.unwrap_or(0) as usize, seed),
        other => Err(Error::Parse(format!("unknown construction '{other}'"))),
    }
}

/// Names accepted by [`construct`].
pub const CONSTRUCTION_NAMES: &[&str] = &[
    "simplex",
    "cross_polytope",
    "cube",
    "regular_ngon",
    "parallelogram",
    "trapezoid",
    "generic_quadrangle",
    "pyramid_over",
    "simplex_barycenter",
    "crosspoly_pyramid",
    "truncated_crosspolytope",
    "bipyramid_triangle",
    "arcs_product",
];
