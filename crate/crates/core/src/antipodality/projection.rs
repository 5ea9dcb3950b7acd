//! Projections to one dimension lower and the chord criterion.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::hull::{hull_vertices, in_relative_interior};
use crate::lp::{lp_witness, LinearSystem, VarKind};
use crate::rational::{centroid, frac, int, sub, Point, Rational};

const RETRY_CAP: usize = 64;

/// Image of a projection along a line through a vertex.
#[derive(Clone, Debug)]
pub struct VertexProjection {
    /// Vertices of the projected hull, in input order.
    pub image: PointConfig,
    /// Image index of each input point, `None` when its image is not a vertex.
    pub fiber: Vec<Option<usize>>,
    /// Kernel direction of the projection.
    pub direction: Point,
}

/// Linear map with kernel `span(w)`: eliminate coordinate `c` along `w`.
fn eliminate(x: &[Rational], w: &[Rational], c: usize) -> Point {
    let t = &x[c] / &w[c];
    x.iter()
        .zip(w)
        .enumerate()
        .filter(|(k, _)| *k != c)
        .map(|(_, (xk, wk))| xk - &t * wk)
        .collect()
}

/// Projects along a line through vertex `apex` and an interior point.
///
/// The line starts at the centroid and is perturbed deterministically from
/// `seed` until the image of `apex` is interior and no two points collapse.
pub fn project_at_vertex(config: &PointConfig, apex: usize, seed: u64) -> Result<VertexProjection> {
    config.check_index(apex)?;
    config.require_full_dimensional()?;
    let d = config.dim();
    if d < 2 {
        return Err(Error::Range("projection needs dimension at least 2".into()));
    }
    let pts = config.points();
    if !hull_vertices(pts)?.contains(&apex) {
        return Err(Error::NotAVertex(apex));
    }
    let base = sub(&centroid(pts), &pts[apex]);
    let spread = base.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::one);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..RETRY_CAP {
        let w: Point = if attempt == 0 {
            base.clone()
        } else {
            let step = &spread * frac(1, 1 << (2 + attempt.min(40) / 2));
            base.iter()
                .map(|c| c + &step * frac(rng.gen_range(-16..=16), 16))
                .collect()
        };
        let Some(c) = (0..d).max_by_key(|&k| w[k].abs()).filter(|&k| !w[k].is_zero()) else {
            continue;
        };
        let images: Vec<Point> = pts.iter().map(|x| eliminate(x, &w, c)).collect();
        let mut sorted: Vec<&Point> = images.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            continue;
        }
        if !in_relative_interior(&images, &images[apex])? {
            continue;
        }
        let verts = hull_vertices(&images)?;
        let mut fiber = vec![None; pts.len()];
        for (pos, &k) in verts.iter().enumerate() {
            fiber[k] = Some(pos);
        }
        let image = PointConfig::new(d - 1, verts.iter().map(|&k| images[k].clone()).collect())?;
        return Ok(VertexProjection {
            image,
            fiber,
            direction: w,
        });
    }
    Err(Error::RetryCapExceeded(
        "generic projection direction".into(),
        RETRY_CAP,
    ))
}

/// Image of the projection forgetting the last coordinate.
#[derive(Clone, Debug)]
pub struct CoordinateProjection {
    /// Distinct images in order of first appearance.
    pub image: PointConfig,
    /// Input indices over each image point.
    pub fibers: Vec<Vec<usize>>,
}

pub fn coordinate_projection(config: &PointConfig) -> Result<CoordinateProjection> {
    let d = config.dim();
    if d < 2 {
        return Err(Error::Range("projection needs dimension at least 2".into()));
    }
    let mut images: Vec<Point> = Vec::new();
    let mut fibers: Vec<Vec<usize>> = Vec::new();
    for (k, x) in config.points().iter().enumerate() {
        let y: Point = x[..d - 1].to_vec();
        match images.iter().position(|z| *z == y) {
            Some(p) => fibers[p].push(k),
            None => {
                images.push(y);
                fibers.push(vec![k]);
            }
        }
    }
    Ok(CoordinateProjection {
        image: PointConfig::new(d - 1, images)?,
        fibers,
    })
}

/// Highest point over `y1` and lowest point over `y2`.
pub fn lift_pair(config: &PointConfig, proj: &CoordinateProjection, y1: usize, y2: usize) -> (usize, usize) {
    let last = config.dim() - 1;
    let height = |k: &usize| config.point(*k)[last].clone();
    let hi = *proj.fibers[y1]
        .iter()
        .max_by_key(|k| height(k))
        .expect("fibers are nonempty");
    let lo = *proj.fibers[y2]
        .iter()
        .min_by_key(|k| height(k))
        .expect("fibers are nonempty");
    (hi, lo)
}

/// Whether `[x_i, x_j]` is the only longest chord of `conv X` in its direction.
///
/// Equivalent to the tangent cones at `x_i` and `x_j` meeting only in the
/// origin; both points must be vertices.
pub fn unique_max_chord(config: &PointConfig, i: usize, j: usize) -> Result<bool> {
    config.check_index(i)?;
    config.check_index(j)?;
    if i == j {
        return Err(Error::InvalidPair(i, j));
    }
    let pts = config.points();
    let verts = hull_vertices(pts)?;
    for k in [i, j] {
        if !verts.contains(&k) {
            return Err(Error::NotAVertex(k));
        }
    }
    let n = pts.len();
    let mut sys = LinearSystem::with_kinds(vec![VarKind::NonNeg; 2 * n]);
    for c in 0..config.dim() {
        let mut row = Vec::with_capacity(2 * n);
        row.extend(pts.iter().map(|x| &x[c] - &pts[i][c]));
        row.extend(pts.iter().map(|x| &pts[j][c] - &x[c]));
        sys.eq(row, Rational::zero());
    }
    // Exclude the zero columns of x_i and x_j so the normalization forces z != 0.
    let mut norm: Vec<Rational> = (0..n).map(|k| if k == i { int(0) } else { int(1) }).collect();
    norm.extend(vec![int(0); n]);
    for col in [i, n + j] {
        let mut ban = vec![int(0); 2 * n];
        ban[col] = int(1);
        sys.eq(ban, Rational::zero());
    }
    sys.eq(norm, Rational::one());
    Ok(!lp_witness(&sys)?.is_feasible())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antipodality::{count_pairs, Mode};

    #[test]
    fn pyramid_over_parallelogram_projects_to_base() {
        let c = PointConfig::from_ints(&[&[0, 0, 0], &[2, 0, 0], &[3, 1, 0], &[1, 1, 0], &[1, 1, 3]]).unwrap();
        let p = project_at_vertex(&c, 4, 7).unwrap();
        assert_eq!(p.image.len(), 4);
        assert_eq!(p.fiber[4], None);
        assert_eq!(count_pairs(&p.image, Mode::Strict).unwrap().count, 2);
    }

    #[test]
    fn bipyramid_base_vertex_gives_quadrangle() {
        let c = PointConfig::from_ints(&[&[0, 0, 0], &[4, 0, 0], &[0, 4, 0], &[1, 1, 3], &[1, 1, -2]]).unwrap();
        let p = project_at_vertex(&c, 0, 1).unwrap();
        assert_eq!(p.image.len(), 4);
    }

    #[test]
    fn non_vertex_apex_is_rejected() {
        let c = PointConfig::from_ints(&[&[0, 0], &[4, 0], &[0, 4], &[1, 1]]).unwrap();
        assert!(matches!(project_at_vertex(&c, 3, 0), Err(Error::NotAVertex(3))));
    }

    #[test]
    fn square_diagonal_is_unique_chord() {
        let c = PointConfig::from_ints(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).unwrap();
        assert!(unique_max_chord(&c, 0, 2).unwrap());
        assert!(!unique_max_chord(&c, 0, 1).unwrap());
    }

    #[test]
    fn coordinate_fibers() {
        let c = PointConfig::from_ints(&[&[0, 0], &[0, 1], &[1, 0], &[1, 3]]).unwrap();
        let p = coordinate_projection(&c).unwrap();
        assert_eq!(p.fibers, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(lift_pair(&c, &p, 0, 1), (1, 2));
    }
}
