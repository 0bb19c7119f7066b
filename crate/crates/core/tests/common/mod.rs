#![allow(dead_code)] // each test binary uses a different subset

//! Shared test support: an independent winding-number oracle based on
//! quadrant transitions, and a deterministic random corpus of rational
//! polygons.

use dehnsurg_core::geometry::{PathPiece, PlanarPath, PlanarPoint, Rational};
use num::bigint::BigInt;
use num::traits::Zero;
use num::Signed;
use rand::Rng;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Winding number of the polygon around `p` by counting quadrant
/// transitions of the vertices as seen from `p`. Independent of the
/// ray-crossing implementation: no rays, no crossing parities, only
/// quadrant bookkeeping with the diagonal case settled by an orientation
/// sign. Returns `None` when `p` sits on a vertex or an edge.
pub fn quadrant_winding(vertices: &[PlanarPoint], p: &PlanarPoint) -> Option<i64> {
    let quadrant = |v: &PlanarPoint| -> Option<i64> {
        let dx = &v.x - &p.x;
        let dy = &v.y - &p.y;
        if dx.is_zero() && dy.is_zero() {
            return None;
        }
        Some(if dx.is_positive() && !dy.is_negative() {
            0
        } else if !dx.is_positive() && dy.is_positive() {
            1
        } else if dx.is_negative() && !dy.is_positive() {
            2
        } else {
            3
        })
    };
    let n = vertices.len();
    let mut total = 0i64;
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        let qa = quadrant(a)?;
        let qb = quadrant(b)?;
        let mut delta = (qb - qa).rem_euclid(4);
        if delta == 3 {
            delta = -1;
        } else if delta == 2 {
            // edge to the opposite quadrant: decide the sweep direction by
            // which side of the edge the point lies on
            let side = (&b.x - &a.x) * (&p.y - &a.y) - (&b.y - &a.y) * (&p.x - &a.x);
            if side.is_zero() {
                return None; // p on the edge
            }
            delta = if side.is_positive() { 2 } else { -2 };
        }
        total += delta;
    }
    assert_eq!(total % 4, 0, "quadrant deltas must close up");
    Some(total / 4)
}

/// A random rational point with numerators in [-40, 40] and denominators
/// in [1, 20].
pub fn random_point<R: Rng>(rng: &mut R) -> PlanarPoint {
    PlanarPoint::new(
        rational(rng.gen_range(-40..=40), rng.gen_range(1..=20)),
        rational(rng.gen_range(-40..=40), rng.gen_range(1..=20)),
    )
}

/// A random polygon with 3..=12 vertices, consecutive vertices distinct.
pub fn random_polygon<R: Rng>(rng: &mut R) -> Vec<PlanarPoint> {
    loop {
        let n = rng.gen_range(3..=12);
        let vertices: Vec<PlanarPoint> = (0..n).map(|_| random_point(rng)).collect();
        let ok = (0..n).all(|i| vertices[i] != vertices[(i + 1) % n]);
        if ok {
            return vertices;
        }
    }
}

pub fn polygon_path(vertices: &[PlanarPoint]) -> PlanarPath {
    let n = vertices.len();
    PlanarPath::closed(
        (0..n)
            .map(|i| {
                PathPiece::segment(vertices[i].clone(), vertices[(i + 1) % n].clone())
                    .expect("consecutive vertices distinct")
            })
            .collect(),
    )
    .expect("vertex chain closes")
}
