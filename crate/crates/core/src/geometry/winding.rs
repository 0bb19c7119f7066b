//! Winding numbers by exact signed ray-crossing counts.
//!
//! The ray from the query point goes in the +x direction, conceptually
//! shifted to height `y + ε` for an infinitesimal ε > 0. That single
//! convention resolves every tie (piece endpoints on the ray, tangencies,
//! the query point collinear with a chord) deterministically: an endpoint
//! at ray height counts for the piece below it, a tangency from below
//! contributes a cancelling pair, a tangency from above contributes
//! nothing. Upward crossings to the right of the point count +1, downward
//! crossings -1, so counterclockwise loops have positive winding.

use super::{
    cross, sign, sign_plus_sqrt, GeometryError, Orientation, PathPiece, PlanarPath, PlanarPoint,
    Rational,
};
use num::traits::Zero;
use num::Signed;

/// Winding number of a closed path around a point not lying on it.
pub fn winding_number(path: &PlanarPath, point: &PlanarPoint) -> Result<i64, GeometryError> {
    if !path.is_closed() {
        return Err(GeometryError::NotClosed);
    }
    if let Some(piece) = path.piece_containing(point) {
        return Err(GeometryError::PointOnPath { piece });
    }
    Ok(winding_number_off_path(path, point))
}

/// Crossing count without the on-path check, for callers that already know
/// the point misses every piece.
pub(crate) fn winding_number_off_path(path: &PlanarPath, point: &PlanarPoint) -> i64 {
    path.pieces()
        .iter()
        .map(|piece| piece_ray_crossings(piece, point))
        .sum()
}

/// Signed crossings of one piece with the shifted rightward ray from `p`.
/// Assumes `p` does not lie on the piece.
fn piece_ray_crossings(piece: &PathPiece, p: &PlanarPoint) -> i64 {
    match piece {
        PathPiece::Segment { start, end } => segment_ray_crossings(start, end, p),
        PathPiece::Arc {
            center,
            radius_squared,
            start,
            end,
            orientation,
        } => arc_ray_crossings(center, radius_squared, start, end, *orientation, p),
    }
}

fn segment_ray_crossings(a: &PlanarPoint, b: &PlanarPoint, p: &PlanarPoint) -> i64 {
    // shifted ray: the edge straddles height y_p + ε iff
    //   upward:   a.y <= y_p < b.y      downward: b.y <= y_p < a.y
    let upward = a.y <= p.y && p.y < b.y;
    let downward = b.y <= p.y && p.y < a.y;
    if !upward && !downward {
        return 0;
    }
    let is_left = cross(&b.sub(a), &p.sub(a));
    if upward && is_left.is_positive() {
        1
    } else if downward && is_left.is_negative() {
        -1
    } else {
        // is_left == 0 with a straddle would put p on the segment, which the
        // caller has excluded
        0
    }
}

/// The two candidate intersections of the circle with the shifted ray line
/// sit at x = c_x ± sqrt(D) where D = r² - (y_p - c_y)². Each candidate is
/// kept iff it lies strictly right of the point and, after the infinitesimal
/// upward shift, still on the traversed span of the arc. All comparisons are
/// exact sign tests on numbers of the form a + b·sqrt(D).
fn arc_ray_crossings(
    center: &PlanarPoint,
    radius_squared: &Rational,
    start: &PlanarPoint,
    end: &PlanarPoint,
    orientation: Orientation,
    p: &PlanarPoint,
) -> i64 {
    let d = &p.y - &center.y;
    let disc = radius_squared - &d * &d;
    if disc.is_negative() {
        return 0;
    }
    if disc.is_zero() && !d.is_negative() {
        // tangent at the top of the circle: the shifted line misses it
        return 0;
    }
    let full = start == end;
    // canonical ccw span from u to v (relative to the center)
    let (u, v) = match orientation {
        Orientation::Ccw => (start.sub(center), end.sub(center)),
        Orientation::Cw => (end.sub(center), start.sub(center)),
    };
    let cx_minus_px = &center.x - &p.x;
    let mut total = 0i64;
    for sigma in [1i64, -1i64] {
        let sig_r = super::rat_int(sigma);
        // x-test: sign of (c_x - p_x) + σ·sqrt(D); a zero means the point
        // itself sits on the circle off this arc's span, so no crossing
        if sign_plus_sqrt(&cx_minus_px, &sig_r, &disc) <= 0 {
            continue;
        }
        if !span_contains_perturbed(&u, &v, full, &d, &disc, sigma) {
            continue;
        }
        // on the right half of the circle a ccw arc moves upward
        let upward = (sigma == 1) == (orientation == Orientation::Ccw);
        total += if upward { 1 } else { -1 };
    }
    total
}

/// Span membership for the intersection point w = (σ·sqrt(D), d) relative to
/// the center, nudged along the circle in the direction it moves as the ray
/// shifts up: counterclockwise on the right half (σ = +1), clockwise on the
/// left (σ = -1). The nudge settles intersections that land exactly on a
/// span endpoint.
fn span_contains_perturbed(
    u: &PlanarPoint,
    v: &PlanarPoint,
    full: bool,
    d: &Rational,
    disc: &Rational,
    sigma: i64,
) -> bool {
    if full {
        return true;
    }
    let advances_ccw = sigma == 1;
    let sig = super::rat_int(sigma);
    // cross(u, w) = u_x·d - u_y·σ√D, dot(u, w) = u_y·d + u_x·σ√D
    let cu = sign_plus_sqrt(&(&u.x * d), &(-(&u.y) * &sig), disc);
    if cu == 0 && sign_plus_sqrt(&(&u.y * d), &(&u.x * &sig), disc) > 0 {
        // exactly at the ccw span start: entering iff nudged ccw
        return advances_ccw;
    }
    // cross(w, v) = σ√D·v_y - d·v_x, dot(w, v) = d·v_y + σ√D·v_x
    let cv = sign_plus_sqrt(&(-d * &v.x), &(&v.y * &sig), disc);
    if cv == 0 && sign_plus_sqrt(&(d * &v.y), &(&v.x * &sig), disc) > 0 {
        // exactly at the ccw span end: staying iff nudged cw
        return !advances_ccw;
    }
    let cuv = sign(&cross(u, v));
    if cuv > 0 {
        cu > 0 && cv > 0
    } else if cuv < 0 {
        cu > 0 || cv > 0
    } else {
        cu > 0
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int, PathPiece, PlanarPath, PlanarPoint};
    use super::*;

    fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> PlanarPoint {
        PlanarPoint::of(xn, xd, yn, yd)
    }

    fn square_ccw(half: Rational, center: PlanarPoint) -> PlanarPath {
        let c = center;
        let v = [
            PlanarPoint::new(&c.x + &half, &c.y - &half),
            PlanarPoint::new(&c.x + &half, &c.y + &half),
            PlanarPoint::new(&c.x - &half, &c.y + &half),
            PlanarPoint::new(&c.x - &half, &c.y - &half),
        ];
        PlanarPath::closed(
            (0..4)
                .map(|i| PathPiece::segment(v[i].clone(), v[(i + 1) % 4].clone()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn unit_square_windings() {
        let sq = square_ccw(rat(1, 3), PlanarPoint::origin());
        assert_eq!(winding_number(&sq, &PlanarPoint::origin()).unwrap(), 1);
        assert_eq!(winding_number(&sq, &pt(5, 1, 5, 1)).unwrap(), 0);
        assert_eq!(winding_number(&sq.reversed(), &PlanarPoint::origin()).unwrap(), -1);
    }

    #[test]
    fn cw_circle_winds_negative() {
        let circle = PlanarPath::closed(vec![PathPiece::full_circle(
            PlanarPoint::origin(),
            pt(1, 2, 0, 1),
            Orientation::Cw,
        )
        .unwrap()])
        .unwrap();
        assert_eq!(winding_number(&circle, &PlanarPoint::origin()).unwrap(), -1);
        assert_eq!(winding_number(&circle, &pt(2, 1, 0, 1)).unwrap(), 0);
        assert_eq!(
            winding_number(&circle.reversed(), &PlanarPoint::origin()).unwrap(),
            1
        );
    }

    #[test]
    fn circle_from_quarter_arcs_with_irrational_radius() {
        // squared radius 2: rational points (±1, ±1) split the circle into
        // four genuine quarter arcs
        let c = PlanarPoint::origin();
        let p = |x: i64, y: i64| PlanarPoint::new(rat_int(x), rat_int(y));
        let arcs = vec![
            PathPiece::arc(c.clone(), rat_int(2), p(1, -1), p(1, 1), Orientation::Ccw).unwrap(),
            PathPiece::arc(c.clone(), rat_int(2), p(1, 1), p(-1, 1), Orientation::Ccw).unwrap(),
            PathPiece::arc(c.clone(), rat_int(2), p(-1, 1), p(-1, -1), Orientation::Ccw).unwrap(),
            PathPiece::arc(c.clone(), rat_int(2), p(-1, -1), p(1, -1), Orientation::Ccw).unwrap(),
        ];
        let circle = PlanarPath::closed(arcs).unwrap();
        assert_eq!(winding_number(&circle, &PlanarPoint::origin()).unwrap(), 1);
        // interior points at awkward heights, including arc-endpoint height
        assert_eq!(winding_number(&circle, &pt(0, 1, 1, 1)).unwrap(), 1);
        assert_eq!(winding_number(&circle, &pt(-1, 3, -1, 1)).unwrap(), 1);
        assert_eq!(winding_number(&circle, &pt(1, 7, 7, 5)).unwrap(), 1);
        // exterior, same heights
        assert_eq!(winding_number(&circle, &pt(3, 1, 1, 1)).unwrap(), 0);
        assert_eq!(winding_number(&circle, &pt(-2, 1, -1, 1)).unwrap(), 0);
        assert_eq!(winding_number(&circle, &pt(2, 1, 7, 5)).unwrap(), 0);
    }

    #[test]
    fn point_at_tangency_height() {
        // circle of radius 1/2 about the origin; query points level with the
        // bottom of the circle
        let circle = PlanarPath::closed(vec![PathPiece::full_circle(
            PlanarPoint::origin(),
            pt(1, 2, 0, 1),
            Orientation::Ccw,
        )
        .unwrap()])
        .unwrap();
        // directly level with the bottom tangent point, left of the circle:
        // the shifted ray crosses twice with cancelling signs
        assert_eq!(winding_number(&circle, &pt(-3, 1, -1, 2)).unwrap(), 0);
        // level with the top tangent point: shifted ray misses
        assert_eq!(winding_number(&circle, &pt(-3, 1, 1, 2)).unwrap(), 0);
    }

    #[test]
    fn semicircle_bulge_windings() {
        // ccw semicircle from (2,-1/2) to (2,1/2) bulging right, closed by a
        // vertical segment
        let c = PlanarPoint::new(rat_int(2), rat_int(0));
        let lo = pt(2, 1, -1, 2);
        let hi = pt(2, 1, 1, 2);
        let loop_ = PlanarPath::closed(vec![
            PathPiece::arc(c, rat(1, 4), lo.clone(), hi.clone(), Orientation::Ccw).unwrap(),
            PathPiece::segment(hi, lo).unwrap(),
        ])
        .unwrap();
        // inside the bulge
        assert_eq!(winding_number(&loop_, &pt(9, 4, 0, 1)).unwrap(), 1);
        assert_eq!(winding_number(&loop_, &pt(11, 5, 2, 5)).unwrap(), 1);
        // at the pinch heights the half-disc has no interior
        assert_eq!(winding_number(&loop_, &pt(17, 8, -1, 2)).unwrap(), 0);
        assert_eq!(winding_number(&loop_, &pt(0, 1, -1, 2)).unwrap(), 0);
        assert_eq!(winding_number(&loop_, &pt(17, 8, 1, 2)).unwrap(), 0);
        // the chord is a path piece here, so its points are on the path
        let err = winding_number(&loop_, &pt(2, 1, 0, 1)).unwrap_err();
        assert!(matches!(err, GeometryError::PointOnPath { .. }));
    }

    #[test]
    fn probes_level_with_arc_endpoints() {
        // top quarter of the squared-radius-2 circle, closed by a box below;
        // the arc endpoints (±1, 1) are not height extremes of the circle, so
        // the ray through an endpoint meets the arc nontrivially
        let c = PlanarPoint::origin();
        let box_pts = [
            pt(1, 1, 1, 1),
            pt(1, 1, 0, 1),
            pt(-1, 1, 0, 1),
            pt(-1, 1, 1, 1),
        ];
        let loop_ = PlanarPath::closed(vec![
            PathPiece::arc(
                c,
                rat_int(2),
                box_pts[0].clone(),
                box_pts[3].clone(),
                Orientation::Ccw,
            )
            .unwrap(),
            PathPiece::segment(box_pts[3].clone(), box_pts[2].clone()).unwrap(),
            PathPiece::segment(box_pts[2].clone(), box_pts[1].clone()).unwrap(),
            PathPiece::segment(box_pts[1].clone(), box_pts[0].clone()).unwrap(),
        ])
        .unwrap();
        // probes exactly at the arc-endpoint height y = 1
        assert_eq!(winding_number(&loop_, &pt(0, 1, 1, 1)).unwrap(), 1);
        assert_eq!(winding_number(&loop_, &pt(2, 1, 1, 1)).unwrap(), 0);
        assert_eq!(winding_number(&loop_, &pt(-2, 1, 1, 1)).unwrap(), 0);
        // inside the box part and inside the lens part
        assert_eq!(winding_number(&loop_, &pt(0, 1, 1, 2)).unwrap(), 1);
        assert_eq!(winding_number(&loop_, &pt(0, 1, 11, 8)).unwrap(), 1);
        // just above the lens
        assert_eq!(winding_number(&loop_, &pt(0, 1, 3, 2)).unwrap(), 0);
    }

    #[test]
    fn point_on_path_is_rejected() {
        let sq = square_ccw(rat(1, 2), PlanarPoint::origin());
        let err = winding_number(&sq, &pt(1, 2, 0, 1)).unwrap_err();
        assert!(matches!(err, GeometryError::PointOnPath { .. }));
        let circle = PlanarPath::closed(vec![PathPiece::full_circle(
            PlanarPoint::origin(),
            pt(1, 2, 0, 1),
            Orientation::Ccw,
        )
        .unwrap()])
        .unwrap();
        let err = winding_number(&circle, &pt(-1, 2, 0, 1)).unwrap_err();
        assert!(matches!(err, GeometryError::PointOnPath { .. }));
    }

    #[test]
    fn square_with_edge_at_probe_height() {
        // the probe sits level with a horizontal edge of the square; the
        // shifted-ray convention must not double count the shared vertices
        let v = [
            pt(0, 1, 0, 1),
            pt(2, 1, 0, 1),
            pt(2, 1, 2, 1),
            pt(0, 1, 2, 1),
        ];
        let sq = PlanarPath::closed(
            (0..4)
                .map(|i| PathPiece::segment(v[i].clone(), v[(i + 1) % 4].clone()).unwrap())
                .collect(),
        )
        .unwrap();
        // level with the bottom edge, on both sides
        assert_eq!(winding_number(&sq, &pt(-1, 1, 0, 1)).unwrap(), 0);
        assert_eq!(winding_number(&sq, &pt(3, 1, 0, 1)).unwrap(), 0);
        // level with the top edge, on both sides
        assert_eq!(winding_number(&sq, &pt(-1, 1, 2, 1)).unwrap(), 0);
        assert_eq!(winding_number(&sq, &pt(3, 1, 2, 1)).unwrap(), 0);
        // level with the bottom edge but inside its x-range is on the path
        assert!(winding_number(&sq, &pt(1, 1, 0, 1)).is_err());
        // strictly inside, level with nothing
        assert_eq!(winding_number(&sq, &pt(1, 1, 1, 1)).unwrap(), 1);
    }

    #[test]
    fn probe_collinear_with_an_edge() {
        // probe on the extension of a slanted edge, outside the segment
        let v = [pt(1, 1, 1, 1), pt(3, 1, 3, 1), pt(1, 1, 3, 1)];
        let tri = PlanarPath::closed(
            (0..3)
                .map(|i| PathPiece::segment(v[i].clone(), v[(i + 1) % 3].clone()).unwrap())
                .collect(),
        )
        .unwrap();
        // (0,0) and (4,4) are collinear with the diagonal edge but off it
        assert_eq!(winding_number(&tri, &pt(0, 1, 0, 1)).unwrap(), 0);
        assert_eq!(winding_number(&tri, &pt(4, 1, 4, 1)).unwrap(), 0);
        // on the open diagonal edge itself
        assert!(winding_number(&tri, &pt(2, 1, 2, 1)).is_err());
        // inside the triangle
        assert_eq!(winding_number(&tri, &pt(3, 2, 2, 1)).unwrap(), 1);
    }

    #[test]
    fn probe_at_arc_center() {
        // ray through the center of the arc's circle: intersections at
        // x = c ± r with r irrational
        let c = PlanarPoint::origin();
        let a = PlanarPoint::new(rat_int(1), rat_int(1));
        let b = PlanarPoint::new(rat_int(1), rat_int(-1));
        let loop_ = PlanarPath::closed(vec![
            PathPiece::arc(c, rat_int(2), b.clone(), a.clone(), Orientation::Ccw).unwrap(),
            PathPiece::segment(a, b).unwrap(),
        ])
        .unwrap();
        assert_eq!(winding_number(&loop_, &PlanarPoint::origin()).unwrap(), 0);
        assert_eq!(winding_number(&loop_, &pt(5, 4, 0, 1)).unwrap(), 1);
        assert_eq!(winding_number(&loop_, &pt(-5, 4, 0, 1)).unwrap(), 0);
    }

    #[test]
    fn winding_invariant_under_rotation() {
        // rotating path and point by a quarter turn maps arcs to arcs and
        // must preserve the winding; exercises all four ray configurations
        let c = PlanarPoint::new(rat_int(1), rat_int(1));
        let a = pt(1, 1, 1, 2);
        let b = pt(1, 1, 3, 2);
        let loop_ = PlanarPath::closed(vec![
            PathPiece::arc(c, rat(1, 4), a.clone(), b.clone(), Orientation::Ccw).unwrap(),
            PathPiece::segment(b, a).unwrap(),
        ])
        .unwrap();
        let rot = |p: &PlanarPoint| PlanarPoint::new(p.y.clone(), -&p.x);
        let rot_piece = |piece: &PathPiece| match piece {
            PathPiece::Segment { start, end } => PathPiece::Segment {
                start: rot(start),
                end: rot(end),
            },
            PathPiece::Arc {
                center,
                radius_squared,
                start,
                end,
                orientation,
            } => PathPiece::Arc {
                center: rot(center),
                radius_squared: radius_squared.clone(),
                start: rot(start),
                end: rot(end),
                orientation: *orientation,
            },
        };
        let probes = [
            pt(5, 4, 1, 1),
            pt(9, 8, 5, 4),
            pt(0, 1, 0, 1),
            pt(1, 1, 2, 1),
            pt(11, 8, 1, 2),
        ];
        let mut path = loop_.clone();
        let mut pts: Vec<PlanarPoint> = probes.to_vec();
        let reference: Vec<i64> = probes
            .iter()
            .map(|p| winding_number(&loop_, p).unwrap())
            .collect();
        for _ in 0..4 {
            path = PlanarPath::closed(path.pieces().iter().map(rot_piece).collect()).unwrap();
            pts = pts.iter().map(rot).collect();
            let now: Vec<i64> = pts.iter().map(|p| winding_number(&path, p).unwrap()).collect();
            assert_eq!(now, reference);
        }
    }
}
