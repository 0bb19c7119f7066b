//! Exact rational plane geometry: piecewise paths (segments and circular
//! arcs) in the punctured plane, lattice-point predicates, winding numbers,
//! lattice linking numbers and the polyline integral `2 ∫ n m' dt`.
//!
//! Everything here is exact. Coordinates are arbitrary-precision rationals,
//! arcs are stored as center / squared radius / endpoints, and every
//! predicate reduces to integer sign tests. No floating point anywhere.

mod linking;
mod winding;

pub use linking::{integer_bounding_box, lattice_linking};
pub use winding::winding_number;

use num::bigint::BigInt;
use num::traits::Zero;
use num::Signed;
use std::fmt;

/// The universal scalar: an arbitrary-precision rational, always kept in
/// lowest terms with a positive denominator.
pub type Rational = num::BigRational;

/// Shorthand for `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

pub(crate) fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// Sign of `r` as -1, 0 or 1.
pub(crate) fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of `a + b*sqrt(d)` for rational `a`, `b` and `d >= 0`, computed by
/// exact comparisons of squares. Never materializes a square root.
pub(crate) fn sign_plus_sqrt(a: &Rational, b: &Rational, d: &Rational) -> i32 {
    debug_assert!(!d.is_negative());
    if d.is_zero() || b.is_zero() {
        return sign(a);
    }
    let sa = sign(a);
    let sb = sign(b);
    if sa == 0 {
        return sb;
    }
    if sa == sb {
        return sa;
    }
    let a2 = a * a;
    let b2d = b * b * d;
    match a2.cmp(&b2d) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sb,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Exact square root of a rational if it is a perfect square, else `None`.
pub(crate) fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Smallest nonnegative integer `R` with `R*R >= r`. Used as an exact upper
/// bound for a radius known only through its square.
pub(crate) fn ceil_sqrt_int(r: &Rational) -> BigInt {
    if !r.is_positive() {
        return BigInt::zero();
    }
    let c = r.ceil().to_integer();
    let mut s = c.sqrt();
    while &s * &s < c {
        s += 1;
    }
    s
}

/// A point of the rational plane.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanarPoint {
    pub x: Rational,
    pub y: Rational,
}

impl PlanarPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        PlanarPoint { x, y }
    }

    /// `(xn/xd, yn/yd)` as a point.
    pub fn of(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        PlanarPoint::new(rat(xn, xd), rat(yn, yd))
    }

    pub fn origin() -> Self {
        PlanarPoint::new(Rational::zero(), Rational::zero())
    }

    pub fn is_lattice(&self) -> bool {
        is_integer(&self.x) && is_integer(&self.y)
    }

    pub(crate) fn sub(&self, other: &PlanarPoint) -> PlanarPoint {
        PlanarPoint::new(&self.x - &other.x, &self.y - &other.y)
    }

    fn translated(&self, dx: &Rational, dy: &Rational) -> PlanarPoint {
        PlanarPoint::new(&self.x + dx, &self.y + dy)
    }

    fn point_reflected(&self, c: &PlanarPoint) -> PlanarPoint {
        PlanarPoint::new(&c.x + &c.x - &self.x, &c.y + &c.y - &self.y)
    }

    fn norm_squared(&self) -> Rational {
        &self.x * &self.x + &self.y * &self.y
    }
}

impl fmt::Debug for PlanarPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub(crate) fn cross(u: &PlanarPoint, v: &PlanarPoint) -> Rational {
    &u.x * &v.y - &u.y * &v.x
}

pub(crate) fn dot(u: &PlanarPoint, v: &PlanarPoint) -> Rational {
    &u.x * &v.x + &u.y * &v.y
}

/// Traversal sense of a circular arc.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Ccw,
    Cw,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

/// One piece of a planar path: a nondegenerate line segment or a circular
/// arc held exactly as center, squared radius, endpoints and orientation.
/// An arc whose start equals its end is a full circle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PathPiece {
    Segment {
        start: PlanarPoint,
        end: PlanarPoint,
    },
    Arc {
        center: PlanarPoint,
        radius_squared: Rational,
        start: PlanarPoint,
        end: PlanarPoint,
        orientation: Orientation,
    },
}

impl PathPiece {
    pub fn segment(start: PlanarPoint, end: PlanarPoint) -> Result<Self, GeometryError> {
        if start == end {
            return Err(GeometryError::DegenerateSegment);
        }
        Ok(PathPiece::Segment { start, end })
    }

    pub fn arc(
        center: PlanarPoint,
        radius_squared: Rational,
        start: PlanarPoint,
        end: PlanarPoint,
        orientation: Orientation,
    ) -> Result<Self, GeometryError> {
        if !radius_squared.is_positive() {
            return Err(GeometryError::InvalidArc);
        }
        if start.sub(&center).norm_squared() != radius_squared
            || end.sub(&center).norm_squared() != radius_squared
        {
            return Err(GeometryError::InvalidArc);
        }
        Ok(PathPiece::Arc {
            center,
            radius_squared,
            start,
            end,
            orientation,
        })
    }

    /// Full circle through `through` around `center`.
    pub fn full_circle(
        center: PlanarPoint,
        through: PlanarPoint,
        orientation: Orientation,
    ) -> Result<Self, GeometryError> {
        let r2 = through.sub(&center).norm_squared();
        PathPiece::arc(center, r2, through.clone(), through, orientation)
    }

    pub fn start(&self) -> &PlanarPoint {
        match self {
            PathPiece::Segment { start, .. } | PathPiece::Arc { start, .. } => start,
        }
    }

    pub fn end(&self) -> &PlanarPoint {
        match self {
            PathPiece::Segment { end, .. } | PathPiece::Arc { end, .. } => end,
        }
    }

    pub fn reversed(&self) -> Self {
        match self {
            PathPiece::Segment { start, end } => PathPiece::Segment {
                start: end.clone(),
                end: start.clone(),
            },
            PathPiece::Arc {
                center,
                radius_squared,
                start,
                end,
                orientation,
            } => PathPiece::Arc {
                center: center.clone(),
                radius_squared: radius_squared.clone(),
                start: end.clone(),
                end: start.clone(),
                orientation: orientation.reversed(),
            },
        }
    }

    pub fn translated(&self, dx: &Rational, dy: &Rational) -> Self {
        match self {
            PathPiece::Segment { start, end } => PathPiece::Segment {
                start: start.translated(dx, dy),
                end: end.translated(dx, dy),
            },
            PathPiece::Arc {
                center,
                radius_squared,
                start,
                end,
                orientation,
            } => PathPiece::Arc {
                center: center.translated(dx, dy),
                radius_squared: radius_squared.clone(),
                start: start.translated(dx, dy),
                end: end.translated(dx, dy),
                orientation: *orientation,
            },
        }
    }

    /// Point reflection through `c`. A rotation by pi, so arc orientations
    /// are preserved.
    pub fn point_reflected(&self, c: &PlanarPoint) -> Self {
        match self {
            PathPiece::Segment { start, end } => PathPiece::Segment {
                start: start.point_reflected(c),
                end: end.point_reflected(c),
            },
            PathPiece::Arc {
                center,
                radius_squared,
                start,
                end,
                orientation,
            } => PathPiece::Arc {
                center: center.point_reflected(c),
                radius_squared: radius_squared.clone(),
                start: start.point_reflected(c),
                end: end.point_reflected(c),
                orientation: *orientation,
            },
        }
    }

    /// Exact membership test, endpoints included.
    pub fn contains_point(&self, p: &PlanarPoint) -> bool {
        match self {
            PathPiece::Segment { start, end } => {
                let d = end.sub(start);
                let w = p.sub(start);
                if !cross(&d, &w).is_zero() {
                    return false;
                }
                let t = dot(&w, &d);
                !t.is_negative() && t <= d.norm_squared()
            }
            PathPiece::Arc {
                center,
                radius_squared,
                start,
                end,
                orientation,
            } => {
                let w = p.sub(center);
                if w.norm_squared() != *radius_squared {
                    return false;
                }
                arc_span_contains(center, start, end, *orientation, &w)
            }
        }
    }

    /// All points of the integer lattice lying on this piece (endpoints
    /// included), in no particular order.
    pub fn lattice_points(&self) -> Vec<(BigInt, BigInt)> {
        match self {
            PathPiece::Segment { start, end } => segment_lattice_points(start, end),
            PathPiece::Arc {
                center,
                radius_squared,
                start,
                end,
                orientation,
            } => arc_lattice_points(center, radius_squared, start, end, *orientation),
        }
    }
}

/// Closed-span membership for a point `w` given relative to the arc center.
/// `w` must already be known to lie on the circle.
fn arc_span_contains(
    center: &PlanarPoint,
    start: &PlanarPoint,
    end: &PlanarPoint,
    orientation: Orientation,
    w: &PlanarPoint,
) -> bool {
    if start == end {
        return true; // full circle
    }
    // Canonicalize to a ccw span from u to v.
    let (u, v) = match orientation {
        Orientation::Ccw => (start.sub(center), end.sub(center)),
        Orientation::Cw => (end.sub(center), start.sub(center)),
    };
    let cu = cross(&u, w);
    if cu.is_zero() && dot(&u, w).is_positive() {
        return true;
    }
    let cv = cross(w, &v);
    if cv.is_zero() && dot(w, &v).is_positive() {
        return true;
    }
    let cuv = cross(&u, &v);
    if cuv.is_positive() {
        cu.is_positive() && cv.is_positive()
    } else if cuv.is_negative() {
        cu.is_positive() || cv.is_positive()
    } else {
        // u and v antipodal
        cu.is_positive()
    }
}

fn segment_lattice_points(start: &PlanarPoint, end: &PlanarPoint) -> Vec<(BigInt, BigInt)> {
    let mut found = Vec::new();
    let dx = &end.x - &start.x;
    let dy = &end.y - &start.y;
    if dx.is_zero() {
        // vertical: lattice points only if x is an integer
        if !is_integer(&start.x) {
            return found;
        }
        let x = start.x.to_integer();
        let (lo, hi) = if start.y <= end.y {
            (&start.y, &end.y)
        } else {
            (&end.y, &start.y)
        };
        let mut y = lo.ceil().to_integer();
        let ymax = hi.floor().to_integer();
        while y <= ymax {
            found.push((x.clone(), y.clone()));
            y += 1;
        }
    } else {
        // walk integer x columns; on the line y is determined exactly
        let (lo, hi) = if start.x <= end.x {
            (&start.x, &end.x)
        } else {
            (&end.x, &start.x)
        };
        let mut x = lo.ceil().to_integer();
        let xmax = hi.floor().to_integer();
        while x <= xmax {
            let xr = Rational::from(x.clone());
            let y = &start.y + (&xr - &start.x) * &dy / &dx;
            if is_integer(&y) {
                found.push((x.clone(), y.to_integer()));
            }
            x += 1;
        }
    }
    found
}

fn arc_lattice_points(
    center: &PlanarPoint,
    radius_squared: &Rational,
    start: &PlanarPoint,
    end: &PlanarPoint,
    orientation: Orientation,
) -> Vec<(BigInt, BigInt)> {
    let mut found = Vec::new();
    let bound = ceil_sqrt_int(radius_squared);
    let mut x = (&center.x - Rational::from(bound.clone())).ceil().to_integer();
    let xmax = (&center.x + Rational::from(bound)).floor().to_integer();
    while x <= xmax {
        let xr = Rational::from(x.clone());
        let dx = &xr - &center.x;
        let v = radius_squared - &dx * &dx;
        if !v.is_negative() {
            if let Some(s) = rational_sqrt(&v) {
                let mut candidates = vec![&center.y + &s];
                if !s.is_zero() {
                    candidates.push(&center.y - &s);
                }
                for y in candidates {
                    if is_integer(&y) {
                        let p = PlanarPoint::new(xr.clone(), y.clone());
                        let w = p.sub(center);
                        if arc_span_contains(center, start, end, orientation, &w) {
                            found.push((x.clone(), y.to_integer()));
                        }
                    }
                }
            }
        }
        x += 1;
    }
    found
}

/// A lattice point sitting on a path piece.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeViolation {
    pub piece: usize,
    pub point: (BigInt, BigInt),
}

impl fmt::Display for LatticeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "piece {} passes through lattice point ({}, {})",
            self.piece, self.point.0, self.point.1
        )
    }
}

/// A piecewise path: consecutive pieces share endpoints exactly; a closed
/// path additionally ends where it starts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlanarPath {
    pieces: Vec<PathPiece>,
    closed: bool,
}

impl PlanarPath {
    pub fn open(pieces: Vec<PathPiece>) -> Result<Self, GeometryError> {
        Self::build(pieces, false)
    }

    pub fn closed(pieces: Vec<PathPiece>) -> Result<Self, GeometryError> {
        Self::build(pieces, true)
    }

    fn build(pieces: Vec<PathPiece>, closed: bool) -> Result<Self, GeometryError> {
        if pieces.is_empty() {
            return Err(GeometryError::EmptyPath);
        }
        for i in 0..pieces.len() - 1 {
            if pieces[i].end() != pieces[i + 1].start() {
                return Err(GeometryError::DisconnectedPieces { index: i });
            }
        }
        if closed && pieces.last().unwrap().end() != pieces[0].start() {
            return Err(GeometryError::DisconnectedPieces {
                index: pieces.len() - 1,
            });
        }
        Ok(PlanarPath { pieces, closed })
    }

    pub fn pieces(&self) -> &[PathPiece] {
        &self.pieces
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn start(&self) -> &PlanarPoint {
        self.pieces[0].start()
    }

    pub fn end(&self) -> &PlanarPoint {
        self.pieces.last().unwrap().end()
    }

    pub fn reversed(&self) -> Self {
        let pieces = self.pieces.iter().rev().map(PathPiece::reversed).collect();
        PlanarPath {
            pieces,
            closed: self.closed,
        }
    }

    pub fn translated(&self, dx: &Rational, dy: &Rational) -> Self {
        PlanarPath {
            pieces: self.pieces.iter().map(|p| p.translated(dx, dy)).collect(),
            closed: self.closed,
        }
    }

    pub fn point_reflected(&self, c: &PlanarPoint) -> Self {
        PlanarPath {
            pieces: self.pieces.iter().map(|p| p.point_reflected(c)).collect(),
            closed: self.closed,
        }
    }

    /// Index of the first piece containing `p`, if any.
    pub fn piece_containing(&self, p: &PlanarPoint) -> Option<usize> {
        self.pieces.iter().position(|piece| piece.contains_point(p))
    }

    /// Every lattice point lying on some piece, with the offending piece.
    pub fn lattice_violations(&self) -> Vec<LatticeViolation> {
        let mut all = Vec::new();
        for (i, piece) in self.pieces.iter().enumerate() {
            for point in piece.lattice_points() {
                all.push(LatticeViolation { piece: i, point });
            }
        }
        all
    }
}

/// Ok iff no piece of `path` touches a point of the integer lattice
/// (endpoints included).
pub fn verify_lattice_avoidance(path: &PlanarPath) -> Result<(), GeometryError> {
    match path.lattice_violations().into_iter().next() {
        None => Ok(()),
        Some(v) => Err(GeometryError::LatticeViolation(v)),
    }
}

/// The exact value of `2 ∫ n m' dt` along a polyline: per segment the closed
/// form `(m_end - m_start) * (n_start + n_end)`. Arcs are rejected; the
/// integral is only ever taken over piecewise-linear paths.
pub fn path_integral_two_n_mprime(path: &PlanarPath) -> Result<Rational, GeometryError> {
    let mut total = Rational::zero();
    for piece in path.pieces() {
        match piece {
            PathPiece::Segment { start, end } => {
                total += (&end.x - &start.x) * (&start.y + &end.y);
            }
            PathPiece::Arc { .. } => return Err(GeometryError::ArcNotIntegrable),
        }
    }
    Ok(total)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GeometryError {
    EmptyPath,
    DisconnectedPieces { index: usize },
    DegenerateSegment,
    InvalidArc,
    NotClosed,
    PointOnPath { piece: usize },
    ArcNotIntegrable,
    LatticeViolation(LatticeViolation),
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::EmptyPath => write!(f, "path has no pieces"),
            GeometryError::DisconnectedPieces { index } => {
                write!(f, "piece {} does not end where the next piece starts", index)
            }
            GeometryError::DegenerateSegment => write!(f, "segment start equals end"),
            GeometryError::InvalidArc => {
                write!(f, "arc endpoints do not lie on the stated circle")
            }
            GeometryError::NotClosed => write!(f, "operation requires a closed path"),
            GeometryError::PointOnPath { piece } => {
                write!(f, "query point lies on path piece {}", piece)
            }
            GeometryError::ArcNotIntegrable => {
                write!(f, "path integral is only defined over polylines")
            }
            GeometryError::LatticeViolation(v) => write!(f, "{}", v),
        }
    }
}

impl std::error::Error for GeometryError {}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> PlanarPoint {
        PlanarPoint::of(xn, xd, yn, yd)
    }

    #[test]
    fn segment_endpoint_on_lattice_is_a_violation() {
        let s = PathPiece::segment(pt(0, 1, 0, 1), pt(1, 12, 0, 1)).unwrap();
        let pts = s.lattice_points();
        assert_eq!(pts, vec![(BigInt::from(0), BigInt::from(0))]);
        let path = PlanarPath::open(vec![s]).unwrap();
        match verify_lattice_avoidance(&path) {
            Err(GeometryError::LatticeViolation(v)) => {
                assert_eq!(v.piece, 0);
                assert_eq!(v.point, (BigInt::from(0), BigInt::from(0)));
            }
            other => panic!("expected violation, got {:?}", other),
        }
    }

    #[test]
    fn lift_segment_avoids_the_lattice() {
        // brute-force oracle over the bounding box, then the fast column walk
        let a = pt(1, 12, 0, 1);
        let b = pt(-19, 12, -2, 1);
        let s = PathPiece::segment(a.clone(), b.clone()).unwrap();
        for x in -2..=1i64 {
            for y in -2..=0i64 {
                let p = PlanarPoint::new(rat_int(x), rat_int(y));
                let d = b.sub(&a);
                let w = p.sub(&a);
                let collinear = cross(&d, &w).is_zero();
                let t = dot(&w, &d);
                let between = !t.is_negative() && t <= d.norm_squared();
                assert!(!(collinear && between), "oracle: lattice point on segment");
            }
        }
        assert!(s.lattice_points().is_empty());
        let path = PlanarPath::open(vec![s]).unwrap();
        assert!(verify_lattice_avoidance(&path).is_ok());
    }

    #[test]
    fn circle_through_lattice_point_is_a_violation() {
        // circle of squared radius 1/2 about (1/2, 1/2) passes through all
        // four corners of the unit square
        let circle = PathPiece::full_circle(
            pt(1, 2, 1, 2),
            PlanarPoint::new(rat_int(0), rat_int(0)),
            Orientation::Ccw,
        )
        .unwrap();
        let mut pts = circle.lattice_points();
        pts.sort();
        assert_eq!(pts.len(), 4);
        assert_eq!(pts[0], (BigInt::from(0), BigInt::from(0)));
        let path = PlanarPath::closed(vec![circle]).unwrap();
        assert!(matches!(
            verify_lattice_avoidance(&path),
            Err(GeometryError::LatticeViolation(_))
        ));
    }

    #[test]
    fn quarter_arc_span_membership() {
        // cw quarter circle from (0,1) to (1,0) about the origin
        let arc = PathPiece::arc(
            PlanarPoint::origin(),
            rat_int(1),
            pt(0, 1, 1, 1),
            pt(1, 1, 0, 1),
            Orientation::Cw,
        )
        .unwrap();
        assert!(arc.contains_point(&pt(0, 1, 1, 1)));
        assert!(arc.contains_point(&pt(1, 1, 0, 1)));
        assert!(arc.contains_point(&pt(3, 5, 4, 5)));
        assert!(!arc.contains_point(&pt(-3, 5, 4, 5)));
        assert!(!arc.contains_point(&pt(3, 5, -4, 5)));
        assert!(!arc.contains_point(&pt(1, 2, 1, 2)));
    }

    #[test]
    fn integral_vanishes_when_n_is_zero() {
        let path = PlanarPath::open(vec![
            PathPiece::segment(pt(0, 1, 0, 1), pt(1, 1, 0, 1)).unwrap(),
            PathPiece::segment(pt(1, 1, 0, 1), pt(5, 1, 0, 1)).unwrap(),
        ])
        .unwrap();
        assert_eq!(path_integral_two_n_mprime(&path).unwrap(), rat_int(0));
    }

    #[test]
    fn integral_of_the_two_step_polyline() {
        let path = PlanarPath::open(vec![
            PathPiece::segment(pt(0, 1, 0, 1), pt(1, 12, 0, 1)).unwrap(),
            PathPiece::segment(pt(1, 12, 0, 1), pt(0, 1, -1, 10)).unwrap(),
        ])
        .unwrap();
        assert_eq!(path_integral_two_n_mprime(&path).unwrap(), rat(1, 120));
    }

    #[test]
    fn integral_single_segment_closed_form() {
        let path =
            PlanarPath::open(vec![PathPiece::segment(pt(0, 1, 0, 1), pt(1, 1, 2, 1)).unwrap()])
                .unwrap();
        // (1 - 0) * (0 + 2)
        assert_eq!(path_integral_two_n_mprime(&path).unwrap(), rat_int(2));
    }

    #[test]
    fn integral_rejects_arcs() {
        let path = PlanarPath::closed(vec![PathPiece::full_circle(
            PlanarPoint::origin(),
            pt(1, 3, 0, 1),
            Orientation::Ccw,
        )
        .unwrap()])
        .unwrap();
        assert!(matches!(
            path_integral_two_n_mprime(&path),
            Err(GeometryError::ArcNotIntegrable)
        ));
    }

    #[test]
    fn integral_additive_and_negates_under_reversal() {
        let a = pt(0, 1, 1, 3);
        let b = pt(2, 5, -1, 2);
        let c = pt(3, 2, 7, 4);
        let first = PlanarPath::open(vec![PathPiece::segment(a.clone(), b.clone()).unwrap()]).unwrap();
        let second = PlanarPath::open(vec![PathPiece::segment(b.clone(), c.clone()).unwrap()]).unwrap();
        let both = PlanarPath::open(vec![
            PathPiece::segment(a, b.clone()).unwrap(),
            PathPiece::segment(b, c).unwrap(),
        ])
        .unwrap();
        let i1 = path_integral_two_n_mprime(&first).unwrap();
        let i2 = path_integral_two_n_mprime(&second).unwrap();
        let i12 = path_integral_two_n_mprime(&both).unwrap();
        assert_eq!(&i1 + &i2, i12.clone());
        assert_eq!(
            path_integral_two_n_mprime(&both.reversed()).unwrap(),
            -i12
        );
    }

    #[test]
    fn sqrt_sign_helper() {
        // 3 - 2*sqrt(2) > 0, 2 - 2*sqrt(2) < 0, 2 - sqrt(4) = 0
        assert_eq!(sign_plus_sqrt(&rat_int(3), &rat_int(-2), &rat_int(2)), 1);
        assert_eq!(sign_plus_sqrt(&rat_int(2), &rat_int(-2), &rat_int(2)), -1);
        assert_eq!(sign_plus_sqrt(&rat_int(2), &rat_int(-1), &rat_int(4)), 0);
        assert_eq!(sign_plus_sqrt(&rat_int(0), &rat_int(5), &rat(1, 7)), 1);
        assert_eq!(sign_plus_sqrt(&rat_int(0), &rat_int(0), &rat_int(3)), 0);
    }

    #[test]
    fn rational_sqrt_helper() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(1, 3)), None);
        assert_eq!(rational_sqrt(&rat_int(0)), Some(rat_int(0)));
    }
}
