//! The geometric route to the invariants of 1/k surgery on a (2,q) torus
//! knot.
//!
//! For each flat connection the engine builds the boundary path (m_t, n_t)
//! in the rational plane: a horizontal run from the origin followed by a
//! piece of the lifted arc of irreducible representations, stopping where
//! the first coordinate is an integer. From that path it extracts
//!
//! * `a`: the integer first coordinate of the endpoint,
//! * `b`: the floor of the second coordinate,
//! * `c`: minus twice the lattice linking number of the closing loop built
//!   from a small quarter circle at the origin, the path itself, a chain of
//!   right-hand semicircles of radius 1/2, and two straight returns,
//!
//! and assembles the spectral flow `sf = sf_Z + 2(a-b) - 2`, the
//! Chern-Simons invariant `cs = -c + 2∫ n m' dt` and the rho invariant.

use crate::geometry::{
    lattice_linking, path_integral_two_n_mprime, rat, rat_int, GeometryError, LatticeViolation,
    Orientation, PathPiece, PlanarPath, PlanarPoint, Rational,
};
use crate::repvar::{self, RepVarError, TorusKnot};
use num::traits::Zero;
use num::Signed;
use std::fmt;

/// 1/k surgery on the (2,q) torus knot. `k = 0` leaves the three-sphere.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SurgeryProblem {
    q: u32,
    k: i64,
}

impl SurgeryProblem {
    pub fn new(q: u32, k: i64) -> Result<Self, SurgeryError> {
        if q < 3 || q.is_multiple_of(2) {
            return Err(SurgeryError::InvalidQ { q });
        }
        Ok(SurgeryProblem { q, k })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn knot(&self) -> TorusKnot {
        TorusKnot::new(2, self.q).expect("q is odd and >= 3")
    }

    /// Radius of the small quarter circle closing the surgery loop at the
    /// origin: 1/(8q), strictly below the smallest jumping point 1/(2q) and
    /// below the first vertex (2l-1)/(4q) of every flat path.
    pub fn delta(&self) -> Rational {
        rat(1, 8 * self.q as i64)
    }
}

/// Index (l, i) of a flat connection together with the arc parameter t_i at
/// which the lifted arc meets an integer vertical line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlatConnectionLabel {
    pub ell: u32,
    pub i: u32,
    pub t: Rational,
}

/// Exact invariants of one flat connection, as produced by the geometric
/// engine.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantRecord {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    /// Spectral flow along the knot complement.
    pub sf_knot_complement: i64,
    /// The exact value of 2 ∫ n m' dt along the flat path.
    pub integral_term: Rational,
    /// Total spectral flow: sf_knot_complement + 2(a - b) - 2.
    pub sf: i64,
    /// Chern-Simons invariant: -c + integral_term.
    pub cs: Rational,
    /// Rho invariant.
    pub rho: Rational,
    /// Dimension of the kernel at the endpoint; zero for every flat
    /// connection arising from a (2,q) surgery.
    pub kernel_dim: u32,
}

fn t_parameter(q: i64, k: i64, ell: i64, i: i64) -> Rational {
    if k > 0 {
        rat(4 * q * (1 - i) - 2 * ell + 1, (4 * q * k - 2) * (2 * ell - q - 1))
    } else {
        let ka = -k;
        rat(4 * q * i - 2 * ell + 1, (q - 2 * ell + 1) * (4 * q * ka + 2))
    }
}

/// All flat connection labels of the surgery, ordered by (l, i). Empty for
/// k = 0.
pub fn enumerate_flat_connections(prob: &SurgeryProblem) -> Vec<FlatConnectionLabel> {
    let mut labels = Vec::new();
    if prob.k == 0 {
        return labels;
    }
    let q = prob.q as i64;
    let ka = prob.k.abs();
    for ell in 1..=(q - 1) / 2 {
        for i in 1..=ka * (q + 1 - 2 * ell) {
            let t = t_parameter(q, prob.k, ell, i);
            debug_assert!(t.is_positive() && t < rat_int(1));
            labels.push(FlatConnectionLabel {
                ell: ell as u32,
                i: i as u32,
                t,
            });
        }
    }
    labels
}

fn to_i64(r: &Rational) -> Result<i64, SurgeryError> {
    debug_assert!(r.is_integer());
    i64::try_from(r.to_integer()).map_err(|_| SurgeryError::Overflow)
}

/// The two-segment boundary path of the labelled flat connection: from the
/// origin along the horizontal axis to the arc start, then along the lifted
/// arc to its parameter-t point. The origin endpoint is the trivial
/// connection; every other point of the path avoids the integer lattice.
pub fn build_flat_path(
    prob: &SurgeryProblem,
    label: &FlatConnectionLabel,
) -> Result<PlanarPath, SurgeryError> {
    if prob.k == 0 {
        return Err(SurgeryError::ZeroSurgeryCoefficient);
    }
    let lift = repvar::arc_lift(prob.q, prob.k, label.ell)?;
    let endpoint = lift.at(&label.t);
    let path = PlanarPath::open(vec![
        PathPiece::segment(PlanarPoint::origin(), lift.start.clone())?,
        PathPiece::segment(lift.start, endpoint.clone())?,
    ])?;
    // the endpoint must sit on the expected integer vertical line
    let expected = if prob.k > 0 {
        1 - label.i as i64
    } else {
        label.i as i64
    };
    if !endpoint.x.is_integer() || to_i64(&endpoint.x)? != expected {
        return Err(SurgeryError::MalformedEndpoint);
    }
    // lattice avoidance for t > 0: only the origin start point is exempt
    for v in path.lattice_violations() {
        let at_origin =
            v.piece == 0 && v.point.0.is_zero() && v.point.1.is_zero();
        if !at_origin {
            return Err(SurgeryError::InternalLattice(v));
        }
    }
    Ok(path)
}

/// The closing loop: a clockwise quarter circle of radius delta at the
/// origin, the flat path from (delta, 0), |b| right-hand semicircles of
/// radius 1/2 from the endpoint down (b > 0) or up (b < 0) to the integer
/// translate, then horizontal and vertical returns to (0, delta).
///
/// `path` must start at the origin with a horizontal first segment longer
/// than delta, `a` must equal the endpoint's first coordinate and `b` the
/// floor of its second.
pub fn build_surgery_loop(
    path: &PlanarPath,
    a: i64,
    b: i64,
    delta: &Rational,
) -> Result<PlanarPath, SurgeryError> {
    if path.is_closed() {
        return Err(SurgeryError::FlatPathMustBeOpen);
    }
    let first = &path.pieces()[0];
    let (first_start, first_end) = match first {
        PathPiece::Segment { start, end } => (start, end),
        PathPiece::Arc { .. } => return Err(SurgeryError::FlatPathMustBePolyline),
    };
    if *first_start != PlanarPoint::origin() || !first_end.y.is_zero() {
        return Err(SurgeryError::FlatPathMustStartHorizontally);
    }
    if !delta.is_positive() || delta >= &first_end.x {
        return Err(SurgeryError::BadDelta);
    }
    let end = path.end().clone();
    if !end.x.is_integer() || to_i64(&end.x)? != a || end.y.is_integer() || end.y.floor() != rat_int(b)
    {
        return Err(SurgeryError::AbMismatch);
    }

    let origin = PlanarPoint::origin();
    let top = PlanarPoint::new(Rational::zero(), delta.clone());
    let right = PlanarPoint::new(delta.clone(), Rational::zero());
    let mut pieces: Vec<PathPiece> = Vec::new();
    // (i) small quarter circle from (0, delta) to (delta, 0)
    pieces.push(PathPiece::arc(
        origin,
        delta * delta,
        top.clone(),
        right.clone(),
        Orientation::Cw,
    )?);
    // (ii) the flat path, entering at (delta, 0)
    pieces.push(PathPiece::segment(right, first_end.clone())?);
    for piece in &path.pieces()[1..] {
        pieces.push(piece.clone());
    }
    // (iii) |b| right-hand semicircles from (a, n1) to (a, n1 - b)
    let eps = b.signum();
    let half = rat(1, 2);
    for j in 1..=b.abs() {
        let start_y = &end.y - rat_int(eps * (j - 1));
        let end_y = &end.y - rat_int(eps * j);
        let center_y = (&start_y + &end_y) / rat_int(2);
        let orientation = if b > 0 { Orientation::Cw } else { Orientation::Ccw };
        pieces.push(PathPiece::arc(
            PlanarPoint::new(end.x.clone(), center_y),
            &half * &half,
            PlanarPoint::new(end.x.clone(), start_y),
            PlanarPoint::new(end.x.clone(), end_y),
            orientation,
        )?);
    }
    // (iv) horizontal return to the vertical axis
    let level = &end.y - rat_int(b);
    if !end.x.is_zero() {
        pieces.push(PathPiece::segment(
            PlanarPoint::new(end.x.clone(), level.clone()),
            PlanarPoint::new(Rational::zero(), level.clone()),
        )?);
    }
    // (v) short vertical segment back to (0, delta)
    if &level != delta {
        pieces.push(PathPiece::segment(
            PlanarPoint::new(Rational::zero(), level),
            top,
        )?);
    }
    let loop_ = PlanarPath::closed(pieces)?;
    if let Some(v) = loop_.lattice_violations().into_iter().next() {
        return Err(SurgeryError::LoopLattice(v));
    }
    Ok(loop_)
}

/// The integers (a, b, c) of a flat path: endpoint coordinate, its floor,
/// and -2 times the lattice linking number of the closing loop.
pub fn abc_invariants(
    prob: &SurgeryProblem,
    path: &PlanarPath,
) -> Result<(i64, i64, i64), SurgeryError> {
    let end = path.end();
    if !end.x.is_integer() {
        return Err(SurgeryError::MalformedEndpoint);
    }
    if end.y.is_integer() {
        return Err(SurgeryError::MalformedEndpoint);
    }
    let a = to_i64(&end.x)?;
    let b = to_i64(&end.y.floor())?;
    let loop_ = build_surgery_loop(path, a, b, &prob.delta())?;
    let lk = lattice_linking(&loop_)?;
    Ok((a, b, -2 * lk))
}

/// Spectral flow along the knot complement: +2 for each jumping point the
/// horizontal run from the origin to the arc start crosses. The arc portion
/// contributes nothing.
pub fn knot_complement_spectral_flow(
    prob: &SurgeryProblem,
    label: &FlatConnectionLabel,
) -> Result<i64, SurgeryError> {
    let q = prob.q as i64;
    let ell = label.ell as i64;
    if ell < 1 || ell > (q - 1) / 2 {
        return Err(SurgeryError::LabelOutOfRange);
    }
    let jumping = repvar::jumping_points(&prob.knot());
    let arc_start = rat(2 * ell - 1, 4 * q);
    Ok(2 * jumping.count_below(&arc_start) as i64)
}

/// Full invariant record of one flat connection via the geometric route.
pub fn invariants(
    prob: &SurgeryProblem,
    label: &FlatConnectionLabel,
) -> Result<InvariantRecord, SurgeryError> {
    let path = build_flat_path(prob, label)?;
    let (a, b, c) = abc_invariants(prob, &path)?;
    let sf_z = knot_complement_spectral_flow(prob, label)?;
    let integral = path_integral_two_n_mprime(&path)?;
    let kernel_dim = 0u32;
    let sf = sf_z + 2 * (a - b) - 2;
    let cs = rat_int(-c) + &integral;
    let rho = rat_int(2 * sf_z + 4 * (a - b + c) - 2 - kernel_dim as i64)
        - rat_int(4) * &integral;
    debug_assert_eq!(
        rho,
        rat_int(2 * sf) - rat_int(4) * &cs + rat_int(2 - kernel_dim as i64)
    );
    Ok(InvariantRecord {
        a,
        b,
        c,
        sf_knot_complement: sf_z,
        integral_term: integral,
        sf,
        cs,
        rho,
        kernel_dim,
    })
}

/// Invariants of every flat connection of the surgery, ordered by (l, i).
pub fn all_invariants(
    prob: &SurgeryProblem,
) -> Result<Vec<(FlatConnectionLabel, InvariantRecord)>, SurgeryError> {
    enumerate_flat_connections(prob)
        .into_iter()
        .map(|label| invariants(prob, &label).map(|rec| (label, rec)))
        .collect()
}

#[derive(Clone, PartialEq, Debug)]
pub enum SurgeryError {
    InvalidQ { q: u32 },
    ZeroSurgeryCoefficient,
    LabelOutOfRange,
    MalformedEndpoint,
    FlatPathMustBeOpen,
    FlatPathMustBePolyline,
    FlatPathMustStartHorizontally,
    BadDelta,
    AbMismatch,
    Overflow,
    InternalLattice(LatticeViolation),
    LoopLattice(LatticeViolation),
    Geometry(GeometryError),
    RepVar(RepVarError),
}

impl From<GeometryError> for SurgeryError {
    fn from(e: GeometryError) -> Self {
        SurgeryError::Geometry(e)
    }
}

impl From<RepVarError> for SurgeryError {
    fn from(e: RepVarError) -> Self {
        SurgeryError::RepVar(e)
    }
}

impl fmt::Display for SurgeryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryError::InvalidQ { q } => write!(f, "q must be odd and >= 3, got {}", q),
            SurgeryError::ZeroSurgeryCoefficient => {
                write!(f, "k = 0 is the three-sphere: no flat connections to build")
            }
            SurgeryError::LabelOutOfRange => write!(f, "flat connection label out of range"),
            SurgeryError::MalformedEndpoint => {
                write!(f, "flat path must end on an integer vertical line, off the lattice")
            }
            SurgeryError::FlatPathMustBeOpen => write!(f, "flat path must be open"),
            SurgeryError::FlatPathMustBePolyline => write!(f, "flat path must be a polyline"),
            SurgeryError::FlatPathMustStartHorizontally => {
                write!(f, "flat path must start at the origin along the horizontal axis")
            }
            SurgeryError::BadDelta => {
                write!(f, "delta must be positive and smaller than the first vertex")
            }
            SurgeryError::AbMismatch => {
                write!(f, "a and b must match the path endpoint and its floor")
            }
            SurgeryError::Overflow => write!(f, "integer invariant exceeds machine range"),
            SurgeryError::InternalLattice(v) => {
                write!(f, "internal error: flat path hits the lattice: {}", v)
            }
            SurgeryError::LoopLattice(v) => {
                write!(f, "surgery loop touches the lattice: {}", v)
            }
            SurgeryError::Geometry(e) => write!(f, "{}", e),
            SurgeryError::RepVar(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for SurgeryError {}
