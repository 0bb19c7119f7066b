//! Combinatorics of SU(2) representation varieties of torus knot
//! complements: Alexander polynomials, jumping points, bifurcation points,
//! and lifts of the arcs of irreducible representations to the rational
//! plane under the surgery branched cover.

use crate::geometry::{rat, rat_int, PathPiece, PlanarPoint, Rational};
use num::integer::gcd;
use num::traits::Zero;
use num::Signed;
use std::fmt;

/// The (p,q) torus knot, p and q coprime and at least 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TorusKnot {
    p: u32,
    q: u32,
}

impl TorusKnot {
    pub fn new(p: u32, q: u32) -> Result<Self, RepVarError> {
        if p < 2 || q < 2 || gcd(p, q) != 1 {
            return Err(RepVarError::InvalidKnot { p, q });
        }
        Ok(TorusKnot { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }
}

/// Integer polynomial in ascending degree order with nonzero leading and
/// trailing coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlexanderPolynomial {
    coeffs: Vec<i64>,
}

impl AlexanderPolynomial {
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + rat_int(*c);
        }
        acc
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let mag = c.unsigned_abs();
            match deg {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if mag != 1 {
                        write!(f, "{}", mag)?;
                    }
                    if deg == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", deg)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `t^n - 1` as a coefficient vector.
fn cyclo_like(n: usize) -> Vec<i64> {
    let mut v = vec![0i64; n + 1];
    v[0] = -1;
    v[n] = 1;
    v
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials; `None` if the remainder is
/// nonzero or a division of leading coefficients fails.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let dl = *den.last()?;
    if dl == 0 {
        return None;
    }
    let mut rem: Vec<i64> = num.to_vec();
    if rem.len() < den.len() {
        return None;
    }
    let qlen = rem.len() - den.len() + 1;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let lead = rem[k + den.len() - 1];
        if lead % dl != 0 {
            return None;
        }
        let f = lead / dl;
        quot[k] = f;
        if f != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= f * d;
            }
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return None;
    }
    Some(quot)
}

/// Alexander polynomial of the (p,q) torus knot:
/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), computed by exact integer
/// polynomial division with zero remainder.
pub fn alexander_polynomial(knot: &TorusKnot) -> AlexanderPolynomial {
    let p = knot.p as usize;
    let q = knot.q as usize;
    let num = poly_mul(&cyclo_like(p * q), &cyclo_like(1));
    let den = poly_mul(&cyclo_like(p), &cyclo_like(q));
    let coeffs = poly_div_exact(&num, &den)
        .expect("torus knot Alexander division is exact for coprime p, q");
    debug_assert_eq!(coeffs.len() - 1, (p - 1) * (q - 1));
    AlexanderPolynomial { coeffs }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialPointKind {
    Jumping,
    Bifurcation,
}

/// A sorted set of special points in the open interval (0, 1/2)
/// parameterizing reducible representations by meridional holonomy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecialPointSet {
    pub kind: SpecialPointKind,
    points: Vec<Rational>,
}

impl SpecialPointSet {
    fn new(kind: SpecialPointKind, mut points: Vec<Rational>) -> Self {
        points.sort();
        points.dedup();
        debug_assert!(points.iter().all(|s| s.is_positive() && *s < rat(1, 2)));
        SpecialPointSet { kind, points }
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, s: &Rational) -> bool {
        self.points.binary_search(s).is_ok()
    }

    /// Number of points in the open interval (0, hi).
    pub fn count_below(&self, hi: &Rational) -> usize {
        self.points.iter().take_while(|s| *s < hi).count()
    }
}

/// Jumping points of the (p,q) torus knot: the s in (0, 1/2) whose
/// holonomy e^{2πis} is a pq-th root of unity but neither a p-th nor a
/// q-th root, i.e. s = a/(pq) with p ∤ a and q ∤ a. For p = 2 this reduces
/// to { (2l-1)/(2q) : 1 <= l <= (q-1)/2 }.
pub fn jumping_points(knot: &TorusKnot) -> SpecialPointSet {
    let p = knot.p as i64;
    let q = knot.q as i64;
    let pq = p * q;
    let mut points = Vec::new();
    for a in 1..pq {
        if 2 * a >= pq {
            break;
        }
        if a % p != 0 && a % q != 0 {
            points.push(rat(a, pq));
        }
    }
    SpecialPointSet::new(SpecialPointKind::Jumping, points)
}

/// Bifurcation points of the (2,q) torus knot:
/// { (2l-1)/(4q), 1/2 - (2l-1)/(4q) : 1 <= l <= (q-1)/2 }.
pub fn bifurcation_points(knot: &TorusKnot) -> Result<SpecialPointSet, RepVarError> {
    if knot.p != 2 {
        return Err(RepVarError::BifurcationRequiresP2 { p: knot.p });
    }
    let q = knot.q as i64;
    let mut points = Vec::new();
    for ell in 1..=(q - 1) / 2 {
        let s = rat(2 * ell - 1, 4 * q);
        points.push(rat(1, 2) - &s);
        points.push(s);
    }
    Ok(SpecialPointSet::new(SpecialPointKind::Bifurcation, points))
}

/// The lift of the l-th arc of irreducible representations to the plane,
/// canonicalized to start on the horizontal axis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArcLift {
    pub ell: u32,
    pub start: PlanarPoint,
    pub end: PlanarPoint,
}

impl ArcLift {
    /// The point (1-t)·start + t·end.
    pub fn at(&self, t: &Rational) -> PlanarPoint {
        let one_minus = rat_int(1) - t;
        PlanarPoint::new(
            &one_minus * &self.start.x + t * &self.end.x,
            &one_minus * &self.start.y + t * &self.end.y,
        )
    }
}

/// The shear (m, n) ↦ (m + k·n, n) relating the surgery framings.
pub fn shear(point: &PlanarPoint, k: i64) -> PlanarPoint {
    PlanarPoint::new(&point.x + rat_int(k) * &point.y, point.y.clone())
}

fn check_q_ell(q: u32, ell: u32) -> Result<(), RepVarError> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(RepVarError::InvalidQ { q });
    }
    if ell < 1 || ell > (q - 1) / 2 {
        return Err(RepVarError::EllOutOfRange { ell, q });
    }
    Ok(())
}

/// The unsheared lift of the l-th arc for the (2,q) torus knot: it starts at
/// ((2l-1)/(4q), 0), ends at (1/2 - (2l-1)/(4q), 2l-q-1) and has slope -2q.
pub fn arc_lift_base(q: u32, ell: u32) -> Result<ArcLift, RepVarError> {
    check_q_ell(q, ell)?;
    let qi = q as i64;
    let li = ell as i64;
    let start = PlanarPoint::new(rat(2 * li - 1, 4 * qi), rat_int(0));
    let end = PlanarPoint::new(
        rat(1, 2) - rat(2 * li - 1, 4 * qi),
        rat_int(2 * li - qi - 1),
    );
    Ok(ArcLift { ell, start, end })
}

/// The lift of the l-th arc under the framing of 1/k surgery: the base lift
/// composed with the shear by k. The open segment must avoid the integer
/// lattice; a hit is reported as an internal error.
pub fn arc_lift(q: u32, k: i64, ell: u32) -> Result<ArcLift, RepVarError> {
    if k == 0 {
        return Err(RepVarError::ZeroSurgeryCoefficient);
    }
    let base = arc_lift_base(q, ell)?;
    let lift = ArcLift {
        ell,
        start: base.start,
        end: shear(&base.end, k),
    };
    let seg = PathPiece::segment(lift.start.clone(), lift.end.clone())
        .expect("lift endpoints are distinct");
    if let Some(point) = seg.lattice_points().into_iter().next() {
        return Err(RepVarError::LatticeHit {
            q,
            k,
            ell,
            point: (point.0.to_string(), point.1.to_string()),
        });
    }
    Ok(lift)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepVarError {
    InvalidKnot { p: u32, q: u32 },
    InvalidQ { q: u32 },
    BifurcationRequiresP2 { p: u32 },
    EllOutOfRange { ell: u32, q: u32 },
    ZeroSurgeryCoefficient,
    LatticeHit { q: u32, k: i64, ell: u32, point: (String, String) },
}

impl fmt::Display for RepVarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepVarError::InvalidKnot { p, q } => {
                write!(f, "({}, {}) is not a torus knot: need coprime p, q >= 2", p, q)
            }
            RepVarError::InvalidQ { q } => write!(f, "q must be odd and >= 3, got {}", q),
            RepVarError::BifurcationRequiresP2 { p } => {
                write!(f, "bifurcation points are only available for p = 2, got p = {}", p)
            }
            RepVarError::EllOutOfRange { ell, q } => {
                write!(f, "arc index {} out of range 1..=({}-1)/2", ell, q)
            }
            RepVarError::ZeroSurgeryCoefficient => write!(f, "surgery coefficient k must be nonzero"),
            RepVarError::LatticeHit { q, k, ell, point } => write!(
                f,
                "arc lift (q={}, k={}, l={}) passes through lattice point ({}, {})",
                q, k, ell, point.0, point.1
            ),
        }
    }
}

impl std::error::Error for RepVarError {}
