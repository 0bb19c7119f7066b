//! Lattice linking numbers: the algebraic count of integer lattice points
//! enclosed by a closed loop, normalized so a small counterclockwise circle
//! around a single lattice point links it once.

use super::winding::winding_number_off_path;
use super::{
    ceil_sqrt_int, verify_lattice_avoidance, GeometryError, PathPiece, PlanarPath, PlanarPoint,
    Rational,
};
use num::bigint::BigInt;

/// Smallest integer box `[x0, x1] x [y0, y1]` containing every control point
/// of the path (segment endpoints; arc endpoints and center ± an integer
/// radius bound). Winding numbers vanish outside it.
pub fn integer_bounding_box(path: &PlanarPath) -> (BigInt, BigInt, BigInt, BigInt) {
    let mut xs: Vec<Rational> = Vec::new();
    let mut ys: Vec<Rational> = Vec::new();
    for piece in path.pieces() {
        match piece {
            PathPiece::Segment { start, end } => {
                xs.push(start.x.clone());
                xs.push(end.x.clone());
                ys.push(start.y.clone());
                ys.push(end.y.clone());
            }
            PathPiece::Arc {
                center,
                radius_squared,
                start,
                end,
                ..
            } => {
                let r = Rational::from(ceil_sqrt_int(radius_squared));
                xs.push(&center.x - &r);
                xs.push(&center.x + &r);
                ys.push(&center.y - &r);
                ys.push(&center.y + &r);
                xs.push(start.x.clone());
                xs.push(end.x.clone());
                ys.push(start.y.clone());
                ys.push(end.y.clone());
            }
        }
    }
    let x0 = xs.iter().min().unwrap().floor().to_integer();
    let x1 = xs.iter().max().unwrap().ceil().to_integer();
    let y0 = ys.iter().min().unwrap().floor().to_integer();
    let y1 = ys.iter().max().unwrap().ceil().to_integer();
    (x0, x1, y0, y1)
}

/// Sum of winding numbers of the closed, lattice-avoiding loop around every
/// integer lattice point.
pub fn lattice_linking(path: &PlanarPath) -> Result<i64, GeometryError> {
    if !path.is_closed() {
        return Err(GeometryError::NotClosed);
    }
    verify_lattice_avoidance(path)?;
    let (x0, x1, y0, y1) = integer_bounding_box(path);
    let mut total = 0i64;
    let mut x = x0;
    while x <= x1 {
        let mut y = y0.clone();
        while y <= y1 {
            let p = PlanarPoint::new(Rational::from(x.clone()), Rational::from(y.clone()));
            // avoidance holds, so no lattice point can sit on the path
            total += winding_number_off_path(path, &p);
            y += 1;
        }
        x += 1;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int, Orientation};
    use super::*;

    #[test]
    fn small_ccw_circle_links_once() {
        let circle = PlanarPath::closed(vec![PathPiece::full_circle(
            PlanarPoint::origin(),
            PlanarPoint::new(rat(1, 3), rat_int(0)),
            Orientation::Ccw,
        )
        .unwrap()])
        .unwrap();
        assert_eq!(lattice_linking(&circle).unwrap(), 1);
        assert_eq!(lattice_linking(&circle.reversed()).unwrap(), -1);
    }

    #[test]
    fn loop_enclosing_no_lattice_points() {
        let a = PlanarPoint::of(1, 4, 1, 4);
        let b = PlanarPoint::of(3, 4, 1, 4);
        let c = PlanarPoint::of(1, 2, 3, 4);
        let tri = PlanarPath::closed(vec![
            PathPiece::segment(a.clone(), b.clone()).unwrap(),
            PathPiece::segment(b, c.clone()).unwrap(),
            PathPiece::segment(c, a).unwrap(),
        ])
        .unwrap();
        assert_eq!(lattice_linking(&tri).unwrap(), 0);
    }

    #[test]
    fn linking_counts_multiplicity() {
        // ccw square around the four lattice points (0,0),(1,0),(0,1),(1,1)
        let v = [
            PlanarPoint::of(-1, 3, -1, 3),
            PlanarPoint::of(4, 3, -1, 3),
            PlanarPoint::of(4, 3, 4, 3),
            PlanarPoint::of(-1, 3, 4, 3),
        ];
        let sq = PlanarPath::closed(
            (0..4)
                .map(|i| PathPiece::segment(v[i].clone(), v[(i + 1) % 4].clone()).unwrap())
                .collect(),
        )
        .unwrap();
        assert_eq!(lattice_linking(&sq).unwrap(), 4);
    }

    #[test]
    fn linking_invariances() {
        let v = [
            PlanarPoint::of(-1, 3, -1, 2),
            PlanarPoint::of(7, 3, -1, 5),
            PlanarPoint::of(5, 2, 5, 3),
            PlanarPoint::of(-2, 5, 7, 4),
        ];
        let quad = PlanarPath::closed(
            (0..4)
                .map(|i| PathPiece::segment(v[i].clone(), v[(i + 1) % 4].clone()).unwrap())
                .collect(),
        )
        .unwrap();
        let lk = lattice_linking(&quad).unwrap();
        let shifted = quad.translated(&rat_int(3), &rat_int(-7));
        assert_eq!(lattice_linking(&shifted).unwrap(), lk);
        let reflected = quad.point_reflected(&PlanarPoint::new(rat_int(2), rat_int(-1)));
        assert_eq!(lattice_linking(&reflected).unwrap(), lk);
        assert_eq!(lattice_linking(&quad.reversed()).unwrap(), -lk);
    }

    #[test]
    fn linking_rejects_lattice_touching_loops() {
        let circle = PlanarPath::closed(vec![PathPiece::full_circle(
            PlanarPoint::of(1, 2, 1, 2),
            PlanarPoint::origin(),
            Orientation::Ccw,
        )
        .unwrap()])
        .unwrap();
        assert!(matches!(
            lattice_linking(&circle),
            Err(GeometryError::LatticeViolation(_))
        ));
    }
}
