//! Shared fixtures for the benchmark targets.

use dehnsurg_core::geometry::{rat, PathPiece, PlanarPath, PlanarPoint};

/// A closed star-shaped polygon with `n` vertices and no lattice points on
/// its edges, centered near the origin.
pub fn star_polygon(n: u64) -> PlanarPath {
    let vertices: Vec<PlanarPoint> = (0..n)
        .map(|i| {
            // spiral of rational points with odd denominators, radius
            // alternating to make the edges cross many lattice columns
            let r = 5 + (i % 7) as i64;
            let xn = r * (if i % 2 == 0 { 3 } else { -2 }) + i as i64;
            let yn = r * (if i % 3 == 0 { -4 } else { 5 }) - 2 * (i as i64 % 11);
            PlanarPoint::new(rat(2 * xn + 1, 7), rat(2 * yn + 1, 9))
        })
        .collect();
    let n = vertices.len();
    let pieces: Vec<PathPiece> = (0..n)
        .map(|i| {
            PathPiece::segment(vertices[i].clone(), vertices[(i + 1) % n].clone())
                .expect("consecutive vertices distinct")
        })
        .collect();
    PlanarPath::closed(pieces).expect("star polygon closes")
}

/// `star_polygon(n)` nudged off the integer lattice, for linking benches.
pub fn lattice_clean_star(n: u64) -> PlanarPath {
    let mut path = star_polygon(n);
    for _ in 0..64 {
        if path.lattice_violations().is_empty() {
            return path;
        }
        path = path.translated(&rat(1, 1009), &rat(1, 2003));
    }
    panic!("could not nudge the star polygon off the lattice");
}
