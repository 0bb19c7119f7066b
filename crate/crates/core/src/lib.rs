//! Exact-arithmetic invariants of homology spheres obtained by 1/k Dehn
//! surgery on (2,q) torus knots.
//!
//! The crate computes spectral flow, real-valued Chern-Simons invariants,
//! rho invariants and SU(3) Casson invariants along two independent routes
//! that must agree exactly:
//!
//! * [`surgery`] drives the geometric route: it builds the boundary path of
//!   each flat connection in the rational plane, extracts the integer
//!   invariants `a`, `b`, `c` from lattice winding numbers, and assembles
//!   the invariants from them.
//! * [`closed_form`] evaluates the explicit formulas for the same
//!   quantities, together with the SU(3) Casson invariant tables.
//!
//! Supporting modules: [`geometry`] (exact rational plane geometry),
//! [`gauge`] (the discrete gauge group of the solid torus) and [`repvar`]
//! (SU(2) representation varieties of torus knot complements).

pub mod closed_form;
pub mod gauge;
pub mod geometry;
pub mod repvar;
pub mod surgery;

pub use closed_form::{CassonRecord, InvariantTriple};
pub use geometry::{
    lattice_linking, path_integral_two_n_mprime, rat, rat_int, verify_lattice_avoidance,
    winding_number, Orientation, PathPiece, PlanarPath, PlanarPoint, Rational,
};
pub use gauge::{GaugeWord, GeneratorLetter};
pub use repvar::{AlexanderPolynomial, ArcLift, SpecialPointKind, SpecialPointSet, TorusKnot};
pub use surgery::{FlatConnectionLabel, InvariantRecord, SurgeryProblem};
