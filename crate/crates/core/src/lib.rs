//! Exact computations on the moduli spaces `M_d` of one-dimensional sheaves on
//! the projective plane with Hilbert polynomial `dm + 1`.
//!
//! The crate is organized bottom-up:
//!
//! * [`exactmath`]: rationals, integer polynomials in `q`, rational functions.
//! * [`chow`]: truncated Chow rings of the plane and of (curve) × (plane).
//! * [`ktheory`]: Chern characters on the plane and the Euler pairings.
//! * [`walls`]: Bridgeland potential walls and reference wall systems.
//! * [`divisors`]: determinant line bundles, nef and effective cones, GRR degrees.
//! * [`betti`]: Poincaré polynomials: Hilbert schemes, Kronecker moduli, `M_6`.
//! * [`cli`]: the command-line front end.
//!
//! Everything is exact; floating point appears only when rendering SVG.

pub mod betti;
pub mod chow;
pub mod cli;
pub mod divisors;
mod error;
pub mod exactmath;
pub mod ktheory;
pub mod walls;

pub use error::{Error, Result};
pub use exactmath::{QPoly, QRational, Rational};
pub use ktheory::ChernP2;
