//! Exact Adams operations on the primitive K-theory of compact Lie groups.
//!
//! The crate computes the matrix of the Adams operation `psi^l` on the
//! primitive generators `d(rho)` of `K^*(G)` for `U(n)`, `SU(n)`, `Sp(n)`,
//! `Spin(2n+1)`, `Spin(2n)` and `G2`, together with an explicit rational
//! eigenbasis for `U(n)`. Every scalar is an exact rational; nothing is
//! ever rounded.
//!
//! Each closed-form matrix has a second, independent route:
//!
//! * [`counts`] computes the bounded-composition numbers `mu(n, l, k, p)` by
//!   an alternating binomial sum and by dynamic programming.
//! * [`ktheory`] evaluates the closed formulas and, separately, pulls the
//!   unitary formula back through the defining representation.
//! * [`symoracle`] rebuilds the unitary coefficients from torus weights and
//!   symmetric polynomials.
//! * [`eigen`] checks eigenvectors and characteristic polynomials.

pub mod counts;
pub mod eigen;
pub mod error;
pub mod exactmath;
pub mod ktheory;
pub mod symoracle;
pub mod verify;

pub use error::{Error, Result};
pub use exactmath::Rational;
pub use ktheory::{AdamsMatrix, BasisElement, Family, GroupSpec, KVector};
