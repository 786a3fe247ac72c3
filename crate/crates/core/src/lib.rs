//! Exact symbolic toolkit for divisors that are homogeneous with respect to
//! a rational weight vector.
//!
//! The crate is organised bottom-up:
//!
//! * [`rational`], [`poly`] — exact rational arithmetic and sparse
//!   multivariate polynomials.
//! * [`weights`] — weight vectors, weighted orders and quasi-homogeneous
//!   decompositions.
//! * [`groebner`] — Gröbner bases for submodules of free modules, together
//!   with syzygies and lifts recovered from tagged reductions.
//! * [`weyl`] — polynomial vector fields and differential operators in
//!   normal order, including their action on powers of `1/f`.
//! * [`logarithmic`] — derivations tangent to a divisor, determinant
//!   certificates of freeness, and adapted bases built around an Euler field.
//! * [`spencer`] — the complexes of free modules attached to an adapted
//!   basis, their duals, and constructive vanishing witnesses.
//! * [`sample`] — seeded random generators used by property checks.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! no floating point is used anywhere.

pub mod groebner;
pub mod logarithmic;
pub mod poly;
pub mod rational;
pub mod sample;
pub mod spencer;
pub mod weights;
pub mod weyl;
