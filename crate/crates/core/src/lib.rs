//! Exact arithmetic shared by the lgcheck crates.
//!
//! Everything here works over the integers or the rationals with no
//! floating point anywhere: [`rational`] holds the `BigRational` helpers and
//! the `p/q` wire format, [`linalg`] the fraction-free elimination, exact
//! solver, and integer Hermite normal form used by the lattice and form
//! computations.

pub mod linalg;
pub mod rational;

pub use linalg::{det_i64, hermite_normal_form, rank, rank_int, solve_unique, LinalgError};
pub use rational::{binomial, factorial, int, rat, to_i64, to_ratio_string, Rational};
