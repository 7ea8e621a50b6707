//! Exact arithmetic for the Robinson–Schensted–Knuth correspondence viewed
//! as a linear operator on the coordinate ring of matrices.
//!
//! A nonnegative integer matrix is read as the exponent matrix of a
//! monomial; RSK sends that monomial to a product of minors encoded by a
//! pair of semistandard Young tableaux. Restricted to the span of monomials
//! with fixed row and column margins this is a square integer matrix, and
//! the crate computes those matrices together with their block structure,
//! determinants, traces, characteristic and minimal polynomials, and a
//! Dynkin-type diagonalizability classification, all in exact arithmetic.
//!
//! # Convention
//!
//! The insertion convention here associates a matrix to the tableau pair
//! `(P, Q)` that Fulton's *Young Tableaux* and Stanley's *Enumerative
//! Combinatorics II* would call `(Q, P)`. Biwords are read off a matrix
//! down the columns, left to right. Keep this in mind when comparing
//! against other tableau libraries.

pub mod analysis;
pub mod bitableau;
pub mod contingency;
pub mod error;
pub mod linalg;
pub mod operator;
pub mod tableaux;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};

/// Arbitrary-precision integer scalar used throughout.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar (inverses, Krylov sequences, Sturm chains).
pub type Rat = num_rational::BigRational;

pub type IntMatrix = linalg::Matrix<Int>;
pub type IntPoly = linalg::Poly<Int>;
pub type RatMatrix = linalg::Matrix<Rat>;
pub type RatPoly = linalg::Poly<Rat>;

/// Default cap on the number of contingency tables a single weight space
/// may enumerate. Desk-scale computations stay far below this.
pub const DEFAULT_TABLE_CAP: usize = 2_000_000;

/// Default cap on the degree of exhaustive permutation sweeps.
pub const DEFAULT_PERM_SWEEP_LIMIT: u32 = 11;
