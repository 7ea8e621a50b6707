//! Exact linear algebra and univariate polynomial algebra.
//!
//! `Matrix` and `Poly` are generic over a [`Scalar`] ring; the algorithms
//! that need exact division or a field (Bareiss determinants, inverses,
//! Krylov minimal polynomials, Sturm chains) are implemented on the
//! concrete [`crate::Int`] / [`crate::Rat`] instantiations.

use std::fmt;

use num_traits::{NumAssign, Signed};

mod gf2;
mod matrix;
mod poly;

pub use matrix::Matrix;
pub use poly::Poly;

pub use matrix::{char_poly, is_diagonalizable};
pub use poly::{
    int_poly_gcd, irreducible_mod2, rational_root_constraint, strip_pm1_factors,
    sturm_real_root_count,
};

/// Ring of scalars the generic containers work over.
///
/// Division is available through `Num` but is only used where it is exact.
pub trait Scalar: Signed + NumAssign + Clone + PartialEq + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where T: Signed + NumAssign + Clone + PartialEq + fmt::Debug + fmt::Display {}
