//! Exact arithmetic substrate: rationals, univariate polynomials over the
//! rationals, real-root counting and a few elementary number-theoretic
//! functions.
//!
//! Rationals are `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator, so equality is structural.

mod nt;
mod poly;
mod sturm;

pub use nt::{
    is_prime, is_square_integer, kronecker_symbol, prime_factors, rational_cube_root,
    rational_fourth_root, rational_sixth_root, rational_sqrt, squarefree_part,
    squarefree_part_integer,
};
pub use poly::UniPoly;
pub use sturm::{count_real_roots, count_roots_between, rational_roots};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

/// Shorthand for the rational `n / d`. Panics when `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qb(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}
