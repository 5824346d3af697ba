use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Kronecker symbol `(a | n)`.
///
/// `(a | -1)` is `-1` for negative `a`; `(a | 2)` is `0` for even `a` and
/// `(-1)^((a^2 - 1) / 8)` otherwise; `(a | 0)` is `1` for `a = ±1` and `0`
/// otherwise.
pub fn kronecker_symbol(a: i64, n: i64) -> i8 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result: i8 = 1;
    let mut n = n as i128;
    let mut a = a as i128;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        n >>= twos;
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    // Jacobi symbol (a | n) for odd positive n.
    a = a.rem_euclid(n);
    while a != 0 {
        let t = a.trailing_zeros();
        a >>= t;
        if t % 2 == 1 && matches!(n % 8, 3 | 5) {
            result = -result;
        }
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order, by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Squarefree kernel of a nonnegative integer below 2^64.
///
/// Trial division runs only up to the cube root; what remains has at most two
/// prime factors, so it is either a square (kernel 1) or squarefree.
fn squarefree_kernel(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut n = n;
    let mut out = 1u64;
    let mut d = 2u64;
    while d.saturating_mul(d).saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            if e % 2 == 1 {
                out *= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        let r = n.sqrt();
        if r * r != n {
            out *= n;
        }
    }
    out
}

/// The squarefree integer `s` with `Q(sqrt(n)) = Q(sqrt(s))`.
pub fn squarefree_part_integer(n: &BigInt) -> Result<i64> {
    squarefree_part(&Rational::from_integer(n.clone()))
}

/// The squarefree integer `s` with `Q(sqrt(r)) = Q(sqrt(s))`; `1` means `Q`.
pub fn squarefree_part(r: &Rational) -> Result<i64> {
    if r.is_zero() {
        return Err(Error::ZeroSquarefree);
    }
    let to_u64 = |x: &BigInt| {
        x.abs()
            .to_u64()
            .ok_or_else(|| Error::FactorLimit(x.to_string()))
    };
    let num = squarefree_kernel(to_u64(r.numer())?);
    let den = squarefree_kernel(to_u64(r.denom())?);
    // numerator and denominator are coprime, so their kernels are too
    let s = num as u128 * den as u128;
    let s = i64::try_from(s).map_err(|_| Error::FactorLimit(r.to_string()))?;
    Ok(if r.is_negative() { -s } else { s })
}

pub fn is_square_integer(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

fn integer_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return integer_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

fn rational_root(x: &Rational, k: u32) -> Option<Rational> {
    let n = integer_root(x.numer(), k)?;
    let d = integer_root(x.denom(), k)?;
    Some(Rational::new(n, d))
}

/// Nonnegative rational square root, if it exists.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    rational_root(x, 2)
}

pub fn rational_cube_root(x: &Rational) -> Option<Rational> {
    rational_root(x, 3)
}

pub fn rational_fourth_root(x: &Rational) -> Option<Rational> {
    rational_root(x, 4)
}

pub fn rational_sixth_root(x: &Rational) -> Option<Rational> {
    rational_root(x, 6)
}
