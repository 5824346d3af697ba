//! Class numbers of imaginary quadratic orders, genus theory in the
//! class-number-two case, and class numbers of Eichler orders in definite
//! quaternion algebras of prime discriminant.

use std::collections::BTreeSet;

use num_integer::{Integer, Roots};
use num_traits::{ToPrimitive, Zero};

use crate::arith::{is_prime, kronecker_symbol, prime_factors, q, qi, squarefree_part, Rational};
use crate::error::{Error, Result};

/// A negative discriminant `d < 0` with `d ≡ 0, 1 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NegDiscriminant(i64);

impl NegDiscriminant {
    pub fn new(d: i64) -> Result<Self> {
        if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
            return Err(Error::InvalidDiscriminant(d));
        }
        Ok(NegDiscriminant(d))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    /// Conductor `f` of the order, with `d = f^2 d_K`.
    pub fn conductor(self) -> u64 {
        let s = squarefree_part(&qi(self.0)).expect("nonzero");
        let fundamental = if s.rem_euclid(4) == 1 { s } else { 4 * s };
        let f2 = (self.0 / fundamental) as u64;
        let f = f2.sqrt();
        debug_assert_eq!(f * f, f2);
        f
    }
}

/// Eichler symbol `(O / l)` of the imaginary quadratic order of
/// discriminant `d`: `1` when `l` divides the conductor of the order and the
/// Kronecker symbol `(d | l)` otherwise.
pub fn eichler_symbol(d: NegDiscriminant, l: u64) -> i8 {
    if d.conductor() % l == 0 {
        1
    } else {
        kronecker_symbol(d.0, l as i64)
    }
}

/// Number of reduced primitive forms `(a, b, c)` of discriminant `d`.
pub fn class_number(d: NegDiscriminant) -> u64 {
    let d = d.0;
    let mut h = 0;
    let mut a = 1i64;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                h += 1;
            }
        }
        a += 1;
    }
    h
}

/// Splits a fundamental discriminant into its prime discriminants
/// (`-4`, `±8`, and `(-1)^((l-1)/2) l` for odd primes `l`).
fn prime_discriminants(d: i64) -> Option<Vec<i64>> {
    let n = d.unsigned_abs();
    let mut odd_part = 1i64;
    let mut out = Vec::new();
    for l in prime_factors(n) {
        if l == 2 {
            continue;
        }
        if (n / l) % l == 0 {
            return None;
        }
        let l = l as i64;
        let star = if l % 4 == 1 { l } else { -l };
        odd_part *= star;
        out.push(star);
    }
    let two_part = d / odd_part;
    match two_part {
        1 => {}
        -4 | 8 | -8 => out.insert(0, two_part),
        _ => return None,
    }
    Some(out)
}

/// Quadratic subfields `Q(sqrt(s))` of the ring class field of `d`, for
/// `h(d) = 2`. The class field is biquadratic and genus theory identifies it
/// with `Q(sqrt(d1), sqrt(d2))` where `d = d1 * d2` in prime discriminants.
pub fn ring_class_quadratic_subfields(d: NegDiscriminant) -> Result<BTreeSet<i64>> {
    let h = class_number(d);
    if h != 2 {
        return Err(Error::UnsupportedClassNumber(h));
    }
    let parts = prime_discriminants(d.0)
        .filter(|p| p.len() == 2)
        .ok_or(Error::UnsupportedClassNumber(h))?;
    let mut out = BTreeSet::new();
    for x in parts.iter().copied().chain([d.0]) {
        out.insert(squarefree_part(&qi(x))?);
    }
    Ok(out)
}

/// Discriminant and level of an Eichler order in a definite quaternion
/// algebra ramified at a single finite prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EichlerParams {
    delta: u64,
    level: u64,
}

impl EichlerParams {
    pub fn new(delta: u64, level: u64) -> Result<Self> {
        if !is_prime(delta) {
            return Err(Error::InvalidEichler(format!("{delta} is not prime")));
        }
        if level != 1 && (!is_prime(level) || level == delta) {
            return Err(Error::InvalidEichler(format!(
                "level {level} must be 1 or a prime different from {delta}"
            )));
        }
        Ok(EichlerParams { delta, level })
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn level(&self) -> u64 {
        self.level
    }
}

/// Eichler's class number formula
/// `(δ-1)ψ(N)/12 + (1/4)(1-(-4|δ))(1+(-4|N)) + (1/3)(1-(-3|δ))(1+(-3|N))`,
/// where `ψ(1) = 1` and the level factors are dropped when `N = 1`.
pub fn eichler_class_number(p: EichlerParams) -> u64 {
    let delta = p.delta as i64;
    let level = p.level as i64;
    let psi = if level == 1 { 1 } else { level + 1 };
    let level_factor = |disc: i64| {
        if level == 1 {
            1
        } else {
            1 + kronecker_symbol(disc, level) as i64
        }
    };
    let h: Rational = q((delta - 1) * psi, 12)
        + q(
            (1 - kronecker_symbol(-4, delta) as i64) * level_factor(-4),
            4,
        )
        + q(
            (1 - kronecker_symbol(-3, delta) as i64) * level_factor(-3),
            3,
        );
    debug_assert!(h.denom() == &num_bigint::BigInt::from(1) && !h.is_zero());
    h.to_integer().to_u64().expect("class numbers are positive")
}
