//! Sturm sequences over exact rationals and the rational-root search built
//! on top of them.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::primitive_remainder;
use super::{qb, Rational, UniPoly};
use crate::error::{Error, Result};

/// Sturm sequence of a nonconstant `p`, each term replaced by a positive
/// integer multiple with content one.
fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    integer_sturm_sequence(&integer_multiple(p))
        .iter()
        .map(|c| UniPoly::new(c.iter().map(qb).collect()))
        .collect()
}

fn integer_sturm_sequence(p: &[BigInt]) -> Vec<Vec<BigInt>> {
    let derivative: Vec<BigInt> = p.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();
    let mut seq = vec![p.to_vec(), derivative];
    loop {
        let n = seq.len();
        let r = primitive_remainder(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            return seq;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
}

fn variations<I: IntoIterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// A positive integer multiple of `p`, low degree first.
fn integer_multiple(p: &UniPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect()
}

/// Sign of `p(num / den)` for `den > 0`, via the homogenized integer value.
fn sign_at(p: &[BigInt], num: &BigInt, den: &BigInt) -> i8 {
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    // Horner from the top: acc = sum c_i num^i den^(n-i)
    for c in p.iter().rev() {
        acc = acc * num + c * &den_pow;
        den_pow *= den;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn variations_at(seq: &[UniPoly], x: &Rational) -> usize {
    variations(seq.iter().map(|p| sign(&p.eval(x))))
}

fn variations_at_infinity(seq: &[UniPoly], positive: bool) -> usize {
    variations(seq.iter().map(|p| {
        let s = sign(&p.leading_coeff());
        let odd = p.degree().unwrap_or(0) % 2 == 1;
        if !positive && odd {
            -s
        } else {
            s
        }
    }))
}

fn check_squarefree(p: &UniPoly) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    Ok(())
}

/// Number of distinct real roots of a nonzero squarefree polynomial.
pub fn count_real_roots(p: &UniPoly) -> Result<usize> {
    check_squarefree(p)?;
    let seq = sturm_sequence(p);
    Ok(variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true))
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
/// Requires `p(a) != 0` and `a < b`.
pub fn count_roots_between(p: &UniPoly, a: &Rational, b: &Rational) -> Result<usize> {
    check_squarefree(p)?;
    let seq = sturm_sequence(p);
    Ok(variations_at(&seq, a) - variations_at(&seq, b))
}

/// All rational roots of a nonzero polynomial, without multiplicity.
///
/// The squarefree part is scaled to a primitive integer polynomial with
/// leading coefficient `L`; every rational root then has the form `k / L`.
/// Real roots are isolated by Sturm bisection on the grid of half-odd points
/// `(2k + 1) / (2L)`, which are never roots, until each isolating interval
/// contains a single grid point `k / L`; that point is then tested exactly.
pub fn rational_roots(p: &UniPoly) -> Result<BTreeSet<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = BTreeSet::new();
    if p.degree() == Some(0) {
        return Ok(roots);
    }
    let sf = p.squarefree_part();
    let ints = sf.primitive_integer();
    let lead = ints.last().cloned().expect("nonconstant");
    let poly = UniPoly::new(ints.iter().map(qb).collect());

    // Cauchy bound, in units of 1 / (2L): every root lies strictly inside
    // (-(2K+1)/(2L), (2K+1)/(2L)).
    let max_ratio = ints[..ints.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let bound = max_ratio.div_ceil(&lead.abs()) + BigInt::one();
    let k_bound = &bound * &lead;
    let two_l: BigInt = &lead * 2;

    // Signs at half-odd points are taken on the integer Sturm polynomials,
    // which avoids normalizing large rationals.
    let int_seq = integer_sturm_sequence(&ints);
    let signs_at = |k: &BigInt| -> Vec<i8> {
        let num = k * 2 + 1;
        int_seq.iter().map(|c| sign_at(c, &num, &two_l)).collect()
    };
    let variations_at_k = |k: &BigInt| variations(signs_at(k));

    // Intervals are (half_odd(lo), half_odd(hi)] with hi > lo; their grid
    // points are k / L for lo < k <= hi.
    let mut stack = vec![(-(&k_bound) - 1, k_bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let count = variations_at_k(&lo) - variations_at_k(&hi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            // an isolating interval: bisect on the sign of p alone
            let (mut lo, mut hi) = (lo, hi);
            let s_lo = sign_at(&ints, &(&lo * 2 + 1), &two_l);
            while &hi - &lo > BigInt::one() {
                let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
                if sign_at(&ints, &(&mid * 2 + 1), &two_l) == s_lo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let candidate = Rational::new(hi.clone(), lead.clone());
            if poly.eval(&candidate).is_zero() {
                roots.insert(candidate);
            }
            continue;
        }
        if &hi - &lo == BigInt::one() {
            let candidate = Rational::new(hi.clone(), lead.clone());
            if poly.eval(&candidate).is_zero() {
                roots.insert(candidate);
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    Ok(roots)
}
