//! Genus of the Shimura curves `X_D`, fixed points of Atkin-Lehner
//! involutions, genera of the quotients `X_D / <w_m>`, and the dual graphs
//! of their special fibres at primes dividing `D`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::arith::{is_prime, kronecker_symbol, prime_factors, q, Rational};
use crate::error::{Error, Result};
use crate::quadforms::{
    class_number, eichler_class_number, eichler_symbol, EichlerParams, NegDiscriminant,
};

/// A squarefree `D` with an even number of prime factors and a divisor `m`.
/// `m = 1` stands for `X_D` itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShimuraCase {
    d: u64,
    m: u64,
}

impl ShimuraCase {
    pub fn new(d: u64, m: u64) -> Result<Self> {
        check_discriminant(d)?;
        if m == 0 || d % m != 0 {
            return Err(Error::InvalidCase(format!("{m} does not divide {d}")));
        }
        Ok(ShimuraCase { d, m })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn genus(&self) -> Result<u64> {
        if self.m == 1 {
            genus_xd(self.d)
        } else {
            genus_quotient(self.d, self.m)
        }
    }
}

impl fmt::Display for ShimuraCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.m)
    }
}

fn check_discriminant(d: u64) -> Result<Vec<u64>> {
    let primes = prime_factors(d);
    if d < 2 || primes.iter().product::<u64>() != d || primes.len() % 2 == 1 {
        return Err(Error::InvalidCase(format!(
            "{d} is not a squarefree product of an even number of primes"
        )));
    }
    Ok(primes)
}

fn to_count(r: Rational, what: &str) -> Result<u64> {
    if !r.is_integer() || r < Rational::zero() {
        return Err(Error::Internal(format!(
            "{what} = {r} is not a nonnegative integer"
        )));
    }
    Ok(r.to_integer().to_u64().expect("small"))
}

/// `g(X_D) = 1 + phi(D)/12 - e2/4 - e3/3` with `phi(D) = prod (p - 1)`,
/// `e2 = prod (1 - (-4|p))` and `e3 = prod (1 - (-3|p))`.
pub fn genus_xd(d: u64) -> Result<u64> {
    let primes = check_discriminant(d)?;
    let phi: i64 = primes.iter().map(|&p| p as i64 - 1).product();
    let e2: i64 = primes
        .iter()
        .map(|&p| 1 - kronecker_symbol(-4, p as i64) as i64)
        .product();
    let e3: i64 = primes
        .iter()
        .map(|&p| 1 - kronecker_symbol(-3, p as i64) as i64)
        .product();
    let g = q(1, 1) + q(phi, 12) - q(e2, 4) - q(e3, 3);
    to_count(g, &format!("g(X_{d})"))
}

/// `phi(D) = prod_{p | D} (p - 1)`.
pub fn phi(d: u64) -> u64 {
    prime_factors(d).iter().map(|p| p - 1).product()
}

/// `h(disc) * prod_{l | rest} (1 - (O / l))` with the Eichler symbol of the
/// order of discriminant `disc`.
fn local_count(disc: i64, rest: &[u64]) -> u64 {
    let disc = NegDiscriminant::new(disc).expect("valid discriminant");
    let h = class_number(disc);
    let local: i64 = rest
        .iter()
        .map(|&l| 1 - eichler_symbol(disc, l) as i64)
        .product();
    h * local as u64
}

/// Number of fixed points of `w_m` on `X_D`, for `1 < m | D`.
pub fn fixed_points_omega(d: u64, m: u64) -> Result<u64> {
    let case = ShimuraCase::new(d, m)?;
    if case.m == 1 {
        return Err(Error::InvalidCase("w_1 is the identity".into()));
    }
    let rest = prime_factors(d / m);
    let mi = m as i64;
    let n = match m {
        2 => local_count(-4, &rest) + local_count(-8, &rest),
        3 => local_count(-3, &rest) + local_count(-12, &rest),
        _ => {
            let mut n = local_count(-4 * mi, &rest);
            if m % 4 == 3 {
                n += local_count(-mi, &rest);
            }
            n
        }
    };
    Ok(n)
}

/// Genus of `X_D / <w_m>` by Riemann-Hurwitz.
pub fn genus_quotient(d: u64, m: u64) -> Result<u64> {
    let g = genus_xd(d)? as i64;
    let fix = fixed_points_omega(d, m)? as i64;
    to_count(q(2 * g + 2 - fix, 4), &format!("g(X_{d}/w_{m})"))
}

/// Squarefree `D` with an even number of prime factors and
/// `phi(D) <= max_phi`, in increasing order.
///
/// `D` is a product of distinct primes each at most `max_phi + 1`, so the
/// candidates are generated from products of primes in that range.
pub fn discriminants_up_to(max_phi: u64) -> Vec<u64> {
    let primes: Vec<u64> = (2..=max_phi + 1).filter(|&p| is_prime(p)).collect();
    let mut out = Vec::new();
    fn rec(
        primes: &[u64],
        start: usize,
        d: u64,
        phi: u64,
        count: usize,
        max: u64,
        out: &mut Vec<u64>,
    ) {
        if count > 0 && count % 2 == 0 {
            out.push(d);
        }
        for i in start..primes.len() {
            let p = primes[i];
            let nphi = phi * (p - 1);
            if nphi > max {
                // phi grows with p, so later primes overshoot too
                break;
            }
            rec(primes, i + 1, d * p, nphi, count + 1, max, out);
        }
    }
    rec(&primes, 0, 1, 1, 0, max_phi, &mut out);
    out.sort_unstable();
    out
}

/// Result of the genus-two scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Genus2Scan {
    pub max_phi: u64,
    /// `D` with `g(X_D) = 2`.
    pub curves: Vec<u64>,
    /// `(D, m)` with `m > 1` and `g(X_D / <w_m>) = 2`.
    pub quotients: Vec<(u64, u64)>,
    /// Number of discriminants with four or more prime factors examined.
    pub multi_prime_checked: usize,
}

/// All genus-two curves `X_D` and quotients `X_D / <w_m>` with
/// `phi(D) <= max_phi`. Discriminants with four or more prime factors are
/// scanned as well; none can contribute since their quotients carry a
/// `(Z/2)^3` of automorphisms.
pub fn enumerate_genus2(max_phi: u64) -> Result<Genus2Scan> {
    let mut curves = BTreeSet::new();
    let mut quotients = BTreeSet::new();
    let mut multi = 0;
    for d in discriminants_up_to(max_phi) {
        let primes = prime_factors(d);
        if primes.len() > 2 {
            multi += 1;
        }
        if genus_xd(d)? == 2 {
            curves.insert(d);
        }
        for m in divisors(&primes).into_iter().filter(|&m| m > 1) {
            if genus_quotient(d, m)? == 2 {
                quotients.insert((d, m));
            }
        }
    }
    Ok(Genus2Scan {
        max_phi,
        curves: curves.into_iter().collect(),
        quotients: quotients.into_iter().collect(),
        multi_prime_checked: multi,
    })
}

/// Divisors of a squarefree number given by its primes, increasing.
pub fn divisors(primes: &[u64]) -> Vec<u64> {
    let mut out = vec![1u64];
    for &p in primes {
        let more: Vec<u64> = out.iter().map(|d| d * p).collect();
        out.extend(more);
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InvolutionKind {
    Hyperelliptic,
    Bielliptic,
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionKind::Hyperelliptic => "hyperelliptic",
            InvolutionKind::Bielliptic => "bielliptic",
        })
    }
}

/// Type of the involution induced on a genus-two `X_D / <w_m>`, `D = p q`,
/// by the remaining Atkin-Lehner involutions: its fixed points are the
/// images of the fixed points of `w_n` and `w_n'` for the two divisors
/// `n, n'` of `D` other than `1` and `m`.
pub fn classify_involution(d: u64, m: u64) -> Result<InvolutionKind> {
    let primes = check_discriminant(d)?;
    if primes.len() != 2 {
        return Err(Error::InvalidCase(format!(
            "{d} must have two prime factors"
        )));
    }
    let g = genus_quotient(d, m)?;
    if g != 2 {
        return Err(Error::InvalidCase(format!(
            "X_{d}/w_{m} has genus {g}, not 2"
        )));
    }
    let others: Vec<u64> = divisors(&primes)
        .into_iter()
        .filter(|&n| n != 1 && n != m)
        .collect();
    let total: u64 = others
        .iter()
        .map(|&n| fixed_points_omega(d, n))
        .sum::<Result<u64>>()?;
    let fix = to_count(q(total as i64, 2), "fixed points of the induced involution")? as i64;
    match to_count(q(6 - fix, 4), "genus of the involution quotient")? {
        0 => Ok(InvolutionKind::Hyperelliptic),
        1 => Ok(InvolutionKind::Bielliptic),
        g => Err(Error::Internal(format!("involution quotient of genus {g}"))),
    }
}

/// Combinatorics of the Cerednik-Drinfeld special fibre of `X_D` at `p`:
/// `2 h(D/p, 1)` rational components meeting in `h(D/p, p)` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualGraphSummary {
    pub p: u64,
    pub vertices: u64,
    pub edges: u64,
    pub graph_genus: i64,
}

pub fn dual_graph(d: u64, p: u64) -> Result<DualGraphSummary> {
    check_discriminant(d)?;
    if !is_prime(p) || d % p != 0 || !is_prime(d / p) {
        return Err(Error::InvalidCase(format!(
            "need a prime p with d/p prime, got ({d}, {p})"
        )));
    }
    let delta = d / p;
    let vertices = 2 * eichler_class_number(EichlerParams::new(delta, 1)?);
    let edges = eichler_class_number(EichlerParams::new(delta, p)?);
    Ok(DualGraphSummary {
        p,
        vertices,
        edges,
        graph_genus: edges as i64 - vertices as i64 + 1,
    })
}
