//! Elliptic curves over the rationals: invariants, short models,
//! isomorphism over `Q`, and Atkin-Lehner signs at primes of
//! multiplicative reduction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{qi, rational_fourth_root, rational_sixth_root, rational_sqrt, Rational};
use crate::error::{Error, Result};

/// Long Weierstrass model `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EllipticCurve {
    a: [Rational; 5],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub c4: Rational,
    pub c6: Rational,
    pub delta: Rational,
    pub j: Rational,
}

impl EllipticCurve {
    pub fn new(a: [Rational; 5]) -> Result<Self> {
        let e = EllipticCurve { a };
        if e.discriminant().is_zero() {
            return Err(Error::Singular(format!("{e}")));
        }
        Ok(e)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        Self::new(a.map(qi))
    }

    pub fn a_invariants(&self) -> &[Rational; 5] {
        &self.a
    }

    fn b_invariants(&self) -> [Rational; 4] {
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = a1 * a1 + qi(4) * a2;
        let b4 = qi(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + qi(4) * a6;
        let b8 = a1 * a1 * a6 + qi(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        [b2, b4, b6, b8]
    }

    fn c_invariants(&self) -> (Rational, Rational) {
        let [b2, b4, b6, _] = self.b_invariants();
        let c4 = &b2 * &b2 - qi(24) * &b4;
        let c6 = -(&b2 * &b2 * &b2) + qi(36) * &b2 * &b4 - qi(216) * &b6;
        (c4, c6)
    }

    pub fn discriminant(&self) -> Rational {
        let (c4, c6) = self.c_invariants();
        (&c4 * &c4 * &c4 - &c6 * &c6) / qi(1728)
    }

    pub fn invariants(&self) -> Invariants {
        let (c4, c6) = self.c_invariants();
        let delta = (&c4 * &c4 * &c4 - &c6 * &c6) / qi(1728);
        let j = &c4 * &c4 * &c4 / &delta;
        Invariants { c4, c6, delta, j }
    }

    pub fn j_invariant(&self) -> Rational {
        self.invariants().j
    }

    /// `Y^2 = X^3 - 27 c4 X - 54 c6`.
    pub fn short_model(&self) -> ShortWeierstrass {
        let (c4, c6) = self.c_invariants();
        ShortWeierstrass::new(-qi(27) * c4, -qi(54) * c6).expect("nonsingular by construction")
    }

    pub fn is_isomorphic_over_q(&self, other: &EllipticCurve) -> bool {
        self.short_model()
            .is_isomorphic_over_q(&other.short_model())
    }

    fn integral_coefficients(&self) -> Option<[BigInt; 5]> {
        if self.a.iter().all(|c| c.is_integer()) {
            Some(self.a.clone().map(|c| c.to_integer()))
        } else {
            None
        }
    }

    /// Eigenvalue of `w_p` on the newform attached to the curve, `-a_p`,
    /// with `a_p = +1` for split and `-1` for nonsplit multiplicative
    /// reduction. The model must be minimal at `p`.
    ///
    /// The node of the reduction is moved to the origin, where the tangent
    /// cone is `y^2 + a1 xy - a2 x^2`; the reduction is split iff this form
    /// has a root `y = t x` over `F_p`.
    pub fn atkin_lehner_sign(&self, p: u64) -> Result<i8> {
        let ints = self
            .integral_coefficients()
            .ok_or_else(|| Error::Singular(format!("non-integral model {self}")))?;
        let pb = BigInt::from(p);
        let inv = self.invariants();
        let divides = |r: &Rational| r.to_integer().mod_floor(&pb).is_zero();
        if !divides(&inv.delta) || divides(&inv.c4) {
            return Err(Error::NotMultiplicative(p));
        }
        let a: Vec<i64> = ints
            .iter()
            .map(|c| c.mod_floor(&pb).to_i64().expect("reduced mod p"))
            .collect();
        let (a1, a2, a3, a4, a6) = (a[0], a[1], a[2], a[3], a[4]);
        let p = p as i64;
        let m = |x: i64| x.rem_euclid(p);
        let node = (0..p)
            .flat_map(|x| (0..p).map(move |y| (x, y)))
            .find(|&(x, y)| {
                let f = y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6;
                let fx = a1 * y - 3 * x * x - 2 * a2 * x - a4;
                let fy = 2 * y + a1 * x + a3;
                m(f) == 0 && m(fx) == 0 && m(fy) == 0
            })
            .ok_or(Error::NotMultiplicative(p as u64))?;
        let (r, _) = node;
        let a2t = m(a2 + 3 * r);
        let split = (0..p).any(|t| m(t * t + a1 * t - a2t) == 0);
        Ok(if split { -1 } else { 1 })
    }
}

impl fmt::Display for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = &self.a;
        write!(f, "[{a1},{a2},{a3},{a4},{a6}]")
    }
}

impl fmt::Debug for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EllipticCurve{self}")
    }
}

/// `Y^2 = X^3 + A X + B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShortWeierstrass {
    pub a: Rational,
    pub b: Rational,
}

impl ShortWeierstrass {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let s = ShortWeierstrass { a, b };
        if s.discriminant_factor().is_zero() {
            return Err(Error::Singular(format!("{s}")));
        }
        Ok(s)
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(qi(a), qi(b))
    }

    /// `4A^3 + 27B^2`.
    pub fn discriminant_factor(&self) -> Rational {
        qi(4) * &self.a * &self.a * &self.a + qi(27) * &self.b * &self.b
    }

    pub fn j_invariant(&self) -> Rational {
        qi(1728) * qi(4) * &self.a * &self.a * &self.a / self.discriminant_factor()
    }

    pub fn to_curve(&self) -> EllipticCurve {
        EllipticCurve::new([
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            self.a.clone(),
            self.b.clone(),
        ])
        .expect("nonsingular by construction")
    }

    /// True iff `(A', B') = (u^4 A, u^6 B)` for some `u ∈ Q*`.
    ///
    /// For `AB ≠ 0` this forces `u^2 = (B'A)/(BA')`, which must be a rational
    /// square. At `j = 0` the test is a sixth power, at `j = 1728` a fourth
    /// power.
    pub fn is_isomorphic_over_q(&self, other: &ShortWeierstrass) -> bool {
        if self.j_invariant() != other.j_invariant() {
            return false;
        }
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, _) => rational_sixth_root(&(&other.b / &self.b)).is_some(),
            (_, true) => rational_fourth_root(&(&other.a / &self.a)).is_some(),
            _ => {
                let u2 = (&other.b * &self.a) / (&self.b * &other.a);
                match rational_sqrt(&u2) {
                    Some(_) => &u2 * &u2 * &self.a == other.a,
                    None => false,
                }
            }
        }
    }

    /// Quadratic twist `d^2 A, d^3 B`.
    pub fn twist(&self, d: &Rational) -> ShortWeierstrass {
        ShortWeierstrass::new(d * d * &self.a, d * d * d * &self.b)
            .expect("twist of a nonsingular curve")
    }
}

impl fmt::Display for ShortWeierstrass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn ec(a: [i64; 5]) -> EllipticCurve {
        EllipticCurve::from_ints(a).unwrap()
    }

    /// `a_p = p + 1 - #E(F_p)` counted over all points of the reduction,
    /// including the singular one; for multiplicative reduction this is
    /// `+1` split and `-1` nonsplit.
    fn trace_by_counting(e: &EllipticCurve, p: i64) -> i64 {
        let a: Vec<i64> = e
            .a_invariants()
            .iter()
            .map(|c| c.to_integer().mod_floor(&BigInt::from(p)).to_i64().unwrap())
            .collect();
        let mut count = 1;
        for x in 0..p {
            for y in 0..p {
                let f =
                    y * y + a[0] * x * y + a[2] * y - (x * x * x + a[1] * x * x + a[3] * x + a[4]);
                if f.rem_euclid(p) == 0 {
                    count += 1;
                }
            }
        }
        // the singular point is not on the nonsingular locus
        p - (count - 1)
    }

    #[test]
    fn j_examples() {
        assert_eq!(ec([0, 0, 0, 0, 1]).j_invariant(), qi(0));
        assert_eq!(ec([0, 0, 0, 1, 0]).j_invariant(), qi(1728));
        assert_eq!(ec([0, 0, 1, 0, 0]).j_invariant(), qi(0));
        // 11a3
        assert_eq!(ec([0, -1, 1, 0, 0]).j_invariant(), q(-4096, 11));
        assert!(EllipticCurve::from_ints([0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn short_model_preserves_j() {
        for a in [
            [0, 0, 0, 0, 1],
            [0, 0, 1, 0, 0],
            [1, -1, 1, -3, 3],
            [0, 1, 1, -7, 5],
        ] {
            let e = ec(a);
            assert_eq!(e.short_model().j_invariant(), e.j_invariant());
            assert!(e.is_isomorphic_over_q(&e.short_model().to_curve()));
        }
    }

    #[test]
    fn isomorphism_and_twists() {
        let e = ec([0, 0, 0, 1, 0]);
        let f = ec([0, 0, 0, 4, 0]);
        assert!(e.is_isomorphic_over_q(&e));
        assert!(!e.is_isomorphic_over_q(&f));
        // x -> 4x scaling: (A, B) -> (16 A, 64 B) is isomorphic
        assert!(e.is_isomorphic_over_q(&ec([0, 0, 0, 16, 0])));
        let g = ShortWeierstrass::from_ints(0, 1).unwrap();
        assert!(g.is_isomorphic_over_q(&ShortWeierstrass::from_ints(0, 64).unwrap()));
        assert!(!g.is_isomorphic_over_q(&ShortWeierstrass::from_ints(0, -1).unwrap()));
        let h = ShortWeierstrass::from_ints(-7, 10).unwrap();
        for t in [2, -1, 3, 5, -6] {
            let tw = h.twist(&qi(t));
            assert_eq!(tw.j_invariant(), h.j_invariant());
            assert!(!h.is_isomorphic_over_q(&tw));
        }
        assert!(h.is_isomorphic_over_q(&h.twist(&qi(4))));
    }

    #[test]
    fn atkin_lehner_signs_match_point_counts() {
        // 26a1, 26b1, 91a1, 91b1, 11a1
        for (a, primes) in [
            ([1, 0, 1, -5, -8], vec![2, 13]),
            ([1, -1, 1, -3, 3], vec![2, 13]),
            ([0, 0, 1, 1, 0], vec![7, 13]),
            ([0, 1, 1, -7, 5], vec![7, 13]),
            ([0, -1, 1, -10, -20], vec![11]),
        ] {
            let e = ec(a);
            for p in primes {
                let sign = e.atkin_lehner_sign(p).unwrap();
                assert_eq!(sign as i64, -trace_by_counting(&e, p as i64), "{e} at {p}");
            }
        }
    }

    #[test]
    fn atkin_lehner_examples() {
        assert_eq!(ec([0, 1, 1, -7, 5]).atkin_lehner_sign(7).unwrap(), -1);
        assert_eq!(ec([0, 0, 1, 1, 0]).atkin_lehner_sign(7).unwrap(), 1);
        assert_eq!(
            ec([0, 0, 1, 1, 0]).atkin_lehner_sign(5),
            Err(Error::NotMultiplicative(5))
        );
    }
}
