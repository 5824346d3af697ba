//! Genus-2 curves with a bielliptic involution `(x, y) -> (-x, y)`.
//!
//! A curve `y^2 = a x^6 + b x^4 + c x^2 + d` has the two elliptic quotients
//! `Y^2 = a X^3 + b X^2 + c X + d` and `Y^2 = d X^3 + c X^2 + b X + a`.
//! Conversely, given short models `E1: (A1, B1)` and `E2: (A2, B2)`, the
//! curves whose quotients are `E1` and `E2` come from the rational solutions
//! of
//!
//! ```text
//! 27 a^3 B2 = 2 A1^3 + 27 B1^2 + 9 A1 B1 b + 2 A1^2 b^2 - B1 b^3
//!  9 a^2 A2 = -3 A1^2 + 9 B1 b + A1 b^2
//! ```
//!
//! with `c = (3 A1 + b^2) / (3a)` and `d = (27 B1 + 9 A1 b + b^3) / (27 a^2)`.

mod igusa;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{
    qb, qi, rational_cube_root, rational_roots, rational_sqrt, squarefree_part,
    squarefree_part_integer, Rational, UniPoly,
};
use crate::elliptic::ShortWeierstrass;
use crate::error::{Error, Result};

pub(crate) use igusa::weighted_equal;

/// `w y^2 = f6 x^6 + f4 x^4 + f2 x^2 + f0` with squarefree right-hand side
/// of degree six.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenSexticModel {
    w: Rational,
    f: [Rational; 4],
}

impl EvenSexticModel {
    /// `f` lists `f6, f4, f2, f0`.
    pub fn new(w: Rational, f: [Rational; 4]) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::InvalidModel("w must be nonzero".into()));
        }
        if f[0].is_zero() {
            return Err(Error::InvalidModel("f6 must be nonzero".into()));
        }
        let m = EvenSexticModel { w, f };
        if !m.sextic().is_squarefree() {
            return Err(Error::InvalidModel(format!(
                "{m}: sextic is not squarefree"
            )));
        }
        Ok(m)
    }

    pub fn from_ints(w: i64, f: [i64; 4]) -> Result<Self> {
        Self::new(qi(w), f.map(qi))
    }

    pub fn w(&self) -> &Rational {
        &self.w
    }

    pub fn f6(&self) -> &Rational {
        &self.f[0]
    }

    pub fn f4(&self) -> &Rational {
        &self.f[1]
    }

    pub fn f2(&self) -> &Rational {
        &self.f[2]
    }

    pub fn f0(&self) -> &Rational {
        &self.f[3]
    }

    /// `[f6, f4, f2, f0]`.
    pub fn coefficients(&self) -> &[Rational; 4] {
        &self.f
    }

    /// The right-hand side `f(x)`.
    pub fn sextic(&self) -> UniPoly {
        let z = Rational::zero;
        UniPoly::new(vec![
            self.f[3].clone(),
            z(),
            self.f[2].clone(),
            z(),
            self.f[1].clone(),
            z(),
            self.f[0].clone(),
        ])
    }

    /// `f / w`, i.e. the coefficients `(a, b, c, d)` of the model with `w = 1`
    /// over the algebraic closure.
    fn monic_w(&self) -> [Rational; 4] {
        self.f.clone().map(|c| c / &self.w)
    }

    /// Same curve over `Q` after `x -> 1/x`, `y -> y/x^3`.
    pub fn reversed(&self) -> Self {
        let [f6, f4, f2, f0] = self.f.clone();
        EvenSexticModel::new(self.w.clone(), [f0, f2, f4, f6]).expect("f0 != 0 for squarefree f")
    }
}

impl fmt::Display for EvenSexticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.w.is_one() {
            write!(f, "y^2 = ")?;
        } else if (-&self.w).is_one() {
            write!(f, "-y^2 = ")?;
        } else {
            write!(f, "{}y^2 = ", paren(&self.w))?;
        }
        let mut first = true;
        for (c, e) in self.f.iter().zip([6, 4, 2, 0]) {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = if abs.is_one() && e != 0 {
                String::new()
            } else {
                paren(&abs)
            };
            match e {
                0 => write!(f, "{coeff}")?,
                _ => write!(f, "{coeff}x^{e}")?,
            }
        }
        Ok(())
    }
}

fn paren(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("({r})")
    }
}

/// The quotients by `(x, y) -> (-x, y)` and by `(x, y) -> (-x, -y)`, in short
/// Weierstrass form.
pub fn quotient_curves(m: &EvenSexticModel) -> Result<(ShortWeierstrass, ShortWeierstrass)> {
    let [a, b, c, d] = m.monic_w();
    let three = qi(3);
    let t27 = qi(27);
    let au1 = -(&b * &b) / &three + &a * &c;
    let bu1 = qi(2) * &b * &b * &b / &t27 - &a * &b * &c / &three + &a * &a * &d;
    let au2 = -(&c * &c) / &three + &b * &d;
    let bu2 = qi(2) * &c * &c * &c / &t27 - &b * &c * &d / &three + &a * &d * &d;
    Ok((
        ShortWeierstrass::new(au1, bu1)?,
        ShortWeierstrass::new(au2, bu2)?,
    ))
}

/// A rational solution of the gluing system for an ordered pair of curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingSolution {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
    source: (ShortWeierstrass, ShortWeierstrass),
}

impl GluingSolution {
    /// Checks both equations of the system, derives `c` and `d`, and rejects
    /// non-squarefree models.
    pub fn new(
        e1: &ShortWeierstrass,
        e2: &ShortWeierstrass,
        a: Rational,
        b: Rational,
    ) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidModel("a must be nonzero".into()));
        }
        let (s, t) = (s_poly(e1).eval(&b), t_poly(e1).eval(&b));
        let a2 = &a * &a;
        if qi(27) * &a2 * &a * &e2.b != t || qi(9) * &a2 * &e2.a != s {
            return Err(Error::Internal(format!(
                "(a, b) = ({a}, {b}) does not solve the gluing system for {e1}, {e2}"
            )));
        }
        let c = (qi(3) * &e1.a + &b * &b) / (qi(3) * &a);
        let d = (qi(27) * &e1.b + qi(9) * &e1.a * &b + &b * &b * &b) / (qi(27) * &a2);
        let sol = GluingSolution {
            a,
            b,
            c,
            d,
            source: (e1.clone(), e2.clone()),
        };
        sol.model()?;
        Ok(sol)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn source(&self) -> &(ShortWeierstrass, ShortWeierstrass) {
        &self.source
    }

    /// `y^2 = a x^6 + b x^4 + c x^2 + d`.
    pub fn model(&self) -> Result<EvenSexticModel> {
        EvenSexticModel::new(
            Rational::one(),
            [
                self.a.clone(),
                self.b.clone(),
                self.c.clone(),
                self.d.clone(),
            ],
        )
    }
}

/// `S(b) = -3 A1^2 + 9 B1 b + A1 b^2`, the right side of the second equation.
fn s_poly(e1: &ShortWeierstrass) -> UniPoly {
    let (a1, b1) = (&e1.a, &e1.b);
    UniPoly::new(vec![qi(-3) * a1 * a1, qi(9) * b1, a1.clone()])
}

/// `T(b) = 2 A1^3 + 27 B1^2 + 9 A1 B1 b + 2 A1^2 b^2 - B1 b^3`.
fn t_poly(e1: &ShortWeierstrass) -> UniPoly {
    let (a1, b1) = (&e1.a, &e1.b);
    UniPoly::new(vec![
        qi(2) * a1 * a1 * a1 + qi(27) * b1 * b1,
        qi(9) * a1 * b1,
        qi(2) * a1 * a1,
        -b1.clone(),
    ])
}

/// `P(b) = B2^2 S^3 - A2^3 T^2` with the factors shared with `S` removed.
fn eliminant(e1: &ShortWeierstrass, e2: &ShortWeierstrass) -> UniPoly {
    let (s, t) = (s_poly(e1), t_poly(e1));
    let a2_3 = &e2.a * &e2.a * &e2.a;
    let b2_2 = &e2.b * &e2.b;
    let mut p = &s.pow(3).scale(&b2_2) - &t.pow(2).scale(&a2_3);
    loop {
        let g = p.gcd(&s);
        if g.degree() == Some(0) || p.is_zero() {
            break;
        }
        p = p.div_rem(&g).0;
    }
    p
}

/// Every rational solution of the gluing system for `(E1, E2)`, sorted by
/// `(a, b)`. `E1` becomes the quotient by `(x, y) -> (-x, y)`.
pub fn solve_gluing(e1: &ShortWeierstrass, e2: &ShortWeierstrass) -> Result<Vec<GluingSolution>> {
    let (s, t) = (s_poly(e1), t_poly(e1));
    let mut pairs: Vec<(Rational, Rational)> = Vec::new();
    if e2.a.is_zero() {
        // the second equation reads S(b) = 0
        for b in rational_roots(&s)? {
            let cube = t.eval(&b) / (qi(27) * &e2.b);
            if let Some(a) = rational_cube_root(&cube) {
                pairs.push((a, b));
            }
        }
    } else if e2.b.is_zero() {
        for b in rational_roots(&t)? {
            let sq = s.eval(&b) / (qi(9) * &e2.a);
            if let Some(a) = rational_sqrt(&sq) {
                if !a.is_zero() {
                    pairs.push((-a.clone(), b.clone()));
                    pairs.push((a, b));
                }
            }
        }
    } else {
        let p = eliminant(e1, e2);
        if p.is_zero() {
            return Err(Error::Internal(format!(
                "gluing eliminant vanishes for {e1}, {e2}"
            )));
        }
        for b in rational_roots(&p)? {
            let sb = s.eval(&b);
            if sb.is_zero() {
                continue;
            }
            let a = t.eval(&b) * &e2.a / (qi(3) * &e2.b * sb);
            pairs.push((a, b));
        }
    }
    let mut out = Vec::new();
    for (a, b) in pairs {
        match GluingSolution::new(e1, e2, a, b) {
            Ok(sol) => out.push(sol),
            Err(Error::InvalidModel(_)) => {}
            Err(e) => return Err(e),
        }
    }
    out.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
    Ok(out)
}

/// Shape of the eliminant of the gluing system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EliminantReport {
    pub degree: usize,
    pub distinct_rational: usize,
    pub squarefree: bool,
}

/// Degree, squarefreeness and number of rational roots of the eliminant in
/// `b`. Each root determines `a`, so a squarefree eliminant of degree `n`
/// means `n` solutions over the algebraic closure.
pub fn count_algebraic_solutions(
    e1: &ShortWeierstrass,
    e2: &ShortWeierstrass,
) -> Result<EliminantReport> {
    if e2.a.is_zero() || e2.b.is_zero() {
        return Err(Error::DegenerateGluing);
    }
    let p = eliminant(e1, e2);
    if p.is_zero() {
        return Err(Error::Internal(format!(
            "gluing eliminant vanishes for {e1}, {e2}"
        )));
    }
    Ok(EliminantReport {
        degree: p.degree().unwrap_or(0),
        distinct_rational: rational_roots(&p)?.len(),
        squarefree: p.is_squarefree(),
    })
}

fn lcm_of_denominators(xs: &[Rational]) -> BigInt {
    xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn content(xs: &[BigInt]) -> BigInt {
    xs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Canonical integral form of the curve under `y -> lambda y`: integral `f`
/// with content one, and `w` a positive squarefree integer.
pub fn normalize_integral(m: &EvenSexticModel) -> Result<EvenSexticModel> {
    let all: Vec<Rational> = std::iter::once(m.w.clone())
        .chain(m.f.iter().cloned())
        .collect();
    let den = qb(&lcm_of_denominators(&all));
    let ints: Vec<BigInt> = all.iter().map(|x| (x * &den).to_integer()).collect();
    let g = content(&ints[1..]);
    let w = &ints[0];
    let k = squarefree_part_integer(&(w * &g))?;
    let sign = if w.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let f = [0, 1, 2, 3].map(|i| qb(&(&ints[i + 1] * &sign / &g)));
    EvenSexticModel::new(qi(k.abs()), f)
}

/// Igusa-Clebsch invariants of a genus-2 model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IgusaClebsch {
    pub i2: Rational,
    pub i4: Rational,
    pub i6: Rational,
    pub i10: Rational,
}

impl IgusaClebsch {
    fn as_array(&self) -> [Rational; 4] {
        [
            self.i2.clone(),
            self.i4.clone(),
            self.i6.clone(),
            self.i10.clone(),
        ]
    }

    /// Equality in weighted projective space with weights `2, 4, 6, 10`,
    /// i.e. isomorphism of the curves over the algebraic closure.
    pub fn weighted_eq(&self, other: &IgusaClebsch) -> bool {
        weighted_equal(&self.as_array(), &other.as_array())
    }
}

impl fmt::Display for IgusaClebsch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.i2, self.i4, self.i6, self.i10)
    }
}

/// Invariants of the sextic `f / w`; `I10` is its discriminant.
pub fn igusa_clebsch(m: &EvenSexticModel) -> IgusaClebsch {
    let [a, b, c, d] = m.monic_w();
    let z = Rational::zero;
    let [i2, i4, i6, i10] = igusa::igusa_clebsch_of(&[a, z(), b, z(), c, z(), d]);
    IgusaClebsch { i2, i4, i6, i10 }
}

/// Whether two models are isomorphic over the algebraic closure.
pub fn isomorphic_over_closure(m1: &EvenSexticModel, m2: &EvenSexticModel) -> bool {
    igusa_clebsch(m1).weighted_eq(&igusa_clebsch(m2))
}

/// Squarefree `s` such that the two points with `x = 0` are defined over
/// `Q(sqrt(s))`; `1` means `Q`.
pub fn fixed_point_field(m: &EvenSexticModel) -> Result<i64> {
    squarefree_part(&(m.f0() / &m.w))
}

/// Squarefree `s` such that the two points at infinity are defined over
/// `Q(sqrt(s))`.
pub fn infinity_field(m: &EvenSexticModel) -> Result<i64> {
    squarefree_part(&(m.f6() * &m.w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn sw(a: Rational, b: Rational) -> ShortWeierstrass {
        ShortWeierstrass::new(a, b).unwrap()
    }

    fn model(w: i64, f: [i64; 4]) -> EvenSexticModel {
        EvenSexticModel::from_ints(w, f).unwrap()
    }

    #[test]
    fn model_validation() {
        assert!(EvenSexticModel::from_ints(0, [1, 0, 0, 1]).is_err());
        assert!(EvenSexticModel::from_ints(1, [0, 1, 0, 1]).is_err());
        // x^2 (x^4 + 1)
        assert!(EvenSexticModel::from_ints(1, [1, 0, 1, 0]).is_err());
        // (x^2 - 1)^2 (x^2 + 1)
        assert!(EvenSexticModel::from_ints(1, [1, -1, -1, 1]).is_err());
        assert!(EvenSexticModel::from_ints(1, [1, 0, 0, 1]).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(
            model(1, [-1, 19, -3, 1]).to_string(),
            "y^2 = -x^6 + 19x^4 - 3x^2 + 1"
        );
        assert_eq!(
            model(5, [2401, -403, 3, -1]).to_string(),
            "5y^2 = 2401x^6 - 403x^4 + 3x^2 - 1"
        );
        assert_eq!(model(2, [-1, 0, 0, -841]).to_string(), "2y^2 = -x^6 - 841");
        let m = EvenSexticModel::new(q(1, 5), [q(-1, 2), qi(0), qi(0), qi(1)]).unwrap();
        assert_eq!(m.to_string(), "(1/5)y^2 = -(1/2)x^6 + 1");
    }

    #[test]
    fn quotient_examples() {
        let (e1, e2) = quotient_curves(&model(1, [1, 0, 0, 1])).unwrap();
        assert_eq!((e1.a.clone(), e1.b.clone()), (qi(0), qi(1)));
        assert_eq!(e1, e2);
        let (e1, e2) = quotient_curves(&model(1, [1, 1, 1, 1])).unwrap();
        assert_eq!(e1, sw(q(2, 3), q(20, 27)));
        assert_eq!(e2, sw(q(2, 3), q(20, 27)));
        let (e1, _) = quotient_curves(&model(1, [-1, 19, -3, 1])).unwrap();
        assert_eq!(e1, sw(q(-352, 3), q(13232, 27)));
    }

    #[test]
    fn quotients_match_cubic_models() {
        // j of Y^2 = a X^3 + b X^2 + c X + d is 256 (b^2 - 3ac)^3 / (a^2 disc)
        let j_of_cubic = |a: &Rational, b: &Rational, c: &Rational, d: &Rational| {
            let disc = b * b * c * c
                - qi(4) * a * c * c * c
                - qi(4) * b * b * b * d
                - qi(27) * a * a * d * d
                + qi(18) * a * b * c * d;
            let c4 = b * b - qi(3) * a * c;
            qi(256) * &c4 * &c4 * &c4 / (a * a * disc)
        };
        for (w, f) in [
            (3, [2, -5, 7, 11]),
            (1, [-1, 19, -3, 1]),
            (-2, [4, 0, 1, -3]),
        ] {
            let m = model(w, f);
            let (e1, e2) = quotient_curves(&m).unwrap();
            let [a, b, c, d] = m.monic_w();
            assert_eq!(e1.j_invariant(), j_of_cubic(&a, &b, &c, &d));
            assert_eq!(e2.j_invariant(), j_of_cubic(&d, &c, &b, &a));
        }
    }

    #[test]
    fn trivial_gluings() {
        let e = sw(qi(0), qi(1));
        let sols = solve_gluing(&e, &e).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].model().unwrap(), model(1, [1, 0, 0, 1]));
        let sols = solve_gluing(&e, &sw(qi(0), qi(-1))).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].model().unwrap(), model(1, [-1, 0, 0, 1]));
        let e = sw(q(2, 3), q(20, 27));
        let sols = solve_gluing(&e, &e).unwrap();
        assert!(sols
            .iter()
            .any(|s| s.model().unwrap() == model(1, [1, 1, 1, 1])));
    }

    #[test]
    fn degenerate_branches() {
        // B of the second quotient vanishes
        let m = model(1, [4, 6, 3, 1]);
        let (e1, e2) = quotient_curves(&m).unwrap();
        assert!(e2.b.is_zero());
        let sols = solve_gluing(&e1, &e2).unwrap();
        assert!(sols.iter().any(|s| s.model().unwrap() == m));
        assert_eq!(
            count_algebraic_solutions(&e1, &e2),
            Err(Error::DegenerateGluing)
        );
        // A of the second quotient vanishes
        let m = model(1, [1, 0, 0, 1]);
        let (e1, e2) = quotient_curves(&m).unwrap();
        assert!(e2.a.is_zero());
        assert_eq!(
            count_algebraic_solutions(&e1, &e2),
            Err(Error::DegenerateGluing)
        );
    }

    #[test]
    fn solution_constructor_checks_the_system() {
        let e = sw(qi(0), qi(1));
        assert!(GluingSolution::new(&e, &e, qi(1), qi(0)).is_ok());
        assert!(GluingSolution::new(&e, &e, qi(2), qi(0)).is_err());
        assert!(GluingSolution::new(&e, &e, qi(0), qi(0)).is_err());
    }

    #[test]
    fn normalization() {
        let m = model(1, [-1, 19, -3, 1]);
        assert_eq!(normalize_integral(&m).unwrap(), m);
        let m = EvenSexticModel::new(q(1, 5), [qi(1), qi(0), qi(0), qi(1)]).unwrap();
        assert_eq!(normalize_integral(&m).unwrap(), model(5, [1, 0, 0, 1]));
        // -4 y^2 = 6 x^6 + 2  ->  2 y^2 = -3 x^6 - 1 after y -> y/2... w * g = -8
        let m = model(-4, [6, 0, 0, 2]);
        assert_eq!(normalize_integral(&m).unwrap(), model(2, [-3, 0, 0, -1]));
        let m =
            EvenSexticModel::new(qi(1), [q(21609, 5), q(-3627, 5), q(27, 5), q(-9, 5)]).unwrap();
        assert_eq!(
            normalize_integral(&m).unwrap(),
            model(5, [2401, -403, 3, -1])
        );
    }

    #[test]
    fn normalization_is_invariant_under_y_scaling() {
        let m = model(3, [2, -5, 7, 11]);
        let n = normalize_integral(&m).unwrap();
        for l in [q(1, 2), qi(3), q(-5, 7)] {
            let scaled = EvenSexticModel::new(&l * &l * m.w(), m.coefficients().clone()).unwrap();
            assert_eq!(normalize_integral(&scaled).unwrap(), n);
        }
    }

    #[test]
    fn invariants_are_covariant() {
        // x -> 2x, y -> 8y
        let m = model(1, [-2, 19, -24, -169]);
        let scaled =
            EvenSexticModel::new(qi(64), [qi(-2 * 64), qi(19 * 16), qi(-24 * 4), qi(-169)])
                .unwrap();
        assert!(isomorphic_over_closure(&m, &scaled));
        assert!(isomorphic_over_closure(&m, &m.reversed()));
        assert!(!isomorphic_over_closure(&m, &model(1, [-2, 19, -24, -170])));
    }

    #[test]
    fn fields() {
        assert_eq!(
            fixed_point_field(&model(5, [2401, -403, 3, -1])).unwrap(),
            -5
        );
        assert_eq!(fixed_point_field(&model(1, [-1, 19, -3, 1])).unwrap(), 1);
        assert_eq!(infinity_field(&model(1, [-2, 19, -24, -169])).unwrap(), -2);
        assert_eq!(
            infinity_field(&model(2, [-1, -39, -431, -841])).unwrap(),
            -2
        );
        assert_eq!(infinity_field(&model(1, [1, 0, 0, 1])).unwrap(), 1);
    }
}
