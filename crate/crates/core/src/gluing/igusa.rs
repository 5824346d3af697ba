//! Igusa-Clebsch invariants of binary sextics, computed from transvectants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{qi, Rational};

/// Binary form `factor * sum c_i x^(n-i) y^i` of degree `n` with integer
/// `c_i` of content one; the degree is kept explicitly so that the zero form
/// still has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BinaryForm {
    degree: usize,
    factor: Rational,
    coeffs: Vec<BigInt>,
}

impl BinaryForm {
    pub(crate) fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty());
        let l = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints = coeffs.iter().map(|c| (c * &l).to_integer()).collect();
        BinaryForm::scaled(Rational::new(BigInt::one(), l), ints)
    }

    fn scaled(mut factor: Rational, mut coeffs: Vec<BigInt>) -> Self {
        let g = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            factor = Rational::zero();
        } else if !g.is_one() {
            coeffs.iter_mut().for_each(|c| *c /= &g);
            factor *= Rational::from_integer(g);
        }
        BinaryForm {
            degree: coeffs.len() - 1,
            factor,
            coeffs,
        }
    }

    /// The constant of a degree-zero form.
    fn scalar(&self) -> Rational {
        assert_eq!(self.degree, 0);
        &self.factor * &self.coeffs[0]
    }

    /// `d^nx / dx^nx d^ny / dy^ny` of the integral part.
    fn derive(&self, nx: usize, ny: usize) -> Vec<BigInt> {
        let n = self.degree;
        assert!(nx + ny <= n);
        // coefficient of x^(n-i) y^i picks up (n-i)!/(n-i-nx)! * i!/(i-ny)!
        (ny..=n - nx)
            .map(|i| {
                let fx: BigInt = ((n - i - nx + 1)..=(n - i)).map(BigInt::from).product();
                let fy: BigInt = ((i - ny + 1)..=i).map(BigInt::from).product();
                &self.coeffs[i] * fx * fy
            })
            .collect()
    }
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The `h`-th transvectant
/// `(f, g)_h = (m-h)!(n-h)!/(m! n!) sum_k (-1)^k C(h,k) d^h f/dx^(h-k) dy^k * d^h g/dx^k dy^(h-k)`.
pub(crate) fn transvectant(f: &BinaryForm, g: &BinaryForm, h: usize) -> BinaryForm {
    let (m, n) = (f.degree, g.degree);
    assert!(h <= m && h <= n);
    let mut out = vec![BigInt::zero(); m + n - 2 * h + 1];
    for k in 0..=h {
        let term = mul(&f.derive(h - k, k), &g.derive(k, h - k));
        let mut c = binomial(h, k);
        if k % 2 == 1 {
            c = -c;
        }
        for (o, t) in out.iter_mut().zip(term) {
            *o += t * &c;
        }
    }
    let norm = Rational::new(
        factorial(m - h) * factorial(n - h),
        factorial(m) * factorial(n),
    );
    BinaryForm::scaled(&f.factor * &g.factor * norm, out)
}

/// `(I2, I4, I6, I10)` of the sextic `f6 x^6 + ... + f0`, given as
/// coefficients from `x^6` down to `x^0`. `I10` equals the discriminant.
pub(crate) fn igusa_clebsch_of(coeffs: &[Rational; 7]) -> [Rational; 4] {
    let f = BinaryForm::new(coeffs.to_vec());
    let i = transvectant(&f, &f, 4);
    let delta = transvectant(&i, &i, 2);
    let y1 = transvectant(&f, &i, 4);
    let y2 = transvectant(&i, &y1, 2);
    let y3 = transvectant(&i, &y2, 2);
    let a = transvectant(&f, &f, 6).scalar();
    let b = transvectant(&i, &i, 4).scalar();
    let c = transvectant(&i, &delta, 4).scalar();
    let d = transvectant(&y3, &y1, 2).scalar();

    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let i2 = qi(-120) * &a;
    let i4 = qi(-720) * &a2 + qi(6750) * &b;
    let i6 = qi(8640) * &a3 - qi(108000) * &a * &b + qi(202500) * &c;
    let i10 = qi(-62208) * &a3 * &a2 + qi(972000) * &a3 * &b + qi(1620000) * &a2 * &c
        - qi(3037500) * &a * &b * &b
        - qi(6075000) * &b * &c
        - qi(4556250) * &d;
    [i2, i4, i6, i10]
}

pub(crate) const WEIGHTS: [u32; 4] = [2, 4, 6, 10];

/// Whether two tuples of weights `2, 4, 6, 10` agree in weighted projective
/// space over an algebraically closed field: same zero pattern and
/// `I_i^(w_j/g) J_j^(w_i/g) = J_i^(w_j/g) I_j^(w_i/g)` for every pair.
pub(crate) fn weighted_equal(x: &[Rational; 4], y: &[Rational; 4]) -> bool {
    for k in 0..4 {
        if x[k].is_zero() != y[k].is_zero() {
            return false;
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if x[i].is_zero() || x[j].is_zero() {
                continue;
            }
            let g = WEIGHTS[i].gcd(&WEIGHTS[j]);
            let (ei, ej) = (WEIGHTS[j] / g, WEIGHTS[i] / g);
            let lhs = num_traits::pow(x[i].clone(), ei as usize)
                * num_traits::pow(y[j].clone(), ej as usize);
            let rhs = num_traits::pow(y[i].clone(), ei as usize)
                * num_traits::pow(x[j].clone(), ej as usize);
            if lhs != rhs {
                return false;
            }
        }
    }
    !x.iter().all(|v| v.is_zero()) || y.iter().all(|v| v.is_zero())
}

/// Scale `(I2, I4, I6, I10)` by `lambda^w`.
#[cfg(test)]
pub(crate) fn scale_weighted(x: &[Rational; 4], lambda: &Rational) -> [Rational; 4] {
    let mut out = x.clone();
    for (v, &w) in out.iter_mut().zip(&WEIGHTS) {
        *v *= num_traits::pow(lambda.clone(), w as usize);
    }
    out
}
