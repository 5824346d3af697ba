use std::collections::BTreeSet;

use num_traits::{One, Zero};
use proptest::prelude::*;

use shimura::arith::{
    count_real_roots, kronecker_symbol, q, qi, rational_roots, squarefree_part, Rational, UniPoly,
};
use shimura::gluing::{
    igusa_clebsch, isomorphic_over_closure, normalize_integral, quotient_curves, solve_gluing,
    EvenSexticModel,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (1i64..=12).prop_flat_map(|d| (-5 * d..=5 * d).prop_map(move |n| q(n, d)))
}

fn poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-9i64..=9, 1..7).prop_map(|c| UniPoly::from_ints(&c))
}

fn linear(r: &Rational) -> UniPoly {
    UniPoly::new(vec![-r.clone(), Rational::one()])
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if *r > Rational::zero() {
        1
    } else {
        -1
    }
}

/// Sign changes of `p` on the grid `(2k + 1) / 4000` covering `[-5, 5]`.
/// Rationals with denominator at most 12 are never grid points and lie at
/// least `1/144` apart and `1/400` away from `sqrt(2)`, more than the grid
/// spacing.
fn count_by_grid(p: &UniPoly) -> usize {
    let signs: Vec<i8> = (-10_001..=10_000)
        .map(|k| sign(&p.eval(&q(2 * k + 1, 4000))))
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn model() -> impl Strategy<Value = EvenSexticModel> {
    (
        prop::array::uniform4(-30i64..=30),
        prop_oneof![Just(1i64), Just(-1), Just(2), Just(-3), Just(5)],
    )
        .prop_filter_map("degenerate sextic", |(f, w)| {
            EvenSexticModel::from_ints(w, f).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sturm_counts_known_roots(
        roots in prop::collection::btree_set(rational(), 0..5),
        shift in 1i64..=20,
    ) {
        // times x^2 + shift, which has no real root
        let base = UniPoly::from_ints(&[shift, 0, 1]);
        let p = roots.iter().fold(base, |acc, r| &acc * &linear(r));
        prop_assert_eq!(count_real_roots(&p).unwrap(), roots.len());
        prop_assert_eq!(rational_roots(&p).unwrap(), roots.clone());
    }

    #[test]
    fn sturm_agrees_with_sign_changes(roots in prop::collection::btree_set(small_rational(), 1..4)) {
        let p = roots.iter().fold(UniPoly::from_ints(&[-2, 0, 1]), |acc, r| &acc * &linear(r));
        prop_assert_eq!(count_real_roots(&p).unwrap(), roots.len() + 2);
        prop_assert_eq!(count_by_grid(&p), roots.len() + 2);
    }

    #[test]
    fn rational_roots_of_products(p in poly(), r in poly()) {
        prop_assume!(!p.is_zero() && !r.is_zero());
        let union: BTreeSet<Rational> =
            rational_roots(&p).unwrap().union(&rational_roots(&r).unwrap()).cloned().collect();
        prop_assert_eq!(rational_roots(&(&p * &r)).unwrap(), union);
    }

    #[test]
    fn rational_roots_are_roots(p in poly()) {
        prop_assume!(!p.is_zero());
        for x in rational_roots(&p).unwrap() {
            prop_assert!(p.eval(&x).is_zero());
        }
    }

    #[test]
    fn squarefree_part_is_stable(p in poly(), r in poly()) {
        prop_assume!(p.degree().unwrap_or(0) > 0 && r.degree().unwrap_or(0) > 0);
        let s = p.squarefree_part();
        prop_assert!(s.is_squarefree());
        prop_assert!(p.div_rem(&s).1.is_zero());
        prop_assert_eq!((&s * &s).squarefree_part(), s.clone());
        prop_assert_eq!((&(&p * &p) * &p).squarefree_part(), s.clone());
        let both = (&p * &r).squarefree_part();
        prop_assert!(both.div_rem(&s).1.is_zero());
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_root(p in poly()) {
        prop_assume!(p.degree().unwrap_or(0) > 0);
        let repeated = p.gcd(&p.derivative()).degree() != Some(0);
        prop_assert_eq!(p.discriminant().unwrap().is_zero(), repeated);
        prop_assert_eq!(p.is_squarefree(), !repeated);
    }

    #[test]
    fn kronecker_is_multiplicative(a in -10_000i64..10_000, b in -10_000i64..10_000,
                                   m in -5_000i64..5_000, n in 1i64..5_000) {
        prop_assume!(m != 0);
        prop_assert_eq!(kronecker_symbol(a, m * n), kronecker_symbol(a, m) * kronecker_symbol(a, n));
        prop_assert_eq!(kronecker_symbol(a * b, n), kronecker_symbol(a, n) * kronecker_symbol(b, n));
    }

    #[test]
    fn squarefree_part_of_rationals(n in 1i64..5_000, d in 1i64..5_000, k in 1i64..30, neg in any::<bool>()) {
        let s = if neg { -1 } else { 1 };
        let r = q(s * n, d);
        let scaled = &r * q(k * k, 1);
        prop_assert_eq!(squarefree_part(&r).unwrap(), squarefree_part(&scaled).unwrap());
        let sf = squarefree_part(&r).unwrap();
        // r / sf is a rational square
        prop_assert!(shimura::arith::rational_sqrt(&(r / qi(sf))).is_some());
    }

    #[test]
    fn gluing_recovers_the_model(m in model()) {
        let (e1, e2) = quotient_curves(&m).unwrap();
        let sols = solve_gluing(&e1, &e2).unwrap();
        prop_assert!(sols.iter().any(|s| isomorphic_over_closure(&s.model().unwrap(), &m)));
        for s in &sols {
            let (u1, u2) = quotient_curves(&s.model().unwrap()).unwrap();
            prop_assert!(u1.is_isomorphic_over_q(&e1) && u2.is_isomorphic_over_q(&e2));
        }
    }

    #[test]
    fn normalization_preserves_the_curve(m in model(), num in 1i64..50, den in 1i64..50) {
        // w y^2 = f and (w t^2) y^2 = f describe the same curve
        let t = q(num, den);
        let w = m.w() * &t * &t;
        let scaled = EvenSexticModel::new(w, m.coefficients().clone()).unwrap();
        let a = normalize_integral(&m).unwrap();
        prop_assert_eq!(normalize_integral(&scaled).unwrap(), a.clone());
        prop_assert_eq!(normalize_integral(&a).unwrap(), a.clone());
        prop_assert!(isomorphic_over_closure(&a, &m));
    }

    #[test]
    fn invariants_of_substitutions(m in model(), num in 1i64..9, den in 1i64..9) {
        // x -> lambda x and x -> 1/x
        let l = q(num, den);
        let l2 = &l * &l;
        let [f6, f4, f2, f0] = m.coefficients().clone();
        let sub = EvenSexticModel::new(
            m.w().clone(),
            [f6 * &l2 * &l2 * &l2, f4 * &l2 * &l2, f2 * &l2, f0],
        ).unwrap();
        prop_assert!(igusa_clebsch(&m).weighted_eq(&igusa_clebsch(&sub)));
        prop_assert!(isomorphic_over_closure(&m, &m.reversed()));
    }
}
