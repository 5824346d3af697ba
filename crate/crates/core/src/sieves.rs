//! Arithmetic tests that discard candidate models of `X_D / <w_m>`: the
//! field of definition of the fixed points of the bielliptic involution,
//! the existence of real points, and the primes of bad reduction.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{count_real_roots, kronecker_symbol, prime_factors, qi, squarefree_part};
use crate::error::{Error, Result};
use crate::gluing::{fixed_point_field, normalize_integral, EvenSexticModel};
use crate::quadforms::{class_number, ring_class_quadratic_subfields, NegDiscriminant};

fn two_primes(d: u64) -> Result<(u64, u64)> {
    match prime_factors(d)[..] {
        [p, q] if p * q == d => Ok((p, q)),
        _ => Err(Error::InvalidCase(format!(
            "{d} is not a product of two primes"
        ))),
    }
}

/// Fields `Q(sqrt(s))` that may contain the fixed points of `w_q` on
/// `X_D / <w_D>`, `D = p q` with `p < q`. They are images of the CM points
/// by the order of discriminant `-4p`: rational when `h(-4p) = 1`, and
/// defined over one of the quadratic fields `K != Q(sqrt(-p))` inside the
/// ring class field when `h(-4p) = 2`.
pub fn heegner_expected_fields(d: u64, m: u64) -> Result<BTreeSet<i64>> {
    let (p, _) = two_primes(d)?;
    if m != d {
        return Err(Error::InvalidCase(format!(
            "fixed-point fields are only predicted for m = D, got ({d}, {m})"
        )));
    }
    let disc = NegDiscriminant::new(-4 * p as i64)?;
    match class_number(disc) {
        1 => Ok(BTreeSet::from([1])),
        2 => {
            let mut fields = ring_class_quadratic_subfields(disc)?;
            fields.remove(&squarefree_part(&qi(disc.value()))?);
            Ok(fields)
        }
        h => Err(Error::UnsupportedClassNumber(h)),
    }
}

pub fn heegner_sieve(model: &EvenSexticModel, d: u64, m: u64) -> Result<bool> {
    let expected = heegner_expected_fields(d, m)?;
    Ok(expected.contains(&fixed_point_field(model)?))
}

/// Ogg's criterion: `X_D / <w_m>` has real points iff `(m | p) != 1` for
/// every prime `p | D` not dividing `m`. `m = 1` gives `X_D`, which never
/// has real points.
pub fn ogg_real_points(d: u64, m: u64) -> bool {
    prime_factors(d)
        .into_iter()
        .filter(|p| m % p != 0)
        .all(|p| kronecker_symbol(m as i64, p as i64) != 1)
}

/// Whether `w y^2 = f(x)` has a real point, counting the two points at
/// infinity: either `f6 / w > 0` or `f / w` is somewhere nonnegative, which
/// for squarefree `f` of even degree with `f6 / w < 0` means `f` has a real
/// root.
pub fn model_has_real_points(model: &EvenSexticModel) -> Result<bool> {
    if (model.f6() * model.w()).is_positive() {
        return Ok(true);
    }
    Ok(count_real_roots(&model.sextic())? > 0)
}

/// Primes dividing `D` that do not divide `w f6 disc(f)` of the integral
/// normalization. Any such prime is of good reduction for the model, which
/// is impossible for a curve with bad reduction at every prime of `D`.
pub fn support_gaps(model: &EvenSexticModel, d: u64) -> Result<Vec<u64>> {
    let m = normalize_integral(model)?;
    let disc = m.sextic().discriminant()?;
    let product = m.w() * m.f6() * disc;
    debug_assert!(product.is_integer() && !product.is_zero());
    let n = product.to_integer();
    Ok(prime_factors(d)
        .into_iter()
        .filter(|&p| !(&n % BigInt::from(p)).is_zero())
        .collect())
}

pub fn support_sieve(model: &EvenSexticModel, d: u64) -> Result<bool> {
    Ok(support_gaps(model, d)?.is_empty())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "n/a",
        })
    }
}

fn outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Overall {
    Accept,
    Reject,
    Ambiguous,
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Overall::Accept => "accept",
            Overall::Reject => "reject",
            Overall::Ambiguous => "ambiguous",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveVerdict {
    pub id: String,
    pub heegner: Outcome,
    /// Fields allowed for the fixed points; empty when not applicable.
    pub heegner_expected: BTreeSet<i64>,
    pub heegner_observed: i64,
    pub real_points: Outcome,
    pub ogg_prediction: bool,
    pub model_real_points: bool,
    /// Advisory; a failure never rejects a candidate by itself.
    pub support: Outcome,
    pub support_gaps: Vec<u64>,
    pub overall: Overall,
}

impl SieveVerdict {
    pub fn survives(&self) -> bool {
        self.overall != Overall::Reject
    }
}

impl fmt::Display for SieveVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: heegner {}", self.id, self.heegner)?;
        if self.heegner != Outcome::NotApplicable {
            let exp: Vec<String> = self
                .heegner_expected
                .iter()
                .map(|s| s.to_string())
                .collect();
            write!(
                f,
                " (field {}, allowed {{{}}})",
                self.heegner_observed,
                exp.join(", ")
            )?;
        }
        write!(
            f,
            ", real points {} (Ogg {}, model {}), support {}",
            self.real_points, self.ogg_prediction, self.model_real_points, self.support
        )?;
        if !self.support_gaps.is_empty() {
            let gaps: Vec<String> = self.support_gaps.iter().map(|p| p.to_string()).collect();
            write!(f, " (missing {})", gaps.join(", "))?;
        }
        write!(f, " => {}", self.overall)
    }
}

/// Runs every applicable sieve on each `(id, model)`. Survivors are
/// accepted when unique and marked ambiguous otherwise.
pub fn run_sieves(
    candidates: &[(String, EvenSexticModel)],
    d: u64,
    m: u64,
) -> Result<Vec<SieveVerdict>> {
    let ogg = ogg_real_points(d, m);
    let expected = if m == d {
        Some(heegner_expected_fields(d, m)?)
    } else {
        None
    };
    let mut out = Vec::with_capacity(candidates.len());
    for (id, model) in candidates {
        let observed = fixed_point_field(model)?;
        let heegner = match &expected {
            Some(e) => outcome(e.contains(&observed)),
            None => Outcome::NotApplicable,
        };
        let model_real = model_has_real_points(model)?;
        let real_points = outcome(model_real == ogg);
        let gaps = support_gaps(model, d)?;
        let rejected = heegner == Outcome::Fail || real_points == Outcome::Fail;
        out.push(SieveVerdict {
            id: id.clone(),
            heegner,
            heegner_expected: expected.clone().unwrap_or_default(),
            heegner_observed: observed,
            real_points,
            ogg_prediction: ogg,
            model_real_points: model_real,
            support: outcome(gaps.is_empty()),
            support_gaps: gaps,
            overall: if rejected {
                Overall::Reject
            } else {
                Overall::Accept
            },
        });
    }
    let survivors = out.iter().filter(|v| v.survives()).count();
    if survivors > 1 {
        for v in out.iter_mut().filter(|v| v.survives()) {
            v.overall = Overall::Ambiguous;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(w: i64, f: [i64; 4]) -> EvenSexticModel {
        EvenSexticModel::from_ints(w, f).unwrap()
    }

    #[test]
    fn expected_fields() {
        assert_eq!(
            heegner_expected_fields(91, 91).unwrap(),
            BTreeSet::from([1])
        );
        assert_eq!(
            heegner_expected_fields(155, 155).unwrap(),
            BTreeSet::from([-1, 5])
        );
        assert_eq!(
            heegner_expected_fields(254, 254).unwrap(),
            BTreeSet::from([1])
        );
        assert_eq!(
            heegner_expected_fields(123, 123).unwrap(),
            BTreeSet::from([1])
        );
        assert!(heegner_expected_fields(142, 2).is_err());
        // h(-4 * 23) = 3
        assert_eq!(
            heegner_expected_fields(23 * 29, 23 * 29),
            Err(Error::UnsupportedClassNumber(3))
        );
    }

    #[test]
    fn heegner() {
        assert!(!heegner_sieve(&model(5, [2401, -403, 3, -1]), 91, 91).unwrap());
        assert!(heegner_sieve(&model(1, [-1, 19, -3, 1]), 91, 91).unwrap());
        assert!(heegner_sieve(&model(1, [25, -19, 11, -1]), 155, 155).unwrap());
    }

    #[test]
    fn ogg() {
        assert!(!ogg_real_points(142, 2));
        assert!(ogg_real_points(91, 91));
        for d in [26, 38, 58, 91, 142] {
            assert!(!ogg_real_points(d, 1));
        }
        // (2 | 13) = -1
        assert!(ogg_real_points(26, 2));
    }

    #[test]
    fn real_points_of_models() {
        assert!(!model_has_real_points(&model(1, [-16, -87, -146, -71])).unwrap());
        assert!(model_has_real_points(&model(1, [8, 33, 22, 1])).unwrap());
        assert!(model_has_real_points(&model(1, [1, 0, 0, 1])).unwrap());
        // negative everywhere except near 0
        assert!(model_has_real_points(&model(1, [-1, 19, -3, 1])).unwrap());
        assert!(!model_has_real_points(&model(-1, [1, 0, 0, 1])).unwrap());
    }

    #[test]
    fn support() {
        assert!(support_sieve(&model(1, [-2, 19, -24, -169]), 26).unwrap());
        assert!(support_sieve(&model(1, [-1, 19, -3, 1]), 91).unwrap());
        assert_eq!(
            support_gaps(&model(1, [1, 0, 0, 1]), 91).unwrap(),
            vec![7, 13]
        );
    }

    #[test]
    fn aggregation() {
        let cands = vec![
            ("1".to_string(), model(1, [8, 33, 22, 1])),
            ("2".to_string(), model(1, [-16, -87, -146, -71])),
        ];
        let v = run_sieves(&cands, 142, 2).unwrap();
        assert_eq!(v[0].overall, Overall::Reject);
        assert_eq!(v[0].heegner, Outcome::NotApplicable);
        assert_eq!(v[1].overall, Overall::Accept);
        let cands = vec![
            ("1".to_string(), model(1, [-1, 19, -3, 1])),
            ("2".to_string(), model(1, [91, 43, 9, 1])),
            ("3".to_string(), model(5, [2401, -403, 3, -1])),
        ];
        let v = run_sieves(&cands, 91, 91).unwrap();
        let overall: Vec<Overall> = v.iter().map(|v| v.overall).collect();
        assert_eq!(
            overall,
            vec![Overall::Ambiguous, Overall::Ambiguous, Overall::Reject]
        );
    }
}
