//! A flat-file database of labelled elliptic curves, grouped into isogeny
//! classes with cached Atkin-Lehner signs.
//!
//! One record per line, whitespace separated:
//!
//! ```text
//! label conductor class_letter class_index a1 a2 a3 a4 a6
//! ```
//!
//! `#` starts a comment and blank lines are ignored. The label must be the
//! concatenation of conductor, class letter and class index.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::arith::{prime_factors, Rational};
use crate::elliptic::EllipticCurve;
use crate::error::{Error, Result};

/// Environment variable naming the database file.
pub const DB_ENV: &str = "SHIMURA_DB";

/// Path used when neither a flag nor the environment names a database.
pub const DEFAULT_DB: &str = "data/curves.txt";

/// Resolve the database path: explicit flag, then `SHIMURA_DB`, then the
/// default relative path.
pub fn resolve_db_path(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    match std::env::var_os(DB_ENV) {
        Some(p) if !p.is_empty() => PathBuf::from(p),
        _ => PathBuf::from(DEFAULT_DB),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRecord {
    pub label: String,
    pub conductor: u64,
    pub class_letter: String,
    pub class_index: u32,
    pub curve: EllipticCurve,
}

/// Isogeny class of a squarefree conductor. `al_signs` maps every prime
/// dividing the conductor to the eigenvalue of `w_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsogenyClass {
    pub conductor: u64,
    pub letter: String,
    pub members: Vec<CurveRecord>,
    pub al_signs: BTreeMap<u64, i8>,
}

impl IsogenyClass {
    /// Label such as `91B`.
    pub fn label(&self) -> String {
        format!("{}{}", self.conductor, self.letter)
    }

    /// The member with class index 1, or the first member if absent.
    pub fn strong_curve(&self) -> &CurveRecord {
        self.members
            .iter()
            .find(|r| r.class_index == 1)
            .unwrap_or(&self.members[0])
    }

    pub fn member(&self, index: u32) -> Option<&CurveRecord> {
        self.members.iter().find(|r| r.class_index == index)
    }

    /// Eigenvalue of `w_m` for a divisor `m` of the conductor: the product
    /// of the signs at the primes dividing `m`.
    pub fn sign_of(&self, m: u64) -> i8 {
        prime_factors(m)
            .into_iter()
            .map(|p| self.al_signs.get(&p).copied().unwrap_or(1))
            .product()
    }

    /// Signs at the primes of the conductor, in increasing order of prime.
    pub fn sign_pattern(&self) -> Vec<i8> {
        self.al_signs.values().copied().collect()
    }
}

impl fmt::Display for IsogenyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// `(-1)^(number of primes dividing m)`.
pub fn mobius_sign(m: u64) -> i8 {
    if prime_factors(m).len() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn format_pattern(p: &[i8]) -> String {
    let s: Vec<&str> = p.iter().map(|&s| if s > 0 { "+" } else { "-" }).collect();
    format!("({})", s.join(","))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CurveDb {
    classes: BTreeMap<(u64, String), IsogenyClass>,
    labels: BTreeMap<String, (u64, String)>,
}

impl CurveDb {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Parse database text; `source` is only used in error messages.
    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut records: BTreeMap<String, CurveRecord> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse {
                path: source.to_string(),
                line: i + 1,
                msg,
            };
            let rec = parse_record(line).map_err(perr)?;
            if records.contains_key(&rec.label) {
                return Err(perr(format!("duplicate label {}", rec.label)));
            }
            records.insert(rec.label.clone(), rec);
        }

        let mut grouped: BTreeMap<(u64, String), Vec<CurveRecord>> = BTreeMap::new();
        for rec in records.into_values() {
            grouped
                .entry((rec.conductor, rec.class_letter.clone()))
                .or_default()
                .push(rec);
        }
        let mut db = CurveDb::default();
        for (key, mut members) in grouped {
            members.sort_by_key(|r| r.class_index);
            let class = build_class(key.0, key.1.clone(), members)?;
            for r in &class.members {
                db.labels.insert(r.label.clone(), key.clone());
            }
            db.classes.insert(key, class);
        }
        Ok(db)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn conductors(&self) -> BTreeSet<u64> {
        self.classes.keys().map(|k| k.0).collect()
    }

    /// Isogeny classes of conductor `n`, ordered by letter.
    pub fn classes(&self, n: u64) -> Vec<&IsogenyClass> {
        self.classes
            .range((n, String::new())..)
            .take_while(|(k, _)| k.0 == n)
            .map(|(_, c)| c)
            .collect()
    }

    pub fn all_classes(&self) -> impl Iterator<Item = &IsogenyClass> {
        self.classes.values()
    }

    pub fn class(&self, n: u64, letter: &str) -> Option<&IsogenyClass> {
        self.classes.get(&(n, letter.to_string()))
    }

    pub fn curve(&self, label: &str) -> Option<&CurveRecord> {
        let key = self.labels.get(label)?;
        self.classes[key].members.iter().find(|r| r.label == label)
    }

    /// The classes attached to the two newforms of level `d = p q` whose
    /// Atkin-Lehner signs `(w_p, w_q)` are `(-,-)` and, respectively,
    /// `(+,+)` when `m = d` or `-` at `m` and `+` at the other prime when
    /// `m` is prime.
    pub fn select_classes_by_al(&self, d: u64, m: u64) -> Result<(&IsogenyClass, &IsogenyClass)> {
        let primes = prime_factors(d);
        if primes.len() != 2 || primes[0] * primes[1] != d || m <= 1 || d % m != 0 {
            return Err(Error::InvalidCase(format!(
                "need d = p*q squarefree and 1 < m | d, got ({d}, {m})"
            )));
        }
        let f_pattern = vec![-1i8, -1];
        let fp_pattern: Vec<i8> = if m == d {
            vec![1, 1]
        } else {
            primes
                .iter()
                .map(|&p| if p == m { -1 } else { 1 })
                .collect()
        };
        let classes = self.classes(d);
        let matching = |pat: &[i8]| -> Vec<&IsogenyClass> {
            classes
                .iter()
                .copied()
                .filter(|c| c.sign_pattern() == pat)
                .collect()
        };
        let f = matching(&f_pattern);
        let fp = matching(&fp_pattern);
        if f.len() != 1 || fp.len() != 1 {
            let names = |v: &[&IsogenyClass]| {
                if v.is_empty() {
                    "none".to_string()
                } else {
                    v.iter().map(|c| c.label()).collect::<Vec<_>>().join(", ")
                }
            };
            return Err(Error::Database(format!(
                "level {d}, m = {m}: pattern {} matches {}; pattern {} matches {}",
                format_pattern(&f_pattern),
                names(&f),
                format_pattern(&fp_pattern),
                names(&fp)
            )));
        }
        let mu = mobius_sign(m);
        for c in [f[0], fp[0]] {
            if mu * c.sign_of(m) != 1 {
                return Err(Error::Internal(format!(
                    "class {} is not invariant under the twisted w_{m}",
                    c.label()
                )));
            }
        }
        Ok((f[0], fp[0]))
    }

    /// Number of classes of conductor `d` fixed by `mu(m) w_m`.
    pub fn count_invariant_classes(&self, d: u64, m: u64) -> usize {
        self.invariant_classes(d, m).len()
    }

    pub fn invariant_classes(&self, d: u64, m: u64) -> Vec<&IsogenyClass> {
        let mu = mobius_sign(m);
        self.classes(d)
            .into_iter()
            .filter(|c| mu * c.sign_of(m) == 1)
            .collect()
    }
}

fn parse_record(line: &str) -> std::result::Result<CurveRecord, String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 9 {
        return Err(format!("expected 9 fields, found {}", fields.len()));
    }
    let conductor: u64 = fields[1]
        .parse()
        .map_err(|_| format!("bad conductor {:?}", fields[1]))?;
    let letter = fields[2].to_string();
    if letter.is_empty() || !letter.chars().all(|c| c.is_ascii_alphabetic()) {
        return Err(format!("bad class letter {letter:?}"));
    }
    let index: u32 = fields[3]
        .parse()
        .ok()
        .filter(|&i| i > 0)
        .ok_or_else(|| format!("bad class index {:?}", fields[3]))?;
    let label = fields[0].to_string();
    if label != format!("{conductor}{letter}{index}") {
        return Err(format!(
            "label {label} does not match {conductor} {letter} {index}"
        ));
    }
    let mut a = Vec::with_capacity(5);
    for s in &fields[4..] {
        a.push(Rational::from_str(s).map_err(|_| format!("bad coefficient {s:?}"))?);
    }
    let a: [Rational; 5] = a.try_into().expect("five coefficients");
    let curve = EllipticCurve::new(a).map_err(|e| format!("{label}: {e}"))?;
    Ok(CurveRecord {
        label,
        conductor,
        class_letter: letter,
        class_index: index,
        curve,
    })
}

fn build_class(conductor: u64, letter: String, members: Vec<CurveRecord>) -> Result<IsogenyClass> {
    let label = format!("{conductor}{letter}");
    let primes = prime_factors(conductor);
    if primes.iter().product::<u64>() != conductor {
        return Err(Error::Database(format!(
            "class {label}: conductor {conductor} is not squarefree"
        )));
    }
    let mut al_signs = BTreeMap::new();
    for &p in &primes {
        let mut sign = None;
        for r in &members {
            let s = r
                .curve
                .atkin_lehner_sign(p)
                .map_err(|e| Error::Database(format!("{} at {p}: {e}", r.label)))?;
            match sign {
                None => sign = Some(s),
                Some(prev) if prev != s => {
                    return Err(Error::Database(format!(
                        "class {label}: inconsistent Atkin-Lehner signs at {p}"
                    )))
                }
                _ => {}
            }
        }
        al_signs.insert(p, sign.expect("classes are nonempty"));
    }
    Ok(IsogenyClass {
        conductor,
        letter,
        members,
        al_signs,
    })
}
