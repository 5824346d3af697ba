//! Reference equations and classifications that `verify` compares the
//! recomputed data against. Curve labels refer to the shipped database.

/// `(D, m)` with `g(X_D / <w_m>) = 2`.
pub const GENUS2_QUOTIENTS: [(u64, u64); 39] = [
    (35, 5),
    (39, 3),
    (51, 17),
    (55, 11),
    (57, 3),
    (62, 31),
    (65, 5),
    (65, 13),
    (69, 23),
    (74, 2),
    (74, 37),
    (82, 2),
    (85, 5),
    (85, 85),
    (86, 2),
    (86, 43),
    (87, 3),
    (91, 91),
    (93, 93),
    (94, 47),
    (106, 2),
    (115, 115),
    (118, 2),
    (122, 61),
    (123, 123),
    (129, 43),
    (141, 141),
    (142, 2),
    (142, 142),
    (155, 155),
    (158, 158),
    (161, 161),
    (166, 83),
    (178, 178),
    (183, 183),
    (237, 79),
    (254, 254),
    (326, 326),
    (446, 446),
];

/// `D` with `g(X_D) = 2`.
pub const GENUS2_CURVES: [u64; 3] = [26, 38, 58];

/// Genus-two quotients carrying a bielliptic involution.
pub const BIELLIPTIC: [(u64, u64); 10] = [
    (91, 91),
    (123, 123),
    (141, 141),
    (142, 2),
    (142, 142),
    (155, 155),
    (158, 158),
    (254, 254),
    (326, 326),
    (446, 446),
];

/// Hyperelliptic quotients with two isogeny classes invariant under
/// `mu(m) w_m`, and those classes.
pub const SPLIT_HYPERELLIPTIC: [(u64, u64, &str, &str); 3] =
    [(57, 3, "B", "C"), (106, 2, "A", "C"), (118, 2, "B", "C")];

/// A model `w y^2 = f6 x^6 + f4 x^4 + f2 x^2 + f0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefModel {
    pub w: i64,
    pub f: [i64; 4],
}

const fn m1(f: [i64; 4]) -> RefModel {
    RefModel { w: 1, f }
}

/// `X_D` and its two elliptic quotients `X_D / <w_2>` and the other one.
#[derive(Debug, Clone, Copy)]
pub struct RefShimuraCurve {
    pub d: u64,
    pub model: RefModel,
    pub quotients: [&'static str; 2],
    /// Genus-two curve whose Jacobian is the new part of `J_0(D)`, glued
    /// from the strong curves of the two classes.
    pub new_part: RefModel,
    pub new_part_pair: [&'static str; 2],
    /// Field of definition of the points at infinity.
    pub infinity_field: i64,
}

pub const SHIMURA_CURVES: [RefShimuraCurve; 3] = [
    RefShimuraCurve {
        d: 26,
        model: m1([-2, 19, -24, -169]),
        quotients: ["26B2", "26A1"],
        new_part: m1([13, 10, -3, -4]),
        new_part_pair: ["26A1", "26B1"],
        infinity_field: -2,
    },
    RefShimuraCurve {
        d: 38,
        model: m1([-19, -82, -59, -16]),
        quotients: ["38B2", "38A1"],
        new_part: m1([1, 2, 1, 76]),
        new_part_pair: ["38A1", "38B1"],
        infinity_field: -19,
    },
    RefShimuraCurve {
        d: 58,
        model: RefModel {
            w: 2,
            f: [-1, -39, -431, -841],
        },
        quotients: ["58B2", "58A1"],
        new_part: m1([1, 6, -7, 16]),
        new_part_pair: ["58A1", "58B1"],
        infinity_field: -2,
    },
];

/// A candidate equation obtained by gluing `e` (quotient by `w_q`) and
/// `e_prime`.
#[derive(Debug, Clone, Copy)]
pub struct RefCandidate {
    pub d: u64,
    pub m: u64,
    pub index: usize,
    pub e: &'static str,
    pub e_prime: &'static str,
    pub model: RefModel,
    /// The equation as printed in the reference table.
    pub printed: &'static str,
    /// The printed equation repeats the `x^4` term where `x^2` is meant.
    pub misprint: bool,
    pub discarded: bool,
}

const fn cand(
    (d, m, index): (u64, u64, usize),
    (e, e_prime): (&'static str, &'static str),
    model: RefModel,
    printed: &'static str,
    discarded: bool,
) -> RefCandidate {
    RefCandidate {
        d,
        m,
        index,
        e,
        e_prime,
        model,
        printed,
        misprint: false,
        discarded,
    }
}

pub const CANDIDATES: [RefCandidate; 12] = [
    cand(
        (91, 91, 1),
        ("91B1", "91A1"),
        m1([-1, 19, -3, 1]),
        "y^2 = -x^6 + 19x^4 - 3x^2 + 1",
        false,
    ),
    cand(
        (91, 91, 2),
        ("91B2", "91A1"),
        m1([91, 43, 9, 1]),
        "y^2 = 91x^6 + 43x^4 + 9x^2 + 1",
        false,
    ),
    RefCandidate {
        misprint: true,
        ..cand(
            (91, 91, 3),
            ("91B3", "91A1"),
            RefModel {
                w: 5,
                f: [2401, -403, 3, -1],
            },
            "5y^2 = 2401x^6 - 403x^4 + 3x^4 - 1",
            true,
        )
    },
    cand(
        (123, 123, 1),
        ("123A1", "123B1"),
        m1([-9, 19, 5, 1]),
        "y^2 = -9x^6 + 19x^4 + 5x^2 + 1",
        false,
    ),
    cand(
        (123, 123, 2),
        ("123A2", "123B1"),
        m1([1681, -419, 35, -1]),
        "y^2 = 1681x^6 - 419x^4 + 35x^2 - 1",
        true,
    ),
    cand(
        (142, 2, 1),
        ("142A1", "142D1"),
        m1([8, 33, 22, 1]),
        "y^2 = 8x^6 + 33x^4 + 22x^2 + 1",
        true,
    ),
    cand(
        (142, 2, 2),
        ("142A1", "142D2"),
        m1([-16, -87, -146, -71]),
        "y^2 = -16x^6 - 87x^4 - 146x^2 - 71",
        false,
    ),
    cand(
        (155, 155, 1),
        ("155A1", "155C1"),
        m1([25, -19, 11, -1]),
        "y^2 = 25x^6 - 19x^4 + 11x^2 - 1",
        false,
    ),
    cand(
        (155, 155, 2),
        ("155A2", "155C1"),
        RefModel {
            w: 3,
            f: [961, -483, -45, -1],
        },
        "3y^2 = 961x^6 - 483x^4 - 45x^2 - 1",
        true,
    ),
    cand(
        (254, 254, 1),
        ("254A1", "254C1"),
        m1([8, 25, -18, 1]),
        "y^2 = 8x^6 + 25x^4 - 18x^2 + 1",
        false,
    ),
    cand(
        (254, 254, 2),
        ("254A2", "254C1"),
        m1([127, -461, -51, 1]),
        "y^2 = 127x^6 - 461x^4 - 51x^2 + 1",
        false,
    ),
    cand(
        (254, 254, 3),
        ("254A3", "254C1"),
        RefModel {
            w: 71,
            f: [1, -76888, -891, 2],
        },
        "71y^2 = x^6 - 76888x^4 - 891x^2 + 2",
        true,
    ),
];

/// Cases whose survivors cannot be separated without reduction types, with
/// the indices of the surviving candidates.
pub const AMBIGUOUS: [(u64, u64, [usize; 2]); 2] = [(91, 91, [1, 2]), (254, 254, [1, 2])];

/// The equation of `X_D / <w_m>` and its quotients by `w_q` and `w w_q`.
#[derive(Debug, Clone, Copy)]
pub struct RefQuotient {
    pub d: u64,
    pub m: u64,
    pub model: RefModel,
    pub e: &'static str,
    pub e_prime: &'static str,
}

const fn fin(d: u64, m: u64, f: [i64; 4], e: &'static str, e_prime: &'static str) -> RefQuotient {
    RefQuotient {
        d,
        m,
        model: m1(f),
        e,
        e_prime,
    }
}

pub const EQUATIONS: [RefQuotient; 10] = [
    fin(91, 91, [-1, 19, -3, 1], "91B1", "91A1"),
    fin(123, 123, [-9, 19, 5, 1], "123A1", "123B1"),
    fin(141, 141, [27, -5, -7, 1], "141A1", "141D1"),
    fin(142, 2, [-16, -87, -146, -71], "142A1", "142D2"),
    fin(142, 142, [16, 9, -10, 1], "142A1", "142B1"),
    fin(155, 155, [25, -19, 11, -1], "155A1", "155C1"),
    fin(158, 158, [-8, 9, 14, 1], "158A1", "158B1"),
    fin(254, 254, [8, 25, -18, 1], "254A1", "254C1"),
    fin(326, 326, [1, 10, -63, 4], "326B1", "326A1"),
    fin(446, 446, [-16, -7, 38, 1], "446B1", "446A1"),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_consistent() {
        for c in CANDIDATES {
            assert!(BIELLIPTIC.contains(&(c.d, c.m)));
        }
        for q in EQUATIONS {
            assert!(BIELLIPTIC.contains(&(q.d, q.m)));
            assert!(GENUS2_QUOTIENTS.contains(&(q.d, q.m)));
        }
        for (d, m, ..) in SPLIT_HYPERELLIPTIC {
            assert!(GENUS2_QUOTIENTS.contains(&(d, m)));
            assert!(!BIELLIPTIC.contains(&(d, m)));
        }
        assert_eq!(CANDIDATES.iter().filter(|c| c.discarded).count(), 5);
    }
}
