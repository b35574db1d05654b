//! The case table that drives the point evaluator.
//!
//! For a sub-function `f_i` on `m` variables and a mask `c` of length `m`,
//! `W_{f_i}(c)` is a short signed combination of coefficients of sub-functions
//! on `m-1 .. m-5` variables at prefixes of `c`, possibly with bit 0 or the
//! top bit of the prefix flipped. Which combination applies depends on
//! `c_{m-1}`, `c_{m-2}` and `c_{m-3}`.
//!
//! When `c_{m-1} = 0` there is one rule per family. When `c_{m-1} = 1` there
//! are three cases per family; the first term of each is the half of the sum
//! with `x_{m-1} = 0`, the remaining terms are the half with `x_{m-1} = 1`.
//! Every sign below was checked against brute-force sums over explicit tables.

use crate::rsbf::SubFamilyIndex::{self, F0, F1, F2, F3};
use std::fmt;
use std::ops::{Add, Mul};

/// `coeff * (-1)^(sum of c_{m-k} for k in sign_bits) * W_family(c')` where
/// `c'` is the first `m - shrink` bits of `c`, with bit 0 flipped when
/// `flip_low` and the top bit of `c'` flipped when `flip_top`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub coeff: i32,
    pub sign_bits: &'static [usize],
    pub family: SubFamilyIndex,
    pub shrink: usize,
    pub flip_low: bool,
    pub flip_top: bool,
}

const fn term(
    coeff: i32,
    sign_bits: &'static [usize],
    family: SubFamilyIndex,
    shrink: usize,
    flip_low: bool,
    flip_top: bool,
) -> Term {
    Term {
        coeff,
        sign_bits,
        family,
        shrink,
        flip_low,
        flip_top,
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.coeff)?;
        if !self.sign_bits.is_empty() {
            let bits: Vec<String> = self.sign_bits.iter().map(|k| format!("c[m-{k}]")).collect();
            write!(f, "*(-1)^({})", bits.join("+"))?;
        }
        write!(f, "*W_{}^(m-{})(c", self.family, self.shrink)?;
        if self.flip_low {
            f.write_str("+e_low")?;
        }
        if self.flip_top {
            f.write_str("+e_top")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseRule {
    pub family: SubFamilyIndex,
    pub label: &'static str,
    pub terms: &'static [Term],
}

impl CaseRule {
    /// Terms summing over `x_{m-1} = 1`. Only meaningful for high-bit rules.
    pub fn upper_half(&self) -> &'static [Term] {
        &self.terms[1..]
    }
}

const NONE: &[usize] = &[];

/// Rules for `c_{m-1} = 0`.
pub static LOW_TOP_RULES: [CaseRule; 4] = [
    CaseRule {
        family: F0,
        label: "top=0",
        terms: &[term(2, NONE, F0, 2, false, false), term(2, &[2], F0, 3, false, false)],
    },
    CaseRule {
        family: F1,
        label: "top=0",
        terms: &[term(2, NONE, F1, 2, false, false), term(2, &[2], F1, 3, false, false)],
    },
    CaseRule {
        family: F2,
        label: "top=0",
        terms: &[term(2, NONE, F0, 2, false, false), term(2, &[3, 2], F2, 3, false, true)],
    },
    CaseRule {
        family: F3,
        label: "top=0",
        terms: &[term(2, &[2], F1, 3, true, false)],
    },
];

/// Rules for `c_{m-1} = 1`, per family: case A, then B (`c_{m-3} = 0`), then C (`c_{m-3} = 1`).
pub static HIGH_TOP_RULES: [[CaseRule; 3]; 4] = [
    [
        CaseRule {
            family: F0,
            label: "top=1 A",
            terms: &[term(1, NONE, F0, 1, false, false), term(-2, &[3], F0, 4, false, false)],
        },
        CaseRule {
            family: F0,
            label: "top=1 B",
            terms: &[
                term(1, NONE, F0, 1, false, false),
                term(-2, NONE, F0, 4, false, false),
                term(-4, &[4], F0, 5, false, false),
            ],
        },
        CaseRule {
            family: F0,
            label: "top=1 C",
            terms: &[
                term(1, NONE, F0, 1, false, false),
                term(-2, NONE, F0, 4, false, false),
                term(-4, &[4, 5], F2, 5, false, true),
            ],
        },
    ],
    [
        CaseRule {
            family: F1,
            label: "top=1 A",
            terms: &[term(1, NONE, F1, 1, false, false), term(-2, &[3], F1, 4, false, false)],
        },
        CaseRule {
            family: F1,
            label: "top=1 B",
            terms: &[
                term(1, NONE, F1, 1, false, false),
                term(-2, NONE, F1, 4, false, false),
                term(-4, &[4], F1, 5, false, false),
            ],
        },
        CaseRule {
            family: F1,
            label: "top=1 C",
            terms: &[
                term(1, NONE, F1, 1, false, false),
                term(-2, NONE, F1, 4, false, false),
                term(-4, &[4, 5], F3, 5, true, false),
            ],
        },
    ],
    [
        CaseRule {
            family: F2,
            label: "top=1 A",
            terms: &[term(1, NONE, F0, 1, false, false), term(-2, &[3], F0, 4, false, false)],
        },
        CaseRule {
            family: F2,
            label: "top=1 B",
            terms: &[
                term(1, NONE, F0, 1, false, false),
                term(-2, NONE, F0, 4, false, false),
                term(-4, &[4], F0, 5, false, false),
            ],
        },
        CaseRule {
            family: F2,
            label: "top=1 C",
            terms: &[
                term(1, NONE, F0, 1, false, false),
                term(-2, NONE, F0, 4, false, false),
                term(-4, &[4, 5], F2, 5, false, true),
            ],
        },
    ],
    [
        CaseRule {
            family: F3,
            label: "top=1 A",
            terms: &[term(1, NONE, F1, 1, true, false), term(2, &[3], F1, 4, true, false)],
        },
        CaseRule {
            family: F3,
            label: "top=1 B",
            terms: &[
                term(1, NONE, F1, 1, true, false),
                term(2, NONE, F1, 4, true, false),
                term(4, &[4], F1, 5, true, false),
            ],
        },
        CaseRule {
            family: F3,
            label: "top=1 C",
            terms: &[
                term(1, NONE, F1, 1, true, false),
                term(2, NONE, F1, 4, true, false),
                term(4, &[4, 5], F3, 5, false, false),
            ],
        },
    ],
];

/// Value of `c_{m-2}` that selects case A under `c_{m-1} = 1`.
const CASE_A_SECOND_BIT: [bool; 4] = [true, true, false, false];

/// Which high-bit case applies, given `c_{m-2}` and `c_{m-3}`: 0, 1 or 2 for A, B, C.
pub fn high_case(family: SubFamilyIndex, second: bool, third: bool) -> usize {
    if second == CASE_A_SECOND_BIT[family.index()] {
        0
    } else if !third {
        1
    } else {
        2
    }
}

/// Pick the rule for `family` at length `m`; `bit_from_top(k)` reads `c_{m-k}`.
pub fn select_rule(family: SubFamilyIndex, bit_from_top: impl Fn(usize) -> bool) -> &'static CaseRule {
    if !bit_from_top(1) {
        &LOW_TOP_RULES[family.index()]
    } else {
        let case = high_case(family, bit_from_top(2), bit_from_top(3));
        &HIGH_TOP_RULES[family.index()][case]
    }
}

/// Sign parity `(-1)^(sum c_{m-k})` of a term as a boolean "negate".
pub fn term_negated(term: &Term, bit_from_top: &impl Fn(usize) -> bool) -> bool {
    term.sign_bits.iter().fold(false, |acc, &k| acc ^ bit_from_top(k))
}

/// Sum `terms` given sub-coefficients from `lookup`.
pub fn combine_terms<T>(terms: &[Term], bit_from_top: impl Fn(usize) -> bool, mut lookup: impl FnMut(&Term) -> T) -> T
where
    T: From<i32> + Add<Output = T> + Mul<Output = T>,
{
    terms.iter().fold(T::from(0), |acc, t| {
        let coeff = if term_negated(t, &bit_from_top) {
            -t.coeff
        } else {
            t.coeff
        };
        acc + T::from(coeff) * lookup(t)
    })
}
