//! Brute-force-backed checks of the case table and of the coefficient bound
//! for the sub-functions. These build explicit tables, so sizes are limited
//! by the table cap.

use super::cases::{combine_terms, high_case, Term, HIGH_TOP_RULES};
use super::sequence::F3Sequences;
use crate::boolfn::{LinearMask, TableCap};
use crate::error::{Error, Result};
use crate::rsbf::{subfunction, RestrictedSumOracle, SubFamilyIndex};
use crate::walsh::{walsh_spectrum, WalshSpectrum};
use num_bigint::BigInt;

/// Explicit spectra of all four sub-functions at lengths `lo..=hi`.
struct SpectraByLength {
    lo: usize,
    spectra: Vec<[WalshSpectrum; 4]>,
}

impl SpectraByLength {
    fn build(lo: usize, hi: usize, cap: TableCap) -> Result<Self> {
        let mut spectra = Vec::new();
        for m in lo..=hi {
            let mut row = Vec::with_capacity(4);
            for i in SubFamilyIndex::ALL {
                row.push(walsh_spectrum(&subfunction(i, m)?.to_table(cap)?));
            }
            spectra.push(row.try_into().expect("four families"));
        }
        Ok(SpectraByLength { lo, spectra })
    }

    fn get(&self, family: SubFamilyIndex, m: usize) -> &WalshSpectrum {
        &self.spectra[m - self.lo][family.index()]
    }

    /// Coefficient of `family` on `len` variables at the prefix of `c`, with the term's flips applied.
    fn term_value(&self, t: &Term, c: u64, n: usize) -> i64 {
        let len = n - t.shrink;
        let mut idx = c & ((1u64 << len) - 1);
        if t.flip_low {
            idx ^= 1;
        }
        if t.flip_top {
            idx ^= 1 << (len - 1);
        }
        self.get(t.family, len).get(idx)
    }
}

/// One candidate form of the `x_{m-1} = 1` half for a (family, case) pair.
#[derive(Debug, Clone)]
pub struct RuleCandidate {
    pub family: SubFamilyIndex,
    pub case: usize,
    pub description: String,
    pub terms: Vec<Term>,
    /// Whether this is the form the evaluator's table uses.
    pub in_table: bool,
}

/// The table's own upper-half terms, plus the alternative spellings of the
/// five-shorter term that a hand derivation could plausibly produce for `f0`
/// and `f2`: the case-B term on `f2` or `f1` instead of `f0`, and the case-C
/// term on `f1` instead of `f2`.
pub fn rule_candidates() -> Vec<RuleCandidate> {
    let mut out = Vec::new();
    for family in SubFamilyIndex::ALL {
        for (case, rule) in HIGH_TOP_RULES[family.index()].iter().enumerate() {
            let upper: Vec<Term> = rule.upper_half().to_vec();
            out.push(RuleCandidate {
                family,
                case,
                description: describe(&upper),
                terms: upper.clone(),
                in_table: true,
            });
            if matches!(family, SubFamilyIndex::F0 | SubFamilyIndex::F2) && case > 0 {
                let alternatives: &[SubFamilyIndex] = if case == 1 {
                    &[SubFamilyIndex::F2, SubFamilyIndex::F1]
                } else {
                    &[SubFamilyIndex::F1]
                };
                for &alt in alternatives {
                    let mut terms = upper.clone();
                    let last = terms.last_mut().expect("case B/C have a shrink-5 term");
                    last.family = alt;
                    out.push(RuleCandidate {
                        family,
                        case,
                        description: describe(&terms),
                        terms,
                        in_table: false,
                    });
                }
            }
        }
    }
    out
}

fn describe(terms: &[Term]) -> String {
    terms.iter().map(Term::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjudicationWitness {
    pub n: usize,
    pub mask: u64,
    pub oracle: i64,
    pub candidate: i64,
}

#[derive(Debug, Clone)]
pub struct CandidateOutcome {
    pub candidate: RuleCandidate,
    pub checked: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<AdjudicationWitness>,
}

impl CandidateOutcome {
    pub fn accepted(&self) -> bool {
        self.checked > 0 && self.mismatches == 0
    }
}

#[derive(Debug, Clone)]
pub struct AdjudicationReport {
    pub n_lo: usize,
    pub n_hi: usize,
    pub outcomes: Vec<CandidateOutcome>,
}

impl AdjudicationReport {
    /// Every table rule is accepted and every alternative rejected.
    pub fn table_confirmed(&self) -> bool {
        self.outcomes.iter().all(|o| o.accepted() == o.candidate.in_table)
    }
}

/// Compare every candidate upper-half form against the restricted-sum oracle
/// for all masks with `c_{n-1} = 1` and `n_lo <= n <= n_hi`.
pub fn adjudicate_high_rules(n_lo: usize, n_hi: usize, cap: TableCap) -> Result<AdjudicationReport> {
    if n_lo < 9 || n_hi < n_lo {
        return Err(Error::arg(format!(
            "adjudication range must satisfy 9 <= lo <= hi, got {n_lo}..={n_hi}"
        )));
    }
    cap.check(n_hi)?;
    let spectra = SpectraByLength::build(n_lo - 5, n_hi - 4, cap)?;
    let mut outcomes: Vec<CandidateOutcome> = rule_candidates()
        .into_iter()
        .map(|candidate| CandidateOutcome {
            candidate,
            checked: 0,
            mismatches: 0,
            first_mismatch: None,
        })
        .collect();
    for n in n_lo..=n_hi {
        for family in SubFamilyIndex::ALL {
            let oracle = RestrictedSumOracle::new(family, n, cap)?;
            for c in (1u64 << (n - 1))..(1u64 << n) {
                let bit_from_top = |k: usize| (c >> (n - k)) & 1 == 1;
                let case = high_case(family, bit_from_top(2), bit_from_top(3));
                let expected = oracle.eval(&LinearMask::new(n, c)?)?;
                for o in outcomes
                    .iter_mut()
                    .filter(|o| o.candidate.family == family && o.candidate.case == case)
                {
                    let got: i64 = combine_terms(&o.candidate.terms, bit_from_top, |t| spectra.term_value(t, c, n));
                    o.checked += 1;
                    if got != expected {
                        o.mismatches += 1;
                        o.first_mismatch.get_or_insert(AdjudicationWitness {
                            n,
                            mask: c,
                            oracle: expected,
                            candidate: got,
                        });
                    }
                }
            }
        }
    }
    Ok(AdjudicationReport { n_lo, n_hi, outcomes })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub n: usize,
    /// `W_F3(0)` on `n + 2` variables; the claim is `4 |W_{f_i}(c)| < bound`.
    pub bound: BigInt,
    pub max_abs: u64,
    pub witness_family: SubFamilyIndex,
    pub witness_mask: u64,
}

impl BoundRow {
    pub fn holds(&self) -> bool {
        BigInt::from(self.max_abs) * 4 < self.bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub restrict_c1: bool,
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(BoundRow::holds)
    }
}

/// For each `n`, the largest `|W_{f_i}(c)|` over all four families and all
/// `c != 0` (or only `c` with `c_1 = 1`), against `W_F3(0)` on `n + 2` variables.
pub fn check_subfunction_bound(n_lo: usize, n_hi: usize, restrict_c1: bool, cap: TableCap) -> Result<BoundReport> {
    if n_lo < 3 || n_hi < n_lo {
        return Err(Error::arg(format!(
            "bound range must satisfy 3 <= lo <= hi, got {n_lo}..={n_hi}"
        )));
    }
    if n_hi + 2 > cap.get() {
        return Err(Error::TooManyVariables {
            n: n_hi + 2,
            cap: cap.get(),
        });
    }
    let seq = F3Sequences::compute(n_hi + 2)?;
    let mut rows = Vec::new();
    for n in n_lo..=n_hi {
        let mut best: Option<(u64, SubFamilyIndex, u64)> = None;
        for family in SubFamilyIndex::ALL {
            let spec = walsh_spectrum(&subfunction(family, n)?.to_table(cap)?);
            for (c, v) in spec.values().iter().enumerate().skip(1) {
                if restrict_c1 && c & 2 == 0 {
                    continue;
                }
                let a = v.unsigned_abs();
                if best.is_none_or(|(b, _, _)| a > b) {
                    best = Some((a, family, c as u64));
                }
            }
        }
        let (max_abs, witness_family, witness_mask) = best.expect("n >= 3 has nonzero masks");
        rows.push(BoundRow {
            n,
            bound: seq.zero_value(n + 2).clone(),
            max_abs,
            witness_family,
            witness_mask,
        });
    }
    Ok(BoundReport { restrict_c1, rows })
}
