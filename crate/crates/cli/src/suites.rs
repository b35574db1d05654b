//! Verification suites. Each suite is a list of checks; a check either
//! passes or carries a concrete witness. Work inside a check may be spread
//! across the rayon pool, but results are always collected in a fixed order.

use crate::error::{CliError, CliResult};
use crate::report::{CheckRecord, SuiteReport};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rotsym_core::recurrence::{
    adjudicate_high_rules, check_subfunction_bound, eval_f3_point, eval_subfunction_point, f3_zero_value,
    sandwich_from, F3Sequences, F3_POINT_MIN_N,
};
use rotsym_core::reference::{F3_ZERO_VALUES, SUBFAMILY_SPECTRA_N6};
use rotsym_core::rsbf::{cubic_rsbf, subfunction};
use rotsym_core::walsh::{nonlinearity, walsh_spectrum};
use rotsym_core::{BitMask, LinearMask, StructuredMask, SubFamilyIndex, TableCap, WalshSpectrum};
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

/// Upper end of the big-integer sequence checks.
pub const SEQUENCE_MAX_N: usize = 10_000;
/// Sizes used for the structured-mask checks beyond table range.
pub const SCALE_SIZES: [usize; 3] = [50, 200, 1000];
/// Seed for every sampled mask, so reports never depend on the run.
pub const SAMPLE_SEED: u64 = 0x5eed_f3f3;

const ENGINE_MAX_N: usize = 14;
const ADJUDICATION_RANGE: (usize, usize) = (9, 13);
const BOUND_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Theorem,
    Lemmas,
    Recurrences,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Theorem => "theorem",
            Suite::Lemmas => "lemmas",
            Suite::Recurrences => "recurrences",
            Suite::All => "all",
        }
    }

    fn needs_tables(self) -> bool {
        !matches!(self, Suite::Tables)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "tables" => Ok(Suite::Tables),
            "theorem" => Ok(Suite::Theorem),
            "lemmas" => Ok(Suite::Lemmas),
            "recurrences" => Ok(Suite::Recurrences),
            "all" => Ok(Suite::All),
            _ => Err(CliError::usage(format!(
                "unknown suite {s:?} (expected tables, theorem, lemmas, recurrences or all)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub cap: TableCap,
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> CliResult<SuiteReport> {
    if config.max_n < 3 {
        return Err(CliError::usage(format!(
            "--max-n must be at least 3, got {}",
            config.max_n
        )));
    }
    if suite.needs_tables() && config.max_n > config.cap.get() {
        return Err(CliError::usage(format!(
            "--max-n {} exceeds the table cap of {} variables (raise --max-table-vars)",
            config.max_n,
            config.cap.get()
        )));
    }
    let start = Instant::now();
    let mut records = Vec::new();
    if matches!(suite, Suite::Tables | Suite::All) {
        records.extend(tables_checks(config.cap)?);
    }
    if matches!(suite, Suite::Theorem | Suite::All) {
        records.extend(theorem_checks(config)?);
    }
    if matches!(suite, Suite::Lemmas | Suite::All) {
        records.extend(lemma_checks(config)?);
    }
    if matches!(suite, Suite::Recurrences | Suite::All) {
        records.extend(recurrence_checks(config)?);
    }
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        max_n: config.max_n,
        records,
        wall_time: start.elapsed(),
    })
}

fn f3_spectrum(n: usize, cap: TableCap) -> CliResult<WalshSpectrum> {
    Ok(walsh_spectrum(&cubic_rsbf(n)?.to_table(cap)?))
}

fn mask_bits<M: BitMask + ?Sized>(m: &M) -> String {
    (0..m.len()).map(|i| if m.bit(i) { '1' } else { '0' }).collect()
}

/// Zero-coefficient table for `n = 3..=10` and the 64 x 4 subfamily table at `n = 6`.
pub fn tables_checks(cap: TableCap) -> CliResult<Vec<CheckRecord>> {
    let mut out = Vec::new();

    let mut witness = None;
    let mut values = Vec::new();
    for &(n, expected) in &F3_ZERO_VALUES {
        let got = f3_spectrum(n, cap)?.get(0);
        values.push(json!({"n": n, "value": got}));
        if got != expected && witness.is_none() {
            witness = Some(json!({"n": n, "mask": 0, "expected": expected, "computed": got}));
        }
    }
    let (lo, hi) = (F3_ZERO_VALUES[0].0, F3_ZERO_VALUES[F3_ZERO_VALUES.len() - 1].0);
    let matched = values.len() - usize::from(witness.is_some());
    out.push(CheckRecord::new(
        "tables.f3_zero_values",
        lo,
        hi,
        json!({"expected_count": F3_ZERO_VALUES.len(), "values": values, "matched": matched}),
        witness,
    ));

    let spectra = SubFamilyIndex::ALL
        .iter()
        .map(|&i| Ok(walsh_spectrum(&subfunction(i, 6)?.to_table(cap)?)))
        .collect::<CliResult<Vec<_>>>()?;
    let mut matched = 0usize;
    let mut witness = None;
    for (c, row) in SUBFAMILY_SPECTRA_N6.iter().enumerate() {
        for i in SubFamilyIndex::ALL {
            let got = spectra[i.index()].get(c as u64);
            if got == row[i.index()] {
                matched += 1;
            } else if witness.is_none() {
                witness = Some(json!({
                    "n": 6, "family": i.label(), "mask": c, "expected": row[i.index()], "computed": got
                }));
            }
        }
    }
    out.push(CheckRecord::new(
        "tables.subfamily_spectra_n6",
        6,
        6,
        json!({"cells": SUBFAMILY_SPECTRA_N6.len() * 4, "matched": matched}),
        witness,
    ));
    Ok(out)
}

/// Strict maximum at the zero mask, and nonlinearity equal to weight, by full transform.
pub fn theorem_checks(config: &SuiteConfig) -> CliResult<Vec<CheckRecord>> {
    let mut margins = Vec::new();
    let mut nl_rows = Vec::new();
    let mut max_witness = None;
    let mut nl_witness = None;
    for n in 3..=config.max_n {
        let f = cubic_rsbf(n)?.to_table(config.cap)?;
        let weight = f.weight();
        let spectrum = walsh_spectrum(&f);
        let zero = spectrum.get(0);
        let (max_abs, at) = spectrum.max_abs_nonzero().expect("n >= 3 has nonzero masks");
        let margin = zero - max_abs as i64;
        margins.push(json!({"n": n, "zero_value": zero, "max_nonzero_abs": max_abs, "margin": margin}));
        if margin <= 0 && max_witness.is_none() {
            max_witness = Some(json!({
                "n": n, "mask": at, "value": spectrum.get(at), "zero_value": zero
            }));
        }
        let nl = nonlinearity(&spectrum);
        nl_rows.push(json!({
            "n": n, "weight": weight, "linear_nl": nl.linear_nl, "affine_nl": nl.affine_nl
        }));
        if (nl.linear_nl != weight || nl.affine_nl != weight) && nl_witness.is_none() {
            nl_witness = Some(json!({
                "n": n, "weight": weight, "linear_nl": nl.linear_nl, "affine_nl": nl.affine_nl,
                "mask": nl.argmax_masks[0], "value": spectrum.get(nl.argmax_masks[0])
            }));
        }
    }
    let failing: Vec<usize> = margins
        .iter()
        .filter(|m| m["margin"].as_i64().is_some_and(|v| v <= 0))
        .map(|m| m["n"].as_u64().expect("n is recorded") as usize)
        .collect();
    if let Some(w) = max_witness.as_mut() {
        w["failing_n"] = json!(failing);
    }
    Ok(vec![
        CheckRecord::new(
            "theorem.strict_maximum_at_zero",
            3,
            config.max_n,
            json!({"per_n": margins}),
            max_witness,
        ),
        CheckRecord::new(
            "theorem.nonlinearity_equals_weight",
            3,
            config.max_n,
            json!({"per_n": nl_rows}),
            nl_witness,
        ),
    ])
}

pub fn lemma_checks(config: &SuiteConfig) -> CliResult<Vec<CheckRecord>> {
    let mut out = vec![engine_check(3, config.max_n.min(ENGINE_MAX_N), config.cap)?];

    let (lo, hi) = (ADJUDICATION_RANGE.0, config.max_n.min(ADJUDICATION_RANGE.1));
    if hi >= lo {
        out.push(adjudication_check(lo, hi, config.cap)?);
    }

    let seq = F3Sequences::compute(SEQUENCE_MAX_N)?;
    out.push(alternate_check(&seq));
    out.push(sandwich_check(&seq));

    let hi = config.max_n.saturating_sub(2).min(BOUND_MAX_N);
    if hi >= 3 {
        out.push(bound_check(3, hi, config.cap)?);
    }
    Ok(out)
}

/// Recurrence evaluator against the full transform for every family and mask.
pub fn engine_check(lo: usize, hi: usize, cap: TableCap) -> CliResult<CheckRecord> {
    let mut compared = 0u64;
    let mut witness = None;
    'outer: for n in lo..=hi {
        for family in SubFamilyIndex::ALL {
            let spectrum = walsh_spectrum(&subfunction(family, n)?.to_table(cap)?);
            let bad = (0..1u64 << n).into_par_iter().find_first(|&c| {
                let mask = LinearMask::new(n, c).expect("c < 2^n");
                eval_subfunction_point(family, &mask).ok() != Some(BigInt::from(spectrum.get(c)))
            });
            compared += 1 << n;
            if let Some(c) = bad {
                let mask = LinearMask::new(n, c)?;
                let engine = eval_subfunction_point(family, &mask)?;
                witness = Some(json!({
                    "n": n, "family": family.label(), "mask": c,
                    "engine": engine.to_string(), "oracle": spectrum.get(c)
                }));
                break 'outer;
            }
        }
    }
    Ok(CheckRecord::new(
        "lemmas.engine_vs_transform",
        lo,
        hi,
        json!({"families": 4, "compared": compared}),
        witness,
    ))
}

fn case_label(case: usize) -> &'static str {
    ["A", "B", "C"][case]
}

/// Every candidate form of the upper half, scored against the restricted-sum oracle.
pub fn adjudication_check(lo: usize, hi: usize, cap: TableCap) -> CliResult<CheckRecord> {
    let report = adjudicate_high_rules(lo, hi, cap)?;
    let candidates: Vec<Value> = report
        .outcomes
        .iter()
        .map(|o| {
            json!({
                "family": o.candidate.family.label(),
                "case": case_label(o.candidate.case),
                "form": o.candidate.description,
                "in_table": o.candidate.in_table,
                "checked": o.checked,
                "mismatches": o.mismatches,
                "verdict": if o.accepted() { "accepted" } else { "rejected" },
            })
        })
        .collect();
    let witness = report
        .outcomes
        .iter()
        .find(|o| o.accepted() != o.candidate.in_table)
        .map(|o| {
            let mut w = json!({
                "family": o.candidate.family.label(),
                "case": case_label(o.candidate.case),
                "form": o.candidate.description,
                "in_table": o.candidate.in_table,
                "checked": o.checked,
            });
            if let Some(m) = &o.first_mismatch {
                w["n"] = json!(m.n);
                w["mask"] = json!(m.mask);
                w["oracle"] = json!(m.oracle);
                w["candidate_value"] = json!(m.candidate);
            }
            w
        });
    let accepted = report.outcomes.iter().filter(|o| o.accepted()).count();
    Ok(CheckRecord::new(
        "lemmas.case_table_adjudication",
        lo,
        hi,
        json!({"candidates": candidates, "accepted": accepted, "rejected": report.outcomes.len() - accepted}),
        witness,
    ))
}

pub fn alternate_check(seq: &F3Sequences) -> CheckRecord {
    let witness = seq.alternate_disagreement().map(|n| {
        json!({
            "n": n,
            "primary": seq.zero_value(n).to_string(),
            "alternate": seq.zero_value_alternate(n).to_string()
        })
    });
    CheckRecord::new(
        "lemmas.alternate_recurrence",
        3,
        seq.n_max(),
        json!({"compared_through": seq.n_max()}),
        witness,
    )
}

pub fn sandwich_check(seq: &F3Sequences) -> CheckRecord {
    let report = sandwich_from(seq);
    let tight_upper: Vec<Value> = report
        .tight_upper
        .iter()
        .map(
            |&n| json!({"n": n, "value": seq.zero_value(n).to_string(), "previous": seq.zero_value(n - 1).to_string()}),
        )
        .collect();
    let witness = report
        .violations
        .first()
        .map(|v| json!({"n": v.n, "value": v.value.to_string(), "previous": v.previous.to_string()}));
    CheckRecord::new(
        "lemmas.sandwich_bounds",
        7,
        seq.n_max(),
        json!({"tight_lower": report.tight_lower, "tight_upper": tight_upper}),
        witness,
    )
}

/// `4 |W_{f_i}(c)| < W_F3(0)` on `n + 2` variables for every family and `c != 0`.
pub fn bound_check(lo: usize, hi: usize, cap: TableCap) -> CliResult<CheckRecord> {
    let report = check_subfunction_bound(lo, hi, false, cap)?;
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n, "max_abs": r.max_abs, "bound": r.bound.to_string(),
                "family": r.witness_family.label(), "mask": r.witness_mask
            })
        })
        .collect();
    let failing: Vec<usize> = report.rows.iter().filter(|r| !r.holds()).map(|r| r.n).collect();
    let witness = report.rows.iter().find(|r| !r.holds()).map(|r| {
        json!({
            "n": r.n, "family": r.witness_family.label(), "mask": r.witness_mask,
            "value_abs": r.max_abs, "bound": r.bound.to_string(), "failing_n": failing
        })
    });
    Ok(CheckRecord::new(
        "lemmas.subfunction_bound",
        lo,
        hi,
        json!({"per_n": rows}),
        witness,
    ))
}

pub fn recurrence_checks(config: &SuiteConfig) -> CliResult<Vec<CheckRecord>> {
    let seq = F3Sequences::compute(SEQUENCE_MAX_N)?;
    let mut out = vec![sequence_consistency_check(&seq)];
    out.push(sequence_vs_transform_check(&seq, 3, config.max_n, config.cap)?);
    out.push(point_vs_transform_check(
        F3_POINT_MIN_N,
        config.max_n.min(ENGINE_MAX_N),
        config.cap,
    )?);
    out.push(zero_closure_check(config.max_n)?);
    out.extend(scale_checks(&SCALE_SIZES, 4, 6)?);
    Ok(out)
}

/// Primary, alternate and additive-weight sequences against each other.
pub fn sequence_consistency_check(seq: &F3Sequences) -> CheckRecord {
    let witness = seq
        .alternate_disagreement()
        .map(|n| json!({"n": n, "relation": "alternate", "primary": seq.zero_value(n).to_string(), "other": seq.zero_value_alternate(n).to_string()}))
        .or_else(|| {
            seq.weight_disagreement().map(|n| {
                json!({
                    "n": n, "relation": "weight",
                    "primary": seq.weight_from_zero_value(n).to_string(),
                    "other": seq.weight_additive(n).to_string()
                })
            })
        });
    CheckRecord::new(
        "recurrences.sequence_consistency",
        3,
        seq.n_max(),
        json!({"relations": ["alternate", "weight"], "compared_through": seq.n_max()}),
        witness,
    )
}

/// Sequence values against the weight and zero coefficient of the explicit table.
pub fn sequence_vs_transform_check(seq: &F3Sequences, lo: usize, hi: usize, cap: TableCap) -> CliResult<CheckRecord> {
    let mut witness = None;
    for n in lo..=hi {
        let f = cubic_rsbf(n)?.to_table(cap)?;
        let zero = walsh_spectrum(&f).get(0);
        let weight = f.weight();
        if seq.zero_value(n) != &BigInt::from(zero) || seq.weight_additive(n) != &BigInt::from(weight) {
            witness = Some(json!({
                "n": n, "mask": 0,
                "sequence_zero_value": seq.zero_value(n).to_string(), "transform_zero_value": zero,
                "sequence_weight": seq.weight_additive(n).to_string(), "table_weight": weight
            }));
            break;
        }
    }
    Ok(CheckRecord::new(
        "recurrences.sequence_vs_transform",
        lo,
        hi,
        json!({}),
        witness,
    ))
}

/// The structured evaluator for the full function against every coefficient.
pub fn point_vs_transform_check(lo: usize, hi: usize, cap: TableCap) -> CliResult<CheckRecord> {
    let mut compared = 0u64;
    let mut witness = None;
    for n in lo..=hi {
        let spectrum = f3_spectrum(n, cap)?;
        let bad = (0..1u64 << n).into_par_iter().find_first(|&c| {
            let mask = LinearMask::new(n, c).expect("c < 2^n");
            eval_f3_point(&mask).ok() != Some(BigInt::from(spectrum.get(c)))
        });
        compared += 1 << n;
        if let Some(c) = bad {
            let value = eval_f3_point(&LinearMask::new(n, c)?)?;
            witness = Some(json!({"n": n, "mask": c, "engine": value.to_string(), "oracle": spectrum.get(c)}));
            break;
        }
    }
    Ok(CheckRecord::new(
        "recurrences.point_vs_transform",
        lo,
        hi,
        json!({"compared": compared}),
        witness,
    ))
}

/// The structured evaluator at the zero mask against the closed sequence.
pub fn zero_closure_check(max_n: usize) -> CliResult<CheckRecord> {
    let sizes: Vec<usize> = (F3_POINT_MIN_N..=max_n).chain(SCALE_SIZES).collect();
    let mut witness = None;
    for &n in &sizes {
        let point = eval_f3_point(&StructuredMask::zero(n))?;
        let closed = f3_zero_value(n)?;
        if point != closed {
            witness =
                Some(json!({"n": n, "mask": "zero", "engine": point.to_string(), "sequence": closed.to_string()}));
            break;
        }
    }
    Ok(CheckRecord::new(
        "recurrences.zero_mask_closure",
        F3_POINT_MIN_N,
        *sizes.iter().max().expect("non-empty"),
        json!({"sizes": sizes}),
        witness,
    ))
}

/// Deterministic mix of structured nonzero masks of length `n`: a single bit,
/// all ones, short periodic blocks, and dense random words.
pub fn sample_masks(n: usize, count: usize, seed: u64) -> Vec<StructuredMask> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mask = match out.len() % 4 {
            0 => StructuredMask::single_bit(n, rng.gen_range(0..n)).expect("k < n"),
            1 if out.len() == 1 => StructuredMask::ones(n),
            1 | 2 => {
                let p = rng.gen_range(1..=n.min(12));
                let block: Vec<bool> = (0..p).map(|_| rng.gen()).collect();
                StructuredMask::periodic(n, block).expect("non-empty block")
            }
            _ => {
                let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
                StructuredMask::from_fn(n, |i| bits[i])
            }
        };
        if !mask.is_zero() {
            out.push(mask);
        }
    }
    out
}

/// Rotation invariance and the strict bound on sampled masks at sizes far beyond tables.
pub fn scale_checks(sizes: &[usize], masks_per_n: usize, rotations_per_mask: usize) -> CliResult<Vec<CheckRecord>> {
    let mut rot_witness = None;
    let mut bound_witness = None;
    let mut evaluated = 0usize;
    for &n in sizes {
        let zero = f3_zero_value(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED.wrapping_add(n as u64));
        for mask in sample_masks(n, masks_per_n, SAMPLE_SEED) {
            let mut shifts: Vec<usize> = (0..rotations_per_mask).map(|_| rng.gen_range(1..n)).collect();
            shifts.insert(0, 0);
            let values = shifts
                .par_iter()
                .map(|&k| eval_f3_point(&mask.rotate(k)))
                .collect::<Result<Vec<_>, _>>()?;
            evaluated += values.len();
            let base = &values[0];
            if let Some(pos) = values.iter().position(|v| v != base) {
                rot_witness.get_or_insert_with(|| {
                    json!({
                        "n": n, "mask": mask_bits(&mask), "rotation": shifts[pos],
                        "value": base.to_string(), "rotated_value": values[pos].to_string()
                    })
                });
            }
            if base.magnitude() >= zero.magnitude() {
                bound_witness.get_or_insert_with(|| {
                    json!({"n": n, "mask": mask_bits(&mask), "value": base.to_string(), "zero_value": zero.to_string()})
                });
            }
        }
    }
    let lo = *sizes.iter().min().unwrap_or(&0);
    let hi = *sizes.iter().max().unwrap_or(&0);
    let detail = json!({"sizes": sizes, "masks_per_n": masks_per_n, "evaluations": evaluated, "seed": SAMPLE_SEED});
    Ok(vec![
        CheckRecord::new("recurrences.rotation_invariance", lo, hi, detail.clone(), rot_witness),
        CheckRecord::new("recurrences.sampled_strict_maximum", lo, hi, detail, bound_witness),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cap() -> TableCap {
        TableCap::new(TableCap::DEFAULT).unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::Tables,
            Suite::Theorem,
            Suite::Lemmas,
            Suite::Recurrences,
            Suite::All,
        ] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn tables_pass() {
        let recs = tables_checks(cap()).unwrap();
        assert!(recs.iter().all(CheckRecord::passed));
        assert_eq!(recs[1].detail["matched"], 256);
        assert_eq!(recs[0].detail["matched"], 8);
    }

    #[test]
    fn theorem_fails_only_at_four() {
        let recs = theorem_checks(&SuiteConfig { max_n: 12, cap: cap() }).unwrap();
        let w = recs[0].witness.as_ref().expect("the n = 4 tie is a failure");
        assert_eq!(w["n"], 4);
        assert_eq!(w["mask"], 15);
        assert_eq!(w["failing_n"], json!([4]));
        let margins = recs[0].detail["per_n"].as_array().unwrap();
        let nonpositive: Vec<_> = margins.iter().filter(|m| m["margin"].as_i64().unwrap() <= 0).collect();
        assert_eq!(nonpositive.len(), 1);
        assert!(recs[1].passed());
    }

    #[test]
    fn bound_fails_below_five() {
        let rec = bound_check(3, 8, cap()).unwrap();
        let w = rec.witness.expect("n = 3 and n = 4 break the bound");
        assert_eq!(w["n"], 3);
        assert_eq!(w["family"], "f3");
        assert_eq!(w["mask"], 7);
        assert_eq!(w["failing_n"], json!([3, 4]));
        assert!(bound_check(5, 12, cap()).unwrap().passed());
    }

    #[test]
    fn sampled_masks_are_deterministic_and_nonzero() {
        let a = sample_masks(40, 9, 7);
        let b = sample_masks(40, 9, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|m| m.len() == 40 && !m.is_zero()));
    }

    #[test]
    fn small_scale_checks_pass() {
        let recs = scale_checks(&[20, 31], 3, 3).unwrap();
        assert!(recs.iter().all(CheckRecord::passed), "{recs:?}");
    }

    #[test]
    fn unknown_range_rejected() {
        let err = run_suite(Suite::Theorem, &SuiteConfig { max_n: 27, cap: cap() }).unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
        assert!(run_suite(Suite::Tables, &SuiteConfig { max_n: 2, cap: cap() }).is_err());
    }
}
