//! Acceptance run: every criterion executes, prints one PASS/FAIL line, and
//! the process exits nonzero if any criterion failed.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rotsym_cli::commands::{spectrum, Format, Source};
use rotsym_cli::suites::{sample_masks, SAMPLE_SEED};
use rotsym_core::recurrence::{
    adjudicate_high_rules, check_sandwich_bounds, check_subfunction_bound, eval_f3_point, eval_subfunction_point,
    f3_zero_value, F3Sequences,
};
use rotsym_core::reference::SUBFAMILY_SPECTRA_N6;
use rotsym_core::rsbf::{cubic_rsbf, subfunction};
use rotsym_core::walsh::{nonlinearity, walsh_point, walsh_spectrum};
use rotsym_core::{BooleanFunction, LinearMask, StructuredMask, SubFamilyIndex, TableCap};
use std::process::Command;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn cap() -> TableCap {
    TableCap::new(TableCap::DEFAULT).unwrap()
}

fn within(elapsed: Duration, limit_s: f64, what: &str) -> Result<(), String> {
    if elapsed.as_secs_f64() <= limit_s {
        Ok(())
    } else {
        Err(format!("{what} took {:.1} s, limit {limit_s} s", elapsed.as_secs_f64()))
    }
}

fn zero_values() -> Outcome {
    let expected = [6i64, 8, 20, 28, 56, 96, 168, 304];
    let start = Instant::now();
    for (n, &want) in (3..=10).zip(&expected) {
        let got = walsh_spectrum(&cubic_rsbf(n).unwrap().to_table(cap()).unwrap()).get(0);
        if got != want {
            return Err(format!("n={n}: W(0) = {got}, expected {want}"));
        }
    }
    within(start.elapsed(), 5.0, "brute force")?;
    Ok(format!("8 values matched in {:.2} s", start.elapsed().as_secs_f64()))
}

fn subfamily_spectra() -> Outcome {
    let anchors = [(0usize, [36i64, 28, 28, 4]), (21, [4, 4, 4, 4]), (63, [4, -4, -4, 20])];
    for (row, want) in anchors {
        if SUBFAMILY_SPECTRA_N6[row] != want {
            return Err(format!(
                "reference row {row} is {:?}, expected {want:?}",
                SUBFAMILY_SPECTRA_N6[row]
            ));
        }
    }
    let mut cells = 0;
    for i in SubFamilyIndex::ALL {
        let s = walsh_spectrum(&subfunction(i, 6).unwrap().to_table(cap()).unwrap());
        for (c, row) in SUBFAMILY_SPECTRA_N6.iter().enumerate() {
            if s.get(c as u64) != row[i.index()] {
                return Err(format!("{i} at c={c}: {} vs table {}", s.get(c as u64), row[i.index()]));
            }
            cells += 1;
        }
    }
    // Same table through the command surface.
    let csv = spectrum(&Source::SubAll { n: 6 }, Format::Csv, false, cap())
        .unwrap()
        .text;
    for (line, (c, row)) in csv.lines().skip(1).zip(SUBFAMILY_SPECTRA_N6.iter().enumerate()) {
        let want = format!("{c},{},{},{},{}", row[0], row[1], row[2], row[3]);
        if line != want {
            return Err(format!("spectrum command row {line:?}, expected {want:?}"));
        }
    }
    Ok(format!("{cells} cells matched, command output identical"))
}

struct CubicSummary {
    n: usize,
    weight: u64,
    zero: i64,
    max_nonzero: (u64, u64),
    linear_nl: u64,
    affine_nl: u64,
}

fn cubic_summaries(lo: usize, hi: usize) -> Vec<CubicSummary> {
    (lo..=hi)
        .map(|n| {
            let f = cubic_rsbf(n).unwrap().to_table(cap()).unwrap();
            let s = walsh_spectrum(&f);
            let nl = nonlinearity(&s);
            CubicSummary {
                n,
                weight: f.weight(),
                zero: s.get(0),
                max_nonzero: s.max_abs_nonzero().unwrap(),
                linear_nl: nl.linear_nl,
                affine_nl: nl.affine_nl,
            }
        })
        .collect()
}

fn strict_maximum(rows: &[CubicSummary], elapsed: Duration) -> Outcome {
    let failures: Vec<String> = rows
        .iter()
        .filter(|r| r.max_nonzero.0 as i64 >= r.zero)
        .map(|r| {
            format!(
                "n={}: |W(c={})| = {} not < W(0) = {}",
                r.n, r.max_nonzero.1, r.max_nonzero.0, r.zero
            )
        })
        .collect();
    if !failures.is_empty() {
        return Err(failures.join("; "));
    }
    within(elapsed, 180.0, "exhaustive transforms")?;
    let min_margin = rows.iter().map(|r| r.zero - r.max_nonzero.0 as i64).min().unwrap();
    Ok(format!(
        "strict for n=3..22, smallest margin {min_margin}, {:.1} s",
        elapsed.as_secs_f64()
    ))
}

fn nl_equals_weight(rows: &[CubicSummary]) -> Outcome {
    for r in rows {
        if r.linear_nl != r.weight || r.affine_nl != r.weight {
            return Err(format!(
                "n={}: weight {}, linear nl {}, affine nl {}",
                r.n, r.weight, r.linear_nl, r.affine_nl
            ));
        }
    }
    Ok(format!("n=3..22 all equal (n=22: {})", rows.last().unwrap().weight))
}

fn engine_vs_oracle() -> Outcome {
    let start = Instant::now();
    let mut compared = 0u64;
    for n in 3..=14 {
        for i in SubFamilyIndex::ALL {
            let s = walsh_spectrum(&subfunction(i, n).unwrap().to_table(cap()).unwrap());
            let bad = (0..1u64 << n).into_par_iter().find_first(|&c| {
                eval_subfunction_point(i, &LinearMask::new(n, c).unwrap()).unwrap() != BigInt::from(s.get(c))
            });
            if let Some(c) = bad {
                return Err(format!(
                    "{i}, n={n}, c={c}: engine disagrees with transform {}",
                    s.get(c)
                ));
            }
            compared += 1 << n;
        }
    }
    within(start.elapsed(), 60.0, "engine comparison")?;
    Ok(format!(
        "{compared} coefficients in {:.1} s",
        start.elapsed().as_secs_f64()
    ))
}

fn adjudication() -> Outcome {
    let report = adjudicate_high_rules(9, 13, cap()).unwrap();
    let mut rejected = Vec::new();
    for o in &report.outcomes {
        let c = &o.candidate;
        if o.accepted() != c.in_table {
            return Err(format!(
                "{} case {} form [{}] in_table={} but {} of {} masks mismatched (first: {:?})",
                c.family, c.case, c.description, c.in_table, o.mismatches, o.checked, o.first_mismatch
            ));
        }
        if !c.in_table {
            rejected.push(format!("{}/{}", c.family, ["A", "B", "C"][c.case]));
        }
    }
    let checked: u64 = report
        .outcomes
        .iter()
        .filter(|o| o.candidate.in_table)
        .map(|o| o.checked)
        .sum();
    Ok(format!(
        "table forms exact on {checked} masks; alternatives rejected: {}",
        rejected.join(" ")
    ))
}

fn sequences() -> Outcome {
    let start = Instant::now();
    let seq = F3Sequences::compute(10_000).unwrap();
    if let Some(n) = seq.alternate_disagreement() {
        return Err(format!("alternate recurrence disagrees at n={n}"));
    }
    if let Some(n) = seq.weight_disagreement() {
        return Err(format!("additive weight recurrence disagrees at n={n}"));
    }
    let seq_time = start.elapsed();
    within(seq_time, 10.0, "sequences to 10000")?;
    for r in cubic_summaries(8, 22) {
        if seq.zero_value(r.n) != &BigInt::from(r.zero) || seq.weight_additive(r.n) != &BigInt::from(r.weight) {
            return Err(format!("n={}: sequences disagree with the transform", r.n));
        }
    }
    Ok(format!(
        "agree to n=10000 in {:.2} s; match transforms for n=8..22",
        seq_time.as_secs_f64()
    ))
}

fn sandwich() -> Outcome {
    let report = check_sandwich_bounds(10_000).unwrap();
    if let Some(v) = report.violations.first() {
        return Err(format!(
            "n={}: W = {} outside [{}, 2*{}]",
            v.n, v.value, v.previous, v.previous
        ));
    }
    if report.tight_upper.first() != Some(&7) || f3_zero_value(7).unwrap() != BigInt::from(56) {
        return Err(format!(
            "expected tight upper bound 56 = 2*28 at n=7, got {:?}",
            report.tight_upper
        ));
    }
    Ok(format!(
        "holds for n=7..10000; tight upper at n={:?} (56 = 2*28)",
        report.tight_upper
    ))
}

fn subfunction_bound() -> Outcome {
    let report = check_subfunction_bound(3, 12, false, cap()).unwrap();
    let failures: Vec<String> = report
        .rows
        .iter()
        .filter(|r| !r.holds())
        .map(|r| {
            format!(
                "n={}: 4*|W_{}(c={})| = {} not < {}",
                r.n,
                r.witness_family,
                r.witness_mask,
                4 * r.max_abs,
                r.bound
            )
        })
        .collect();
    if !failures.is_empty() {
        return Err(failures.join("; "));
    }
    let n6 = report.rows.iter().find(|r| r.n == 6).unwrap();
    if n6.max_abs != 20 || n6.bound != BigInt::from(96) {
        return Err(format!(
            "n=6 maximum {} against bound {}/4, expected 20 against 24",
            n6.max_abs, n6.bound
        ));
    }
    Ok("strict for n=3..12; n=6 maximum 20 against 24".into())
}

fn scale() -> Outcome {
    let n = 1000;
    let masks = sample_masks(n, 100, SAMPLE_SEED);
    let start = Instant::now();
    let values: Vec<BigInt> = masks.iter().map(|m| eval_f3_point(m).unwrap()).collect();
    let elapsed = start.elapsed();
    within(elapsed, 10.0, "100 evaluations at n=1000")?;
    let zero = f3_zero_value(n).unwrap();
    if eval_f3_point(&StructuredMask::zero(n)).unwrap() != zero {
        return Err("zero mask disagrees with the closed sequence".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    for (m, v) in masks.iter().zip(&values) {
        if v.magnitude() >= zero.magnitude() {
            return Err(format!("|W| = {v} not below W(0) for a sampled mask"));
        }
        for _ in 0..3 {
            let k = rng.gen_range(1..n);
            if &eval_f3_point(&m.rotate(k)).unwrap() != v {
                return Err(format!("rotation by {k} changes the value {v}"));
            }
        }
    }
    Ok(format!(
        "100 masks in {:.2} s; 300 rotations, zero mask and bound all hold",
        elapsed.as_secs_f64()
    ))
}

fn naive_spectrum_matches(f: &BooleanFunction, masks: impl Iterator<Item = u64>) -> Result<(), String> {
    let fast = walsh_spectrum(f);
    for c in masks {
        let slow = walsh_point(f, &LinearMask::new(f.n(), c).unwrap()).unwrap();
        if slow != fast.get(c) {
            return Err(format!("n={}, c={c}: fast {} vs naive {slow}", f.n(), fast.get(c)));
        }
    }
    Ok(())
}

fn random_function(n: usize, rng: &mut ChaCha8Rng) -> BooleanFunction {
    let bits: Vec<bool> = (0..1usize << n).map(|_| rng.gen()).collect();
    BooleanFunction::from_fn(n, cap(), |x| bits[x as usize]).unwrap()
}

fn transform() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut functions = 0;
    for n in 1..=8usize {
        // Every function for n <= 4, a random sample beyond; every mask either way.
        let count: u64 = if n <= 4 { 1 << (1u64 << n) } else { 64 };
        for idx in 0..count {
            let f = if n <= 4 {
                BooleanFunction::from_fn(n, cap(), |x| (idx >> x) & 1 == 1).unwrap()
            } else {
                random_function(n, &mut rng)
            };
            naive_spectrum_matches(&f, 0..1u64 << n)?;
            functions += 1;
        }
    }
    for n in 9..=14usize {
        let f = random_function(n, &mut rng);
        let masks: Vec<u64> = (0..1000).map(|_| rng.gen_range(0..1u64 << n)).collect();
        naive_spectrum_matches(&f, masks.into_iter())?;
    }
    for _ in 0..50 {
        let s = walsh_spectrum(&random_function(10, &mut rng));
        if s.parseval_sum() != 1u128 << 20 {
            return Err(format!("Parseval sum {} != 2^20", s.parseval_sum()));
        }
    }
    Ok(format!(
        "{functions} functions on every mask for n<=8, 6000 sampled masks for n=9..14, Parseval on 50"
    ))
}

fn determinism() -> Outcome {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_rotsym"))
            .args(["verify", "--suite", "all", "--max-n", "14", "--threads", threads])
            .output()
            .map_err(|e| format!("cannot run the binary: {e}"))
    };
    let a = run("1")?;
    let b = run("4")?;
    if a.stdout.is_empty() {
        return Err("empty report".into());
    }
    if a.stdout != b.stdout {
        return Err("reports differ between --threads 1 and --threads 4".into());
    }
    if a.status.code() != b.status.code() {
        return Err(format!(
            "exit codes differ: {:?} vs {:?}",
            a.status.code(),
            b.status.code()
        ));
    }
    Ok(format!(
        "{} identical bytes, exit code {:?} in both runs",
        a.stdout.len(),
        a.status.code()
    ))
}

fn main() {
    let start = Instant::now();
    let cubic = cubic_summaries(3, 22);
    let cubic_time = start.elapsed();

    let criteria: Vec<Criterion> = vec![
        ("Zero-coefficient values, n=3..10", Box::new(zero_values)),
        ("Subfamily spectra at n=6", Box::new(subfamily_spectra)),
        (
            "Strict maximum at zero, n=3..22",
            Box::new(|| strict_maximum(&cubic, cubic_time)),
        ),
        (
            "Nonlinearity equals weight, n=3..22",
            Box::new(|| nl_equals_weight(&cubic)),
        ),
        ("Subfamily engine vs transform, n=3..14", Box::new(engine_vs_oracle)),
        ("Case-table adjudication, n=9..13", Box::new(adjudication)),
        ("Sequence cross-consistency", Box::new(sequences)),
        ("Sandwich bounds, n=7..10000", Box::new(sandwich)),
        ("Subfunction bound, n=3..12", Box::new(subfunction_bound)),
        ("Scale demonstration, n=1000", Box::new(scale)),
        ("Transform correctness", Box::new(transform)),
        ("Determinism across thread counts", Box::new(determinism)),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
