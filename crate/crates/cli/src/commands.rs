//! Command implementations. Each returns the exact text to emit plus whether
//! every internal check passed; flag parsing and exit codes live in `main`.

use crate::error::{CliError, CliResult};
use crate::mask_spec::parse_mask;
use num_bigint::BigInt;
use num_integer::Integer;
use rotsym_core::recurrence::{
    eval_f3_point, eval_subfunction_point, f3_weight_and_nonlinearity, f3_zero_value, F3_POINT_MIN_N,
};
use rotsym_core::rsbf::{cubic_rsbf, generate_rsbf, orbit_representatives, quadratic_rsbf, subfunction};
use rotsym_core::walsh::{nonlinearity, walsh_point, walsh_spectrum};
use rotsym_core::{AnfForm, BitMask, BooleanFunction, FunctionFile, LinearMask, Monomial, SubFamilyIndex, TableCap};
use serde_json::{json, Value};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::usage(format!("unknown format {s:?} (expected csv or json)"))),
        }
    }
}

/// Text to emit and whether the command's own checks held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

/// Where `spectrum` takes its function from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Contents of a function file.
    File(String),
    Cubic {
        n: usize,
    },
    Sub {
        n: usize,
        family: SubFamilyIndex,
    },
    /// All four subfamily members side by side.
    SubAll {
        n: usize,
    },
    Quadratic {
        n: usize,
        stride: usize,
    },
    Monomial {
        n: usize,
        vars: Vec<usize>,
    },
}

/// Parse a `--family` selector: `F3`, `f0`..`f3`, or `sub` for all four.
pub fn family_source(family: &str, n: usize) -> CliResult<Source> {
    match family {
        "F3" | "cubic" => Ok(Source::Cubic { n }),
        "sub" | "all" => Ok(Source::SubAll { n }),
        other => {
            let family = other
                .parse::<SubFamilyIndex>()
                .map_err(|_| CliError::usage(format!("unknown family {other:?} (expected F3, f0..f3 or sub)")))?;
            Ok(Source::Sub { n, family })
        }
    }
}

/// Parse a comma-separated variable list such as `0,1,3`.
pub fn parse_index_list(s: &str) -> CliResult<Vec<usize>> {
    let vars = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::usage(format!("bad variable index {t:?} in {s:?}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    if vars.is_empty() {
        return Err(CliError::usage("empty monomial"));
    }
    Ok(vars)
}

fn anf_for(source: &Source) -> CliResult<Option<AnfForm>> {
    Ok(Some(match source {
        Source::File(_) | Source::SubAll { .. } => return Ok(None),
        Source::Cubic { n } => cubic_rsbf(*n)?,
        Source::Sub { n, family } => subfunction(*family, *n)?,
        Source::Quadratic { n, stride } => quadratic_rsbf(*n, *stride)?,
        Source::Monomial { n, vars } => generate_rsbf(*n, vars)?,
    }))
}

fn function_for(source: &Source, cap: TableCap) -> CliResult<BooleanFunction> {
    match source {
        Source::File(text) => Ok(FunctionFile::parse(text)?.to_function(cap)?),
        _ => {
            let anf = anf_for(source)?.expect("single-function source");
            cap.check(anf.n())?;
            Ok(anf.to_table(cap)?)
        }
    }
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("valid JSON");
    s.push('\n');
    s
}

/// Full Walsh spectrum, or one row per rotation orbit when `orbit_compress` is set.
pub fn spectrum(source: &Source, format: Format, orbit_compress: bool, cap: TableCap) -> CliResult<Output> {
    if let Source::SubAll { n } = *source {
        if orbit_compress {
            return Err(CliError::usage(
                "orbit compression needs a rotation-symmetric function; the subfamily members are not",
            ));
        }
        cap.check(n)?;
        let spectra = SubFamilyIndex::ALL
            .iter()
            .map(|&i| Ok(walsh_spectrum(&subfunction(i, n)?.to_table(cap)?).into_values()))
            .collect::<CliResult<Vec<_>>>()?;
        let text = match format {
            Format::Csv => csv_text(
                &["c", "f0", "f1", "f2", "f3"],
                (0..1usize << n).map(|c| {
                    std::iter::once(c.to_string())
                        .chain(spectra.iter().map(|s| s[c].to_string()))
                        .collect()
                }),
            ),
            Format::Json => json_text(&json!({
                "n": n,
                "values": {"f0": spectra[0], "f1": spectra[1], "f2": spectra[2], "f3": spectra[3]},
            })),
        };
        return Ok(Output::ok(text));
    }

    let f = function_for(source, cap)?;
    let n = f.n();
    let spectrum = walsh_spectrum(&f);
    if !orbit_compress {
        let text = match format {
            Format::Csv => csv_text(
                &["c", "value"],
                spectrum
                    .values()
                    .iter()
                    .enumerate()
                    .map(|(c, v)| vec![c.to_string(), v.to_string()]),
            ),
            Format::Json => json_text(&json!({"n": n, "values": spectrum.values()})),
        };
        return Ok(Output::ok(text));
    }
    if !f.is_rotation_symmetric() {
        return Err(CliError::usage(
            "orbit compression refused: the function is not rotation symmetric, so coefficients are not constant on rotation orbits",
        ));
    }
    let orbits = orbit_representatives(n)?;
    let rows: Vec<(u32, u8, i64)> = orbits
        .iter()
        .map(|(c, size)| (c, size, spectrum.get(c as u64)))
        .collect();
    let text = match format {
        Format::Csv => csv_text(
            &["c", "orbit_size", "value"],
            rows.iter()
                .map(|(c, s, v)| vec![c.to_string(), s.to_string(), v.to_string()]),
        ),
        Format::Json => json_text(&json!({
            "n": n,
            "orbits": rows.iter().map(|(c, s, v)| json!({"c": c, "orbit_size": s, "value": v})).collect::<Vec<_>>(),
        })),
    };
    Ok(Output::ok(text))
}

/// Weight, both nonlinearities and the zero coefficient of the cubic family via
/// the recurrences; with `verify`, recomputed from the explicit table as well.
pub fn nl(n: usize, verify: bool, format: Format, cap: TableCap) -> CliResult<Output> {
    if n < 3 {
        return Err(CliError::usage(format!("nl needs n >= 3, got {n}")));
    }
    if verify {
        cap.check(n)?;
    }
    let (weight, nonlin) = f3_weight_and_nonlinearity(n)?;
    let zero = f3_zero_value(n)?;
    let mut passed = true;
    let mut brute = None;
    if verify {
        let f = cubic_rsbf(n)?.to_table(cap)?;
        let s = walsh_spectrum(&f);
        let report = nonlinearity(&s);
        let (bw, bl, ba, bz) = (f.weight(), report.linear_nl, report.affine_nl, s.get(0));
        passed = weight == BigInt::from(bw)
            && nonlin == BigInt::from(bl)
            && nonlin == BigInt::from(ba)
            && zero == BigInt::from(bz);
        brute = Some((bw, bl, ba, bz));
    }
    let text = match format {
        Format::Json => {
            let mut v = json!({
                "n": n,
                "weight": weight.to_string(),
                "linear_nl": nonlin.to_string(),
                "affine_nl": nonlin.to_string(),
                "zero_value": zero.to_string(),
            });
            if let Some((bw, bl, ba, bz)) = brute {
                v["verified"] = json!(passed);
                v["table"] = json!({
                    "weight": bw.to_string(), "linear_nl": bl.to_string(),
                    "affine_nl": ba.to_string(), "zero_value": bz.to_string()
                });
            }
            json_text(&v)
        }
        Format::Csv => {
            let mut header = vec!["n", "weight", "linear_nl", "affine_nl", "zero_value"];
            let mut row = vec![
                n.to_string(),
                weight.to_string(),
                nonlin.to_string(),
                nonlin.to_string(),
                zero.to_string(),
            ];
            if brute.is_some() {
                header.push("verified");
                row.push(passed.to_string());
            }
            csv_text(&header, [row])
        }
    };
    Ok(Output { text, passed })
}

/// One coefficient: of subfamily member `family` when given, else of the cubic function.
pub fn point(n: usize, mask: &str, family: Option<SubFamilyIndex>, format: Format, cap: TableCap) -> CliResult<Output> {
    let c = parse_mask(mask, n)?;
    let value: BigInt = match family {
        Some(i) => eval_subfunction_point(i, &c)?,
        None if n >= F3_POINT_MIN_N => eval_f3_point(&c)?,
        // Too short for the structured evaluator; small enough to sum directly.
        None => {
            let bits: Vec<bool> = (0..n).map(|i| c.bit(i)).collect();
            walsh_point(&cubic_rsbf(n)?.to_table(cap)?, &LinearMask::from_bits(&bits)?)?.into()
        }
    };
    let label = family.map_or("F3", SubFamilyIndex::label);
    let text = match format {
        Format::Csv => csv_text(
            &["n", "family", "value"],
            [vec![n.to_string(), label.to_string(), value.to_string()]],
        ),
        Format::Json => json_text(&json!({"n": n, "family": label, "value": value.to_string()})),
    };
    Ok(Output::ok(text))
}

/// What `explore` sweeps over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExploreFamily {
    /// Rotations of a fixed base monomial.
    Monomial(Vec<usize>),
    /// Rotations of `x_0 x_s`.
    Quadratic(usize),
}

impl ExploreFamily {
    fn label(&self) -> String {
        match self {
            ExploreFamily::Monomial(v) => Monomial::new(v.clone()).to_string(),
            ExploreFamily::Quadratic(s) => format!("quadratic(s={s})"),
        }
    }
}

/// One CSV row per `n` with weight and both nonlinearities. Sizes the family
/// does not exist at are skipped; the returned notes say which and why.
pub fn explore(family: &ExploreFamily, n_lo: usize, n_hi: usize, cap: TableCap) -> CliResult<(Output, Vec<String>)> {
    if n_hi < n_lo {
        return Err(CliError::usage(format!("empty range {n_lo}..={n_hi}")));
    }
    cap.check(n_hi)?;
    let label = family.label();
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for n in n_lo..=n_hi {
        let (anf, gcd_flag) = match family {
            ExploreFamily::Monomial(vars) => {
                let top = *vars.iter().max().expect("non-empty monomial");
                if top >= n {
                    notes.push(format!("skipping n={n}: variable index {top} out of range"));
                    continue;
                }
                (generate_rsbf(n, vars)?, String::new())
            }
            ExploreFamily::Quadratic(s) => {
                if n < 2 || s % n == 0 {
                    notes.push(format!("skipping n={n}: stride {s} is a multiple of n"));
                    continue;
                }
                (quadratic_rsbf(n, *s)?, ((n / n.gcd(s)) % 2 == 0).to_string())
            }
        };
        let f = anf.to_table(cap)?;
        let weight = f.weight();
        let report = nonlinearity(&walsh_spectrum(&f));
        let equal = report.linear_nl == weight && report.affine_nl == weight;
        rows.push(vec![
            n.to_string(),
            label.clone(),
            weight.to_string(),
            report.linear_nl.to_string(),
            report.affine_nl.to_string(),
            equal.to_string(),
            gcd_flag,
        ]);
    }
    let text = csv_text(
        &[
            "n",
            "family",
            "weight",
            "linear_nl",
            "affine_nl",
            "nl_equals_weight",
            "n_over_gcd_even",
        ],
        rows,
    );
    Ok((Output::ok(text), notes))
}

/// Bytes for one table plus its spectrum at the configured cap.
pub fn memory_note(cap: TableCap) -> String {
    let bytes = TableCap::memory_estimate(cap.get());
    format!(
        "table cap {} variables: largest table plus spectrum needs about {:.1} MiB",
        cap.get(),
        bytes as f64 / (1u64 << 20) as f64
    )
}
