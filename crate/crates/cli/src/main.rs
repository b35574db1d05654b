use clap::{Args, Parser, Subcommand};
use rotsym_cli::commands::{self, ExploreFamily, Format, Output, Source};
use rotsym_cli::{run_suite, CliResult, Suite, SuiteConfig};
use rotsym_core::{SubFamilyIndex, TableCap};
use std::path::PathBuf;
use std::process::ExitCode;

/// Walsh spectra, weights and nonlinearity of rotation-symmetric Boolean functions.
#[derive(Debug, Parser)]
#[command(name = "rotsym", version)]
struct Cli {
    /// Largest number of variables for which explicit truth tables are built.
    #[arg(long, global = true, value_name = "N")]
    max_table_vars: Option<usize>,

    /// Worker threads for transforms and verification (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full Walsh spectrum of a function file or a builtin family.
    Spectrum(SpectrumArgs),
    /// Weight, nonlinearity and zero coefficient of the cubic family.
    Nl {
        #[arg(long)]
        n: usize,
        /// Recompute everything from the explicit truth table and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// A single Walsh coefficient, exact at any size.
    Point {
        #[arg(long)]
        n: usize,
        /// decimal, 0x-hex, zero, ones, bit:k or period:<bits>:<p>
        #[arg(long)]
        mask: String,
        /// Subfamily member f0..f3; the cubic function when omitted.
        #[arg(long)]
        family: Option<SubFamilyIndex>,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Run a verification suite and emit its report.
    Verify(VerifyArgs),
    /// Weight against nonlinearity for other rotation-symmetric families.
    Explore {
        /// Base monomial as a comma-separated variable list, e.g. 0,1,3.
        #[arg(long, conflicts_with = "stride", required_unless_present = "stride")]
        monomial: Option<String>,
        /// Quadratic family generated by x0 x_s.
        #[arg(long)]
        stride: Option<usize>,
        /// Smallest n.
        #[arg(long)]
        n: usize,
        /// Largest n (defaults to --n).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Shorthand for `verify --suite tables`.
    Tables {
        #[arg(long, default_value = "json")]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    /// Function file (JSON with `n` and either `anf` or `table_hex`).
    file: Option<PathBuf>,
    #[arg(long, required_unless_present = "file")]
    n: Option<usize>,
    /// F3, f0..f3, or sub for all four subfamily members.
    #[arg(long, default_value = "F3")]
    family: String,
    /// Rotations of this base monomial instead of a named family.
    #[arg(long, conflicts_with = "stride")]
    monomial: Option<String>,
    /// Rotations of x0 x_s instead of a named family.
    #[arg(long)]
    stride: Option<usize>,
    #[arg(long, default_value = "csv")]
    format: Format,
    /// One row per rotation orbit (rotation-symmetric input only).
    #[arg(long)]
    orbit_compress: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 14)]
    max_n: usize,
    #[arg(long, default_value = "json")]
    format: Format,
}

fn table_cap(cli: &Cli) -> CliResult<TableCap> {
    match cli.max_table_vars {
        None => Ok(TableCap::new(TableCap::DEFAULT)?),
        Some(n) => {
            let cap = TableCap::new(n)?;
            eprintln!("{}", commands::memory_note(cap));
            Ok(cap)
        }
    }
}

fn verify(suite: Suite, max_n: usize, format: Format, cap: TableCap) -> CliResult<Output> {
    let report = run_suite(suite, &SuiteConfig { max_n, cap })?;
    eprintln!(
        "suite {} finished in {:.2} s: {} of {} checks passed",
        report.suite,
        report.wall_time.as_secs_f64(),
        report.records.iter().filter(|r| r.passed()).count(),
        report.records.len()
    );
    for r in report.failed() {
        eprintln!(
            "FAILED {}: witness {}",
            r.id,
            r.witness.as_ref().expect("failures carry witnesses")
        );
    }
    let text = match format {
        Format::Json => report.render_json(),
        Format::Csv => report.render_csv(),
    };
    Ok(Output {
        text,
        passed: report.passed(),
    })
}

fn run(cli: &Cli) -> CliResult<Output> {
    let cap = table_cap(cli)?;
    match &cli.command {
        Command::Spectrum(a) => {
            let source = if let Some(path) = &a.file {
                Source::File(std::fs::read_to_string(path)?)
            } else {
                let n = a.n.expect("clap enforces --n without a file");
                if let Some(m) = &a.monomial {
                    Source::Monomial {
                        n,
                        vars: commands::parse_index_list(m)?,
                    }
                } else if let Some(stride) = a.stride {
                    Source::Quadratic { n, stride }
                } else {
                    commands::family_source(&a.family, n)?
                }
            };
            commands::spectrum(&source, a.format, a.orbit_compress, cap)
        }
        Command::Nl { n, verify, format } => commands::nl(*n, *verify, *format, cap),
        Command::Point {
            n,
            mask,
            family,
            format,
        } => commands::point(*n, mask, *family, *format, cap),
        Command::Verify(a) => verify(a.suite, a.max_n, a.format, cap),
        Command::Tables { format } => verify(Suite::Tables, 10, *format, cap),
        Command::Explore {
            monomial,
            stride,
            n,
            max_n,
        } => {
            let family = match (monomial, stride) {
                (Some(m), _) => ExploreFamily::Monomial(commands::parse_index_list(m)?),
                (None, Some(s)) => ExploreFamily::Quadratic(*s),
                (None, None) => unreachable!("clap requires one of --monomial, --stride"),
            };
            let (out, notes) = commands::explore(&family, *n, max_n.unwrap_or(*n), cap)?;
            for note in notes {
                eprintln!("note: {note}");
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let result = run(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => std::fs::write(path, &out.text)?,
            None => print!("{}", out.text),
        }
        Ok(out.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // Bad flags, oversized inputs and I/O problems are all configuration errors.
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
