//! regmod: query and cross-check the regular elements of Z/nZ.
//!
//! Exit codes: 0 success, 1 verification failure or resource exhaustion,
//! 2 usage or parse errors.

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regmod_core::{
    cross_validate_capped, enumerate_regulars, group_by_denominator, rho, rho_bruteforce_capped,
    rho_inclusion_exclusion, rho_subset_totients, to_reduced_fraction, witness, Error, SieveTable,
    DEFAULT_BRUTE_CAP,
};

mod bfile;

/// Environment variable overriding the brute-force cap.
const BRUTE_CAP_VAR: &str = "REGMOD_BRUTE_CAP";

#[derive(Parser)]
#[command(
    name = "regmod",
    version,
    about = "Regular elements of Z/nZ: count, enumerate, and cross-check"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rho(n), the number of regular elements of Z_n
    Rho {
        /// Modulus (positive integer)
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Counting algorithm
        #[arg(long, value_enum, default_value_t = RhoMethod::Eq1)]
        method: RhoMethod,
    },
    /// List, count, or witness the regular elements of Z_n
    Regular {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[command(flatten)]
        mode: RegularMode,
    },
    /// Map each regular element to its reduced fraction k/d with d || n
    Bijection {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Tabulate rho over 1..=N with a sieve and emit CSV or JSON
    Sieve {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        output: OutputFormat,
        /// Worker threads for the table fill
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        threads: u64,
        /// Restrict output to lo..hi (inclusive), e.g. 12..34
        #[arg(long, value_parser = parse_range)]
        range: Option<(u64, u64)>,
    },
    /// Cross-validate all four rho algorithms for every n up to N
    Check {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
    /// Compare an OEIS b-file (A055653 format) against computed rho values
    OeisVerify {
        path: PathBuf,
        /// Verify at most the entries with index up to this bound
        #[arg(long)]
        limit: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RhoMethod {
    /// Totient sum over unitary divisors
    Eq1,
    /// Signed inclusion-exclusion double sum
    Ie,
    /// Totients of prime-power subset products
    Subset,
    /// Exhaustive (m, x) search; capped
    Brute,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RegularMode {
    /// Print the regular elements, space-separated, ascending
    #[arg(long)]
    list: bool,
    /// Print only the count
    #[arg(long)]
    count: bool,
    /// Print one "m x b" line per regular element
    #[arg(long)]
    witnesses: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let lo: u64 = lo.parse().map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: u64 = hi.parse().map_err(|_| format!("bad range end {hi:?}"))?;
    Ok((lo, hi))
}

/// A failure with the exit code it maps to. Resource exhaustion and io
/// failures exit 1; everything the caller could have avoided exits 2.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Resource(_) | Error::Io(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn brute_cap() -> Result<u64, Failure> {
    match std::env::var(BRUTE_CAP_VAR) {
        Ok(raw) => raw
            .parse()
            .map_err(|_| Failure::usage(format!("{BRUTE_CAP_VAR}: bad value {raw:?}"))),
        Err(_) => Ok(DEFAULT_BRUTE_CAP),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Rho { n, method } => cmd_rho(n, method),
        Command::Regular { n, mode } => cmd_regular(n, mode),
        Command::Bijection { n } => cmd_bijection(n),
        Command::Sieve {
            limit,
            output,
            threads,
            range,
        } => cmd_sieve(limit, output, threads as usize, range),
        Command::Check { limit } => cmd_check(limit),
        Command::OeisVerify { path, limit } => cmd_oeis_verify(&path, limit),
    }
}

fn cmd_rho(n: u64, method: RhoMethod) -> Result<ExitCode, Failure> {
    let value = match method {
        RhoMethod::Eq1 => rho(n)?,
        RhoMethod::Ie => rho_inclusion_exclusion(n)?,
        RhoMethod::Subset => rho_subset_totients(n)?,
        RhoMethod::Brute => rho_bruteforce_capped(n, brute_cap()?)?,
    };
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_regular(n: u64, mode: RegularMode) -> Result<ExitCode, Failure> {
    if mode.count {
        println!("{}", rho(n)?);
        return Ok(ExitCode::SUCCESS);
    }
    let regs = enumerate_regulars(n)?;
    if mode.list {
        let line: Vec<String> = regs.iter().map(u64::to_string).collect();
        println!("{}", line.join(" "));
    } else {
        let stdout = io::stdout();
        let mut out = BufWriter::new(stdout.lock());
        for m in regs {
            let w = witness(m, n)?;
            writeln!(out, "{} {} {}", w.m, w.x, w.b).map_err(Error::from)?;
        }
        out.flush().map_err(Error::from)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bijection(n: u64) -> Result<ExitCode, Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for m in enumerate_regulars(n)? {
        let f = to_reduced_fraction(m, n)?;
        writeln!(out, "{m} -> {f}").map_err(Error::from)?;
    }
    for (d, fractions) in group_by_denominator(n)? {
        writeln!(out, "{d}: {}", fractions.len()).map_err(Error::from)?;
    }
    out.flush().map_err(Error::from)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_sieve(
    limit: u64,
    output: OutputFormat,
    threads: usize,
    range: Option<(u64, u64)>,
) -> Result<ExitCode, Failure> {
    let table = SieveTable::build(limit, threads)?;
    let (lo, hi) = range.unwrap_or((1, limit));
    if lo < 1 || lo > hi || hi > limit {
        return Err(Failure::usage(format!(
            "range {lo}..{hi} not within 1..{limit}"
        )));
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match output {
        OutputFormat::Csv => table.rho_range_csv(lo, hi, &mut out)?,
        OutputFormat::Json => write_json(&table, lo, hi, &mut out).map_err(Error::from)?,
    }
    out.flush().map_err(Error::from)?;
    Ok(ExitCode::SUCCESS)
}

fn write_json<W: Write>(table: &SieveTable, lo: u64, hi: u64, out: &mut W) -> io::Result<()> {
    out.write_all(b"[")?;
    for n in lo..=hi {
        if n > lo {
            out.write_all(b",")?;
        }
        write!(out, "{{\"n\":{},\"rho\":{}}}", n, table.rho(n))?;
    }
    out.write_all(b"]\n")
}

fn cmd_check(limit: u64) -> Result<ExitCode, Failure> {
    let cap = brute_cap()?;
    if limit > cap {
        return Err(Error::CapExceeded { n: limit, cap }.into());
    }
    for n in 1..=limit {
        let report = cross_validate_capped(n, cap)?;
        if !report.agree {
            println!("{report}");
            return Ok(ExitCode::from(1));
        }
    }
    println!("OK {limit}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_oeis_verify(path: &std::path::Path, limit: Option<u64>) -> Result<ExitCode, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| Failure::usage(format!("cannot read {}: {err}", path.display())))?;
    let entries = bfile::parse(&text)
        .map_err(|err| Failure::usage(format!("{}: {err}", path.display())))?;
    let cutoff = limit.unwrap_or(u64::MAX);
    let mut checked = 0u64;
    for entry in entries.iter().take_while(|e| e.index <= cutoff) {
        let expected = rho(entry.index)?;
        if entry.value != expected {
            println!("MISMATCH {} {} {}", entry.index, expected, entry.value);
            return Ok(ExitCode::from(1));
        }
        checked += 1;
    }
    println!("MATCH {checked}");
    Ok(ExitCode::SUCCESS)
}
