//! `quadprime` — primality testing for N = m * p^l - 1 through the norm-one
//! group of a quadratic extension, plus the surrounding survey tools.
//!
//! Exit codes for `test` and `mr2`: 0 prime / 1 composite / 2 undecided
//! (probable prime or inconclusive) / 3 not applicable; 64 for usage errors.

mod commands;
mod record;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

fn parse_biguint(s: &str) -> Result<BigUint, String> {
    s.parse::<BigUint>().map_err(|err| err.to_string())
}

fn parse_base_pair(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| String::from("expected two comma-separated coordinates, like 3,3"))?;
    let a = a.trim().parse::<u64>().map_err(|err| err.to_string())?;
    let b = b.trim().parse::<u64>().map_err(|err| err.to_string())?;
    Ok((a, b))
}

#[derive(Parser)]
#[command(
    name = "quadprime",
    version,
    about = "Primality tests for N = m * p^l - 1 in the norm-one group of Z[sqrt(D)]/N"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the staged test on a single N = m * p^l - 1.
    Test(TestArgs),
    /// Sweep the exponent over a range and report one verdict per candidate.
    Search(SearchArgs),
    /// Minus-side Miller-Rabin analogue for any odd N with (D/N) = -1.
    Mr2(Mr2Args),
    /// Hunt for composites that fool the plain order test to every base.
    Carmichael(CarmichaelArgs),
    /// Time the staged test across exponents and report doubling ratios.
    Bench(BenchArgs),
}

#[derive(Args)]
struct TestArgs {
    /// Square-free discriminant D (nonzero, not 1).
    #[arg(short = 'D', long = "discriminant", allow_hyphen_values = true)]
    d: i64,
    /// Family index: for negative D the multiplier defaults to c_D * k.
    #[arg(short, long, default_value_t = 1)]
    k: u64,
    /// Odd prime base of the power.
    #[arg(short, long = "prime-base", default_value_t = 3)]
    p: u64,
    /// Exponent l in N = m * p^l - 1.
    #[arg(short = 'l', long = "exponent")]
    ell: u32,
    /// Even multiplier m, overriding the canonical family choice.
    #[arg(short = 'm', long = "multiplier", conflicts_with = "k")]
    multiplier: Option<u64>,
    /// Base-draw seed; the same seed reproduces the run exactly.
    #[arg(long, env = "QUADPRIME_SEED", default_value_t = 0)]
    seed: u64,
    /// Extra bases to draw when one leaves the verdict undecided.
    #[arg(long, default_value_t = quadprime::engine::DEFAULT_RETRIES)]
    retries: u32,
    /// Emit the run record as JSON instead of prose.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Square-free discriminant D (nonzero, not 1).
    #[arg(short = 'D', long = "discriminant", allow_hyphen_values = true)]
    d: i64,
    /// Family index: for negative D the multiplier defaults to c_D * k.
    #[arg(short, long, default_value_t = 1)]
    k: u64,
    /// Odd prime base of the power.
    #[arg(short, long = "prime-base", default_value_t = 3)]
    p: u64,
    /// First exponent of the sweep.
    #[arg(long, default_value_t = 1)]
    l_from: u32,
    /// Last exponent of the sweep.
    #[arg(long)]
    l_to: u32,
    /// Even multiplier m, overriding the canonical family choice.
    #[arg(short = 'm', long = "multiplier", conflicts_with = "k")]
    multiplier: Option<u64>,
    /// Base seed; row l runs with seed + l.
    #[arg(long, env = "QUADPRIME_SEED", default_value_t = 0)]
    seed: u64,
    /// Extra bases to draw when one leaves the verdict undecided.
    #[arg(long, default_value_t = quadprime::engine::DEFAULT_RETRIES)]
    retries: u32,
    /// Print (and export) only the rows whose verdict is prime.
    #[arg(long)]
    primes_only: bool,
    /// Write the reported rows as CSV (header D,l,bits,p,result,seconds).
    #[arg(long, value_name = "PATH")]
    csv_out: Option<PathBuf>,
    /// Write the reported rows as a JSON array of run records.
    #[arg(long, value_name = "PATH")]
    json_out: Option<PathBuf>,
    /// Worker threads: 1 runs in-line, 0 sizes the pool to the machine.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct Mr2Args {
    /// Odd modulus to test, in decimal.
    #[arg(short = 'N', long = "modulus", value_parser = parse_biguint)]
    n: BigUint,
    /// Square-free discriminant D with (D/N) = -1.
    #[arg(short = 'D', long = "discriminant", allow_hyphen_values = true)]
    d: i64,
    /// Number of random norm-one bases to try.
    #[arg(long, default_value_t = 1)]
    trials: u32,
    /// Seed for the random base draws.
    #[arg(long, env = "QUADPRIME_SEED", default_value_t = 0)]
    seed: u64,
    /// Explicit norm-one base "a,b" instead of random draws.
    #[arg(long, value_parser = parse_base_pair, conflicts_with = "trials")]
    base: Option<(u64, u64)>,
}

#[derive(Args)]
struct CarmichaelArgs {
    /// Lower end of the search range (inclusive).
    #[arg(long)]
    lo: u64,
    /// Upper end of the search range (inclusive).
    #[arg(long)]
    hi: u64,
    /// Discriminant whose order test the composites must fool.
    #[arg(short = 'D', long = "discriminant", allow_hyphen_values = true)]
    d: i64,
    /// Emit the hits as a JSON array with per-factor detail.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Square-free discriminant D (nonzero, not 1).
    #[arg(short = 'D', long = "discriminant", allow_hyphen_values = true)]
    d: i64,
    /// Family index: for negative D the multiplier defaults to c_D * k.
    #[arg(short, long, default_value_t = 1)]
    k: u64,
    /// Odd prime base of the power.
    #[arg(short, long = "prime-base", default_value_t = 3)]
    p: u64,
    /// Comma-separated exponents to time, e.g. 25,50,100.
    #[arg(short = 'l', long = "exponent", value_delimiter = ',', required = true)]
    ell: Vec<u32>,
    /// Even multiplier m, overriding the canonical family choice.
    #[arg(short = 'm', long = "multiplier", conflicts_with = "k")]
    multiplier: Option<u64>,
    /// Repetitions per exponent; the median is reported.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    reps: u32,
    /// Base-draw seed; repetition r runs with seed + r.
    #[arg(long, env = "QUADPRIME_SEED", default_value_t = 0)]
    seed: u64,
    /// Extra bases to draw when one leaves the verdict undecided.
    #[arg(long, default_value_t = quadprime::engine::DEFAULT_RETRIES)]
    retries: u32,
}

fn main() -> ExitCode {
    // Die quietly like standard Unix filters when a downstream pipe closes
    // early (e.g. `quadprime search ... | head`), instead of panicking on
    // the broken-pipe write error.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let informational = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            err.print().expect("diagnostics are writable");
            return if informational {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(commands::EXIT_USAGE)
            };
        }
    };
    match &cli.command {
        Command::Test(args) => commands::run_test(args),
        Command::Search(args) => commands::run_search(args),
        Command::Mr2(args) => commands::run_mr2(args),
        Command::Carmichael(args) => commands::run_carmichael(args),
        Command::Bench(args) => commands::run_bench(args),
    }
}
