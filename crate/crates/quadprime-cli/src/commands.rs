//! Implementations of the CLI subcommands. Each returns the process exit
//! code; verdicts map to codes so scripts can branch without parsing output.

use std::fmt;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use quadprime::carmichael::{korselt_check, search_carmichael, SEARCH_LIMIT};
use quadprime::engine::{
    build_family_params, build_params, lucasian_test_seeded, mr_minus_test, BaseSource,
    FormParams, MrMinusOutcome, MrMinusReport, ParamError, SeededBases,
};
use quadprime::group::generate_base;
use quadprime::{QuadRing, RingElement, Symbol, TestOutcome};

use crate::record::{RunRecord, CSV_HEADER};
use crate::{BenchArgs, CarmichaelArgs, Mr2Args, SearchArgs, TestArgs};

/// Exit code for malformed invocations, mirroring BSD `EX_USAGE`.
pub const EXIT_USAGE: u8 = 64;

fn usage_error(message: impl fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

/// Verdict-to-exit-code contract shared by `test` and documented in the help.
fn outcome_exit(outcome: &TestOutcome) -> ExitCode {
    match outcome {
        TestOutcome::Prime(_) => ExitCode::SUCCESS,
        TestOutcome::Composite(_) => ExitCode::from(1),
        TestOutcome::ProbablePrime(_) => ExitCode::from(2),
        TestOutcome::NotApplicable(_) => ExitCode::from(3),
    }
}

/// Build parameters from the common `-D/-k/-m/-p/-l` argument set: an
/// explicit multiplier wins, otherwise the canonical family multiplier for
/// negative `D` scaled by `k`.
fn build(
    d: i64,
    k: u64,
    multiplier: Option<u64>,
    p: u64,
    ell: u32,
) -> Result<FormParams, ParamError> {
    match multiplier {
        Some(m) => build_params(d, m, p, ell),
        None => build_family_params(d, k, p, ell),
    }
}

fn make_record(
    d: i64,
    params: &FormParams,
    outcome: &TestOutcome,
    elapsed_seconds: f64,
    seed: u64,
) -> RunRecord {
    let certificate_j = match outcome {
        TestOutcome::Prime(cert) => cert.stage(),
        _ => None,
    };
    RunRecord {
        d,
        m: params.m().to_string(),
        p: params.p(),
        l: params.ell(),
        n: params.n().to_string(),
        bits: params.bits(),
        verdict: outcome.verdict().to_string(),
        certificate_j,
        elapsed_seconds,
        seed,
    }
}

// ---------------------------------------------------------------------------
// test
// ---------------------------------------------------------------------------

pub fn run_test(args: &TestArgs) -> ExitCode {
    let params = match build(args.d, args.k, args.multiplier, args.p, args.ell) {
        Ok(params) => params,
        Err(err) => return usage_error(err),
    };
    let start = Instant::now();
    let outcome = lucasian_test_seeded(&params, args.seed, args.retries);
    let elapsed = start.elapsed().as_secs_f64();
    let record = make_record(args.d, &params, &outcome, elapsed, args.seed);
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&record).expect("record serializes")
        );
    } else {
        println!("{params}");
        println!("verdict: {outcome}");
        println!(
            "elapsed: {elapsed:.6} s (seed {}, retries {})",
            args.seed, args.retries
        );
    }
    outcome_exit(&outcome)
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

pub fn run_search(args: &SearchArgs) -> ExitCode {
    if args.l_to < args.l_from {
        return usage_error("--l-to must be at least --l-from");
    }
    let mut param_list = Vec::with_capacity((args.l_to - args.l_from + 1) as usize);
    for ell in args.l_from..=args.l_to {
        match build(args.d, args.k, args.multiplier, args.p, ell) {
            Ok(params) => param_list.push(params),
            Err(err) => return usage_error(err),
        }
    }

    // Each row gets its own derived seed so rows stay independent while the
    // whole sweep remains reproducible from one --seed value.
    let run_row = |params: &FormParams| -> RunRecord {
        let row_seed = args.seed.wrapping_add(u64::from(params.ell()));
        let start = Instant::now();
        let outcome = lucasian_test_seeded(params, row_seed, args.retries);
        let elapsed = start.elapsed().as_secs_f64();
        make_record(args.d, params, &outcome, elapsed, row_seed)
    };

    let records: Vec<RunRecord> = if args.jobs == 1 {
        param_list.iter().map(run_row).collect()
    } else {
        // jobs = 0 lets the pool size itself to the machine.
        let pool = match rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
        {
            Ok(pool) => pool,
            Err(err) => return usage_error(err),
        };
        pool.install(|| param_list.par_iter().map(run_row).collect())
    };

    let shown: Vec<&RunRecord> = records
        .iter()
        .filter(|record| !args.primes_only || record.verdict == "prime")
        .collect();
    for record in &shown {
        println!("{}", record.table_row());
    }
    let prime_count = records
        .iter()
        .filter(|record| record.verdict == "prime")
        .count();
    eprintln!(
        "search: {prime_count} of {} candidates prime (D = {}, p = {}, l = {}..={})",
        records.len(),
        args.d,
        args.p,
        args.l_from,
        args.l_to
    );

    if let Some(path) = &args.csv_out {
        let mut text = String::from(CSV_HEADER);
        text.push('\n');
        for record in &shown {
            text.push_str(&record.csv_row());
            text.push('\n');
        }
        if let Err(err) = std::fs::write(path, text) {
            return usage_error(format_args!("writing {}: {err}", path.display()));
        }
    }
    if let Some(path) = &args.json_out {
        let text = serde_json::to_string_pretty(&shown).expect("records serialize");
        if let Err(err) = std::fs::write(path, text) {
            return usage_error(format_args!("writing {}: {err}", path.display()));
        }
    }
    ExitCode::SUCCESS
}

// ---------------------------------------------------------------------------
// mr2
// ---------------------------------------------------------------------------

fn element_pair(x: &RingElement) -> String {
    format!("({}, {})", x.a(), x.b())
}

fn print_mr2_report(trial: u32, w: &RingElement, report: &MrMinusReport) {
    let chain: Vec<String> = report.chain.iter().map(element_pair).collect();
    println!(
        "trial {trial}: w = {}, u = {}, s = {}, chain = [{}] -> {}",
        element_pair(w),
        report.u,
        report.s,
        chain.join(", "),
        report.outcome
    );
}

pub fn run_mr2(args: &Mr2Args) -> ExitCode {
    let ring = match QuadRing::new(BigInt::from(args.d), args.n.clone()) {
        Ok(ring) => ring,
        Err(err) => return usage_error(err),
    };
    match ring.symbol() {
        Symbol::MinusOne => {}
        Symbol::One => {
            println!("not applicable: Jacobi symbol of D is +1, need -1");
            return ExitCode::from(3);
        }
        Symbol::Zero => {
            let shared = args.n.gcd(&BigUint::from(args.d.unsigned_abs()));
            if shared == args.n {
                println!("not applicable: modulus divides the discriminant");
                return ExitCode::from(3);
            }
            println!("composite: shares factor {shared} with the discriminant");
            return ExitCode::from(1);
        }
    }

    let mut composite = false;
    let mut trials_run = 0u32;
    if let Some((a, b)) = args.base {
        let w = ring.element(BigInt::from(a), BigInt::from(b));
        match mr_minus_test(&ring, &w) {
            Ok(report) => {
                print_mr2_report(1, &w, &report);
                trials_run = 1;
                composite = report.outcome == MrMinusOutcome::Composite;
            }
            Err(err) => return usage_error(err),
        }
    } else {
        let mut bases = SeededBases::new(args.seed);
        for trial in 1..=args.trials {
            trials_run = trial;
            let z = bases.next_base(&ring);
            let w = match generate_base(&ring, &z) {
                Ok(member) => member.into_element(),
                Err(witness) => {
                    println!(
                        "trial {trial}: gcd of base norm with modulus is {}",
                        witness.factor
                    );
                    composite = true;
                    break;
                }
            };
            let report = mr_minus_test(&ring, &w).expect("generated bases have norm one");
            print_mr2_report(trial, &w, &report);
            if report.outcome == MrMinusOutcome::Composite {
                composite = true;
                break;
            }
        }
    }

    if composite {
        println!("verdict: composite");
        ExitCode::from(1)
    } else {
        println!("verdict: inconclusive after {trials_run} trial(s)");
        ExitCode::from(2)
    }
}

// ---------------------------------------------------------------------------
// carmichael
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FactorJson {
    prime: u64,
    local_order: u64,
    divides: bool,
}

#[derive(Serialize)]
struct CarmichaelJson {
    n: u64,
    d: i64,
    expected_order: Option<u64>,
    factors: Vec<FactorJson>,
    is_carmichael: bool,
}

pub fn run_carmichael(args: &CarmichaelArgs) -> ExitCode {
    if args.d == 0 {
        return usage_error("discriminant must be nonzero");
    }
    if args.hi < args.lo {
        return usage_error("--hi must be at least --lo");
    }
    if args.hi > SEARCH_LIMIT {
        return usage_error(format_args!("--hi is capped at {SEARCH_LIMIT}"));
    }

    let skipped = (args.lo.max(3)..=args.hi)
        .filter(|n| n % 2 == 1 && n.gcd(&args.d.unsigned_abs()) > 1)
        .count();
    if skipped > 0 {
        eprintln!(
            "note: {skipped} odd candidates share a factor with D = {} and cannot pass",
            args.d
        );
    }

    let hits = search_carmichael(args.lo, args.hi, args.d);
    let reports: Vec<CarmichaelJson> = hits
        .iter()
        .map(|&n| {
            let report = korselt_check(n, args.d);
            CarmichaelJson {
                n: report.n,
                d: report.d,
                expected_order: report.expected_order,
                factors: report
                    .entries
                    .iter()
                    .map(|entry| FactorJson {
                        prime: entry.prime,
                        local_order: entry.local_order,
                        divides: entry.divides,
                    })
                    .collect(),
                is_carmichael: report.is_carmichael,
            }
        })
        .collect();

    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        );
    } else if reports.is_empty() {
        println!(
            "no order-test pseudoprimes in [{}, {}] for D = {}",
            args.lo, args.hi, args.d
        );
    } else {
        for report in &reports {
            let factors: Vec<String> = report
                .factors
                .iter()
                .map(|f| f.prime.to_string())
                .collect();
            let locals: Vec<String> = report
                .factors
                .iter()
                .map(|f| f.local_order.to_string())
                .collect();
            println!(
                "{} = {}: group-order analogue {}, local orders [{}] all divide",
                report.n,
                factors.join(" * "),
                report.expected_order.expect("hits are coprime to D"),
                locals.join(", ")
            );
        }
    }
    ExitCode::SUCCESS
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

pub fn run_bench(args: &BenchArgs) -> ExitCode {
    let mut rows: Vec<(u32, f64)> = Vec::with_capacity(args.ell.len());
    for &ell in &args.ell {
        let params = match build(args.d, args.k, args.multiplier, args.p, ell) {
            Ok(params) => params,
            Err(err) => return usage_error(err),
        };
        let mut times = Vec::with_capacity(args.reps as usize);
        let mut verdict = "";
        for rep in 0..args.reps {
            let start = Instant::now();
            let outcome = lucasian_test_seeded(&params, args.seed.wrapping_add(rep.into()), args.retries);
            times.push(start.elapsed().as_secs_f64());
            verdict = outcome.verdict();
        }
        times.sort_by(f64::total_cmp);
        let median = times[times.len() / 2];
        println!(
            "l={:<5} bits={:<7} {:<15} median {:.6} s over {} reps",
            ell,
            params.bits(),
            verdict,
            median,
            args.reps
        );
        rows.push((ell, median));
    }

    // Report how the cost grows when the exponent doubles, wherever the
    // requested list contains both l and 2l.
    for &(ell, t) in &rows {
        if let Some(&(_, t2)) = rows.iter().find(|(other, _)| *other == ell * 2) {
            if t > 0.0 {
                println!("t(2*{ell}) / t({ell}) = {:.2}", t2 / t);
            }
        }
    }
    ExitCode::SUCCESS
}
