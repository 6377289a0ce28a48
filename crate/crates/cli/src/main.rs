// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

//! `fibcube`: evaluate, verify and benchmark closed-form Fibonacci/Lucas cube sums.
//!
//! Exit codes: 0 pass, 1 verification mismatch, 2 usage error, 3 internal
//! integrity error.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fibcube::bench::{run_bench, write_csv, BenchOptions};
use fibcube::identities::{check_identity, list_identities, IdentityArgs, IdentityId};
use fibcube::verify::{verify_families, verify_identities, IdentityGrid};
use fibcube::{evaluate, Axis, Error, Family, Index, SumSpec, VerificationReport};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "fibcube",
    version,
    about = "Closed-form sums of cubes of even-indexed Fibonacci and Lucas numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one sum through its closed form
    Eval(EvalArgs),
    /// Compare closed forms against the oracle, or sweep the identity catalog
    Verify(VerifyArgs),
    /// List or check catalog identities
    Identities(IdentitiesArgs),
    /// Time the closed form against both oracles, CSV output
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct Output {
    /// Write output to FILE instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// JSON output (the default for documents and reports)
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long)]
    family: Family,
    #[arg(long, allow_hyphen_values = true)]
    r: Index,
    #[arg(long, allow_hyphen_values = true)]
    n: Index,
    /// Print only the decimal value
    #[arg(long)]
    plain: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Comma-separated families, or `all`
    #[arg(long)]
    families: Option<String>,
    /// Comma-separated identity keys, or `all`
    #[arg(long)]
    identities: Option<String>,
    /// Range a:b of r (families default -6:6, ratio lemmas default -5:5 without 0)
    #[arg(long, allow_hyphen_values = true)]
    r: Option<Axis>,
    /// Range a:b of n (families default 0:120, ratio lemmas default 1:50)
    #[arg(long, allow_hyphen_values = true)]
    n: Option<Axis>,
    /// Range a:b of u (default -30:30)
    #[arg(long, allow_hyphen_values = true)]
    u: Option<Axis>,
    /// Range a:b of v (default -30:30)
    #[arg(long, allow_hyphen_values = true)]
    v: Option<Axis>,
    /// Stop at the first mismatch
    #[arg(long)]
    fail_fast: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct IdentitiesArgs {
    /// Print the catalog as JSON
    #[arg(long, conflicts_with = "check")]
    list: bool,
    /// Check one identity at the point given by --args
    #[arg(long, value_name = "KEY", requires = "args")]
    check: Option<String>,
    /// Comma-separated arguments, e.g. 5,3
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    args: Vec<Index>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    family: Family,
    #[arg(long, allow_hyphen_values = true)]
    r: Index,
    /// Comma-separated term counts, each >= 1
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<Index>,
    /// Timed passes per point; the median is reported
    #[arg(long, default_value_t = 1)]
    repeat: usize,
    /// Skip the untimed warm-up pass
    #[arg(long)]
    no_warmup: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Mismatch,
    Integrity(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_integrity() {
            Failure::Integrity(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn sink(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit_json<T: Serialize>(value: &T, out: &Option<PathBuf>) -> Result<(), Failure> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(io::Error::from)?;
    writeln!(w)?;
    Ok(())
}

fn cmd_eval(args: EvalArgs) -> Result<(), Failure> {
    let spec = SumSpec::new(args.family, args.r, args.n)?;
    let form = evaluate(spec)?;
    if args.plain {
        let mut w = sink(&args.output.out)?;
        writeln!(w, "{}", form.value)?;
        return Ok(());
    }
    emit_json(&form, &args.output.out)
}

#[derive(Serialize)]
struct VerifySummary {
    status: &'static str,
    points_checked: usize,
    points_skipped: usize,
    mismatch_count: usize,
    reports: Vec<VerificationReport>,
}

fn parse_families(list: &str) -> Result<Vec<Family>, Failure> {
    if list == "all" {
        return Ok(Family::ALL.to_vec());
    }
    list.split(',')
        .map(|s| s.trim().parse().map_err(Failure::from))
        .collect()
}

fn parse_identities(list: &str) -> Result<Vec<IdentityId>, Failure> {
    if list == "all" {
        return Ok(list_identities().into_iter().map(|i| i.key).collect());
    }
    list.split(',')
        .map(|s| IdentityId::parse(s.trim()).map_err(Failure::from))
        .collect()
}

fn named(axis: Option<Axis>, name: &str, default: Axis) -> Axis {
    match axis {
        Some(a) => Axis {
            name: name.to_string(),
            ..a
        },
        None => default,
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    if args.families.is_none() && args.identities.is_none() {
        return Err(Failure::Usage(
            "verify needs --families and/or --identities".into(),
        ));
    }
    if let Some(n) = &args.n {
        if n.lo < 0 {
            return Err(Failure::Usage("n range must be non-negative".into()));
        }
    }

    let mut reports = Vec::new();
    if let Some(list) = &args.families {
        let families = parse_families(list)?;
        let r = named(args.r.clone(), "r", Axis::new("r", -6, 6));
        let n = named(args.n.clone(), "n", Axis::new("n", 0, 120));
        reports.extend(verify_families(&families, &r, &n, args.fail_fast));
    }
    let stopped = args.fail_fast && reports.iter().any(|r| !r.passed());
    if let (Some(list), false) = (&args.identities, stopped) {
        let ids = parse_identities(list)?;
        let d = IdentityGrid::default();
        let grid = IdentityGrid {
            u: named(args.u.clone(), "u", d.u),
            v: named(args.v.clone(), "v", d.v),
            r: named(args.r.clone(), "r", d.r),
            n: named(args.n.clone(), "n", d.n),
        };
        reports.extend(verify_identities(&ids, &grid, args.fail_fast)?);
    }

    let mismatch_count: usize = reports.iter().map(|r| r.mismatches.len()).sum();
    let summary = VerifySummary {
        status: if mismatch_count == 0 { "pass" } else { "fail" },
        points_checked: reports.iter().map(|r| r.points_checked).sum(),
        points_skipped: reports.iter().map(|r| r.points_skipped).sum(),
        mismatch_count,
        reports,
    };
    emit_json(&summary, &args.output.out)?;
    if mismatch_count > 0 {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn cmd_identities(args: IdentitiesArgs) -> Result<(), Failure> {
    if let Some(key) = &args.check {
        let id = IdentityId::parse(key)?;
        let check = check_identity(id, &IdentityArgs(args.args.clone()))?;
        emit_json(&check, &args.output.out)?;
        return if check.holds {
            Ok(())
        } else {
            Err(Failure::Mismatch)
        };
    }
    if !args.list {
        return Err(Failure::Usage(
            "identities needs --list or --check KEY --args ...".into(),
        ));
    }
    emit_json(&list_identities(), &args.output.out)
}

fn cmd_bench(args: BenchArgs) -> Result<(), Failure> {
    if let Some(bad) = args.n.iter().find(|&&n| n < 1) {
        return Err(Failure::Usage(format!(
            "bench needs every n >= 1, got {bad}"
        )));
    }
    let opts = BenchOptions {
        repeat: args.repeat.max(1),
        warmup: !args.no_warmup,
    };
    let rows = run_bench(args.family, args.r, &args.n, &opts)?;
    write_csv(&rows, sink(&args.out)?)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Identities(a) => cmd_identities(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Integrity(msg)) => {
            eprintln!("integrity error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
