// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

//! Wall-clock comparison of the closed form against both oracles.

use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{evaluate, Family, SumSpec};
use crate::decimal::decimal_digits;
use crate::error::{Error, Result};
use crate::kernel::Index;
use crate::oracle::{oracle_sum, oracle_sum_incremental};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    OraclePerTerm,
    OracleIncremental,
}

impl Method {
    pub const ALL: [Method; 3] = [
        Method::ClosedForm,
        Method::OraclePerTerm,
        Method::OracleIncremental,
    ];

    pub fn run(self, spec: SumSpec) -> Result<BigInt> {
        match self {
            Method::ClosedForm => evaluate(spec).map(|f| f.value),
            Method::OraclePerTerm => oracle_sum(spec),
            Method::OracleIncremental => oracle_sum_incremental(spec),
        }
    }
}

/// One CSV row: `family,r,n,method,wall_time_s,value_digits`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub family: Family,
    pub r: Index,
    pub n: Index,
    pub method: Method,
    pub wall_time_s: f64,
    pub value_digits: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct BenchOptions {
    /// Timed passes per point; the median is reported.
    pub repeat: usize,
    /// Run one untimed pass first.
    pub warmup: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            repeat: 1,
            warmup: true,
        }
    }
}

/// Median wall time of `opts.repeat` passes, plus the computed value.
pub fn measure(method: Method, spec: SumSpec, opts: &BenchOptions) -> Result<(Duration, BigInt)> {
    if opts.warmup {
        method.run(spec)?;
    }
    let mut times = Vec::with_capacity(opts.repeat.max(1));
    let mut value = BigInt::default();
    for _ in 0..opts.repeat.max(1) {
        let start = Instant::now();
        value = method.run(spec)?;
        times.push(start.elapsed());
    }
    times.sort();
    Ok((times[times.len() / 2], value))
}

/// Times every method at each `n`; values are cross-checked before any row is kept.
pub fn run_bench(
    family: Family,
    r: Index,
    ns: &[Index],
    opts: &BenchOptions,
) -> Result<Vec<BenchRecord>> {
    let mut rows = Vec::with_capacity(ns.len() * Method::ALL.len());
    for &n in ns {
        if n < 1 {
            return Err(Error::InvalidParameter(format!(
                "bench needs n >= 1, got {n}"
            )));
        }
        let spec = SumSpec::new(family, r, n)?;
        let mut reference: Option<BigInt> = None;
        let mut timed = Vec::with_capacity(Method::ALL.len());
        for method in Method::ALL {
            let (elapsed, value) = measure(method, spec, opts)?;
            match &reference {
                None => reference = Some(value),
                Some(v) if *v != value => {
                    return Err(Error::Integrity(format!(
                        "{method:?} disagrees with the closed form for {family} r={r} n={n}"
                    )))
                }
                Some(_) => {}
            }
            timed.push((method, elapsed));
        }
        let digits = decimal_digits(reference.as_ref().expect("at least one method ran"));
        rows.extend(timed.into_iter().map(|(method, elapsed)| BenchRecord {
            family,
            r,
            n,
            method,
            wall_time_s: elapsed.as_secs_f64(),
            value_digits: digits,
        }));
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchRecord], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}
