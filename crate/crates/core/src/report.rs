// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

//! Grid sweeps and their reports.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::Index;

/// One inclusive range `lo..=hi` of a sweep grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub lo: Index,
    pub hi: Index,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub exclude_zero: bool,
}

impl Axis {
    pub fn new(name: impl Into<String>, lo: Index, hi: Index) -> Self {
        Axis {
            name: name.into(),
            lo,
            hi,
            exclude_zero: false,
        }
    }

    pub fn without_zero(mut self) -> Self {
        self.exclude_zero = true;
        self
    }

    pub fn values(&self) -> impl Iterator<Item = Index> + '_ {
        (self.lo..=self.hi).filter(move |&v| !(self.exclude_zero && v == 0))
    }

    pub fn len(&self) -> usize {
        self.values().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Parses `a:b` (inclusive on both ends) or a single integer `a`.
impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("range `{s}` is not of the form a:b"));
        let (lo, hi) = match s.split_once(':') {
            Some((a, b)) => (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ),
            None => {
                let v: Index = s.trim().parse().map_err(|_| bad())?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(Error::InvalidParameter(format!("range `{s}` has lo > hi")));
        }
        Ok(Axis::new("", lo, hi))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Nothing was checked: the grid was empty or every point was skipped.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub params: BTreeMap<String, Index>,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub grid: Vec<Axis>,
    pub status: Status,
    pub points_checked: usize,
    pub points_skipped: usize,
    pub mismatches: Vec<Mismatch>,
    pub wall_time_s: f64,
    /// Set when `fail_fast` stopped the sweep before the grid was exhausted.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn grid_cardinality(&self) -> usize {
        self.grid.iter().map(Axis::len).product()
    }
}

/// Outcome of evaluating one grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointOutcome {
    Pass,
    /// The point violates a precondition (e.g. a vanishing denominator).
    Skip,
    Mismatch {
        expected: String,
        got: String,
    },
}

/// Cartesian product of the axes, first axis outermost.
pub fn grid_points(grid: &[Axis]) -> Vec<Vec<Index>> {
    let mut points = vec![Vec::new()];
    for axis in grid {
        let values: Vec<Index> = axis.values().collect();
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    points
}

/// Evaluates `check` at every grid point and assembles a report.
///
/// Points run in parallel unless `fail_fast` is set; mismatches are always
/// listed in grid order.
pub fn run_sweep<F>(subject: &str, grid: Vec<Axis>, fail_fast: bool, check: F) -> VerificationReport
where
    F: Fn(&[Index]) -> PointOutcome + Sync,
{
    let start = Instant::now();
    let points = grid_points(&grid);
    let mut truncated = false;

    let outcomes: Vec<(usize, PointOutcome)> = if fail_fast {
        let mut out = Vec::new();
        for (i, p) in points.iter().enumerate() {
            let o = check(p);
            let stop = matches!(o, PointOutcome::Mismatch { .. });
            out.push((i, o));
            if stop {
                truncated = i + 1 < points.len();
                break;
            }
        }
        out
    } else {
        points.par_iter().map(|p| check(p)).enumerate().collect()
    };

    let mut checked = 0;
    let mut skipped = 0;
    let mut mismatches = Vec::new();
    for (i, outcome) in outcomes {
        match outcome {
            PointOutcome::Pass => checked += 1,
            PointOutcome::Skip => skipped += 1,
            PointOutcome::Mismatch { expected, got } => {
                checked += 1;
                let params = grid
                    .iter()
                    .zip(&points[i])
                    .map(|(a, &v)| (a.name.clone(), v))
                    .collect();
                mismatches.push(Mismatch {
                    params,
                    expected,
                    got,
                });
            }
        }
    }

    let status = if !mismatches.is_empty() {
        Status::Fail
    } else if checked == 0 {
        Status::Vacuous
    } else {
        Status::Pass
    };

    VerificationReport {
        subject: subject.to_string(),
        grid,
        status,
        points_checked: checked,
        points_skipped: skipped,
        mismatches,
        wall_time_s: start.elapsed().as_secs_f64(),
        truncated,
    }
}
