// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed forms against the per-term oracle over `(r, n)` grids.

use crate::closed_forms::{evaluate, Family, SumSpec};
use crate::error::Result;
use crate::identities::{identity_info, sweep_identity, IdentityId, IdentityKind};
use crate::oracle::oracle_sum;
use crate::report::{run_sweep, Axis, PointOutcome, VerificationReport};

fn check_point(family: Family, r: i64, n: i64) -> PointOutcome {
    let spec = match SumSpec::new(family, r, n) {
        Ok(s) => s,
        Err(_) => return PointOutcome::Skip,
    };
    let expected = match oracle_sum(spec) {
        Ok(v) => v,
        Err(e) => {
            return PointOutcome::Mismatch {
                expected: format!("oracle error: {e}"),
                got: String::new(),
            }
        }
    };
    match evaluate(spec) {
        Ok(form) if form.value == expected && form.is_consistent() => PointOutcome::Pass,
        Ok(form) => PointOutcome::Mismatch {
            expected: expected.to_string(),
            got: form.value.to_string(),
        },
        Err(e) => PointOutcome::Mismatch {
            expected: expected.to_string(),
            got: e.to_string(),
        },
    }
}

/// One report per family, in the order given.
pub fn verify_families(
    families: &[Family],
    r: &Axis,
    n: &Axis,
    fail_fast: bool,
) -> Vec<VerificationReport> {
    let mut reports = Vec::with_capacity(families.len());
    for &family in families {
        let grid = vec![
            Axis {
                name: "r".into(),
                ..r.clone()
            },
            Axis {
                name: "n".into(),
                ..n.clone()
            },
        ];
        let rep = run_sweep(family.name(), grid, fail_fast, |p| {
            check_point(family, p[0], p[1])
        });
        let stop = fail_fast && !rep.passed();
        reports.push(rep);
        if stop {
            break;
        }
    }
    reports
}

/// Ranges used by [`verify_identities`]: `u`, `v` for auxiliary identities,
/// `r`, `n` for ratio lemmas.
#[derive(Debug, Clone)]
pub struct IdentityGrid {
    pub u: Axis,
    pub v: Axis,
    pub r: Axis,
    pub n: Axis,
}

impl Default for IdentityGrid {
    fn default() -> Self {
        IdentityGrid {
            u: Axis::new("u", -30, 30),
            v: Axis::new("v", -30, 30),
            r: Axis::new("r", -5, 5).without_zero(),
            n: Axis::new("n", 1, 50),
        }
    }
}

pub fn verify_identities(
    ids: &[IdentityId],
    grid: &IdentityGrid,
    fail_fast: bool,
) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::with_capacity(ids.len());
    for &id in ids {
        let info = identity_info(id);
        let axes: Vec<Axis> = match info.kind {
            IdentityKind::Auxiliary => [&grid.u, &grid.v][..info.arity]
                .iter()
                .map(|a| (*a).clone())
                .collect(),
            IdentityKind::Ratio => vec![grid.r.clone(), grid.n.clone()],
        };
        let axes = axes
            .into_iter()
            .zip(info.params)
            .map(|(a, name)| Axis {
                name: name.to_string(),
                ..a
            })
            .collect();
        let rep = sweep_identity(id, axes, fail_fast)?;
        let stop = fail_fast && !rep.passed();
        reports.push(rep);
        if stop {
            break;
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::list_identities;
    use crate::report::Status;

    #[test]
    fn small_family_grid() {
        let reps = verify_families(
            &Family::ALL,
            &Axis::new("", -3, 3),
            &Axis::new("", 0, 20),
            false,
        );
        assert_eq!(reps.len(), 4);
        for rep in reps {
            assert_eq!(rep.status, Status::Pass, "{}", rep.subject);
            assert_eq!(rep.points_checked, 7 * 21);
            assert_eq!(rep.grid[0].name, "r");
        }
    }

    #[test]
    fn single_zero_point() {
        let reps = verify_families(
            &[Family::FibCube],
            &Axis::new("", 1, 1),
            &Axis::new("", 0, 0),
            false,
        );
        assert_eq!(reps[0].points_checked, 1);
        assert!(reps[0].passed());
    }

    #[test]
    fn negative_n_points_are_skipped() {
        let reps = verify_families(
            &[Family::FibFirst],
            &Axis::new("", 1, 1),
            &Axis::new("", -2, 1),
            false,
        );
        assert_eq!((reps[0].points_checked, reps[0].points_skipped), (2, 2));
    }

    #[test]
    fn identity_axes_follow_arity() {
        let ids: Vec<_> = list_identities().into_iter().map(|i| i.key).collect();
        let grid = IdentityGrid {
            u: Axis::new("u", -4, 4),
            v: Axis::new("v", -4, 4),
            r: Axis::new("r", -2, 2),
            n: Axis::new("n", 1, 3),
        };
        let reps = verify_identities(&ids, &grid, false).unwrap();
        assert_eq!(reps.len(), 20);
        for (rep, info) in reps.iter().zip(list_identities()) {
            assert!(rep.passed(), "{}", rep.subject);
            let names: Vec<_> = rep.grid.iter().map(|a| a.name.as_str()).collect();
            assert_eq!(names, info.params);
            assert_eq!(
                rep.points_checked + rep.points_skipped,
                rep.grid_cardinality()
            );
        }
    }
}
