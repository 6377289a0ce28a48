// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

//! Brute-force reference sums and a generic telescoping checker.
//!
//! Nothing here uses a closed form. `oracle_sum` calls the kernel once per
//! term; `oracle_sum_incremental` never calls it at all and walks
//! `(F_{2rk}, F_{2rk+1})` forward with a fixed-step pair recurrence seeded by
//! plain iteration.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::closed_forms::{Family, SumSpec};
use crate::error::{Error, Result};
use crate::identities::{IdentityArgs, IdentityCheck, IdentityId};
use crate::kernel::{derived, fib, lucas, Index};

fn power(v: BigInt, family: Family) -> BigInt {
    if family.power() == 3 {
        &v * &v * &v
    } else {
        v
    }
}

fn check_terms(spec: &SumSpec) -> Result<()> {
    if spec.n < 0 {
        return Err(Error::NegativeTermCount(spec.n));
    }
    Ok(())
}

/// Literal `sum_{k=1..n} X_{2rk}^p` with one kernel call per term.
pub fn oracle_sum(spec: SumSpec) -> Result<BigInt> {
    check_terms(&spec)?;
    let step = derived("2r", spec.r.checked_mul(2))?;
    let mut total = BigInt::zero();
    for k in 1..=spec.n {
        let idx = derived("2rk", step.checked_mul(k))?;
        let term = if spec.family.is_lucas() {
            lucas(idx)?
        } else {
            fib(idx)?
        };
        total += power(term, spec.family);
    }
    Ok(total)
}

/// `(F_{s-1}, F_s, F_{s+1})` by walking the recurrence one step at a time.
fn seed_triple(s: Index) -> (BigInt, BigInt, BigInt) {
    // window (F_{j-1}, F_j, F_{j+1}) starting at j = 0
    let mut w = (BigInt::one(), BigInt::zero(), BigInt::one());
    if s >= 0 {
        for _ in 0..s {
            let next = &w.1 + &w.2;
            w = (w.1, w.2, next);
        }
    } else {
        for _ in 0..s.unsigned_abs() {
            let prev = &w.1 - &w.0;
            w = (prev, w.0, w.1);
        }
    }
    w
}

/// Same sum as [`oracle_sum`], advancing the pair `(F_m, F_{m+1})` by
/// `m -> m + 2r` through `F_{m+s} = F_m F_{s-1} + F_{m+1} F_s`.
pub fn oracle_sum_incremental(spec: SumSpec) -> Result<BigInt> {
    check_terms(&spec)?;
    let s = derived("2r", spec.r.checked_mul(2))?;
    let (a, b, c) = seed_triple(s);
    let mut x = BigInt::zero();
    let mut y = BigInt::one();
    let mut total = BigInt::zero();
    for _ in 0..spec.n {
        let nx = &x * &a + &y * &b;
        let ny = &x * &b + &y * &c;
        x = nx;
        y = ny;
        let term = if spec.family.is_lucas() {
            (&y << 1u32) - &x
        } else {
            x.clone()
        };
        total += power(term, spec.family);
    }
    Ok(total)
}

/// Parameters of `sum_{k=1..n} [f(mk+mq) - f(mk)] = sum_{k=1..q} f(mk+mn) - sum_{k=1..q} f(mk)`.
pub struct TelescopeSpec<F> {
    pub m: Index,
    pub q: Index,
    pub n: Index,
    pub f: F,
}

/// Evaluates both sides of the telescoping identity literally.
pub fn check_telescope<F>(spec: &TelescopeSpec<F>) -> Result<IdentityCheck>
where
    F: Fn(Index) -> BigInt,
{
    let TelescopeSpec { m, q, n, ref f } = *spec;
    if m <= 0 || q <= 0 || n <= 0 {
        return Err(Error::InvalidParameter(format!(
            "telescoping needs positive m, q, n; got m={m}, q={q}, n={n}"
        )));
    }
    let mk = |k: Index| derived("mk", m.checked_mul(k));
    let mq = derived("mq", m.checked_mul(q))?;
    let mn = derived("mn", m.checked_mul(n))?;

    let mut lhs = BigInt::zero();
    for k in 1..=n {
        let base = mk(k)?;
        lhs += f(derived("mk+mq", base.checked_add(mq))?) - f(base);
    }
    let mut rhs = BigInt::zero();
    for k in 1..=q {
        let base = mk(k)?;
        rhs += f(derived("mk+mn", base.checked_add(mn))?) - f(base);
    }
    Ok(IdentityCheck::new(
        IdentityId::TELESCOPE,
        IdentityArgs(vec![m, q, n]),
        lhs,
        rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, r: Index, n: Index) -> SumSpec {
        SumSpec::new(family, r, n).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            oracle_sum(spec(Family::FibCube, 1, 2)).unwrap(),
            BigInt::from(28)
        );
        assert_eq!(
            oracle_sum(spec(Family::LucasCube, 1, 1)).unwrap(),
            BigInt::from(27)
        );
        for fam in Family::ALL {
            assert!(oracle_sum(spec(fam, 4, 0)).unwrap().is_zero());
        }
        assert_eq!(
            oracle_sum_incremental(spec(Family::FibCube, 1, 2)).unwrap(),
            BigInt::from(28)
        );
        assert_eq!(
            oracle_sum_incremental(spec(Family::FibFirst, 2, 2)).unwrap(),
            BigInt::from(24)
        );
        assert!(oracle_sum_incremental(spec(Family::LucasFirst, 1, 0))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn seeds_match_kernel() {
        for s in -40..=40 {
            let (a, b, c) = seed_triple(s);
            assert_eq!(
                (a, b, c),
                (fib(s - 1).unwrap(), fib(s).unwrap(), fib(s + 1).unwrap())
            );
        }
    }

    #[test]
    fn two_paths_agree() {
        for fam in Family::ALL {
            for r in -4..=4 {
                for n in 0..30 {
                    let s = spec(fam, r, n);
                    assert_eq!(
                        oracle_sum(s).unwrap(),
                        oracle_sum_incremental(s).unwrap(),
                        "{s:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn telescope_examples() {
        let c = check_telescope(&TelescopeSpec {
            m: 2,
            q: 2,
            n: 3,
            f: |k| lucas(k - 4).unwrap(),
        })
        .unwrap();
        assert!(c.holds);
        let c = check_telescope(&TelescopeSpec {
            m: 1,
            q: 1,
            n: 1,
            f: BigInt::from,
        })
        .unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, BigInt::from(1));
        let c = check_telescope(&TelescopeSpec {
            m: 3,
            q: 2,
            n: 4,
            f: |k| fib(k).unwrap(),
        })
        .unwrap();
        assert!(c.holds);
        assert_eq!(c.id, IdentityId::TELESCOPE);
    }

    #[test]
    fn telescope_rejects_non_positive() {
        assert!(check_telescope(&TelescopeSpec {
            m: 0,
            q: 1,
            n: 1,
            f: BigInt::from
        })
        .is_err());
        assert!(check_telescope(&TelescopeSpec {
            m: 1,
            q: -1,
            n: 1,
            f: BigInt::from
        })
        .is_err());
    }

    #[test]
    fn negative_terms_rejected() {
        let raw = SumSpec {
            family: Family::FibCube,
            r: 1,
            n: -1,
        };
        assert!(oracle_sum(raw).is_err());
        assert!(oracle_sum_incremental(raw).is_err());
    }
}
