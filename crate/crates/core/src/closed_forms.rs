// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

//! Factored closed forms for `sum_{k=1..n} X_{2rk}^p`, `X` in {F, L}, `p` in {1, 3}.
//!
//! Every evaluator multiplies out a fixed list of factors, then divides by
//! the left-hand multiplier (`L_{3r}`, `F_{3r}`, ...) with a zero-remainder
//! check. The number of kernel calls is independent of `n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{derived, fib, fib_lucas, lucas, Index};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    FibCube,
    LucasCube,
    FibFirst,
    LucasFirst,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::FibCube,
        Family::LucasCube,
        Family::FibFirst,
        Family::LucasFirst,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::FibCube => "fib-cube",
            Family::LucasCube => "lucas-cube",
            Family::FibFirst => "fib-first",
            Family::LucasFirst => "lucas-first",
        }
    }

    pub fn is_lucas(self) -> bool {
        matches!(self, Family::LucasCube | Family::LucasFirst)
    }

    pub fn power(self) -> u32 {
        match self {
            Family::FibCube | Family::LucasCube => 3,
            Family::FibFirst | Family::LucasFirst => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

/// A sum `sum_{k=1..n} X_{2rk}^p` for one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SumSpec {
    pub family: Family,
    pub r: Index,
    pub n: Index,
}

impl SumSpec {
    pub fn new(family: Family, r: Index, n: Index) -> Result<Self> {
        if n < 0 {
            return Err(Error::NegativeTermCount(n));
        }
        Ok(SumSpec { family, r, n })
    }
}

/// Which parity case of a closed form was applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// `r` even; these forms do not split on `n`.
    REven,
    ROddNEven,
    ROddNOdd,
    /// `r = 0`: the multiplier vanishes and the sum is computed directly.
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub label: String,
    #[serde(with = "crate::decimal")]
    pub value: BigInt,
}

/// A sum together with the factorization that produced it.
///
/// `divisor * value == product == prod(factors)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredForm {
    #[serde(flatten)]
    pub spec: SumSpec,
    pub branch: Branch,
    #[serde(with = "crate::decimal")]
    pub value: BigInt,
    pub divisor_label: String,
    #[serde(with = "crate::decimal")]
    pub divisor: BigInt,
    #[serde(with = "crate::decimal")]
    pub product: BigInt,
    pub factors: Vec<Factor>,
}

impl FactoredForm {
    pub fn factor_product(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, f| acc * &f.value)
    }

    /// Re-checks `divisor * value == product == prod(factors)`.
    pub fn is_consistent(&self) -> bool {
        let p = self.factor_product();
        p == self.product && &self.divisor * &self.value == p
    }
}

struct Factors(Vec<Factor>);

impl Factors {
    fn new() -> Self {
        Factors(Vec::new())
    }

    fn push(mut self, label: impl Into<String>, value: BigInt) -> Self {
        self.0.push(Factor {
            label: label.into(),
            value,
        });
        self
    }

    fn finish(
        self,
        spec: SumSpec,
        branch: Branch,
        divisor_label: &str,
        divisor: BigInt,
    ) -> Result<FactoredForm> {
        let product = self.0.iter().fold(BigInt::one(), |acc, f| acc * &f.value);
        let (value, rem) = product.div_rem(&divisor);
        if !rem.is_zero() {
            return Err(Error::InexactDivision {
                context: format!("{} closed form at r={}, n={}", spec.family, spec.r, spec.n),
                divisor,
                remainder: rem,
            });
        }
        Ok(FactoredForm {
            spec,
            branch,
            value,
            divisor_label: divisor_label.to_string(),
            divisor,
            product,
            factors: self.0,
        })
    }
}

fn sq(v: &BigInt) -> BigInt {
    v * v
}

fn is_odd(v: Index) -> bool {
    v.rem_euclid(2) == 1
}

/// F and L at the subscripts `rn`, `rn+r` and `r` shared by every form.
struct Terms {
    spec: SumSpec,
    f_rn: BigInt,
    l_rn: BigInt,
    f_rn1: BigInt,
    l_rn1: BigInt,
    f_r: BigInt,
    l_r: BigInt,
}

impl Terms {
    fn new(spec: SumSpec) -> Result<Self> {
        let rn = derived("rn", spec.r.checked_mul(spec.n))?;
        let rn1 = derived("rn+r", rn.checked_add(spec.r))?;
        let (f_rn, l_rn) = fib_lucas(rn)?;
        let (f_rn1, l_rn1) = fib_lucas(rn1)?;
        let (f_r, l_r) = fib_lucas(spec.r)?;
        Ok(Terms {
            spec,
            f_rn,
            l_rn,
            f_rn1,
            l_rn1,
            f_r,
            l_r,
        })
    }

    fn r_odd(&self) -> bool {
        is_odd(self.spec.r)
    }

    fn n_odd(&self) -> bool {
        is_odd(self.spec.n)
    }

    fn odd_branch(&self) -> Branch {
        if self.n_odd() {
            Branch::ROddNOdd
        } else {
            Branch::ROddNEven
        }
    }

    /// `(F_{2rn+r}, L_{2rn+r})`
    fn at_2rn_r(&self) -> Result<(BigInt, BigInt)> {
        let (r, n) = (self.spec.r, self.spec.n);
        fib_lucas(derived(
            "2rn+r",
            r.checked_mul(n)
                .and_then(|x| x.checked_mul(2))
                .and_then(|x| x.checked_add(r)),
        )?)
    }

    fn l_2r(&self) -> Result<BigInt> {
        lucas(derived("2r", self.spec.r.checked_mul(2))?)
    }

    fn f_3r(&self) -> Result<BigInt> {
        fib(derived("3r", self.spec.r.checked_mul(3))?)
    }

    fn l_3r(&self) -> Result<BigInt> {
        lucas(derived("3r", self.spec.r.checked_mul(3))?)
    }
}

/// `r = 0`: every term is `F_0^p = 0` or `L_0^p = 2^p`.
fn degenerate(spec: SumSpec) -> Result<FactoredForm> {
    let label = match spec.family {
        Family::FibCube => "F_0^3",
        Family::LucasCube => "L_0^3",
        Family::FibFirst => "F_0",
        Family::LucasFirst => "L_0",
    };
    let term = if spec.family.is_lucas() {
        BigInt::from(2).pow(spec.family.power())
    } else {
        BigInt::zero()
    };
    Factors::new()
        .push("n", BigInt::from(spec.n))
        .push(label, term)
        .finish(spec, Branch::Degenerate, "1", BigInt::one())
}

fn spec_for(family: Family, r: Index, n: Index) -> Result<Option<SumSpec>> {
    let spec = SumSpec::new(family, r, n)?;
    Ok((r != 0).then_some(spec))
}

/// `sum_{k=1..n} F_{2rk}`.
pub fn first_power_fib_sum(r: Index, n: Index) -> Result<FactoredForm> {
    let Some(spec) = spec_for(Family::FibFirst, r, n)? else {
        return degenerate(SumSpec::new(Family::FibFirst, r, n)?);
    };
    let t = Terms::new(spec)?;
    if !t.r_odd() {
        return Factors::new()
            .push("F_{rn}", t.f_rn.clone())
            .push("F_{rn+r}", t.f_rn1.clone())
            .finish(spec, Branch::REven, "F_r", t.f_r);
    }
    let f = if t.n_odd() {
        Factors::new()
            .push("L_{rn}", t.l_rn.clone())
            .push("F_{rn+r}", t.f_rn1.clone())
    } else {
        Factors::new()
            .push("F_{rn}", t.f_rn.clone())
            .push("L_{rn+r}", t.l_rn1.clone())
    };
    f.finish(spec, t.odd_branch(), "L_r", t.l_r.clone())
}

/// `sum_{k=1..n} L_{2rk}`.
pub fn first_power_lucas_sum(r: Index, n: Index) -> Result<FactoredForm> {
    let Some(spec) = spec_for(Family::LucasFirst, r, n)? else {
        return degenerate(SumSpec::new(Family::LucasFirst, r, n)?);
    };
    let t = Terms::new(spec)?;
    if !t.r_odd() {
        return Factors::new()
            .push("F_{rn}", t.f_rn.clone())
            .push("L_{rn+r}", t.l_rn1.clone())
            .finish(spec, Branch::REven, "F_r", t.f_r);
    }
    let f = if t.n_odd() {
        Factors::new()
            .push("L_{rn}", t.l_rn.clone())
            .push("L_{rn+r}", t.l_rn1.clone())
    } else {
        Factors::new()
            .push("5", BigInt::from(5))
            .push("F_{rn}", t.f_rn.clone())
            .push("F_{rn+r}", t.f_rn1.clone())
    };
    f.finish(spec, t.odd_branch(), "L_r", t.l_r.clone())
}

/// `sum_{k=1..n} F_{2rk}^3`, squared-factor form.
pub fn fib_cube_sum(r: Index, n: Index) -> Result<FactoredForm> {
    let Some(spec) = spec_for(Family::FibCube, r, n)? else {
        return degenerate(SumSpec::new(Family::FibCube, r, n)?);
    };
    let t = Terms::new(spec)?;
    if !t.r_odd() {
        return Factors::new()
            .push("F_{rn}^2", sq(&t.f_rn))
            .push("F_{rn+r}^2", sq(&t.f_rn1))
            .push("L_{rn}L_{rn+r}+L_r", &t.l_rn * &t.l_rn1 + &t.l_r)
            .finish(spec, Branch::REven, "F_{3r}", t.f_3r()?);
    }
    let f = if t.n_odd() {
        Factors::new()
            .push("L_{rn}^2", sq(&t.l_rn))
            .push("F_{rn+r}^2", sq(&t.f_rn1))
            .push("F_{rn}L_{rn+r}+F_r", &t.f_rn * &t.l_rn1 + &t.f_r)
    } else {
        Factors::new()
            .push("F_{rn}^2", sq(&t.f_rn))
            .push("L_{rn+r}^2", sq(&t.l_rn1))
            .push("L_{rn}F_{rn+r}+F_r", &t.l_rn * &t.f_rn1 + &t.f_r)
    };
    f.finish(spec, t.odd_branch(), "L_{3r}", t.l_3r()?)
}

/// `sum_{k=1..n} F_{2rk}^3` through the alternative factorization with
/// `F_{2rn+r}` / `L_{2rn+r}` inside the last factor.
pub fn fib_cube_sum_variant(r: Index, n: Index) -> Result<FactoredForm> {
    let Some(spec) = spec_for(Family::FibCube, r, n)? else {
        return degenerate(SumSpec::new(Family::FibCube, r, n)?);
    };
    let t = Terms::new(spec)?;
    let (f_2rn1, l_2rn1) = t.at_2rn_r()?;
    if !t.r_odd() {
        return Factors::new()
            .push("F_{rn}", t.f_rn.clone())
            .push("F_{rn+r}", t.f_rn1.clone())
            .push(
                "L_{rn}L_{rn+r}L_{2rn+r}-2L_r^2",
                &t.l_rn * &t.l_rn1 * &l_2rn1 - 2 * sq(&t.l_r),
            )
            .finish(spec, Branch::REven, "5F_{3r}", 5 * t.f_3r()?);
    }
    let f = if t.n_odd() {
        Factors::new()
            .push("L_{rn}", t.l_rn.clone())
            .push("F_{rn+r}", t.f_rn1.clone())
            .push(
                "F_{rn}L_{rn+r}F_{2rn+r}-2F_r^2",
                &t.f_rn * &t.l_rn1 * &f_2rn1 - 2 * sq(&t.f_r),
            )
    } else {
        Factors::new()
            .push("F_{rn}", t.f_rn.clone())
            .push("L_{rn+r}", t.l_rn1.clone())
            .push(
                "L_{rn}F_{rn+r}F_{2rn+r}-2F_r^2",
                &t.l_rn * &t.f_rn1 * &f_2rn1 - 2 * sq(&t.f_r),
            )
    };
    f.finish(spec, t.odd_branch(), "L_{3r}", t.l_3r()?)
}

/// `sum_{k=1..n} L_{2rk}^3`.
pub fn lucas_cube_sum(r: Index, n: Index) -> Result<FactoredForm> {
    let Some(spec) = spec_for(Family::LucasCube, r, n)? else {
        return degenerate(SumSpec::new(Family::LucasCube, r, n)?);
    };
    let t = Terms::new(spec)?;
    let (f_2rn1, l_2rn1) = t.at_2rn_r()?;
    let tail = 4 * (t.l_2r()? + 1);
    if !t.r_odd() {
        return Factors::new()
            .push("F_{rn}", t.f_rn.clone())
            .push("L_{rn+r}", t.l_rn1.clone())
            .push(
                "5L_{rn}F_{rn+r}F_{2rn+r}+4(L_{2r}+1)",
                5 * &t.l_rn * &t.f_rn1 * &f_2rn1 + tail,
            )
            .finish(spec, Branch::REven, "F_{3r}", t.f_3r()?);
    }
    let f = if t.n_odd() {
        Factors::new()
            .push("L_{rn}", t.l_rn.clone())
            .push("L_{rn+r}", t.l_rn1.clone())
            .push(
                "5F_{rn}F_{rn+r}L_{2rn+r}+4(L_{2r}+1)",
                5 * &t.f_rn * &t.f_rn1 * &l_2rn1 + tail,
            )
    } else {
        Factors::new()
            .push("5", BigInt::from(5))
            .push("F_{rn}", t.f_rn.clone())
            .push("F_{rn+r}", t.f_rn1.clone())
            .push(
                "L_{rn}L_{rn+r}L_{2rn+r}+4(L_{2r}+1)",
                &t.l_rn * &t.l_rn1 * &l_2rn1 + tail,
            )
    };
    f.finish(spec, t.odd_branch(), "L_{3r}", t.l_3r()?)
}

/// Classical fixed-step instances of the cube sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialCase {
    /// `4 sum F_{2k}^3`
    Fib2k,
    /// `8 sum F_{4k}^3`
    Fib4k,
    /// `4 sum L_{2k}^3`
    Lucas2k,
    /// `8 sum L_{4k}^3`
    Lucas4k,
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 4] = [
        SpecialCase::Fib2k,
        SpecialCase::Fib4k,
        SpecialCase::Lucas2k,
        SpecialCase::Lucas4k,
    ];

    /// The general sum this case specializes.
    pub fn general(self, n: Index) -> Result<SumSpec> {
        let (family, r) = match self {
            SpecialCase::Fib2k => (Family::FibCube, 1),
            SpecialCase::Fib4k => (Family::FibCube, 2),
            SpecialCase::Lucas2k => (Family::LucasCube, 1),
            SpecialCase::Lucas4k => (Family::LucasCube, 2),
        };
        SumSpec::new(family, r, n)
    }
}

/// Evaluates a special case through its own factorization, subscripted by `n`.
pub fn special_case_sum(which: SpecialCase, n: Index) -> Result<FactoredForm> {
    let spec = which.general(n)?;
    let at = |expr: &'static str, k: Index, c: Index| -> Result<(BigInt, BigInt)> {
        fib_lucas(derived(
            expr,
            n.checked_mul(k).and_then(|x| x.checked_add(c)),
        )?)
    };
    let n_odd = is_odd(n);
    let odd_branch = if n_odd {
        Branch::ROddNOdd
    } else {
        Branch::ROddNEven
    };
    match which {
        SpecialCase::Fib2k => {
            let (f_n, l_n) = at("n", 1, 0)?;
            let (f_n1, l_n1) = at("n+1", 1, 1)?;
            let (f_nm1, l_nm1) = at("n-1", 1, -1)?;
            let (f_n2, l_n2) = at("n+2", 1, 2)?;
            let f = if n_odd {
                Factors::new()
                    .push("L_n^2", sq(&l_n))
                    .push("F_{n+1}^2", sq(&f_n1))
                    .push("L_{n-1}", l_nm1)
                    .push("F_{n+2}", f_n2)
            } else {
                Factors::new()
                    .push("F_n^2", sq(&f_n))
                    .push("L_{n+1}^2", sq(&l_n1))
                    .push("F_{n-1}", f_nm1)
                    .push("L_{n+2}", l_n2)
            };
            f.finish(spec, odd_branch, "4", BigInt::from(4))
        }
        SpecialCase::Fib4k => {
            let (f_2n, _) = at("2n", 2, 0)?;
            let (f_2n2, _) = at("2n+2", 2, 2)?;
            let (_, l_4n2) = at("4n+2", 4, 2)?;
            Factors::new()
                .push("F_{2n}^2", sq(&f_2n))
                .push("F_{2n+2}^2", sq(&f_2n2))
                .push("L_{4n+2}+6", l_4n2 + 6)
                .finish(spec, Branch::REven, "8", BigInt::from(8))
        }
        SpecialCase::Lucas2k => {
            let (f_n, l_n) = at("n", 1, 0)?;
            let (f_n1, l_n1) = at("n+1", 1, 1)?;
            let (_, l_2n1) = at("2n+1", 2, 1)?;
            let f = if n_odd {
                Factors::new()
                    .push("L_n", l_n)
                    .push("L_{n+1}", l_n1)
                    .push("5F_nF_{n+1}L_{2n+1}+16", 5 * &f_n * &f_n1 * &l_2n1 + 16)
            } else {
                Factors::new()
                    .push("5", BigInt::from(5))
                    .push("F_n", f_n.clone())
                    .push("F_{n+1}", f_n1.clone())
                    .push("L_nL_{n+1}L_{2n+1}+16", &l_n * &l_n1 * &l_2n1 + 16)
            };
            f.finish(spec, odd_branch, "4", BigInt::from(4))
        }
        SpecialCase::Lucas4k => {
            let (f_2n, l_2n) = at("2n", 2, 0)?;
            let (f_2n2, l_2n2) = at("2n+2", 2, 2)?;
            let (f_4n2, _) = at("4n+2", 4, 2)?;
            Factors::new()
                .push("F_{2n}", f_2n)
                .push("L_{2n+2}", l_2n2)
                .push(
                    "5L_{2n}F_{2n+2}F_{4n+2}+32",
                    5 * &l_2n * &f_2n2 * &f_4n2 + 32,
                )
                .finish(spec, Branch::REven, "8", BigInt::from(8))
        }
    }
}

/// Dispatches on the family.
pub fn evaluate(spec: SumSpec) -> Result<FactoredForm> {
    if spec.n < 0 {
        return Err(Error::NegativeTermCount(spec.n));
    }
    match spec.family {
        Family::FibCube => fib_cube_sum(spec.r, spec.n),
        Family::LucasCube => lucas_cube_sum(spec.r, spec.n),
        Family::FibFirst => first_power_fib_sum(spec.r, spec.n),
        Family::LucasFirst => first_power_lucas_sum(spec.r, spec.n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::kernel_calls;

    fn labels(f: &FactoredForm) -> Vec<(&str, i64)> {
        f.factors
            .iter()
            .map(|x| (x.label.as_str(), i64::try_from(&x.value).unwrap()))
            .collect()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn first_power_examples() {
        let f = first_power_fib_sum(2, 2).unwrap();
        assert_eq!(f.value, int(24));
        assert_eq!(f.divisor, int(1));
        assert_eq!(labels(&f), vec![("F_{rn}", 3), ("F_{rn+r}", 8)]);

        let f = first_power_fib_sum(1, 3).unwrap();
        assert_eq!(f.value, int(12));
        assert_eq!(labels(&f), vec![("L_{rn}", 4), ("F_{rn+r}", 3)]);
        assert_eq!(f.branch, Branch::ROddNOdd);

        assert_eq!(first_power_fib_sum(5, 0).unwrap().value, int(0));

        let f = first_power_lucas_sum(2, 2).unwrap();
        assert_eq!(f.value, int(54));
        assert_eq!(labels(&f), vec![("F_{rn}", 3), ("L_{rn+r}", 18)]);

        let f = first_power_lucas_sum(1, 2).unwrap();
        assert_eq!(f.value, int(10));
        assert_eq!(labels(&f), vec![("5", 5), ("F_{rn}", 1), ("F_{rn+r}", 2)]);

        assert_eq!(first_power_lucas_sum(3, 0).unwrap().value, int(0));
    }

    #[test]
    fn cube_examples() {
        let f = fib_cube_sum(1, 2).unwrap();
        assert_eq!(
            (f.value.clone(), f.divisor.clone(), f.product.clone()),
            (int(28), int(4), int(112))
        );
        assert_eq!(
            labels(&f),
            vec![
                ("F_{rn}^2", 1),
                ("L_{rn+r}^2", 16),
                ("L_{rn}F_{rn+r}+F_r", 7)
            ]
        );

        let f = fib_cube_sum(2, 1).unwrap();
        assert_eq!((f.value.clone(), f.product.clone()), (int(27), int(216)));
        assert_eq!(
            labels(&f),
            vec![
                ("F_{rn}^2", 1),
                ("F_{rn+r}^2", 9),
                ("L_{rn}L_{rn+r}+L_r", 24)
            ]
        );

        let f = fib_cube_sum(1, 1).unwrap();
        assert_eq!((f.value.clone(), f.product.clone()), (int(1), int(4)));

        let f = fib_cube_sum_variant(1, 2).unwrap();
        assert_eq!((f.value.clone(), f.product.clone()), (int(28), int(112)));
        assert_eq!(
            labels(&f),
            vec![
                ("F_{rn}", 1),
                ("L_{rn+r}", 4),
                ("L_{rn}F_{rn+r}F_{2rn+r}-2F_r^2", 28)
            ]
        );

        let f = fib_cube_sum_variant(2, 1).unwrap();
        assert_eq!(
            (f.value.clone(), f.divisor.clone(), f.product.clone()),
            (int(27), int(40), int(1080))
        );
        assert_eq!(
            labels(&f),
            vec![
                ("F_{rn}", 1),
                ("F_{rn+r}", 3),
                ("L_{rn}L_{rn+r}L_{2rn+r}-2L_r^2", 360)
            ]
        );

        let f = fib_cube_sum_variant(1, 0).unwrap();
        assert!(f.value.is_zero() && f.product.is_zero());

        let f = lucas_cube_sum(1, 2).unwrap();
        assert_eq!((f.value.clone(), f.product.clone()), (int(370), int(1480)));
        assert_eq!(labels(&f).last().unwrap().1, 148);

        let f = lucas_cube_sum(2, 1).unwrap();
        assert_eq!((f.value.clone(), f.product.clone()), (int(343), int(2744)));
        assert_eq!(
            labels(&f),
            vec![
                ("F_{rn}", 1),
                ("L_{rn+r}", 7),
                ("5L_{rn}F_{rn+r}F_{2rn+r}+4(L_{2r}+1)", 392)
            ]
        );

        let f = lucas_cube_sum(1, 1).unwrap();
        assert_eq!((f.value.clone(), f.product.clone()), (int(27), int(108)));
        assert_eq!(
            labels(&f),
            vec![
                ("L_{rn}", 1),
                ("L_{rn+r}", 3),
                ("5F_{rn}F_{rn+r}L_{2rn+r}+4(L_{2r}+1)", 36)
            ]
        );
    }

    #[test]
    fn special_examples() {
        let f = special_case_sum(SpecialCase::Fib4k, 1).unwrap();
        assert_eq!((f.value.clone(), f.product.clone()), (int(27), int(216)));
        assert_eq!(
            labels(&f),
            vec![("F_{2n}^2", 1), ("F_{2n+2}^2", 9), ("L_{4n+2}+6", 24)]
        );

        let f = special_case_sum(SpecialCase::Fib2k, 2).unwrap();
        assert_eq!((f.value.clone(), f.product.clone()), (int(28), int(112)));
        assert_eq!(
            labels(&f),
            vec![
                ("F_n^2", 1),
                ("L_{n+1}^2", 16),
                ("F_{n-1}", 1),
                ("L_{n+2}", 7)
            ]
        );

        let f = special_case_sum(SpecialCase::Lucas4k, 1).unwrap();
        assert_eq!((f.value.clone(), f.product.clone()), (int(343), int(2744)));

        assert!(special_case_sum(SpecialCase::Lucas2k, 0)
            .unwrap()
            .value
            .is_zero());
    }

    #[test]
    fn degenerate_r_zero() {
        assert!(fib_cube_sum(0, 9).unwrap().value.is_zero());
        assert!(first_power_fib_sum(0, 9).unwrap().value.is_zero());
        assert_eq!(lucas_cube_sum(0, 9).unwrap().value, int(72));
        assert_eq!(first_power_lucas_sum(0, 9).unwrap().value, int(18));
        assert_eq!(lucas_cube_sum(0, 9).unwrap().branch, Branch::Degenerate);
    }

    #[test]
    fn dispatch_and_errors() {
        assert_eq!(
            evaluate(SumSpec::new(Family::FibCube, 1, 2).unwrap())
                .unwrap()
                .value,
            int(28)
        );
        assert_eq!(
            evaluate(SumSpec::new(Family::LucasFirst, 2, 2).unwrap())
                .unwrap()
                .value,
            int(54)
        );
        assert!(evaluate(SumSpec::new(Family::FibFirst, 3, 0).unwrap())
            .unwrap()
            .value
            .is_zero());
        assert!(matches!(
            SumSpec::new(Family::FibCube, 1, -1),
            Err(Error::NegativeTermCount(-1))
        ));
        let raw = SumSpec {
            family: Family::FibCube,
            r: 1,
            n: -2,
        };
        assert!(evaluate(raw).is_err());
        assert!(matches!(
            fib_cube_sum(Index::MAX, 2),
            Err(Error::IndexOverflow { .. })
        ));
        assert_eq!("lucas-cube".parse::<Family>().unwrap(), Family::LucasCube);
        assert!("cube".parse::<Family>().is_err());
    }

    #[test]
    fn kernel_cost_is_constant() {
        for fam in Family::ALL {
            let mut seen = Vec::new();
            for n in [1, 10, 1000, 100_000] {
                let before = kernel_calls();
                evaluate(SumSpec::new(fam, 3, n).unwrap()).unwrap();
                seen.push(kernel_calls() - before);
            }
            assert!(
                seen.iter().all(|&c| c == seen[0] && c <= 8),
                "{fam}: {seen:?}"
            );
        }
    }
}
