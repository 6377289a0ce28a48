// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

//! Catalog of the auxiliary Fibonacci/Lucas identities and ratio lemmas
//! that the closed forms rest on.
//!
//! Each entry has independently evaluable sides. Ratio lemmas compute their
//! left side as an exact quotient: the numerator is divided by the
//! denominator and a nonzero remainder is reported as an integrity error.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{derived, fib, fib_lucas, lucas, neg_one_pow, Index};
use crate::report::{run_sweep, Axis, PointOutcome, VerificationReport};

/// Stable string key of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IdentityId(&'static str);

impl IdentityId {
    /// Key used for telescoping checks, which live outside the catalog.
    pub const TELESCOPE: IdentityId = IdentityId("telescope");

    pub fn as_str(&self) -> &'static str {
        self.0
    }

    pub fn parse(key: &str) -> Result<Self> {
        REGISTRY
            .iter()
            .find(|e| e.info.key.0 == key)
            .map(|e| e.info.key)
            .ok_or_else(|| Error::UnknownIdentity(key.to_string()))
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IdentityArgs(pub Vec<Index>);

impl From<&[Index]> for IdentityArgs {
    fn from(v: &[Index]) -> Self {
        IdentityArgs(v.to_vec())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityKind {
    Auxiliary,
    Ratio,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityInfo {
    pub key: IdentityId,
    pub kind: IdentityKind,
    pub arity: usize,
    pub params: &'static [&'static str],
    pub formula: &'static str,
    pub anchor: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub args: IdentityArgs,
    #[serde(with = "crate::decimal")]
    pub lhs: BigInt,
    #[serde(with = "crate::decimal")]
    pub rhs: BigInt,
    pub holds: bool,
}

impl IdentityCheck {
    pub fn new(id: IdentityId, args: IdentityArgs, lhs: BigInt, rhs: BigInt) -> Self {
        let holds = lhs == rhs;
        IdentityCheck {
            id,
            args,
            lhs,
            rhs,
            holds,
        }
    }
}

type Side = fn(&[Index]) -> Result<BigInt>;

struct Entry {
    info: IdentityInfo,
    lhs: Side,
    rhs: Side,
}

const UV: &[&str] = &["u", "v"];
const U: &[&str] = &["u"];
const RN: &[&str] = &["r", "n"];

macro_rules! entry {
    ($key:literal, $kind:ident, $params:expr, $formula:literal, $anchor:literal, $lhs:expr, $rhs:expr) => {
        Entry {
            info: IdentityInfo {
                key: IdentityId($key),
                kind: IdentityKind::$kind,
                arity: $params.len(),
                params: $params,
                formula: $formula,
                anchor: $anchor,
            },
            lhs: $lhs,
            rhs: $rhs,
        }
    };
}

static REGISTRY: [Entry; 20] = [
    entry!("prod-5FF", Auxiliary, UV,
        "L_{u+v} - (-1)^v L_{u-v} = 5 F_u F_v",
        "L_{u + v} - (-1)^vL_{u-v}=5F_uF_v",
        |a| Ok(lucas(sum(a)?)? - sgn(a[1]) * lucas(diff(a)?)?),
        |a| Ok(5 * fib(a[0])? * fib(a[1])?)),
    entry!("prod-LL", Auxiliary, UV,
        "L_{u+v} + (-1)^v L_{u-v} = L_u L_v",
        "L_{u + v} + (-1)^vL_{u-v}=L_uL_v",
        |a| Ok(lucas(sum(a)?)? + sgn(a[1]) * lucas(diff(a)?)?),
        |a| Ok(lucas(a[0])? * lucas(a[1])?)),
    entry!("double-F", Auxiliary, U,
        "F_{2u} = F_u L_u",
        "F_{2u}=F_uL_u",
        |a| fib(scaled("2u", 2, a[0])?),
        |a| {
            let (f, l) = fib_lucas(a[0])?;
            Ok(f * l)
        }),
    entry!("prod-FL", Auxiliary, UV,
        "F_{u+v} - (-1)^v F_{u-v} = F_v L_u",
        "F_{u + v} - (-1)^vF_{u-v}=F_vL_u",
        |a| Ok(fib(sum(a)?)? - sgn(a[1]) * fib(diff(a)?)?),
        |a| Ok(fib(a[1])? * lucas(a[0])?)),
    entry!("prod-LF", Auxiliary, UV,
        "F_{u+v} + (-1)^v F_{u-v} = L_v F_u",
        "F_{u + v} + (-1)^vF_{u-v}=L_vF_u",
        |a| Ok(fib(sum(a)?)? + sgn(a[1]) * fib(diff(a)?)?),
        |a| Ok(lucas(a[1])? * fib(a[0])?)),
    entry!("triple-F", Auxiliary, U,
        "F_{3u} = 5 F_u^3 + 3 (-1)^u F_u",
        "F_{3u}=5F_u^3+3(-1)^uF_u",
        |a| fib(scaled("3u", 3, a[0])?),
        |a| {
            let f = fib(a[0])?;
            Ok(5 * &f * &f * &f + 3 * sgn(a[0]) * f)
        }),
    entry!("norm-FL", Auxiliary, U,
        "5 F_u^2 - L_u^2 = 4 (-1)^(u-1)",
        "5F_u^2-L_u^2=(-1)^{u-1}4",
        |a| {
            let (f, l) = fib_lucas(a[0])?;
            Ok(5 * &f * &f - &l * &l)
        },
        |a| Ok(BigInt::from(4 * neg_one_pow(a[0].wrapping_sub(1))))),
    entry!("double-L-sq", Auxiliary, U,
        "L_{2u} = L_u^2 + 2 (-1)^(u-1)",
        "L_{2u}=L_u^2+(-1)^{u-1}2",
        |a| lucas(scaled("2u", 2, a[0])?),
        |a| {
            let l = lucas(a[0])?;
            Ok(&l * &l + 2 * neg_one_pow(a[0].wrapping_sub(1)))
        }),
    entry!("triple-L", Auxiliary, U,
        "L_{3u} = L_u^3 - 3 (-1)^u L_u",
        "L_{3u}=L_u^3-3(-1)^uL_u",
        |a| lucas(scaled("3u", 3, a[0])?),
        |a| {
            let l = lucas(a[0])?;
            Ok(&l * &l * &l - 3 * sgn(a[0]) * l)
        }),
    entry!("double-L-5F", Auxiliary, U,
        "L_{2u} = 5 F_u^2 + 2 (-1)^u",
        "L_{2u}=5F_u^2+(-1)^u2",
        |a| lucas(scaled("2u", 2, a[0])?),
        |a| {
            let f = fib(a[0])?;
            Ok(5 * &f * &f + 2 * neg_one_pow(a[0]))
        }),
    entry!("sq-diff-F", Auxiliary, UV,
        "F_u^2 + (-1)^(u+v-1) F_v^2 = F_{u-v} F_{u+v}",
        "F_u^2 + (-1)^{u+v-1}F_v^2=F_{u-v}F_{u+v}",
        |a| {
            let (fu, fv) = (fib(a[0])?, fib(a[1])?);
            Ok(&fu * &fu + neg_one_pow(a[0].wrapping_add(a[1]).wrapping_sub(1)) * &fv * &fv)
        },
        |a| Ok(fib(diff(a)?)? * fib(sum(a)?)?)),
    entry!("sq-diff-L", Auxiliary, UV,
        "L_u^2 + (-1)^(u+v-1) L_v^2 = 5 F_{u-v} F_{u+v}",
        "L_u^2 + (-1)^{u+v-1}L_v^2=5F_{u-v}F_{u+v}",
        |a| {
            let (lu, lv) = (lucas(a[0])?, lucas(a[1])?);
            Ok(&lu * &lu + neg_one_pow(a[0].wrapping_add(a[1]).wrapping_sub(1)) * &lv * &lv)
        },
        |a| Ok(5 * fib(diff(a)?)? * fib(sum(a)?)?)),
    entry!("ratio-FF", Ratio, RN,
        "F_{3rn} F_{3rn+3r} / (F_{rn} F_{rn+r}) = L_{rn} L_{rn+r} L_{2rn+r} + L_{2r} + (-1)^(r-1)",
        "L_{rn}L_{rn+r}L_{2rn+r}+L_{2r}+(-1)^{r-1}",
        quotient_ff,
        |a| {
            let t = RatioTerms::new(a)?;
            Ok(&t.l_rn * &t.l_rn1 * &t.l_2rn1 + &t.l_2r + neg_one_pow(t.r.wrapping_sub(1)))
        }),
    entry!("ratio-LL", Ratio, RN,
        "L_{3rn} L_{3rn+3r} / (L_{rn} L_{rn+r}) = 5 F_{rn} F_{rn+r} L_{2rn+r} + L_{2r} + (-1)^(r-1)",
        "5F_{rn}F_{rn+r}L_{2rn+r}+L_{2r}+(-1)^{r-1}",
        quotient_ll,
        |a| {
            let t = RatioTerms::new(a)?;
            Ok(5 * &t.f_rn * &t.f_rn1 * &t.l_2rn1 + &t.l_2r + neg_one_pow(t.r.wrapping_sub(1)))
        }),
    entry!("ratio-LF", Ratio, RN,
        "L_{3rn} F_{3rn+3r} / (L_{rn} F_{rn+r}) = 5 F_{rn} L_{rn+r} F_{2rn+r} + L_{2r} + (-1)^r",
        "5F_{rn}L_{rn+r}F_{2rn+r}+L_{2r}+(-1)^r",
        quotient_lf,
        |a| {
            let t = RatioTerms::new(a)?;
            Ok(5 * &t.f_rn * &t.l_rn1 * &t.f_2rn1 + &t.l_2r + neg_one_pow(t.r))
        }),
    entry!("ratio-FL", Ratio, RN,
        "F_{3rn} L_{3rn+3r} / (F_{rn} L_{rn+r}) = 5 L_{rn} F_{rn+r} F_{2rn+r} + L_{2r} + (-1)^r",
        "5L_{rn}F_{rn+r}F_{2rn+r}+L_{2r}+(-1)^r",
        quotient_fl,
        |a| {
            let t = RatioTerms::new(a)?;
            Ok(5 * &t.l_rn * &t.f_rn1 * &t.f_2rn1 + &t.l_2r + neg_one_pow(t.r))
        }),
    entry!("ratio-FF-sq", Ratio, RN,
        "F_{3rn} F_{3rn+3r} / (F_{rn} F_{rn+r}) = L_{2rn+r}^2 + (-1)^(nr) L_{rn+r}^2 + (-1)^((n-1)r) L_{rn}^2 + L_r^2 + 7 (-1)^(r-1)",
        "L_{2rn + r}^2  + ( - 1)^{nr} L_{rn + r}^2  + ( - 1)^{(n - 1)r} L_{rn}^2  + L_r^2  + ( - 1)^{r - 1} 7",
        quotient_ff,
        |a| {
            let t = RatioTerms::new(a)?;
            Ok(sq(&t.l_2rn1) + t.sign_nr() * sq(&t.l_rn1) + t.sign_n1r() * sq(&t.l_rn)
                + sq(&t.l_r) + 7 * neg_one_pow(t.r.wrapping_sub(1)))
        }),
    entry!("ratio-LL-sq", Ratio, RN,
        "L_{3rn} L_{3rn+3r} / (L_{rn} L_{rn+r}) = L_{2rn+r}^2 + (-1)^(nr-1) L_{rn+r}^2 - (-1)^((n-1)r) L_{rn}^2 + L_r^2 + (-1)^r",
        "L_{2rn + r}^2  + ( - 1)^{nr-1} L_{rn + r}^2  - ( - 1)^{(n - 1)r} L_{rn}^2  + L_r^2  + ( - 1)^r",
        quotient_ll,
        |a| {
            let t = RatioTerms::new(a)?;
            Ok(sq(&t.l_2rn1) - t.sign_nr() * sq(&t.l_rn1) - t.sign_n1r() * sq(&t.l_rn)
                + sq(&t.l_r) + neg_one_pow(t.r))
        }),
    entry!("ratio-LF-sq", Ratio, RN,
        "L_{3rn} F_{3rn+3r} / (L_{rn} F_{rn+r}) = 5 F_{2rn+r}^2 + 5 (-1)^(nr-1) F_{rn+r}^2 + 5 (-1)^((n-1)r) F_{rn}^2 + 5 F_r^2 + 3 (-1)^r",
        "5F_{2rn + r}^2  + ( - 1)^{nr - 1} 5F_{rn + r}^2  + ( - 1)^{(n - 1)r} 5F_{rn}^2  + 5F_r^2  + ( - 1)^r 3",
        quotient_lf,
        |a| {
            let t = RatioTerms::new(a)?;
            Ok(5 * (sq(&t.f_2rn1) - t.sign_nr() * sq(&t.f_rn1) + t.sign_n1r() * sq(&t.f_rn) + sq(&t.f_r))
                + 3 * neg_one_pow(t.r))
        }),
    entry!("ratio-FL-sq", Ratio, RN,
        "F_{3rn} L_{3rn+3r} / (F_{rn} L_{rn+r}) = 5 F_{2rn+r}^2 + 5 (-1)^(nr) F_{rn+r}^2 - 5 (-1)^((n-1)r) F_{rn}^2 + 5 F_r^2 + 3 (-1)^r",
        "5F_{2rn + r}^2  + ( - 1)^{nr} 5F_{rn + r}^2  - ( - 1)^{(n - 1)r} 5F_{rn}^2  + 5F_r^2  + ( - 1)^r 3",
        quotient_fl,
        |a| {
            let t = RatioTerms::new(a)?;
            Ok(5 * (sq(&t.f_2rn1) + t.sign_nr() * sq(&t.f_rn1) - t.sign_n1r() * sq(&t.f_rn) + sq(&t.f_r))
                + 3 * neg_one_pow(t.r))
        }),
];

/// Pairs of ratio lemmas that share a left side and so must agree on the right.
pub const EQUIVALENT_RATIOS: [(&str, &str); 4] = [
    ("ratio-FF", "ratio-FF-sq"),
    ("ratio-LL", "ratio-LL-sq"),
    ("ratio-LF", "ratio-LF-sq"),
    ("ratio-FL", "ratio-FL-sq"),
];

fn sgn(e: Index) -> i32 {
    neg_one_pow(e)
}

fn sq(v: &BigInt) -> BigInt {
    v * v
}

fn sum(a: &[Index]) -> Result<Index> {
    derived("u+v", a[0].checked_add(a[1]))
}

fn diff(a: &[Index]) -> Result<Index> {
    derived("u-v", a[0].checked_sub(a[1]))
}

fn scaled(expr: &'static str, k: Index, u: Index) -> Result<Index> {
    derived(expr, u.checked_mul(k))
}

/// Sequence values shared by the right sides of the ratio lemmas.
struct RatioTerms {
    r: Index,
    n: Index,
    f_rn: BigInt,
    l_rn: BigInt,
    f_rn1: BigInt,
    l_rn1: BigInt,
    f_2rn1: BigInt,
    l_2rn1: BigInt,
    f_r: BigInt,
    l_r: BigInt,
    l_2r: BigInt,
}

impl RatioTerms {
    fn new(a: &[Index]) -> Result<Self> {
        let (r, n) = (a[0], a[1]);
        let idx = RatioIndices::new(r, n)?;
        let (f_rn, l_rn) = fib_lucas(idx.rn)?;
        let (f_rn1, l_rn1) = fib_lucas(idx.rn1)?;
        let (f_2rn1, l_2rn1) = fib_lucas(idx.two_rn1)?;
        let (f_r, l_r) = fib_lucas(r)?;
        let l_2r = lucas(derived("2r", r.checked_mul(2))?)?;
        Ok(RatioTerms {
            r,
            n,
            f_rn,
            l_rn,
            f_rn1,
            l_rn1,
            f_2rn1,
            l_2rn1,
            f_r,
            l_r,
            l_2r,
        })
    }

    /// `(-1)^(nr)`
    fn sign_nr(&self) -> i32 {
        neg_one_pow(self.n.wrapping_mul(self.r))
    }

    /// `(-1)^((n-1)r)`
    fn sign_n1r(&self) -> i32 {
        neg_one_pow(self.n.wrapping_sub(1).wrapping_mul(self.r))
    }
}

struct RatioIndices {
    rn: Index,
    rn1: Index,
    two_rn1: Index,
    three_rn: Index,
    three_rn3: Index,
}

impl RatioIndices {
    fn new(r: Index, n: Index) -> Result<Self> {
        let rn = derived("rn", r.checked_mul(n))?;
        let rn1 = derived("rn+r", rn.checked_add(r))?;
        let two_rn1 = derived("2rn+r", rn.checked_mul(2).and_then(|x| x.checked_add(r)))?;
        let three_rn = derived("3rn", rn.checked_mul(3))?;
        let three_rn3 = derived("3rn+3r", rn1.checked_mul(3))?;
        Ok(RatioIndices {
            rn,
            rn1,
            two_rn1,
            three_rn,
            three_rn3,
        })
    }
}

#[derive(Clone, Copy)]
enum Seq {
    F,
    L,
}

impl Seq {
    fn at(self, i: Index) -> Result<BigInt> {
        match self {
            Seq::F => fib(i),
            Seq::L => lucas(i),
        }
    }

    fn name(self) -> char {
        match self {
            Seq::F => 'F',
            Seq::L => 'L',
        }
    }
}

/// `X_{3rn} Y_{3rn+3r} / (X_{rn} Y_{rn+r})` as an exact quotient.
fn ratio_quotient(a: &[Index], x: Seq, y: Seq) -> Result<BigInt> {
    let idx = RatioIndices::new(a[0], a[1])?;
    let den_lo = x.at(idx.rn)?;
    let den_hi = y.at(idx.rn1)?;
    for (v, label) in [
        (&den_lo, format!("{}_{{rn}}", x.name())),
        (&den_hi, format!("{}_{{rn+r}}", y.name())),
    ] {
        if v.is_zero() {
            return Err(Error::ZeroDenominator { factor: label });
        }
    }
    let numerator = x.at(idx.three_rn)? * y.at(idx.three_rn3)?;
    let denominator = den_lo * den_hi;
    let (q, rem) = numerator.div_rem(&denominator);
    if !rem.is_zero() {
        return Err(Error::InexactDivision {
            context: format!(
                "{0}_{{3rn}}{1}_{{3rn+3r}} at r={2}, n={3}",
                x.name(),
                y.name(),
                a[0],
                a[1]
            ),
            divisor: denominator,
            remainder: rem,
        });
    }
    Ok(q)
}

fn quotient_ff(a: &[Index]) -> Result<BigInt> {
    ratio_quotient(a, Seq::F, Seq::F)
}

fn quotient_ll(a: &[Index]) -> Result<BigInt> {
    ratio_quotient(a, Seq::L, Seq::L)
}

fn quotient_lf(a: &[Index]) -> Result<BigInt> {
    ratio_quotient(a, Seq::L, Seq::F)
}

fn quotient_fl(a: &[Index]) -> Result<BigInt> {
    ratio_quotient(a, Seq::F, Seq::L)
}

fn entry(id: IdentityId) -> &'static Entry {
    REGISTRY
        .iter()
        .find(|e| e.info.key == id)
        .expect("IdentityId values only come from the registry")
}

fn check_arity(e: &Entry, args: &[Index]) -> Result<()> {
    if args.len() != e.info.arity {
        return Err(Error::Arity {
            id: e.info.key.0,
            expected: e.info.arity,
            got: args.len(),
        });
    }
    Ok(())
}

/// The whole catalog in a fixed order: auxiliary identities, then ratio lemmas.
pub fn list_identities() -> Vec<IdentityInfo> {
    REGISTRY.iter().map(|e| e.info.clone()).collect()
}

pub fn identity_info(id: IdentityId) -> &'static IdentityInfo {
    &entry(id).info
}

pub fn check_identity(id: IdentityId, args: &IdentityArgs) -> Result<IdentityCheck> {
    let e = entry(id);
    check_arity(e, &args.0)?;
    let lhs = (e.lhs)(&args.0)?;
    let rhs = (e.rhs)(&args.0)?;
    Ok(IdentityCheck::new(id, args.clone(), lhs, rhs))
}

/// Right side alone. It never divides, so it is defined on the whole grid.
pub fn evaluate_rhs(id: IdentityId, args: &IdentityArgs) -> Result<BigInt> {
    let e = entry(id);
    check_arity(e, &args.0)?;
    (e.rhs)(&args.0)
}

/// Checks `id` at every point of `grid`, one axis per identity argument.
///
/// Points whose denominators vanish are skipped; integrity errors are
/// recorded as mismatches.
pub fn sweep_identity(
    id: IdentityId,
    grid: Vec<Axis>,
    fail_fast: bool,
) -> Result<VerificationReport> {
    let e = entry(id);
    if grid.len() != e.info.arity {
        return Err(Error::Arity {
            id: e.info.key.0,
            expected: e.info.arity,
            got: grid.len(),
        });
    }
    Ok(run_sweep(
        id.as_str(),
        grid,
        fail_fast,
        |p| match check_identity(id, &IdentityArgs::from(p)) {
            Ok(c) if c.holds => PointOutcome::Pass,
            Ok(c) => PointOutcome::Mismatch {
                expected: c.rhs.to_string(),
                got: c.lhs.to_string(),
            },
            Err(Error::ZeroDenominator { .. }) => PointOutcome::Skip,
            Err(err) => PointOutcome::Mismatch {
                expected: "exact evaluation".into(),
                got: err.to_string(),
            },
        },
    ))
}
