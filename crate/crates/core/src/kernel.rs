// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact Fibonacci and Lucas numbers for any signed index.
//!
//! Every value is produced by fast doubling on the pair `(F_k, F_{k+1})`,
//! which costs `O(log |n|)` big-integer multiplications. Negative indices
//! are folded onto non-negative ones at the API boundary with
//! `F_{-n} = (-1)^(n-1) F_n` and `L_{-n} = (-1)^n L_n`.

use std::cell::Cell;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Subscript of a sequence term, or a sum parameter.
pub type Index = i64;

/// Largest index magnitude accepted by the kernel (2^40).
///
/// `F_{2^40}` has roughly 7.6e11 bits, so the cap is far beyond anything
/// that fits in memory; it exists so that out-of-range input is reported
/// instead of wrapping.
pub const INDEX_CAP: Index = 1 << 40;

thread_local! {
    static CALLS: Cell<u64> = const { Cell::new(0) };
}

/// Number of fast-doubling passes run on the current thread so far.
///
/// Intended for cost accounting in tests and benchmarks.
pub fn kernel_calls() -> u64 {
    CALLS.with(Cell::get)
}

/// `(-1)^e` for any integer exponent, as a small signed integer.
///
/// Parity survives two's-complement wrapping, so callers may form the
/// exponent with `wrapping_*` arithmetic.
pub fn neg_one_pow(e: Index) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Checks a derived subscript computed with checked arithmetic.
pub fn derived(expr: &'static str, value: Option<Index>) -> Result<Index> {
    value.ok_or(Error::IndexOverflow { expr })
}

fn check_cap(n: Index) -> Result<u64> {
    let mag = n.unsigned_abs();
    if mag > INDEX_CAP as u64 {
        return Err(Error::IndexOutOfRange {
            index: n as i128,
            cap: INDEX_CAP,
        });
    }
    Ok(mag)
}

/// `(F_k, F_{k+1})` for `k >= 0`.
fn doubling_pair(k: u64) -> (BigInt, BigInt) {
    CALLS.with(|c| c.set(c.get() + 1));
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if k == 0 {
        return (a, b);
    }
    for bit in (0..64 - k.leading_zeros()).rev() {
        // F_{2j} = F_j (2 F_{j+1} - F_j), F_{2j+1} = F_j^2 + F_{j+1}^2
        let twice = (&b << 1u32) - &a;
        let even = &a * &twice;
        let odd = &a * &a + &b * &b;
        if (k >> bit) & 1 == 0 {
            a = even;
            b = odd;
        } else {
            b = even + &odd;
            a = odd;
        }
    }
    (a, b)
}

fn apply_sign(value: BigInt, sign: i32) -> BigInt {
    if sign < 0 {
        -value
    } else {
        value
    }
}

/// `F_n`.
pub fn fib(n: Index) -> Result<BigInt> {
    let k = check_cap(n)?;
    let (f, _) = doubling_pair(k);
    Ok(if n < 0 {
        apply_sign(f, neg_one_pow(n - 1))
    } else {
        f
    })
}

/// `L_n`, as `2 F_{k+1} - F_k` on the doubling pair.
pub fn lucas(n: Index) -> Result<BigInt> {
    Ok(fib_lucas(n)?.1)
}

/// `(F_n, L_n)` from a single doubling pass.
pub fn fib_lucas(n: Index) -> Result<(BigInt, BigInt)> {
    let k = check_cap(n)?;
    let (f, f_next) = doubling_pair(k);
    let l = (&f_next << 1u32) - &f;
    if n < 0 {
        Ok((
            apply_sign(f, neg_one_pow(n - 1)),
            apply_sign(l, neg_one_pow(n)),
        ))
    } else {
        Ok((f, l))
    }
}
