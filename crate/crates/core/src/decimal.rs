// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

//! Big integers as decimal strings in serialized output.

use num_bigint::BigInt;
use serde::{de, Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(de::Error::custom)
}

/// Number of decimal digits of `|v|` (1 for zero), without formatting `v`.
pub fn decimal_digits(v: &BigInt) -> usize {
    let bits = v.bits();
    if bits == 0 {
        return 1;
    }
    // 2^(bits-1) <= |v| < 2^bits, so the digit count is one of two values.
    let lower = ((bits - 1) as f64 * std::f64::consts::LOG10_2).floor() as u32 + 1;
    let ten_pow = num_traits::pow(BigInt::from(10u32), lower as usize);
    if v.magnitude() >= ten_pow.magnitude() {
        lower as usize + 1
    } else {
        lower as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_count_matches_formatting() {
        for s in [
            "0",
            "9",
            "10",
            "-99",
            "100",
            "1023",
            "1024",
            "999999999999999999999",
            "1000000000000000000000",
        ] {
            let v: BigInt = s.parse().unwrap();
            assert_eq!(decimal_digits(&v), s.trim_start_matches('-').len(), "{s}");
        }
        let mut v = BigInt::from(1);
        for _ in 0..400 {
            v = v * 7 + 3;
            assert_eq!(decimal_digits(&v), v.to_string().len());
            let p = num_traits::pow(BigInt::from(10), v.to_string().len());
            assert_eq!(decimal_digits(&p), p.to_string().len());
            assert_eq!(decimal_digits(&(&p - 1)), p.to_string().len() - 1);
        }
    }
}
