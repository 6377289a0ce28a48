// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use thiserror::Error;

use crate::kernel::Index;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} exceeds the supported magnitude {cap}")]
    IndexOutOfRange { index: i128, cap: Index },

    /// A derived subscript such as `3rn + 3r` left the `Index` range.
    #[error("derived index `{expr}` overflows for the given parameters")]
    IndexOverflow { expr: &'static str },

    #[error("number of terms must be non-negative, got {0}")]
    NegativeTermCount(Index),

    #[error("denominator factor {factor} vanishes")]
    ZeroDenominator { factor: String },

    /// Exact division left a remainder. Only a coding defect can produce this.
    #[error(
        "integrity violation: {context} is not divisible by {divisor} (remainder {remainder})"
    )]
    InexactDivision {
        context: String,
        divisor: BigInt,
        remainder: BigInt,
    },

    #[error("integrity violation: {0}")]
    Integrity(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("identity `{id}` takes {expected} argument(s), got {got}")]
    Arity {
        id: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// True for errors that can only arise from a defect in this crate.
    pub fn is_integrity(&self) -> bool {
        matches!(self, Error::InexactDivision { .. } | Error::Integrity(_))
    }
}
