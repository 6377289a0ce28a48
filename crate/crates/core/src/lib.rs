// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

//! Sums of cubes (and first powers) of even-indexed Fibonacci and Lucas
//! numbers, `sum_{k=1..n} F_{2rk}^3` and `sum_{k=1..n} L_{2rk}^3`, evaluated
//! through factored closed forms in a bounded number of fast-doubling passes,
//! together with the brute-force oracles and identity catalog used to check
//! them by exact integer equality.

pub mod bench;
pub mod closed_forms;
pub mod decimal;
pub mod error;
pub mod identities;
pub mod kernel;
pub mod oracle;
pub mod report;
pub mod verify;

pub use closed_forms::{
    evaluate, fib_cube_sum, fib_cube_sum_variant, first_power_fib_sum, first_power_lucas_sum,
    lucas_cube_sum, special_case_sum, Branch, Factor, FactoredForm, Family, SpecialCase, SumSpec,
};
pub use error::{Error, Result};
pub use identities::{
    check_identity, list_identities, sweep_identity, IdentityArgs, IdentityCheck, IdentityId,
};
pub use kernel::{fib, fib_lucas, lucas, Index, INDEX_CAP};
pub use oracle::{check_telescope, oracle_sum, oracle_sum_incremental, TelescopeSpec};
pub use report::{Axis, Status, VerificationReport};
