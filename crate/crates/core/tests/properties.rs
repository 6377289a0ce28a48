// Copyright 2026 The fibcube Authors
// SPDX-License-Identifier: Apache-2.0

use fibcube::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::FibCube),
        Just(Family::LucasCube),
        Just(Family::FibFirst),
        Just(Family::LucasFirst),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn addition_formula(m in -3000i64..3000, n in -3000i64..3000) {
        // F_{m+n} = F_m F_{n+1} + F_{m-1} F_n
        let lhs = fib(m + n).unwrap();
        let rhs = fib(m).unwrap() * fib(n + 1).unwrap() + fib(m - 1).unwrap() * fib(n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lucas_from_neighbours(n in -5000i64..5000) {
        prop_assert_eq!(lucas(n).unwrap(), fib(n - 1).unwrap() + fib(n + 1).unwrap());
    }

    #[test]
    fn closed_form_matches_incremental_oracle(fam in family(), r in -25i64..25, n in 0i64..250) {
        let spec = SumSpec::new(fam, r, n).unwrap();
        let form = evaluate(spec).unwrap();
        prop_assert_eq!(&form.value, &oracle_sum_incremental(spec).unwrap());
        prop_assert!(form.is_consistent());
    }

    #[test]
    fn cube_variant_agrees(r in -40i64..40, n in 0i64..300) {
        prop_assert_eq!(fib_cube_sum(r, n).unwrap().value, fib_cube_sum_variant(r, n).unwrap().value);
    }

    #[test]
    fn json_round_trip(fam in family(), r in -12i64..12, n in 0i64..60) {
        let form = evaluate(SumSpec::new(fam, r, n).unwrap()).unwrap();
        let text = serde_json::to_string(&form).unwrap();
        let back: FactoredForm = serde_json::from_str(&text).unwrap();
        prop_assert!(back.is_consistent());
        prop_assert_eq!(&back.factor_product(), &(&back.divisor * &back.value));
        prop_assert_eq!(back, form);
    }

    #[test]
    fn sum_splits_at_any_point(fam in family(), r in -10i64..10, a in 0i64..80, b in 0i64..80) {
        // S(a + b) - S(a) is the tail of b terms starting after a
        let s = |n| evaluate(SumSpec::new(fam, r, n).unwrap()).unwrap().value;
        let tail: BigInt = (a + 1..=a + b)
            .map(|k| {
                let t = if fam.is_lucas() { lucas(2 * r * k).unwrap() } else { fib(2 * r * k).unwrap() };
                num_traits::pow(t, fam.power() as usize)
            })
            .sum();
        prop_assert_eq!(s(a + b) - s(a), tail);
    }
}

#[test]
fn json_shape() {
    let form = evaluate(SumSpec::new(Family::FibCube, 1, 2).unwrap()).unwrap();
    let v: serde_json::Value = serde_json::to_value(&form).unwrap();
    assert_eq!(v["family"], "fib-cube");
    assert_eq!(v["r"], 1);
    assert_eq!(v["n"], 2);
    assert_eq!(v["branch"], "r-odd-n-even");
    assert_eq!(v["value"], "28");
    assert_eq!(v["divisor"], "4");
    assert_eq!(v["factors"][1]["label"], "L_{rn+r}^2");
    assert_eq!(v["factors"][1]["value"], "16");
}
