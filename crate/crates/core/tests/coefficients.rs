use num_bigint::{BigInt, BigUint};
use num_traits::One;
use proptest::prelude::*;

use distinct_gf::coeff::{self, Limits, TableRoute};
use distinct_gf::partition;
use distinct_gf::ExactRational;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

#[test]
fn series_equal_partition_sums_to_30() {
    let r = coeff::r_series(30).unwrap();
    let q = coeff::q_series(30).unwrap();
    for k in 0..=30 {
        assert_eq!(r.coeffs()[k], partition::r_oracle(k).unwrap(), "r({k})");
        assert_eq!(coeff::r_of(k).unwrap(), r.coeffs()[k]);
        assert_eq!(
            q.coeffs()[k],
            BigUint::from(partition::q_oracle(k).unwrap()),
            "q({k})"
        );
    }
}

#[test]
fn brute_force_values() {
    // Frozen from exhaustive Fraction sums over all distinct partitions.
    assert_eq!(
        partition::r_oracle(9).unwrap(),
        ExactRational::new(127, 210)
    );
    assert_eq!(
        partition::r_oracle(10).unwrap(),
        ExactRational::new(1033, 1680)
    );
    let r20: ExactRational = "48977868113/83805321600".parse().unwrap();
    assert_eq!(coeff::r_of(20).unwrap(), r20);
    let r30: ExactRational = "27148090601786933/46954445586048000".parse().unwrap();
    assert_eq!(coeff::r_of(30).unwrap(), r30);
    assert_eq!(partition::q_oracle(30).unwrap(), 296);
}

#[test]
fn denominators_divide_factorial() {
    let r = coeff::r_series(60).unwrap();
    for (k, v) in r.coeffs().iter().enumerate() {
        assert_eq!(
            factorial(k as u64) % v.denominator(),
            BigInt::from(0),
            "k = {k}"
        );
    }
}

#[test]
fn complete_rows_sum_and_cut_off() {
    let n_max = 12;
    let k_max = n_max * (n_max + 1) / 2;
    let r = coeff::r_table(n_max, k_max).unwrap();
    let q = coeff::q_table(n_max, k_max).unwrap();
    for n in 0..=n_max {
        let tri = n * (n + 1) / 2;
        let r_sum: ExactRational = r.row(n).iter().sum();
        assert_eq!(r_sum, ExactRational::from(n as u64 + 1));
        assert_eq!(q.row(n).iter().sum::<BigUint>(), BigUint::one() << n);
        assert_eq!(r.get(n, tri), &ExactRational::new(1, factorial(n as u64)));
        assert!(r.row(n)[tri + 1..].iter().all(ExactRational::is_zero));
        assert!(!r.get(n, tri).is_zero());
    }
}

#[test]
fn rows_below_diagonal_match_previous_row() {
    let r = coeff::r_table(10, 40).unwrap();
    for n in 1..=10 {
        for k in 0..n {
            assert_eq!(r.get(n, k), r.get(n - 1, k));
        }
    }
}

#[test]
fn prefix_of_each_row_is_the_full_series() {
    let r = coeff::r_table(15, 40).unwrap();
    let q = coeff::q_table(15, 40).unwrap();
    let rs = coeff::r_series(40).unwrap();
    let qs = coeff::q_series(40).unwrap();
    for n in 0..=15 {
        for k in 0..=n {
            assert_eq!(r.get(n, k), &rs.coeffs()[k]);
            assert_eq!(q.get(n, k), &qs.coeffs()[k]);
        }
    }
}

#[test]
fn float_pipeline_against_exact_at_100() {
    let exact = coeff::r_of(100).unwrap().to_f64();
    let float = coeff::r_series_float(100).unwrap()[100];
    assert!((float - exact).abs() <= 1e-9 * exact);
}

#[test]
fn out_of_budget_requests_error() {
    let tight = Limits {
        cell_budget: 1_000,
        max_degree: 50,
        max_float_degree: 50,
    };
    assert!(coeff::r_table_with(40, 40, TableRoute::Recurrence, &tight).is_err());
    assert!(coeff::q_table_with(40, 40, TableRoute::Product, &tight).is_err());
    assert!(coeff::r_series_with(51, &tight).is_err());
    assert!(coeff::r_series_float_with(51, &tight).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn prefix_stability(n in 0usize..12, extra in 1usize..6) {
        let k_max = 30;
        let a = coeff::r_table(n, k_max).unwrap();
        let b = coeff::r_table(n + extra, k_max).unwrap();
        for k in 0..=n {
            prop_assert_eq!(a.get(n, k), b.get(n + extra, k));
        }
    }

    #[test]
    fn two_term_and_recurrence_agree(n_max in 0usize..10, k_max in 0usize..50) {
        let limits = Limits::default();
        let a = coeff::r_table(n_max, k_max).unwrap();
        let b = coeff::r_table_with(n_max, k_max, TableRoute::TwoTerm, &limits).unwrap();
        let c = coeff::r_table_with(n_max, k_max, TableRoute::Product, &limits).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
    }
}
