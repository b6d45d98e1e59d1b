use std::f64::consts::LN_2;

use distinct_gf::constant::{self, Method};

/// e^-gamma, 40-digit reference.
const E_NEG_GAMMA: f64 = 0.561_459_483_566_885_2;

#[test]
fn partial_sums_sandwich_the_limit() {
    let rows = constant::delta_sequence(40, 1e-13).unwrap();
    let delta = -E_NEG_GAMMA.ln() + LN_2 - 1.0;
    for w in rows[1..].windows(2) {
        let (lo, hi) = if w[0].delta_m < w[1].delta_m {
            (w[0].delta_m, w[1].delta_m)
        } else {
            (w[1].delta_m, w[0].delta_m)
        };
        assert!(lo - 1e-13 <= delta && delta <= hi + 1e-13, "m = {}", w[0].m);
        let (c_lo, c_hi) = (w[0].c_m.min(w[1].c_m), w[0].c_m.max(w[1].c_m));
        assert!(c_lo - 1e-13 <= E_NEG_GAMMA && E_NEG_GAMMA <= c_hi + 1e-13);
    }
}

#[test]
fn tail_bound_covers_truncation_error() {
    let delta = -E_NEG_GAMMA.ln() + LN_2 - 1.0;
    for d in constant::delta_sequence(40, 1e-13).unwrap() {
        assert!(
            (delta - d.delta_m).abs() <= constant::delta_tail_bound(d.m) + 1e-14,
            "m = {}",
            d.m
        );
    }
}

#[test]
fn log_decomposition_identity() {
    // ln C = ln 2 - 1 - Delta, to within the tail of Delta_m.
    for m in [2, 5, 13, 25] {
        let d = constant::delta_m(m, 1e-13).unwrap();
        let gap = (E_NEG_GAMMA.ln() - (LN_2 - 1.0 - d.delta_m)).abs();
        assert!(gap <= constant::delta_tail_bound(m) + d.error_bound + 1e-14);
    }
}

#[test]
fn raw_zeta_series_for_ln_c() {
    // -sum_{k=2}^{m} (-1)^k zeta(k)/k also carries the tail of
    // sum (-1)^k / k, itself bounded by 1/(m+1).
    for m in [10, 40, 200] {
        let mut partial = 0.0;
        let mut err = 0.0;
        for k in 2..=m {
            let z = constant::zeta_minus_one(k, 1e-15).unwrap();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            partial += sign * (1.0 + z.value_minus_one) / k as f64;
            err += z.error_bound / k as f64;
        }
        let gap = (E_NEG_GAMMA.ln() + partial).abs();
        assert!(
            gap <= constant::delta_tail_bound(m) + 1.0 / (m as f64 + 1.0) + err + 1e-13,
            "m = {m}"
        );
    }
}

#[test]
fn zeta_series_and_harmonic_oracle_agree() {
    let series = constant::constant_c(1e-8).unwrap();
    let oracle = constant::harmonic_oracle(1_000_000).unwrap();
    assert_eq!(oracle.method, Method::HarmonicOracle);
    assert!((series.value - oracle.value).abs() <= 1e-6);
    assert!((oracle.value - E_NEG_GAMMA).abs() <= oracle.error_bound);
    assert!(oracle.value >= E_NEG_GAMMA);
}

#[test]
fn harmonic_estimates_increase_monotonically() {
    let mut prev = 0.0;
    for n in [100u64, 1_000, 10_000, 100_000, 1_000_000] {
        let d = constant::harmonic_oracle(n).unwrap().delta;
        assert!(d > prev, "N = {n}");
        prev = d;
    }
}

#[test]
fn error_bounds_are_honest() {
    for tol in [1e-2, 1e-3, 1e-5, 1e-7, 1e-9, 1e-11, 1e-12] {
        let est = constant::constant_c(tol).unwrap();
        assert!(est.error_bound <= tol);
        assert!(
            (est.value - E_NEG_GAMMA).abs() <= est.error_bound,
            "tol = {tol}"
        );
    }
}
