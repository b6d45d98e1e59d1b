//! Independent estimate of `C` that never evaluates a zeta value.
//!
//! Expanding `zeta(k) - 1 = sum_{j>=2} j^-k` inside the correction series and
//! summing over `k` first gives
//!
//! ```text
//! Delta = sum_{j>=2} (1/j - ln(1 + 1/j)) = lim_N (H_N - 1 - ln((N+1)/2))
//! ```
//!
//! Every summand is positive, so partial sums increase toward `Delta`, and
//! the omitted tail is below `sum_{j>N} 1/(2j^2) < 1/(2N)`.

use super::{ConstantEstimate, Method};
use crate::error::{Error, Result};
use crate::numeric::NeumaierSum;

pub fn harmonic_oracle(n: u64) -> Result<ConstantEstimate> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "harmonic oracle needs N >= 2, got {n}"
        )));
    }
    // 1/j - ln(1 + 1/j) is H_N - 1 - ln((N+1)/2) split term by term,
    // which avoids cancelling two numbers of size ln N.
    let delta = (2..=n)
        .rev()
        .map(|j| {
            let inv = 1.0 / j as f64;
            inv - inv.ln_1p()
        })
        .collect::<NeumaierSum>()
        .total();
    let value = 2.0 * (-1.0 - delta).exp();

    // Delta lies in [delta, delta + 1/(2N)], so C lies in
    // [value * exp(-1/(2N)), value].
    let tail = 0.5 / n as f64;
    let rounding = 4.0 * f64::EPSILON * (1.0 + (n as f64).ln());
    let error_bound = value * -(-(tail + rounding)).exp_m1();
    Ok(ConstantEstimate {
        value,
        delta,
        error_bound,
        terms_used: n,
        method: Method::HarmonicOracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_terms() {
        let est = harmonic_oracle(2).unwrap();
        assert!((est.delta - (0.5 - 1.5f64.ln())).abs() < 1e-15);
        assert!((est.delta - 0.094535).abs() < 1e-6);
        assert_eq!(est.method, Method::HarmonicOracle);
    }

    #[test]
    fn matches_closed_harmonic_form() {
        let n = 1000u64;
        let h: f64 = (1..=n).map(|j| 1.0 / j as f64).sum();
        let direct = h - 1.0 - ((n as f64 + 1.0) / 2.0).ln();
        assert!((harmonic_oracle(n).unwrap().delta - direct).abs() < 1e-12);
    }

    #[test]
    fn delta_estimates_increase_with_n() {
        let mut prev = 0.0;
        for e in 2..=6 {
            let d = harmonic_oracle(10u64.pow(e)).unwrap().delta;
            assert!(d > prev);
            prev = d;
        }
    }

    #[test]
    fn rejects_small_n() {
        assert!(harmonic_oracle(1).is_err());
        assert!(harmonic_oracle(0).is_err());
    }
}
