//! Numerical evaluation of `R(x)` near `x = 1`.
//!
//! Two routes to `ln R(x)`: the partial product `R_n(x)` directly, and the
//! column-summed log expansion
//!
//! ```text
//! ln R(x) = sum_{s>=1} (-1)^(s+1) / s * Li_s(x^s)
//! ```
//!
//! [`limit_probe`] evaluates `(1 - x) R(x)`, which tends to `C` as `x -> 1-`.

use crate::error::{Error, Result};
use crate::numeric::NeumaierSum;

/// `n(1 - x)` must reach this before a partial product stands in for `R(x)`.
/// The omitted factors contribute at most `exp(x^n / (n (1 - x)))`.
pub const TRUNCATION_MARGIN: f64 = 50.0;

/// `R_n(x) = prod_{k=1}^{n} (1 + x^k / k)`, multiplied left to right.
pub fn eval_r_partial(x: f64, n: usize) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::invalid(format!("x = {x} outside [0, 1]")));
    }
    let mut product = 1.0;
    let mut power = 1.0;
    for k in 1..=n {
        power *= x;
        if power == 0.0 {
            break;
        }
        product *= 1.0 + power / k as f64;
    }
    Ok(product)
}

/// `Li_s(y) = sum_{j>=1} y^j / j^s` for `0 <= y < 1`, `s >= 1`, summed until
/// the tail bound `y^(J+1) / (1 - y)` drops to `tol`.
pub fn polylog(s: u32, y: f64, tol: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&y) {
        return Err(Error::invalid(format!(
            "polylog argument {y} outside [0, 1)"
        )));
    }
    if s == 0 {
        return Err(Error::invalid("polylog order must be >= 1"));
    }
    if s == 1 {
        return Ok(-(-y).ln_1p());
    }
    let mut acc = NeumaierSum::new();
    let mut power = y;
    let mut j = 1u32;
    while power / (1.0 - y) > tol && power > 0.0 {
        acc.add(power / (j as f64).powi(s as i32));
        power *= y;
        j += 1;
    }
    Ok(acc.total())
}

/// `sum_{s=1}^{terms} (-1)^(s+1) / s * Li_s(x^s)`, each polylog to `tol`.
pub fn eval_ln_r_series(x: f64, terms: u32, tol: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::invalid(format!("x = {x} outside [0, 1)")));
    }
    if terms == 0 {
        return Err(Error::invalid("terms must be >= 1"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::invalid(format!("tol must be positive, got {tol}")));
    }
    let mut acc = NeumaierSum::new();
    for s in 1..=terms {
        let y = x.powi(s as i32);
        if y == 0.0 {
            break;
        }
        let sign = if s % 2 == 1 { 1.0 } else { -1.0 };
        acc.add(sign * polylog(s, y, tol)? / s as f64);
    }
    Ok(acc.total())
}

/// Smallest `n` accepted by [`limit_probe`] at `x`.
pub fn adequate_order(x: f64) -> usize {
    (TRUNCATION_MARGIN / (1.0 - x)).ceil() as usize
}

/// `(1 - x) R_n(x)` for `0 < x < 1`, with `n >= adequate_order(x)`.
pub fn limit_probe(x: f64, n: usize) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::invalid(format!("x = {x} outside (0, 1)")));
    }
    let required = adequate_order(x);
    if n < required {
        return Err(Error::InadequateTruncation {
            x,
            given: n,
            required,
        });
    }
    Ok((1.0 - x) * eval_r_partial(x, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_product_at_endpoints() {
        for n in [1, 5, 17, 1000] {
            let v = eval_r_partial(1.0, n).unwrap();
            assert!((v - (n as f64 + 1.0)).abs() <= 1e-12 * n as f64);
        }
        assert_eq!(eval_r_partial(0.0, 17).unwrap(), 1.0);
        assert!(eval_r_partial(1.5, 3).is_err());
        assert!(eval_r_partial(-0.1, 3).is_err());
        assert!(eval_r_partial(f64::NAN, 3).is_err());
    }

    #[test]
    fn polylog_known_values() {
        // Li_2(1/2) = pi^2/12 - ln(2)^2/2
        let expect = std::f64::consts::PI.powi(2) / 12.0 - std::f64::consts::LN_2.powi(2) / 2.0;
        assert!((polylog(2, 0.5, 1e-15).unwrap() - expect).abs() < 1e-14);
        assert!((polylog(1, 0.5, 1e-15).unwrap() - std::f64::consts::LN_2).abs() < 1e-15);
        assert_eq!(polylog(3, 0.0, 1e-12).unwrap(), 0.0);
        assert!(polylog(2, 1.0, 1e-12).is_err());
    }

    #[test]
    fn log_series_edge_cases() {
        assert_eq!(eval_ln_r_series(0.0, 10, 1e-12).unwrap(), 0.0);
        assert!(eval_ln_r_series(1.0, 10, 1e-12).is_err());
        assert!(eval_ln_r_series(0.5, 0, 1e-12).is_err());
        assert!(eval_ln_r_series(0.5, 5, 0.0).is_err());
    }

    #[test]
    fn log_series_matches_product_at_half() {
        let series = eval_ln_r_series(0.5, 30, 1e-12).unwrap();
        let product = eval_r_partial(0.5, 10_000).unwrap().ln();
        assert!((series - product).abs() < 1e-8);
    }

    #[test]
    fn log_series_converges_with_more_terms_at_point_nine() {
        let product = eval_r_partial(0.9, 100_000).unwrap().ln();
        // Outer series is alternating; 60 terms leave a gap near 0.9^61/61.
        let short = (eval_ln_r_series(0.9, 60, 1e-12).unwrap() - product).abs();
        assert!(short > 1e-6 && short < 0.9f64.powi(61) / 61.0);
        let long = (eval_ln_r_series(0.9, 400, 1e-14).unwrap() - product).abs();
        assert!(long < 1e-10, "{long}");
    }

    #[test]
    fn probe_requires_adequate_truncation() {
        assert_eq!(adequate_order(0.75), 200);
        assert!(matches!(
            limit_probe(0.75, 199),
            Err(Error::InadequateTruncation {
                required: 200,
                given: 199,
                ..
            })
        ));
        assert!(limit_probe(0.75, 200).is_ok());
        // 1 - 0.9 rounds just below 0.1
        assert_eq!(adequate_order(0.9), 501);
        assert!(limit_probe(1.0, 10).is_err());
        assert!(limit_probe(0.0, 10).is_err());
    }

    #[test]
    fn probe_values() {
        // 40-digit products
        assert!((limit_probe(0.9, 5000).unwrap() - 0.685_673_160_236_979_9).abs() < 1e-11);
        assert!((limit_probe(0.99, 50_000).unwrap() - 0.584_315_733_723_481_6).abs() < 1e-10);
        let near_zero = limit_probe(1e-6, adequate_order(1e-6)).unwrap();
        assert!((near_zero - 1.0).abs() < 1e-11);
    }
}
