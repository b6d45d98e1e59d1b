//! `zeta(k) - 1` for integer `k >= 2` by direct summation plus an
//! Euler-Maclaurin tail.

use crate::error::{Error, Result};
use crate::numeric::NeumaierSum;

pub const MIN_TOL: f64 = 1e-15;
pub const MAX_TOL: f64 = 1e-3;
/// `2^-k` underflows past this point.
pub const MAX_K: u32 = 1000;
const MAX_TERMS: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaValue {
    pub k: u32,
    pub value_minus_one: f64,
    pub error_bound: f64,
}

/// Magnitude of the first omitted Euler-Maclaurin term,
/// `k(k+1)(k+2) / (720 N^(k+3))`. For `f(x) = x^-k` every derivative has
/// constant sign, so this bounds the remainder.
fn remainder_bound(k: u32, n: u64) -> f64 {
    let k = k as f64;
    k * (k + 1.0) * (k + 2.0) / 720.0 * (n as f64).powf(-(k + 3.0))
}

/// Each term carries about two rounding errors from `powi`, and the
/// compensated sum of positive terms adds at most `2u` of the total.
fn rounding_bound(value: f64) -> f64 {
    4.0 * f64::EPSILON * value
}

pub fn zeta_minus_one(k: u32, tol: f64) -> Result<ZetaValue> {
    if k < 2 {
        return Err(Error::invalid(format!("zeta(k) diverges for k = {k} < 2")));
    }
    if k > MAX_K {
        return Err(Error::invalid(format!("k = {k} exceeds {MAX_K}")));
    }
    if !(MIN_TOL..=MAX_TOL).contains(&tol) {
        return Err(Error::invalid(format!(
            "tol = {tol:e} outside [{MIN_TOL:e}, {MAX_TOL:e}]"
        )));
    }

    let mut n = 8u64;
    while n < MAX_TERMS && remainder_bound(k, n) > tol / 4.0 {
        n = (n * 2).min(MAX_TERMS);
    }

    let kf = k as f64;
    let nf = n as f64;
    let ki = -(k as i32);
    // Tail sum_{j >= N} j^-k ~ N^(1-k)/(k-1) + N^-k / 2 + k / (12 N^(k+1)).
    let tail = nf.powf(1.0 - kf) / (kf - 1.0) + 0.5 * nf.powi(ki) + kf / (12.0 * nf.powf(kf + 1.0));

    let mut acc = NeumaierSum::new();
    acc.add(tail);
    // Smallest terms first.
    for j in (2..n).rev() {
        acc.add((j as f64).powi(ki));
    }
    let value = acc.total();
    let error_bound = remainder_bound(k, n) + rounding_bound(value);
    if error_bound > tol {
        return Err(Error::invalid(format!(
            "cannot reach tol = {tol:e} for k = {k}"
        )));
    }
    Ok(ZetaValue {
        k,
        value_minus_one: value,
        error_bound,
    })
}
