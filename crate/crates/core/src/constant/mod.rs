//! The constant `C = lim (1 - x) R(x)` and its approximations.
//!
//! ```text
//! ln C  = -sum_{k>=2} (-1)^k zeta(k) / k  = ln 2 - 1 - Delta
//! Delta = sum_{k>=2} (-1)^k (zeta(k) - 1) / k
//! C     = 2 / exp(1 + Delta)
//! ```
//!
//! The terms `(zeta(k) - 1)/k` are positive and strictly decreasing, so the
//! partial sums `Delta_m` alternate around `Delta` and the first omitted
//! term bounds the truncation error.

mod harmonic;
mod zeta;

pub use harmonic::harmonic_oracle;
pub use zeta::{zeta_minus_one, ZetaValue};

use crate::error::{Error, Result};

/// Tolerance used for zeta values feeding the tail bound and `C`.
const ZETA_TOL: f64 = zeta::MIN_TOL;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaApproximation {
    pub m: u32,
    pub delta_m: f64,
    /// `2 / exp(1 + delta_m)`.
    pub c_m: f64,
    /// Accumulated zeta evaluation error in `delta_m`.
    pub error_bound: f64,
}

impl DeltaApproximation {
    fn new(m: u32, delta_m: f64, error_bound: f64) -> Self {
        DeltaApproximation {
            m,
            delta_m,
            c_m: c_from_delta(delta_m),
            error_bound,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ZetaSeries,
    HarmonicOracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ZetaSeries => "zeta_series",
            Method::HarmonicOracle => "harmonic_oracle",
        }
    }
}

/// An estimate of `C` together with the `Delta` it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantEstimate {
    pub value: f64,
    pub delta: f64,
    /// Bound on `|value - C|`.
    pub error_bound: f64,
    /// Series terms `m` for [`Method::ZetaSeries`], harmonic terms `N` for
    /// [`Method::HarmonicOracle`].
    pub terms_used: u64,
    pub method: Method,
}

pub fn c_from_delta(delta: f64) -> f64 {
    2.0 / (1.0 + delta).exp()
}

fn signed_term(k: u32, tol: f64) -> Result<(f64, f64)> {
    let z = zeta_minus_one(k, tol)?;
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok((
        sign * z.value_minus_one / k as f64,
        z.error_bound / k as f64,
    ))
}

/// `Delta_1 .. Delta_{m_max}` in one pass, each zeta value to
/// `tol / m_max`.
pub fn delta_sequence(m_max: u32, tol: f64) -> Result<Vec<DeltaApproximation>> {
    if m_max == 0 {
        return Err(Error::invalid("m must be >= 1"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::invalid(format!("tol must be positive, got {tol}")));
    }
    let zeta_tol = (tol / m_max as f64).clamp(zeta::MIN_TOL, zeta::MAX_TOL);
    let mut out = Vec::with_capacity(m_max as usize);
    let (mut delta, mut err) = (0.0, 0.0);
    out.push(DeltaApproximation::new(1, delta, err));
    for m in 2..=m_max {
        let (t, e) = signed_term(m, zeta_tol)?;
        delta += t;
        err += e;
        out.push(DeltaApproximation::new(m, delta, err));
    }
    Ok(out)
}

pub fn delta_m(m: u32, tol: f64) -> Result<DeltaApproximation> {
    Ok(*delta_sequence(m, tol)?.last().expect("m >= 1"))
}

/// Bound on `|Delta - Delta_m|`: the first omitted term
/// `(zeta(m+1) - 1)/(m+1)`, rounded up by its evaluation error.
pub fn delta_tail_bound(m: u32) -> f64 {
    if m == 0 {
        return f64::INFINITY;
    }
    let k = m.saturating_add(1);
    if k > zeta::MAX_K {
        // zeta(k) - 1 <= 2^-k (1 + 2/(k-1)); zero once it underflows.
        let kf = k as f64;
        return (-kf).exp2() * (1.0 + 2.0 / (kf - 1.0)) / kf;
    }
    let z = zeta_minus_one(k, ZETA_TOL).expect("2 <= k <= MAX_K and tol in range");
    (z.value_minus_one + z.error_bound) / k as f64
}

/// `C_m` with a rigorous bound on `|C - C_m|`.
///
/// `C = C_m exp(-(Delta - Delta_m))`, so `|C - C_m| <= C_m (e^b - 1)` where
/// `b` bounds `|Delta - Delta_m|`.
pub fn constant_from_terms(m: u32) -> Result<ConstantEstimate> {
    let d = delta_m(m, ZETA_TOL)?;
    Ok(estimate_from(d))
}

fn estimate_from(d: DeltaApproximation) -> ConstantEstimate {
    let b = delta_tail_bound(d.m) + d.error_bound;
    ConstantEstimate {
        value: d.c_m,
        delta: d.delta_m,
        error_bound: d.c_m * b.exp_m1(),
        terms_used: d.m as u64,
        method: Method::ZetaSeries,
    }
}

/// `C` to within `tol`, using the fewest series terms whose propagated
/// bound meets `tol`.
pub fn constant_c(tol: f64) -> Result<ConstantEstimate> {
    if !(1e-12..=1e-2).contains(&tol) {
        return Err(Error::invalid(format!(
            "tol = {tol:e} outside [1e-12, 1e-2]"
        )));
    }
    let (mut delta, mut err) = (0.0, 0.0);
    for m in 1..zeta::MAX_K {
        if m >= 2 {
            let (t, e) = signed_term(m, ZETA_TOL)?;
            delta += t;
            err += e;
        }
        let est = estimate_from(DeltaApproximation::new(m, delta, err));
        if est.error_bound <= tol {
            return Ok(est);
        }
    }
    unreachable!(
        "tail bound drops below 1e-12 long before k = {}",
        zeta::MAX_K
    )
}
