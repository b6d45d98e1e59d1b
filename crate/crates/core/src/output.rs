//! Text produced by the command-line subcommands.
//!
//! CSV output has a header row, `,` separators and `\n` line endings.
//! Exact values are written as `p/q` (bare `p` for integers); reals use a
//! fixed number of decimals, seven unless overridden.

use std::fmt::Write;

use crate::coeff;
use crate::constant::{self, ConstantEstimate};
use crate::error::{Error, Result};
use crate::reference::{FIELD_COLS, FIELD_ROWS};

pub const DEFAULT_DIGITS: usize = 7;
/// Largest `max_k` accepted by [`figure_csv`].
pub const FIGURE_MAX_K: usize = 2000;
/// Tolerance for the constant drawn as the horizontal reference line.
pub const FIGURE_C_TOL: f64 = 1e-8;
/// Terms of the harmonic cross-check in the constant report.
pub const HARMONIC_TERMS: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    Exact,
    Float { digits: usize },
}

pub fn fmt_real(v: f64, digits: usize) -> String {
    format!("{v:.digits$}")
}

/// `k,r` rows for `k = 0..=max_k`.
pub fn r_csv(max_k: usize, precision: Precision) -> Result<String> {
    let mut out = String::from("k,r\n");
    match precision {
        Precision::Exact => {
            for (k, v) in coeff::r_series(max_k)?.coeffs().iter().enumerate() {
                writeln!(out, "{k},{v}").unwrap();
            }
        }
        Precision::Float { digits } => {
            for (k, v) in coeff::r_series_float(max_k)?.iter().enumerate() {
                writeln!(out, "{k},{}", fmt_real(*v, digits)).unwrap();
            }
        }
    }
    Ok(out)
}

/// `k,q` rows for `k = 0..=max_k`.
pub fn q_csv(max_k: usize) -> Result<String> {
    let mut out = String::from("k,q\n");
    for (k, v) in coeff::q_series(max_k)?.coeffs().iter().enumerate() {
        writeln!(out, "{k},{v}").unwrap();
    }
    Ok(out)
}

/// `k,r,C` rows: the float coefficients next to a constant column holding
/// `C`.
pub fn figure_csv(max_k: usize, digits: usize) -> Result<String> {
    if max_k > FIGURE_MAX_K {
        return Err(Error::ResourceLimit {
            what: "figure max_k",
            requested: max_k as u128,
            limit: FIGURE_MAX_K as u128,
        });
    }
    let c = fmt_real(constant::constant_c(FIGURE_C_TOL)?.value, digits);
    let mut out = String::from("k,r,C\n");
    for (k, v) in coeff::r_series_float(max_k)?.iter().enumerate() {
        writeln!(out, "{k},{},{c}", fmt_real(*v, digits)).unwrap();
    }
    Ok(out)
}

fn field_header() -> String {
    let mut s = String::from("n\\k");
    for k in 0..FIELD_COLS {
        write!(s, ", {k}").unwrap();
    }
    s.push('\n');
    s
}

fn field_rows<T: std::fmt::Display>(rows: impl Iterator<Item = impl AsRef<[T]>>) -> String {
    let mut out = field_header();
    for (n, row) in rows.enumerate() {
        write!(out, "{n}").unwrap();
        for v in row.as_ref() {
            write!(out, ", {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// One of the three reference tables, laid out as `, `-separated rows:
/// 1 is `m, Delta_m, C_m` for `m = 1..=13`; 2 and 3 are the `q_n(k)` and
/// `r_n(k)` fields for `n <= 5`, `k <= 16`.
pub fn table(which: u8) -> Result<String> {
    let (n_max, k_max) = (FIELD_ROWS - 1, FIELD_COLS - 1);
    match which {
        1 => {
            let mut out = String::from("m, delta_m, C_m\n");
            for d in constant::delta_sequence(13, 1e-12)? {
                writeln!(out, "{}, {:.7}, {:.7}", d.m, d.delta_m, d.c_m).unwrap();
            }
            Ok(out)
        }
        2 => Ok(field_rows(coeff::q_table(n_max, k_max)?.rows())),
        3 => Ok(field_rows(coeff::r_table(n_max, k_max)?.rows())),
        _ => Err(Error::invalid(format!(
            "no table {which}; expected 1, 2 or 3"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConstantRequest {
    Tol(f64),
    Terms(u32),
}

fn estimate_lines(out: &mut String, prefix: &str, est: &ConstantEstimate, digits: usize) {
    writeln!(out, "{prefix}method, {}", est.method.as_str()).unwrap();
    writeln!(out, "{prefix}terms_used, {}", est.terms_used).unwrap();
    writeln!(out, "{prefix}delta, {}", fmt_real(est.delta, digits)).unwrap();
    writeln!(out, "{prefix}C, {}", fmt_real(est.value, digits)).unwrap();
    writeln!(out, "{prefix}error_bound, {:.3e}", est.error_bound).unwrap();
}

/// `Delta_m, C_m` for every `m` used, the final estimate with its error
/// bound, and the harmonic cross-check.
pub fn constant_report(request: ConstantRequest, digits: usize) -> Result<String> {
    let est = match request {
        ConstantRequest::Tol(tol) => constant::constant_c(tol)?,
        ConstantRequest::Terms(m) => constant::constant_from_terms(m)?,
    };
    let mut out = String::from("m, delta_m, C_m\n");
    for d in constant::delta_sequence(est.terms_used as u32, 1e-12)? {
        writeln!(
            out,
            "{}, {}, {}",
            d.m,
            fmt_real(d.delta_m, digits),
            fmt_real(d.c_m, digits)
        )
        .unwrap();
    }
    out.push('\n');
    estimate_lines(&mut out, "", &est, digits);
    let oracle = constant::harmonic_oracle(HARMONIC_TERMS)?;
    estimate_lines(&mut out, "oracle_", &oracle, digits);
    writeln!(out, "difference, {:.3e}", (est.value - oracle.value).abs()).unwrap();
    Ok(out)
}
