//! Self-check suite behind `distinct-gf verify`.
//!
//! Each check is a plain function returning a [`Check`]; the ones that
//! compare against stored tables take the computed table as an argument so
//! a deliberately corrupted table can be fed through them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::asymptotics;
use crate::coeff::{self, Limits, QTable, RTable, TableRoute};
use crate::constant::{self, DeltaApproximation};
use crate::partition;
use crate::rational::ExactRational;
use crate::reference;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Quick,
    Full,
}

impl Depth {
    fn oracle_k_max(self) -> usize {
        match self {
            Depth::Quick => 30,
            Depth::Full => 45,
        }
    }

    fn harmonic_terms(self) -> u64 {
        match self {
            Depth::Quick => 1_000_000,
            Depth::Full => 10_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed: false,
            detail: detail.into(),
        }
    }

    fn from_failures(name: &'static str, ok: impl Into<String>, failures: Vec<String>) -> Self {
        match failures.first() {
            None => Check::pass(name, ok),
            Some(first) => Check::fail(
                name,
                format!("{} failure(s), first: {first}", failures.len()),
            ),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {failed} failed", self.checks.len())
    }
}

fn or_error<T>(name: &'static str, r: crate::Result<T>) -> Result<T, Check> {
    r.map_err(|e| Check::fail(name, e.to_string()))
}

/// Compares the `n <= 5`, `k <= 16` corner of `table` with the reference
/// `r_n(k)` field.
pub fn check_r_field(table: &RTable) -> Check {
    const NAME: &str = "r field (n <= 5, k <= 16)";
    let expected = reference::r_field();
    let mut failures = Vec::new();
    for (n, row) in expected.iter().enumerate() {
        for (k, want) in row.iter().enumerate() {
            if n > table.n_max() || k > table.k_max() {
                failures.push(format!("table too small for ({n}, {k})"));
            } else if table.get(n, k) != want {
                failures.push(format!("r_{n}({k}) = {} != {want}", table.get(n, k)));
            }
        }
    }
    Check::from_failures(NAME, "all cells equal", failures)
}

pub fn check_q_field(table: &QTable) -> Check {
    const NAME: &str = "q field (n <= 5, k <= 16)";
    let mut failures = Vec::new();
    for (n, row) in reference::Q_FIELD.iter().enumerate() {
        for (k, &want) in row.iter().enumerate() {
            if n > table.n_max() || k > table.k_max() {
                failures.push(format!("table too small for ({n}, {k})"));
            } else if table.get(n, k) != &BigUint::from(want) {
                failures.push(format!("q_{n}({k}) = {} != {want}", table.get(n, k)));
            }
        }
    }
    Check::from_failures(NAME, "all cells equal", failures)
}

pub fn check_delta_table(rows: &[DeltaApproximation]) -> Check {
    const NAME: &str = "Delta_m / C_m table (m <= 13)";
    let mut failures = Vec::new();
    for &(m, delta, c) in &reference::DELTA_TABLE {
        match rows.iter().find(|d| d.m == m) {
            None => failures.push(format!("missing m = {m}")),
            Some(d) => {
                if (d.delta_m - delta).abs() >= reference::DELTA_TABLE_TOL
                    || (d.c_m - c).abs() >= reference::DELTA_TABLE_TOL
                {
                    failures.push(format!(
                        "m = {m}: ({:.7}, {:.7}) vs ({delta}, {c})",
                        d.delta_m, d.c_m
                    ));
                }
            }
        }
    }
    Check::from_failures(NAME, "13 rows within 1.5e-7", failures)
}

pub fn check_zeta_table() -> Check {
    const NAME: &str = "zeta(k) - 1 table (k <= 11)";
    let mut failures = Vec::new();
    for &(k, want) in &reference::ZETA_TABLE {
        match constant::zeta_minus_one(k, 1e-12) {
            Err(e) => failures.push(format!("k = {k}: {e}")),
            Ok(z) if (z.value_minus_one - want).abs() >= reference::ZETA_TABLE_TOL => {
                failures.push(format!("k = {k}: {:.6} vs {want}", z.value_minus_one))
            }
            Ok(_) => {}
        }
    }
    Check::from_failures(NAME, "10 rows within 1.5e-6", failures)
}

/// Series coefficients against brute-force partition sums for `k <= k_max`.
pub fn check_oracles(k_max: usize) -> Check {
    const NAME: &str = "series vs partition enumeration";
    let run = || -> Result<Check, Check> {
        let r = or_error(NAME, coeff::r_series(k_max))?;
        let q = or_error(NAME, coeff::q_series(k_max))?;
        let mut failures = Vec::new();
        for k in 0..=k_max {
            let r_brute = or_error(NAME, partition::r_oracle(k))?;
            if r.coeffs()[k] != r_brute {
                failures.push(format!("r({k}): {} vs {r_brute}", r.coeffs()[k]));
            }
            let q_brute = or_error(NAME, partition::q_oracle(k))?;
            if q.coeffs()[k] != BigUint::from(q_brute) {
                failures.push(format!("q({k}): {} vs {q_brute}", q.coeffs()[k]));
            }
        }
        Ok(Check::from_failures(
            NAME,
            format!("k <= {k_max} exact"),
            failures,
        ))
    };
    run().unwrap_or_else(|c| c)
}

/// Row sums, triangular cutoff and diagonal of complete rows `n <= n_max`.
pub fn check_row_identities(r: &RTable, q: &QTable) -> Check {
    const NAME: &str = "row sums, cutoff and diagonal";
    let mut failures = Vec::new();
    let mut factorial = ExactRational::one();
    for n in 0..=r.n_max().min(q.n_max()) {
        let tri = n * (n + 1) / 2;
        if tri > r.k_max() || tri > q.k_max() {
            break;
        }
        if n > 0 {
            factorial = factorial * ExactRational::from(n as u64);
        }
        let r_sum: ExactRational = r.row(n).iter().sum();
        if r_sum != ExactRational::from(n as u64 + 1) {
            failures.push(format!("sum r_{n} = {r_sum}"));
        }
        let q_sum: BigUint = q.row(n).iter().sum();
        if q_sum != BigUint::one() << n {
            failures.push(format!("sum q_{n} = {q_sum}"));
        }
        if r.row(n)[tri + 1..].iter().any(|v| !v.is_zero()) || r.row(n)[tri].is_zero() {
            failures.push(format!("r_{n} cutoff not at {tri}"));
        }
        if q.row(n)[tri + 1..].iter().any(|v| !v.is_zero()) {
            failures.push(format!("q_{n} nonzero past {tri}"));
        }
        if Some(r.get(n, tri).clone()) != factorial.recip() {
            failures.push(format!("r_{n}({tri}) = {} != 1/{n}!", r.get(n, tri)));
        }
    }
    Check::from_failures(NAME, format!("n <= {} exact", r.n_max()), failures)
}

/// Recurrence, two-term and product tables agree cell for cell.
pub fn check_routes(n_max: usize) -> Check {
    const NAME: &str = "three table routes agree";
    let k_max = n_max * (n_max + 1) / 2;
    let limits = Limits::default();
    let run = || -> Result<Check, Check> {
        let base = or_error(NAME, coeff::r_table(n_max, k_max))?;
        let mut failures = Vec::new();
        for route in [TableRoute::TwoTerm, TableRoute::Product] {
            if or_error(NAME, coeff::r_table_with(n_max, k_max, route, &limits))? != base {
                failures.push(format!("r table via {route:?} differs"));
            }
        }
        let base = or_error(NAME, coeff::q_table(n_max, k_max))?;
        for route in [TableRoute::TwoTerm, TableRoute::Product] {
            if or_error(NAME, coeff::q_table_with(n_max, k_max, route, &limits))? != base {
                failures.push(format!("q table via {route:?} differs"));
            }
        }
        Ok(Check::from_failures(
            NAME,
            format!("n <= {n_max}, k <= {k_max}"),
            failures,
        ))
    };
    run().unwrap_or_else(|c| c)
}

pub fn check_float_pipeline(k_max: usize) -> Check {
    const NAME: &str = "float vs exact coefficients";
    let run = || -> Result<Check, Check> {
        let exact = or_error(NAME, coeff::r_series(k_max))?;
        let float = or_error(NAME, coeff::r_series_float(k_max))?;
        let worst = exact
            .coeffs()
            .iter()
            .zip(&float)
            .map(|(e, f)| ((f - e.to_f64()) / e.to_f64()).abs())
            .fold(0.0, f64::max);
        Ok(if worst <= 1e-9 {
            Check::pass(NAME, format!("k <= {k_max}, max rel err {worst:.1e}"))
        } else {
            Check::fail(NAME, format!("max rel err {worst:.1e} > 1e-9"))
        })
    };
    run().unwrap_or_else(|c| c)
}

/// The log series, taken far enough that the omitted alternating tail is
/// negligible, against the partial product.
pub fn check_series_vs_product() -> Check {
    const NAME: &str = "log series vs partial product";
    let mut failures = Vec::new();
    for x in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let series = asymptotics::eval_ln_r_series(x, 400, 1e-14);
        let product = asymptotics::eval_r_partial(x, 100_000);
        match (series, product) {
            (Ok(s), Ok(p)) if (s.exp() - p).abs() <= 1e-6 => {}
            (Ok(s), Ok(p)) => failures.push(format!("x = {x}: {} vs {p}", s.exp())),
            (Err(e), _) | (_, Err(e)) => failures.push(format!("x = {x}: {e}")),
        }
    }
    Check::from_failures(NAME, "x in {0.1, ..., 0.9} within 1e-6", failures)
}

pub fn check_constant(harmonic_terms: u64) -> Check {
    const NAME: &str = "zeta series vs harmonic oracle";
    let run = || -> Result<Check, Check> {
        let series = or_error(NAME, constant::constant_c(1e-10))?;
        let oracle = or_error(NAME, constant::harmonic_oracle(harmonic_terms))?;
        let diff = (series.value - oracle.value).abs();
        let allowed = series.error_bound + oracle.error_bound;
        Ok(
            if diff <= allowed && (series.value - reference::C_QUOTED).abs() <= 1e-4 {
                Check::pass(
                    NAME,
                    format!("C = {:.10}, |diff| = {diff:.1e}", series.value),
                )
            } else {
                Check::fail(
                    NAME,
                    format!(
                        "{} vs {}, |diff| = {diff:.1e} > {allowed:.1e}",
                        series.value, oracle.value
                    ),
                )
            },
        )
    };
    run().unwrap_or_else(|c| c)
}

/// `|(1 - x) R(x) - C|` shrinks along `x = 1 - 2^-j`, `j = 2..=7`.
pub fn check_limit_trend() -> Check {
    const NAME: &str = "limit probe approaches C";
    let run = || -> Result<Check, Check> {
        let c = or_error(NAME, constant::constant_c(1e-8))?.value;
        let mut dists = Vec::new();
        for j in 2..=7 {
            let x = 1.0 - 2f64.powi(-j);
            let v = or_error(
                NAME,
                asymptotics::limit_probe(x, asymptotics::adequate_order(x)),
            )?;
            dists.push((v - c).abs());
        }
        Ok(if dists.windows(2).all(|w| w[1] < w[0]) {
            Check::pass(
                NAME,
                format!("distance {:.4} -> {:.4}", dists[0], dists[dists.len() - 1]),
            )
        } else {
            Check::fail(NAME, format!("not monotone: {dists:?}"))
        })
    };
    run().unwrap_or_else(|c| c)
}

/// `r(k) > C` for `10 <= k <= 500`, and `r(500)` closer to `C` than `r(50)`.
pub fn check_approach_from_above() -> Check {
    const NAME: &str = "r(k) approaches C from above";
    let run = || -> Result<Check, Check> {
        let c = or_error(NAME, constant::constant_c(1e-10))?.value;
        let r = or_error(NAME, coeff::r_series_float(500))?;
        let below: Vec<usize> = (10..=500).filter(|&k| r[k] <= c).collect();
        Ok(
            if below.is_empty() && (r[500] - c).abs() < (r[50] - c).abs() {
                Check::pass(NAME, format!("r(500) - C = {:.2e}", r[500] - c))
            } else {
                Check::fail(NAME, format!("r(k) <= C at k = {below:?}"))
            },
        )
    };
    run().unwrap_or_else(|c| c)
}

pub fn run(depth: Depth) -> Report {
    let mut checks = Vec::new();

    match coeff::r_table(5, 16) {
        Ok(t) => checks.push(check_r_field(&t)),
        Err(e) => checks.push(Check::fail("r field (n <= 5, k <= 16)", e.to_string())),
    }
    match coeff::q_table(5, 16) {
        Ok(t) => checks.push(check_q_field(&t)),
        Err(e) => checks.push(Check::fail("q field (n <= 5, k <= 16)", e.to_string())),
    }
    match constant::delta_sequence(13, 1e-12) {
        Ok(rows) => checks.push(check_delta_table(&rows)),
        Err(e) => checks.push(Check::fail("Delta_m / C_m table (m <= 13)", e.to_string())),
    }
    checks.push(check_zeta_table());
    checks.push(check_oracles(depth.oracle_k_max()));

    let limits = Limits::default();
    let tables = coeff::r_table_with(30, 465, TableRoute::TwoTerm, &limits).and_then(|r| {
        Ok((
            r,
            coeff::q_table_with(30, 465, TableRoute::TwoTerm, &limits)?,
        ))
    });
    match tables {
        Ok((r, q)) => checks.push(check_row_identities(&r, &q)),
        Err(e) => checks.push(Check::fail("row sums, cutoff and diagonal", e.to_string())),
    }

    checks.push(check_routes(match depth {
        Depth::Quick => 15,
        Depth::Full => 30,
    }));
    checks.push(check_float_pipeline(200));
    checks.push(check_series_vs_product());
    checks.push(check_constant(depth.harmonic_terms()));

    if depth == Depth::Full {
        checks.push(check_limit_trend());
        checks.push(check_approach_from_above());
    }
    Report { checks }
}
