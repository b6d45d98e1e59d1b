//! Coefficients of the partial products
//!
//! ```text
//! R_n(x) = prod_{k=1}^{n} (1 + x^k / k) = sum_k r_n(k) x^k
//! Q_n(x) = prod_{k=1}^{n} (1 + x^k)     = sum_k q_n(k) x^k
//! ```
//!
//! and of their limits `R(x)`, `Q(x)`.
//!
//! The full prefixes `r(0..=K)`, `q(0..=K)` come from a one-row
//! truncated-product update ([`r_series`], [`q_series`]). The 2-D fields
//! `r_n(k)`, `q_n(k)` can be built three independent ways (see
//! [`TableRoute`]) so that each route checks the others.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::ExactRational;
use crate::series::TruncatedSeries;

/// Work limits shared by the table and series builders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Upper bound on `n_max * k_max` for a coefficient table.
    pub cell_budget: u128,
    /// Largest degree accepted by the exact series builders.
    pub max_degree: usize,
    /// Largest degree accepted by [`r_series_float`].
    pub max_float_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cell_budget: 10_000_000,
            max_degree: 5_000,
            max_float_degree: 50_000,
        }
    }
}

impl Limits {
    fn check_cells(&self, n_max: usize, k_max: usize) -> Result<()> {
        let cells = n_max as u128 * k_max as u128;
        if cells > self.cell_budget {
            return Err(Error::ResourceLimit {
                what: "n_max * k_max",
                requested: cells,
                limit: self.cell_budget,
            });
        }
        Ok(())
    }

    fn check_degree(&self, degree: usize, limit: usize) -> Result<()> {
        if degree > limit {
            return Err(Error::ResourceLimit {
                what: "series degree",
                requested: degree as u128,
                limit: limit as u128,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// Integer field `q_n(k)`.
    Q,
    /// Rational field `r_n(k)`.
    R,
}

/// How a coefficient table is computed. All routes give identical tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableRoute {
    /// Full recurrence over earlier rows:
    /// `f_n(k) = sum_{m=1}^{n} w_m f_{m-1}(k-m)` for `k >= n > 0`.
    Recurrence,
    /// Single-step update `f_n(k) = f_{n-1}(k) + w_n f_{n-1}(k-n)`.
    TwoTerm,
    /// Row `n` is the truncated product of the first `n` factors, each
    /// multiplied in by full series convolution.
    Product,
}

/// Dense triangular field of coefficients, row `n` in `0..=n_max`,
/// column `k` in `0..=k_max`. Structural zeros are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable<T> {
    kind: TableKind,
    n_max: usize,
    k_max: usize,
    entries: Vec<T>,
}

pub type QTable = CoeffTable<BigUint>;
pub type RTable = CoeffTable<ExactRational>;

impl<T> CoeffTable<T> {
    /// Builds a table from explicit rows. Every row must have the same
    /// nonzero length.
    pub fn from_rows(kind: TableKind, rows: Vec<Vec<T>>) -> Result<Self> {
        let width = rows.first().map(Vec::len).unwrap_or(0);
        if width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::invalid(
                "table rows must be nonempty and of equal length",
            ));
        }
        let n_max = rows.len() - 1;
        Ok(CoeffTable {
            kind,
            n_max,
            k_max: width - 1,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// Panics if `(n, k)` is outside the table.
    pub fn get(&self, n: usize, k: usize) -> &T {
        assert!(
            n <= self.n_max && k <= self.k_max,
            "({n}, {k}) outside table"
        );
        &self.entries[n * (self.k_max + 1) + k]
    }

    pub fn row(&self, n: usize) -> &[T] {
        let w = self.k_max + 1;
        &self.entries[n * w..(n + 1) * w]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.k_max + 1)
    }
}

/// Row 0 of either field: `[1, 0, 0, ...]`.
fn initial_row<T: Zero + One + Clone>(k_max: usize) -> Vec<T> {
    let mut row = vec![T::zero(); k_max + 1];
    row[0] = T::one();
    row
}

fn build_by_recurrence<T, W>(n_max: usize, k_max: usize, weighted: W) -> Vec<Vec<T>>
where
    T: Zero + One + Clone,
    W: Fn(usize, &T) -> T,
{
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(n_max + 1);
    rows.push(initial_row(k_max));
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(k_max + 1);
        for k in 0..=k_max {
            if k < n {
                row.push(rows[n - 1][k].clone());
                continue;
            }
            // k >= n >= m, so k - m never underflows here.
            let mut acc = T::zero();
            for m in 1..=n {
                let prev = &rows[m - 1][k - m];
                if !prev.is_zero() {
                    acc = acc + weighted(m, prev);
                }
            }
            row.push(acc);
        }
        rows.push(row);
    }
    rows
}

fn build_by_two_term<T, W>(n_max: usize, k_max: usize, weighted: W) -> Vec<Vec<T>>
where
    T: Zero + One + Clone,
    W: Fn(usize, &T) -> T,
{
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(n_max + 1);
    rows.push(initial_row(k_max));
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=k_max)
            .map(|k| {
                let mut v = prev[k].clone();
                if k >= n && !prev[k - n].is_zero() {
                    v = v + weighted(n, &prev[k - n]);
                }
                v
            })
            .collect();
        rows.push(row);
    }
    rows
}

fn build_by_product<T, F>(n_max: usize, k_max: usize, factor_weight: F) -> Vec<Vec<T>>
where
    T: Zero + One + Clone + std::ops::Add<T, Output = T>,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
    F: Fn(usize) -> T,
{
    let mut partial = TruncatedSeries::<T>::one(k_max);
    let mut rows = vec![partial.coeffs().to_vec()];
    for n in 1..=n_max {
        if n <= k_max {
            let mut factor = vec![T::zero(); n + 1];
            factor[0] = T::one();
            factor[n] = factor_weight(n);
            partial = partial.mul_truncated(&TruncatedSeries::from_coeffs(factor));
        }
        rows.push(partial.coeffs().to_vec());
    }
    rows
}

/// Field `q_n(k)` for `0 <= n <= n_max`, `0 <= k <= k_max`, by the full
/// recurrence over earlier rows.
pub fn q_table(n_max: usize, k_max: usize) -> Result<QTable> {
    q_table_with(n_max, k_max, TableRoute::Recurrence, &Limits::default())
}

/// Field `r_n(k)` for `0 <= n <= n_max`, `0 <= k <= k_max`, by the full
/// recurrence with weights `1/m`.
pub fn r_table(n_max: usize, k_max: usize) -> Result<RTable> {
    r_table_with(n_max, k_max, TableRoute::Recurrence, &Limits::default())
}

pub fn q_table_with(
    n_max: usize,
    k_max: usize,
    route: TableRoute,
    limits: &Limits,
) -> Result<QTable> {
    limits.check_cells(n_max, k_max)?;
    let rows = match route {
        TableRoute::Recurrence => build_by_recurrence(n_max, k_max, |_, v: &BigUint| v.clone()),
        TableRoute::TwoTerm => build_by_two_term(n_max, k_max, |_, v: &BigUint| v.clone()),
        TableRoute::Product => build_by_product(n_max, k_max, |_| BigUint::one()),
    };
    CoeffTable::from_rows(TableKind::Q, rows)
}

pub fn r_table_with(
    n_max: usize,
    k_max: usize,
    route: TableRoute,
    limits: &Limits,
) -> Result<RTable> {
    limits.check_cells(n_max, k_max)?;
    let weighted = |m: usize, v: &ExactRational| v / &ExactRational::from(m as u64);
    let rows = match route {
        TableRoute::Recurrence => build_by_recurrence(n_max, k_max, weighted),
        TableRoute::TwoTerm => build_by_two_term(n_max, k_max, weighted),
        TableRoute::Product => {
            build_by_product(n_max, k_max, |n| ExactRational::recip_of(n as u64))
        }
    };
    CoeffTable::from_rows(TableKind::R, rows)
}

/// `r(0..=degree)`, the coefficients of `prod_{n>=1} (1 + x^n/n)`.
///
/// Factors with `n > degree` cannot touch the kept coefficients, so the
/// product over `n = 1..=degree` is already exact up to `x^degree`.
pub fn r_series(degree: usize) -> Result<TruncatedSeries<ExactRational>> {
    r_series_with(degree, &Limits::default())
}

pub fn r_series_with(degree: usize, limits: &Limits) -> Result<TruncatedSeries<ExactRational>> {
    limits.check_degree(degree, limits.max_degree)?;
    let mut c: Vec<ExactRational> = initial_row(degree);
    for n in 1..=degree {
        let w = ExactRational::recip_of(n as u64);
        // Descending k so c[k - n] still holds the previous row's value.
        for k in (n..=degree).rev() {
            if !c[k - n].is_zero() {
                let add = &c[k - n] * &w;
                c[k] += add;
            }
        }
    }
    Ok(TruncatedSeries::from_coeffs(c))
}

/// `q(0..=degree)`: numbers of partitions into distinct parts.
pub fn q_series(degree: usize) -> Result<TruncatedSeries<BigUint>> {
    q_series_with(degree, &Limits::default())
}

pub fn q_series_with(degree: usize, limits: &Limits) -> Result<TruncatedSeries<BigUint>> {
    limits.check_degree(degree, limits.max_degree)?;
    let mut c: Vec<BigUint> = initial_row(degree);
    for n in 1..=degree {
        for k in (n..=degree).rev() {
            if !c[k - n].is_zero() {
                let add = c[k - n].clone();
                c[k] += add;
            }
        }
    }
    Ok(TruncatedSeries::from_coeffs(c))
}

/// The single coefficient `r(k)`.
pub fn r_of(k: usize) -> Result<ExactRational> {
    Ok(r_series(k)?
        .into_coeffs()
        .pop()
        .expect("series has k + 1 entries"))
}

/// `r(0..=degree)` in double precision.
///
/// Same update as [`r_series`], with a Neumaier compensation term carried
/// per coefficient.
pub fn r_series_float(degree: usize) -> Result<Vec<f64>> {
    r_series_float_with(degree, &Limits::default())
}

pub fn r_series_float_with(degree: usize, limits: &Limits) -> Result<Vec<f64>> {
    limits.check_degree(degree, limits.max_float_degree)?;
    let mut sum = vec![0.0f64; degree + 1];
    let mut comp = vec![0.0f64; degree + 1];
    sum[0] = 1.0;
    for n in 1..=degree {
        let inv = n as f64;
        for k in (n..=degree).rev() {
            let src = sum[k - n] + comp[k - n];
            if src == 0.0 {
                continue;
            }
            let term = src / inv;
            let s = sum[k];
            let t = s + term;
            comp[k] += if s.abs() >= term.abs() {
                (s - t) + term
            } else {
                (term - t) + s
            };
            sum[k] = t;
        }
    }
    Ok(sum.iter().zip(&comp).map(|(s, c)| s + c).collect())
}
