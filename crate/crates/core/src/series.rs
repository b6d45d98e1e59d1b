//! Formal power series truncated at a fixed degree.

use std::ops::{Add, Mul};

use num_traits::Zero;

/// Coefficients `c(0..=K)` of a power series with everything above `x^K`
/// discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    degree_bound: usize,
    coeffs: Vec<T>,
}

impl<T> TruncatedSeries<T> {
    /// Panics if `coeffs` is empty; a series always has at least `c(0)`.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs c(0)");
        TruncatedSeries {
            degree_bound: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&T> {
        self.coeffs.get(k)
    }
}

impl<T: Clone + Zero> TruncatedSeries<T> {
    /// The constant series `1` truncated at degree `degree_bound`.
    pub fn one(degree_bound: usize) -> Self
    where
        T: num_traits::One,
    {
        let mut coeffs = vec![T::zero(); degree_bound + 1];
        coeffs[0] = T::one();
        TruncatedSeries {
            degree_bound,
            coeffs,
        }
    }

    /// Product truncated at `self`'s degree bound, by schoolbook convolution.
    /// Coefficients of `rhs` above that bound are ignored.
    pub fn mul_truncated(&self, rhs: &TruncatedSeries<T>) -> TruncatedSeries<T>
    where
        for<'a> &'a T: Mul<&'a T, Output = T>,
        T: Add<T, Output = T>,
    {
        let k_max = self.degree_bound;
        let mut out = vec![T::zero(); k_max + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(k_max + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = std::mem::replace(&mut out[i + j], T::zero());
                out[i + j] = slot + a * b;
            }
        }
        TruncatedSeries {
            degree_bound: k_max,
            coeffs: out,
        }
    }
}
