//! Brute-force enumeration of partitions into distinct parts.
//!
//! This is the slow, obviously-correct side of the coefficient checks:
//! `q(k) = |P(k)|` and `r(k) = sum_{S in P(k)} 1 / prod(S)`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::ExactRational;

pub const DEFAULT_ENUMERATION_BOUND: usize = 60;

/// A set of distinct positive integers, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Returns `None` unless `parts` is strictly increasing and positive.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        let ok = parts.first().is_none_or(|&p| p >= 1) && parts.windows(2).all(|w| w[0] < w[1]);
        ok.then_some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Every partition of `k` into distinct parts, with a configurable bound
/// on `k`.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    bound: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

impl Enumerator {
    pub fn with_bound(bound: usize) -> Self {
        Enumerator { bound }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, k: usize) -> Result<()> {
        if k > self.bound {
            return Err(Error::BoundExceeded {
                k,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// Partitions ordered by number of parts, then lexicographically.
    /// `k = 0` yields the single empty partition.
    pub fn partitions(&self, k: usize) -> Result<Vec<Partition>> {
        self.check(k)?;
        if k == 0 {
            return Ok(vec![Partition::empty()]);
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        // m distinct parts sum to at least m(m+1)/2.
        let mut m = 1;
        while m * (m + 1) / 2 <= k {
            descend(1, k, m, &mut stack, &mut out);
            m += 1;
        }
        Ok(out)
    }

    pub fn r_oracle(&self, k: usize) -> Result<ExactRational> {
        if k == 0 {
            self.check(k)?;
            return Ok(ExactRational::one());
        }
        Ok(self
            .partitions(k)?
            .iter()
            .map(|s| ip(s).expect("k >= 1 partitions are nonempty"))
            .sum())
    }

    pub fn q_oracle(&self, k: usize) -> Result<u64> {
        Ok(self.partitions(k)?.len() as u64)
    }
}

/// Appends every strictly increasing sequence of exactly `parts` values,
/// each `>= min`, summing to `remaining`.
fn descend(
    min: usize,
    remaining: usize,
    parts: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if parts == 1 {
        if remaining >= min {
            stack.push(remaining);
            out.push(Partition {
                parts: stack.clone(),
            });
            stack.pop();
        }
        return;
    }
    // The other parts - 1 values are all > p, so they need at least
    // (parts - 1) * p + (parts - 1) * parts / 2 more.
    let rest = parts - 1;
    let mut p = min;
    while p + rest * p + rest * (rest + 1) / 2 <= remaining {
        stack.push(p);
        descend(p + 1, remaining - p, rest, stack, out);
        stack.pop();
        p += 1;
    }
}

/// `1 / prod(S)`. Undefined for the empty partition.
pub fn ip(s: &Partition) -> Result<ExactRational> {
    if s.is_empty() {
        return Err(Error::Domain("ip is undefined on the empty partition"));
    }
    let product = s.parts.iter().fold(BigUint::one(), |acc, &p| acc * p);
    Ok(ExactRational::new(1, product))
}

pub fn enum_distinct_partitions(k: usize) -> Result<Vec<Partition>> {
    Enumerator::default().partitions(k)
}

pub fn r_oracle(k: usize) -> Result<ExactRational> {
    Enumerator::default().r_oracle(k)
}

pub fn q_oracle(k: usize) -> Result<u64> {
    Enumerator::default().q_oracle(k)
}
