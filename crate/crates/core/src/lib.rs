//! Exact coefficients of the generating functions
//!
//! ```text
//! R(x) = prod_{k>=1} (1 + x^k / k) = sum r(k) x^k
//! Q(x) = prod_{k>=1} (1 + x^k)     = sum q(k) x^k
//! ```
//!
//! and the constant `C = lim_{x->1-} (1 - x) R(x)` that the `r(k)` approach.
//!
//! - [`coeff`]: `r(k)`, `q(k)` and the partial-product fields `r_n(k)`, `q_n(k)`
//! - [`partition`]: brute-force sums over partitions into distinct parts
//! - [`constant`]: zeta values, the correction series, and `C`
//! - [`asymptotics`]: `R_n(x)`, the log-polylog expansion, `(1 - x) R(x)`
//! - [`output`], [`verify`]: command-line text and the self-check suite

pub mod asymptotics;
pub mod coeff;
pub mod constant;
mod error;
mod numeric;
pub mod output;
pub mod partition;
mod rational;
pub mod reference;
mod series;
pub mod verify;

pub use error::{Error, Result};
pub use numeric::NeumaierSum;
pub use rational::ExactRational;
pub use series::TruncatedSeries;
