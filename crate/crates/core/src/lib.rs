//! Exact verification of the identity
//!
//! ```text
//! 1 = (1-x)^{n+1} sum_{k=0}^{m} C(n+k,k) x^k + x^{m+1} sum_{k=0}^{n} C(m+k,k) (1-x)^k
//! ```
//!
//! in each of the guises it has historically appeared in: a truncated power
//! series identity, a terminating hypergeometric computation, a statement
//! about the problem of points, a fact about dice, and the frequency response
//! of a maximally flat smoothing filter built from Krawtchouk polynomials.
//!
//! All arithmetic is exact ([`exact::Rational`]); floating point appears only
//! when rendering decimals or sampling a frequency response for plotting.

pub mod cli;
pub mod dice;
pub mod error;
pub mod exact;
pub mod hypergeom;
pub mod identity;
pub mod krawtchouk;
pub mod points;
pub mod poly;

pub use error::{Error, Result};
pub use exact::{Natural, Rational};
pub use poly::Polynomial;
