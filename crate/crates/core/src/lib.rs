//! Desingularized multiple zeta-functions of generalized Hurwitz–Lerch type.
//!
//! Layers, bottom-up:
//! - [`exact`]: rationals, cyclotomic numbers, power series, Bernoulli,
//!   Frobenius–Euler and Lerch coefficients.
//! - [`models`]: parameter bundles, c-matrices and singular hyperplanes.
//! - [`desing`]: the generating function `G(u,v)`, desingularization
//!   identities and exact values at non-positive integers.
//! - [`numeric`]: Euler–Maclaurin zetas, direct multiple sums,
//!   Mellin–Barnes continuation and the double-zeta closed forms.
//! - [`padic`]: twisted multiple Bernoulli numbers and p-adic multiple
//!   L-values at non-positive integers.
//!
//! Data-parallel loops go through [`par`], which uses rayon when the
//! `parallel` feature is on and plain iterators otherwise.

pub mod desing;
pub mod error;
pub mod exact;
pub mod models;
pub mod numeric;
pub mod padic;
pub mod par;

pub use error::{Error, Result};
