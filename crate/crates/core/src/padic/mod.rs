//! p-adic multiple L-values at non-positive integers.
//!
//! Everything here is exact arithmetic in a cyclotomic field: the values are
//! finite sums of twisted multiple Bernoulli numbers, which are Taylor
//! coefficients of a product of geometric-type factors.

mod bernoulli;
mod lvalue;

pub use bernoulli::{twisted_multi_bernoulli, TwistedBernoulliKey};
pub use lvalue::{
    kubota_leopoldt_check, kubota_leopoldt_rhs, padic_l_nonpos, padic_l_sum, KlCheck, PadicLRequest, PadicLValue,
};
