//! Exact arithmetic: rationals, `Q[x]`, cyclotomic fields, truncated power
//! series and the coefficient families built on them.

mod coeffs;
mod cyclotomic;
mod poly;
mod rational;
mod series;

pub use coeffs::{
    bernoulli, f_delta_coeff, f_delta_coeff_by_series, frobenius_euler, lerch_neg_analytic, lerch_neg_coeff, zeta_neg,
};
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicNumber};
pub use poly::QPoly;
pub use rational::{binomial, factorial, parse_rational, rat, rat_from_f64_exact, rat_int, rat_to_f64, Rational};
pub use series::{Field, PowerSeries};
