//! Floating-point evaluation: Euler–Maclaurin zetas, direct multiple sums,
//! Mellin–Barnes continuation of double zetas, the double-zeta closed forms
//! and numeric evaluation of desingularization identities.

mod config;
mod direct;
mod ez2;
mod gamma;
mod identity;
mod lines;
mod mellin;
mod quad;
mod zeta;

pub use config::{EvalConfig, EvalResult, Method};
pub use direct::{hl_zeta_direct, in_direct_region};
pub use ez2::{ez2_des, ez2_des_at_n1, ez2_des_exact, ez2_des_via_identity};
pub use gamma::{gamma, ln_gamma};
pub use identity::{evaluate_identity, verify_trivial_relations};
pub use lines::{
    des_first_neg, des_first_neg_by_substitution, des_line_by_substitution, des_second_neg,
    des_second_neg_by_substitution, zeta2_first_neg, zeta2_second_neg, MixedValue, ZetaLine,
};
pub use mellin::{as_ezl2, ezl2_continued, hl_zeta_mb};
pub use quad::gauss_legendre;
pub use zeta::{hurwitz_zeta, lerch_phi, riemann_zeta};
