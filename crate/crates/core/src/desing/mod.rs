//! Desingularization: the generating function `G(u, v)`, the identity
//! expressing `zeta^des` through shifted ordinary zetas, exact values at
//! non-positive integers, and the Mordell–Tornheim trivial relations.

mod identity;
mod laurent;
mod special;
mod trivial;

pub use identity::{alpha_from_json, alpha_to_json, desing_identity, generating_function, DesingIdentity, IdTerm};
pub use laurent::{LaurentSeriesPoly, Monomial, SPoly};
pub use special::{special_value_nonpos, SpecialValueRequest};
pub use trivial::{trivial_relation_terms, Relation};
