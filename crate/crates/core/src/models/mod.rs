//! Parameter bundles for generalized Hurwitz–Lerch zeta-functions, standard
//! constructors, the c-matrix solver and the singular-hyperplane catalog of
//! the Euler–Zagier–Lerch family.

mod data;
mod scalar;
mod singular;

pub use data::{ez_data, ezl_data, mt2_cmatrix, mt2_data, root_system_rank2_data, solve_c_matrix, CMatrix, HLData};
pub use scalar::{parse_complex, scalar_from_json, Scalar, Twist};
pub use singular::{count_ones, singular_hyperplanes, Case, Hyperplane, SingularityCatalog};
