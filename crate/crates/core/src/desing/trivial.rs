use super::identity::{generating_function, DesingIdentity};
use crate::error::{Error, Result};
use crate::models::{mt2_cmatrix, mt2_data, HLData, Scalar};

/// A linear relation `sum alpha * prod (s_j)_{l_j} * zeta(s + m) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub label: &'static str,
    pub relation: DesingIdentity,
}

/// Coefficients of `a`, `b` and `ab` in the Mordell–Tornheim generating
/// function over the c-matrix family `[[a+1, a, -a], [b, b+1, -b]]`.
///
/// `G` is bilinear in `(a, b)`, so the coefficients follow from its values at
/// `a, b in {0, 1}`.
pub fn trivial_relation_terms(data: &HLData) -> Result<Vec<Relation>> {
    let mt = mt2_data();
    if data.d() != 3 || data.r() != 2 || data.gamma() != mt.gamma() || data.beta() != mt.beta() || data.xi() != mt.xi()
    {
        return Err(Error::Unsupported("trivial relations are only derived for Mordell-Tornheim data".into()));
    }
    let g = |a: i64, b: i64| generating_function(&mt, &mt2_cmatrix(Scalar::int(a), Scalar::int(b)));
    let (g00, g10, g01, g11) = (g(0, 0), g(1, 0), g(0, 1), g(1, 1));
    let coef_a = &g10 - &g00;
    let coef_b = &g01 - &g00;
    let coef_ab = &(&g11 - &g10) - &(&g01 - &g00);
    Ok(vec![
        Relation { label: "a", relation: DesingIdentity::from_poly(&mt, &coef_a) },
        Relation { label: "b", relation: DesingIdentity::from_poly(&mt, &coef_b) },
        Relation { label: "ab", relation: DesingIdentity::from_poly(&mt, &coef_ab) },
    ])
}
