use serde::{Deserialize, Serialize};

use super::scalar::{Scalar, Twist};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Parameter bundle `(d, r, xi, gamma, beta)` of
/// `sum_{m in N_0^r} prod_k xi_k^{m_k} / prod_j (beta_j + sum_k gamma_jk m_k)^{s_j}`,
/// with an optional user-supplied c-matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawData", into = "RawData")]
pub struct HLData {
    d: usize,
    r: usize,
    xi: Vec<Twist>,
    gamma: Vec<Vec<Scalar>>,
    beta: Vec<Scalar>,
    c: Option<Vec<Vec<Scalar>>>,
}

#[derive(Serialize, Deserialize)]
struct RawData {
    d: usize,
    r: usize,
    xi: Vec<Twist>,
    gamma: Vec<Vec<Scalar>>,
    beta: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c: Option<Vec<Vec<Scalar>>>,
}

impl TryFrom<RawData> for HLData {
    type Error = Error;
    fn try_from(r: RawData) -> Result<Self> {
        let mut h = HLData::new(r.xi, r.gamma, r.beta)?;
        if h.d != r.d || h.r != r.r {
            return Err(Error::Parameter(format!(
                "declared (d, r) = ({}, {}) but matrices give ({}, {})",
                r.d, r.r, h.d, h.r
            )));
        }
        if let Some(c) = r.c {
            h = h.with_c(c)?;
        }
        Ok(h)
    }
}

impl From<HLData> for RawData {
    fn from(h: HLData) -> Self {
        RawData { d: h.d, r: h.r, xi: h.xi, gamma: h.gamma, beta: h.beta, c: h.c }
    }
}

impl HLData {
    /// Validates and builds a parameter bundle; `gamma` is `d x r`.
    pub fn new(xi: Vec<Twist>, gamma: Vec<Vec<Scalar>>, beta: Vec<Scalar>) -> Result<Self> {
        let r = xi.len();
        let d = gamma.len();
        let perr = |m: String| Err(Error::Parameter(m));
        if r == 0 || d == 0 {
            return perr("need at least one twist and one linear form".into());
        }
        if beta.len() != d {
            return perr(format!("beta has length {}, expected d = {d}", beta.len()));
        }
        for (k, x) in xi.iter().enumerate() {
            if x.norm() > 1.0 + 1e-15 {
                return perr(format!("|xi_{}| > 1", k + 1));
            }
        }
        for (j, row) in gamma.iter().enumerate() {
            if row.len() != r {
                return perr(format!("gamma row {} has length {}, expected r = {r}", j + 1, row.len()));
            }
            if row.iter().any(|g| g.re() < 0.0) {
                return perr(format!("gamma row {} has an entry with negative real part", j + 1));
            }
            if !row.iter().any(|g| g.re() > 0.0) {
                return perr(format!("gamma row {} has no entry with positive real part", j + 1));
            }
            if beta[j].re() <= 0.0 {
                return perr(format!("Re beta_{} must be positive", j + 1));
            }
        }
        Ok(HLData { d, r, xi, gamma, beta, c: None })
    }

    /// Attaches a c-matrix (`r x d`), checked against the assumption
    /// `sum_j c_mj gamma_jk = delta_mk`.
    pub fn with_c(mut self, c: Vec<Vec<Scalar>>) -> Result<Self> {
        CMatrix::new(&self, c.clone())?;
        self.c = Some(c);
        Ok(self)
    }

    pub fn d(&self) -> usize {
        self.d
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn xi(&self) -> &[Twist] {
        &self.xi
    }
    pub fn gamma(&self) -> &[Vec<Scalar>] {
        &self.gamma
    }
    pub fn beta(&self) -> &[Scalar] {
        &self.beta
    }
    pub fn user_c(&self) -> Option<&[Vec<Scalar>]> {
        self.c.as_deref()
    }

    /// `delta(k) = [xi_k = 1]` (0-based `k`).
    pub fn delta(&self, k: usize) -> bool {
        self.xi[k].is_one()
    }

    /// The user's c-matrix if one is attached, else [`solve_c_matrix`].
    pub fn cmatrix(&self) -> Result<CMatrix> {
        match &self.c {
            Some(c) => CMatrix::new(self, c.clone()),
            None => solve_c_matrix(self),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.gamma.iter().flatten().chain(&self.beta).all(Scalar::is_exact)
            && self.xi.iter().all(|x| x.order().is_some())
    }

    /// Same data with every twist replaced.
    pub fn with_xi(&self, xi: Vec<Twist>) -> Result<Self> {
        let mut h = HLData::new(xi, self.gamma.clone(), self.beta.clone())?;
        h.c = self.c.clone();
        Ok(h)
    }
}

/// Euler–Zagier–Lerch data: `d = r`, `gamma_jk = gamma_k` for `j >= k`,
/// `beta_j = gamma_1 + ... + gamma_j`.
pub fn ezl_data(xi: Vec<Twist>, gamma: Vec<Scalar>) -> Result<HLData> {
    let r = xi.len();
    if gamma.len() != r {
        return Err(Error::Parameter("xi and gamma must have equal length".into()));
    }
    if gamma.iter().any(|g| g.re() <= 0.0) {
        return Err(Error::Parameter("EZL data needs Re gamma_k > 0".into()));
    }
    let g = (0..r).map(|j| (0..r).map(|k| if k <= j { gamma[k].clone() } else { Scalar::zero() }).collect()).collect();
    let mut acc = Scalar::zero();
    let beta = gamma
        .iter()
        .map(|gk| {
            acc = &acc + gk;
            acc.clone()
        })
        .collect();
    HLData::new(xi, g, beta)
}

/// Euler–Zagier data of depth `r` (all twists and all `gamma_k` equal to 1).
pub fn ez_data(r: usize) -> HLData {
    ezl_data(vec![Twist::one(); r], vec![Scalar::one(); r]).expect("valid EZ data")
}

/// Mordell–Tornheim double zeta data.
pub fn mt2_data() -> HLData {
    let g = |rows: [[i64; 2]; 3]| rows.iter().map(|r| r.iter().map(|&v| Scalar::int(v)).collect()).collect();
    HLData::new(
        vec![Twist::one(), Twist::one()],
        g([[1, 0], [0, 1], [1, 1]]),
        vec![Scalar::int(1), Scalar::int(1), Scalar::int(2)],
    )
    .expect("valid MT data")
}

/// The c-matrix family `[[a+1, a, -a], [b, b+1, -b]]` for [`mt2_data`].
pub fn mt2_cmatrix(a: Scalar, b: Scalar) -> CMatrix {
    let one = Scalar::one();
    let c = vec![vec![&a + &one, a.clone(), -&a], vec![b.clone(), &b + &one, -&b]];
    CMatrix::new(&mt2_data(), c).expect("MT family satisfies the assumption")
}

/// Data of the zeta-function of a root system from the pairings
/// `<alpha^vee, lambda_k>` (one row per positive root); the first `r` rows
/// must be the simple roots, i.e. the identity.
pub fn root_system_rank2_data(pairings: &[Vec<Rational>], xi: Vec<Twist>) -> Result<(HLData, CMatrix)> {
    let r = xi.len();
    if pairings.len() < r || pairings.iter().any(|row| row.len() != r) {
        return Err(Error::Parameter("pairing matrix must have r columns and at least r rows".into()));
    }
    for (i, row) in pairings.iter().take(r).enumerate() {
        for (k, v) in row.iter().enumerate() {
            let want = if i == k { 1 } else { 0 };
            if *v != Rational::from_integer(want.into()) {
                return Err(Error::Parameter("the first r pairing rows must form the identity".into()));
            }
        }
    }
    let gamma: Vec<Vec<Scalar>> = pairings.iter().map(|row| row.iter().cloned().map(Scalar::Exact).collect()).collect();
    let beta = pairings.iter().map(|row| Scalar::Exact(row.iter().sum())).collect();
    let data = HLData::new(xi, gamma, beta)?;
    let d = data.d();
    let c = (0..r).map(|m| (0..d).map(|j| if j == m { Scalar::one() } else { Scalar::zero() }).collect()).collect();
    let cm = CMatrix::new(&data, c)?;
    Ok((data, cm))
}

/// Constants `c_mj` with `sum_j c_mj gamma_jk = delta_mk`, plus
/// `c_m0 = 1 - sum_j c_mj beta_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    c: Vec<Vec<Scalar>>,
    c0: Vec<Scalar>,
}

const COMPLEX_TOL: f64 = 1e-12;

impl CMatrix {
    pub fn new(data: &HLData, c: Vec<Vec<Scalar>>) -> Result<Self> {
        let (d, r) = (data.d(), data.r());
        if c.len() != r || c.iter().any(|row| row.len() != d) {
            return Err(Error::Parameter(format!("c-matrix must be {r} x {d}")));
        }
        for m in 0..r {
            for k in 0..r {
                let mut acc = Scalar::zero();
                for j in 0..d {
                    acc = &acc + &(&c[m][j] * &data.gamma()[j][k]);
                }
                let target = if m == k { Scalar::one() } else { Scalar::zero() };
                if !(&acc - &target).is_negligible(COMPLEX_TOL) {
                    return Err(Error::Parameter(format!(
                        "c-matrix violates sum_j c_mj gamma_jk = delta_mk at (m, k) = ({}, {})",
                        m + 1,
                        k + 1
                    )));
                }
            }
        }
        let c0 = (0..r).map(|m| (0..d).fold(Scalar::one(), |acc, j| &acc - &(&c[m][j] * &data.beta()[j]))).collect();
        Ok(CMatrix { c, c0 })
    }

    pub fn c(&self) -> &[Vec<Scalar>] {
        &self.c
    }

    pub fn c0(&self) -> &[Scalar] {
        &self.c0
    }
}

/// One exact solution of the assumption: the first `r` linearly independent
/// rows of `gamma` are inverted, every other column of `c` is zero.
pub fn solve_c_matrix(data: &HLData) -> Result<CMatrix> {
    let (d, r) = (data.d(), data.r());
    let unsat = || Error::Parameter("assumption unsatisfiable: gamma has rank < r".into());
    // Greedy row selection by incremental elimination.
    let mut basis: Vec<(usize, Vec<Scalar>)> = Vec::new();
    let mut chosen = Vec::new();
    for j in 0..d {
        let mut v = data.gamma()[j].clone();
        for (p, b) in &basis {
            if !v[*p].is_negligible(COMPLEX_TOL) {
                let f = &v[*p] / &b[*p];
                for k in 0..r {
                    v[k] = &v[k] - &(&f * &b[k]);
                }
            }
        }
        if let Some(p) = (0..r).find(|&k| !v[k].is_negligible(COMPLEX_TOL)) {
            basis.push((p, v));
            chosen.push(j);
            if chosen.len() == r {
                break;
            }
        }
    }
    if chosen.len() < r {
        return Err(unsat());
    }
    // Invert the square submatrix A = gamma[chosen] by Gauss-Jordan.
    let mut a: Vec<Vec<Scalar>> = chosen.iter().map(|&j| data.gamma()[j].clone()).collect();
    let mut inv: Vec<Vec<Scalar>> =
        (0..r).map(|i| (0..r).map(|k| if i == k { Scalar::one() } else { Scalar::zero() }).collect()).collect();
    for col in 0..r {
        let piv = (col..r)
            .max_by(|&x, &y| a[x][col].to_complex().norm().total_cmp(&a[y][col].to_complex().norm()))
            .filter(|&p| !a[p][col].is_negligible(COMPLEX_TOL))
            .ok_or_else(unsat)?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for k in 0..r {
            a[col][k] = &a[col][k] / &p;
            inv[col][k] = &inv[col][k] / &p;
        }
        for i in 0..r {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for k in 0..r {
                    a[i][k] = &a[i][k] - &(&f * &a[col][k]);
                    inv[i][k] = &inv[i][k] - &(&f * &inv[col][k]);
                }
            }
        }
    }
    // A = gamma_S (rows), so c_S = A^{-1} satisfies c_S * gamma_S = I.
    let mut c = vec![vec![Scalar::zero(); d]; r];
    for m in 0..r {
        for (t, &j) in chosen.iter().enumerate() {
            c[m][j] = inv[m][t].clone();
        }
    }
    CMatrix::new(data, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&v| Scalar::int(v)).collect()).collect()
    }

    #[test]
    fn ez2_shape() {
        let h = ez_data(2);
        assert_eq!(h.gamma(), ints(&[&[1, 0], &[1, 1]]).as_slice());
        assert_eq!(h.beta(), &[Scalar::int(1), Scalar::int(2)]);
    }

    #[test]
    fn ez2_c_matrix() {
        let c = solve_c_matrix(&ez_data(2)).unwrap();
        assert_eq!(c.c(), ints(&[&[1, 0], &[-1, 1]]).as_slice());
        assert_eq!(c.c0(), &[Scalar::int(0), Scalar::int(0)]);
    }

    #[test]
    fn rank_deficient() {
        let h = HLData::new(vec![Twist::one(); 2], ints(&[&[1, 1], &[2, 2], &[1, 1]]), vec![Scalar::one(); 3]).unwrap();
        assert!(matches!(solve_c_matrix(&h), Err(Error::Parameter(_))));
    }

    #[test]
    fn a2_matches_mt2() {
        let p = vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)], vec![rat_int(1), rat_int(1)]];
        let (h, c) = root_system_rank2_data(&p, vec![Twist::one(); 2]).unwrap();
        assert_eq!(h, mt2_data());
        assert_eq!(c, mt2_cmatrix(Scalar::zero(), Scalar::zero()));
        let bad = vec![vec![rat_int(1), rat_int(1)], vec![rat_int(0), rat_int(1)]];
        assert!(root_system_rank2_data(&bad, vec![Twist::one(); 2]).is_err());
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let h = mt2_data().with_c(mt2_cmatrix(Scalar::int(1), Scalar::int(0)).c().to_vec()).unwrap();
        let j = serde_json::to_string(&h).unwrap();
        let back: HLData = serde_json::from_str(&j).unwrap();
        assert_eq!(back, h);
        let bad = r#"{"d":1,"r":1,"xi":[{"order":1,"power":0}],"gamma":[[1]],"beta":[0]}"#;
        assert!(serde_json::from_str::<HLData>(bad).is_err());
    }
}
