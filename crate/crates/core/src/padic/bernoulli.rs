use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{binomial, lerch_neg_coeff, CyclotomicNumber, Rational};

/// Index `(n_1..n_r)` and twists `(xi_1..xi_r)` of a twisted multiple
/// Bernoulli number.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedBernoulliKey {
    pub n: Vec<u32>,
    pub xi: Vec<CyclotomicNumber>,
}

type CacheKey = (Vec<u32>, u64, Vec<Vec<Rational>>);

fn cache() -> &'static RwLock<HashMap<CacheKey, CyclotomicNumber>> {
    static C: OnceLock<RwLock<HashMap<CacheKey, CyclotomicNumber>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

impl TwistedBernoulliKey {
    fn common_order(&self) -> u64 {
        self.xi.iter().fold(1u64, |acc, x| acc.lcm(&x.order()))
    }

    fn canonical(&self) -> (u64, Vec<CyclotomicNumber>, CacheKey) {
        let order = self.common_order();
        let xi: Vec<CyclotomicNumber> = self.xi.iter().map(|x| x.lift(order)).collect();
        let coeffs = xi.iter().map(|x| x.coeffs().to_vec()).collect();
        (order, xi, (self.n.clone(), order, coeffs))
    }
}

/// Coefficient of `prod t_j^{n_j} / n_j!` in
/// `xi_1 e^{y_1} / (1 - xi_1 e^{y_1}) * prod_{j >= 2} 1 / (1 - xi_j e^{y_j})`
/// with `y_j = t_j + ... + t_r`.
///
/// Each factor is expanded in its own variable `y_j` (its coefficients are
/// Lerch values at non-positive integers), and the powers of `y_j` are then
/// distributed multinomially over `t_j..t_r`. Results are memoized.
pub fn twisted_multi_bernoulli(key: &TwistedBernoulliKey) -> Result<CyclotomicNumber> {
    let r = key.n.len();
    if r == 0 || key.xi.len() != r {
        return Err(Error::Parameter("index and twist vectors must have the same positive length".into()));
    }
    if let Some(j) = key.xi.iter().position(|x| x.is_one()) {
        return Err(Error::Parameter(format!("twist xi_{} = 1 makes its factor degenerate", j + 1)));
    }
    let (order, xi, ck) = key.canonical();
    if let Some(v) = cache().read().unwrap().get(&ck) {
        return Ok(v.clone());
    }
    let total: u32 = key.n.iter().sum();
    let mut a: Vec<Vec<CyclotomicNumber>> = Vec::with_capacity(r);
    for (j, x) in xi.iter().enumerate() {
        let mut row = (0..=total).map(|k| lerch_neg_coeff(k as usize, x)).collect::<Result<Vec<_>>>()?;
        if j == 0 {
            row[0] = &row[0] - &CyclotomicNumber::one(order);
        }
        a.push(row.into_iter().map(|c| c.lift(order)).collect());
    }
    let v = distribute(&a, 0, &key.n, order);
    cache().write().unwrap().insert(ck, v.clone());
    Ok(v)
}

/// Sum over the share `e` of factor `j` (all of `t_j`, any part of `t_nu`
/// for `nu > j`) of `a_{j,|e|} * prod_nu C(rem_nu, e_nu)` times the rest.
fn distribute(a: &[Vec<CyclotomicNumber>], j: usize, rem: &[u32], order: u64) -> CyclotomicNumber {
    let r = rem.len();
    if j == r {
        return CyclotomicNumber::one(order);
    }
    let mut e: Vec<u32> = rem.to_vec();
    for x in e.iter_mut().skip(j + 1) {
        *x = 0;
    }
    let mut acc = CyclotomicNumber::zero(order);
    loop {
        let deg: u32 = e[j..].iter().sum();
        let mut w = Rational::one();
        for nu in j + 1..r {
            w *= Rational::from_integer(binomial(rem[nu] as u64, e[nu] as u64));
        }
        let next: Vec<u32> = (0..r).map(|nu| if nu < j { 0 } else { rem[nu] - e[nu] }).collect();
        let tail = distribute(a, j + 1, &next, order);
        acc = &acc + &(&a[j][deg as usize] * &tail).scale(&w);
        // Odometer over e_{j+1..r}.
        let mut nu = j + 1;
        loop {
            if nu >= r {
                return acc;
            }
            if e[nu] < rem[nu] {
                e[nu] += 1;
                break;
            }
            e[nu] = 0;
            nu += 1;
        }
    }
}
