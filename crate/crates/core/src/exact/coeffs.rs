use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cyclotomic::CyclotomicNumber;
use super::rational::{binomial, rat_int, Rational};
use super::series::PowerSeries;
use crate::error::{Error, Result};

type Key = (u64, Vec<Rational>);

fn key(xi: &CyclotomicNumber) -> Key {
    (xi.order(), xi.coeffs().to_vec())
}

fn bernoulli_table() -> &'static Mutex<Vec<Rational>> {
    static T: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// `B_n` in the convention `y/(e^y - 1) = sum B_n y^n/n!`, so `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    let mut t = bernoulli_table().lock().unwrap();
    while t.len() <= n {
        let m = t.len();
        if m > 1 && m % 2 == 1 {
            t.push(Rational::zero());
            continue;
        }
        let s = (0..m)
            .fold(Rational::zero(), |acc, k| acc + &t[k] * Rational::from_integer(binomial(m as u64 + 1, k as u64)));
        t.push(-s / rat_int(m as i64 + 1));
    }
    t[n].clone()
}

/// `zeta(-k)` of the analytic continuation: `-1/2` at `k = 0`, else
/// `-B_{k+1}/(k+1)`.
pub fn zeta_neg(k: usize) -> Rational {
    if k == 0 {
        return Rational::new(BigInt::from(-1), BigInt::from(2));
    }
    -bernoulli(k + 1) / rat_int(k as i64 + 1)
}

fn lerch_table() -> &'static Mutex<HashMap<Key, Vec<CyclotomicNumber>>> {
    static T: OnceLock<Mutex<HashMap<Key, Vec<CyclotomicNumber>>>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficient of `t^k/k!` in `1/(1 - xi e^t)`; the constant term is
/// `1/(1 - xi)`.
///
/// Uses `(1 - xi) f_k = xi * sum_{j=1}^k C(k,j) f_{k-j}`.
pub fn lerch_neg_coeff(k: usize, xi: &CyclotomicNumber) -> Result<CyclotomicNumber> {
    if xi.is_one() {
        return Err(Error::UseZetaPath);
    }
    let kx = key(xi);
    let mut seq = {
        let tab = lerch_table().lock().unwrap();
        match tab.get(&kx) {
            Some(seq) if seq.len() > k => return Ok(seq[k].clone()),
            Some(seq) => seq.clone(),
            None => Vec::new(),
        }
    };
    let one = CyclotomicNumber::one(xi.order());
    let inv = (&one - xi).inverse().expect("xi != 1");
    let ratio = xi * &inv;
    if seq.is_empty() {
        seq.push(inv);
    }
    while seq.len() <= k {
        let m = seq.len();
        let mut acc = CyclotomicNumber::zero(xi.order());
        for j in 1..=m {
            acc = &acc + &seq[m - j].scale(&Rational::from_integer(binomial(m as u64, j as u64)));
        }
        seq.push(&ratio * &acc);
    }
    let v = seq[k].clone();
    let mut tab = lerch_table().lock().unwrap();
    let e = tab.entry(kx).or_default();
    if e.len() < seq.len() {
        *e = seq;
    }
    drop(tab);
    Ok(v)
}

/// Analytic Lerch value `phi(-k, xi) = sum_{m>=1} xi^m m^k` (continued):
/// `zeta(-k)` for `xi = 1`, otherwise [`lerch_neg_coeff`] minus `[k = 0]`.
pub fn lerch_neg_analytic(k: usize, xi: &CyclotomicNumber) -> CyclotomicNumber {
    if xi.is_one() {
        return CyclotomicNumber::from_rational(xi.order(), zeta_neg(k));
    }
    let c = lerch_neg_coeff(k, xi).expect("xi != 1");
    if k == 0 {
        &c - &CyclotomicNumber::one(xi.order())
    } else {
        c
    }
}

/// Frobenius–Euler number `H_k(xi^{-1}) = (1 - xi) phi(-k, xi)`.
pub fn frobenius_euler(k: usize, xi: &CyclotomicNumber) -> Result<CyclotomicNumber> {
    if xi.is_one() {
        return Err(Error::Parameter("Frobenius-Euler number undefined at xi = 1".into()));
    }
    let c = lerch_neg_coeff(k, xi)?;
    Ok(&(&CyclotomicNumber::one(xi.order()) - xi) * &c)
}

fn series_table() -> &'static Mutex<HashMap<Key, Vec<CyclotomicNumber>>> {
    static T: OnceLock<Mutex<HashMap<Key, Vec<CyclotomicNumber>>>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(HashMap::new()))
}

fn f_series(order: usize, xi: &CyclotomicNumber) -> Vec<CyclotomicNumber> {
    let n = xi.order();
    if xi.is_one() {
        // F_1(y) = 1/(e^y-1) - y e^y/(e^y-1)^2 = ((E - e^y)/y) / E^2, E = (e^y-1)/y.
        let e = PowerSeries::exp_scaled(&Rational::one(), order + 2);
        let big_e = (&e - &PowerSeries::constant(Rational::one(), order + 2)).shift_down();
        let num = (&big_e - &e.truncate(order + 1)).shift_down();
        let den = &big_e.truncate(order) * &big_e.truncate(order);
        let f = num.div(&den).expect("E(0) = 1");
        (0..=order).map(|k| CyclotomicNumber::from_rational(n, f.egf_coeff(k))).collect()
    } else {
        let e = PowerSeries::exp_scaled(&CyclotomicNumber::one(n), order);
        let den = &e - &PowerSeries::constant(xi.clone(), order);
        let f = PowerSeries::constant(CyclotomicNumber::one(n), order).div(&den).expect("1 - xi != 0");
        (0..=order).map(|k| f.egf_coeff(k)).collect()
    }
}

/// `F^n_delta(xi)` obtained purely by expanding `1/(e^y - xi)` (with the
/// `delta = 1` correction at `xi = 1`) as a power series.
pub fn f_delta_coeff_by_series(n: usize, xi: &CyclotomicNumber) -> CyclotomicNumber {
    let mut tab = series_table().lock().unwrap();
    let seq = tab.entry(key(xi)).or_default();
    if seq.len() <= n {
        *seq = f_series((n + 1).max(2 * seq.len()), xi);
    }
    seq[n].clone()
}

/// Taylor coefficient `F^n_delta(xi)` of `F_delta(y, xi)` with
/// `delta = [xi = 1]`: `B_{n+1}` at `xi = 1`, otherwise
/// `H_n(xi)/(1 - xi)`.
///
/// The closed form is checked against the series expansion on every call;
/// disagreement is reported as [`Error::Consistency`].
pub fn f_delta_coeff(n: usize, xi: &CyclotomicNumber) -> Result<CyclotomicNumber> {
    let closed = if xi.is_one() {
        CyclotomicNumber::from_rational(xi.order(), bernoulli(n + 1))
    } else {
        let one = CyclotomicNumber::one(xi.order());
        let xi_inv = xi.inverse().ok_or_else(|| Error::Parameter("xi = 0".into()))?;
        // H_n(xi) = frobenius_euler(n, xi^{-1}).
        let h = frobenius_euler(n, &xi_inv)?;
        &h / &(&one - xi)
    };
    let series = f_delta_coeff_by_series(n, xi);
    if closed != series {
        return Err(Error::Consistency(format!("F^{n}({xi}): closed form {closed} != series {series}")));
    }
    Ok(closed)
}
