use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::QPoly;
use super::rational::{rat_to_f64, Rational};

pub fn euler_phi(n: u64) -> u64 {
    let (mut m, mut phi, mut p) = (n, n, 2u64);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

fn cyclo_cache() -> &'static Mutex<HashMap<u64, Arc<QPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<QPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial, computed as `(x^n - 1) / prod_{d|n, d<n} Phi_d`.
pub fn cyclotomic_polynomial(n: u64) -> Arc<QPoly> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = cyclo_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = QPoly::monomial(n as usize);
    num = &num - &QPoly::constant(Rational::one());
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = num.div_rem(&cyclotomic_polynomial(d));
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    let p = Arc::new(num);
    cyclo_cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Element of `Q(zeta_n)` in the power basis `1, zeta_n, ..., zeta_n^{phi(n)-1}`.
///
/// Binary operations between elements of different orders lift both operands
/// to `Q(zeta_lcm)` first. Equality is field equality, so `-1` in `Q(zeta_2)`
/// equals `-1` in `Q(zeta_6)`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn from_poly(order: u64, p: &QPoly) -> Self {
        let phi = euler_phi(order) as usize;
        let r = p.rem(&cyclotomic_polynomial(order));
        let coeffs = (0..phi).map(|i| r.coeff(i)).collect();
        CyclotomicNumber { order, coeffs }
    }

    pub fn from_rational(order: u64, q: Rational) -> Self {
        let phi = euler_phi(order) as usize;
        let mut coeffs = vec![Rational::zero(); phi];
        coeffs[0] = q;
        CyclotomicNumber { order, coeffs }
    }

    pub fn rational(q: Rational) -> Self {
        Self::from_rational(1, q)
    }

    pub fn zero(order: u64) -> Self {
        Self::from_rational(order, Rational::zero())
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, Rational::one())
    }

    /// `zeta_n^k` with `zeta_n = exp(2 pi i / n)`.
    pub fn root_of_unity(order: u64, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        Self::from_poly(order, &QPoly::monomial(e))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    /// Re-expresses `self` in `Q(zeta_m)`; requires `order | m`.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m.is_multiple_of(self.order), "cannot lift order {} to {}", self.order, m);
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut v = vec![Rational::zero(); step * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Self::from_poly(m, &QPoly::new(v))
    }

    fn aligned(&self, o: &Self) -> (Self, Self) {
        let m = self.order.lcm(&o.order);
        (self.lift(m), o.lift(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::from_rational(self.order, Rational::one() / q));
        }
        let (g, s, _) = QPoly::ext_gcd(&self.to_poly(), &cyclotomic_polynomial(self.order));
        debug_assert_eq!(g, QPoly::constant(Rational::one()));
        Some(Self::from_poly(self.order, &s))
    }

    /// Galois action `zeta_n -> zeta_n^a`; requires `gcd(a, n) = 1`.
    pub fn galois(&self, a: u64) -> Self {
        assert_eq!(a.gcd(&self.order), 1, "Galois exponent must be a unit");
        let mut acc = QPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (i as u64 * a) % self.order;
                acc = &acc + &QPoly::monomial(e as usize).scale(c);
            }
        }
        Self::from_poly(self.order, &acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        let w = 2.0 * std::f64::consts::PI / self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| Complex64::from_polar(1.0, w * i as f64) * rat_to_f64(c))
            .sum()
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, o: &Self) -> bool {
        if self.order == o.order {
            return self.coeffs == o.coeffs;
        }
        let (a, b) = self.aligned(o);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let z = format!("z{}", self.order);
        write!(f, "{}", self.to_poly().render(&z))
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        if self.order != o.order {
            let (a, b) = self.aligned(o);
            return &a + &b;
        }
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicNumber { order: self.order, coeffs }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        if self.order != o.order {
            let (a, b) = self.aligned(o);
            return &a - &b;
        }
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        CyclotomicNumber { order: self.order, coeffs }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        if self.order != o.order {
            let (a, b) = self.aligned(o);
            return &a * &b;
        }
        if let Some(q) = self.as_rational() {
            return o.scale(&q);
        }
        if let Some(q) = o.as_rational() {
            return self.scale(&q);
        }
        CyclotomicNumber::from_poly(self.order, &(&self.to_poly() * &o.to_poly()))
    }
}

impl Div for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn div(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        self * &o.inverse().expect("division by zero in cyclotomic field")
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl CyclotomicNumber {
    pub fn scale(&self, q: &Rational) -> Self {
        CyclotomicNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, o: CyclotomicNumber) -> CyclotomicNumber { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), QPoly::from_ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), QPoly::from_ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), QPoly::from_ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), QPoly::from_ints(&[1, 0, -1, 0, 1]));
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).degree().unwrap() as u64, euler_phi(n));
        }
    }

    #[test]
    fn i_squared() {
        let i = CyclotomicNumber::root_of_unity(4, 1);
        assert_eq!(&i * &i, CyclotomicNumber::from_rational(4, rat_int(-1)));
        assert_eq!(CyclotomicNumber::root_of_unity(2, 1), CyclotomicNumber::from_rational(6, rat_int(-1)));
        let z3 = CyclotomicNumber::root_of_unity(3, 1);
        assert_eq!(z3.lift(6), CyclotomicNumber::root_of_unity(6, 2));
    }

    #[test]
    fn inverse_of_one_minus_root() {
        let z = CyclotomicNumber::root_of_unity(5, 2);
        let a = &CyclotomicNumber::one(5) - &z;
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        assert!((inv.to_complex() - 1.0 / (1.0 - z.to_complex())).norm() < 1e-12);
        assert_eq!(CyclotomicNumber::rational(rat(2, 3)).inverse().unwrap(), CyclotomicNumber::rational(rat(3, 2)));
    }

    #[test]
    fn galois_moves_roots() {
        let z = CyclotomicNumber::root_of_unity(12, 1);
        assert_eq!(z.galois(5), CyclotomicNumber::root_of_unity(12, 5));
        let r = CyclotomicNumber::from_rational(12, rat(7, 2));
        assert_eq!(r.galois(7), r);
    }
}
