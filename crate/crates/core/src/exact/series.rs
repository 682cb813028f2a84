use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::cyclotomic::CyclotomicNumber;
use super::rational::{factorial, Rational};

/// Minimal exact field interface used by [`PowerSeries`].
pub trait Field: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_el(&self) -> bool;
    fn add_el(&self, o: &Self) -> Self;
    fn sub_el(&self, o: &Self) -> Self;
    fn mul_el(&self, o: &Self) -> Self;
    fn inv_el(&self) -> Option<Self>;
    fn scale_q(&self, q: &Rational) -> Self;
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_el(&self) -> bool {
        self.is_zero()
    }
    fn add_el(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_el(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_el(&self, o: &Self) -> Self {
        self * o
    }
    fn inv_el(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational::one() / self)
    }
    fn scale_q(&self, q: &Rational) -> Self {
        self * q
    }
}

impl Field for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        CyclotomicNumber::zero(self.order())
    }
    fn one_like(&self) -> Self {
        CyclotomicNumber::one(self.order())
    }
    fn is_zero_el(&self) -> bool {
        self.is_zero()
    }
    fn add_el(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_el(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_el(&self, o: &Self) -> Self {
        self * o
    }
    fn inv_el(&self) -> Option<Self> {
        self.inverse()
    }
    fn scale_q(&self, q: &Rational) -> Self {
        self.scale(q)
    }
}

/// Truncated univariate power series `sum_{n<=N} a_n y^n` (ordinary, not
/// exponential, coefficients).
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> PowerSeries<F> {
    /// Series with the given coefficients; the truncation order is `len - 1`.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        PowerSeries { coeffs }
    }

    pub fn constant(c: F, order: usize) -> Self {
        let z = c.zero_like();
        let mut v = vec![z; order + 1];
        v[0] = c;
        PowerSeries { coeffs: v }
    }

    /// `exp(y)` truncated at `order`, scaled by `c`.
    pub fn exp_scaled(c: &F, order: usize) -> Self {
        let coeffs = (0..=order).map(|n| c.scale_q(&Rational::new(1.into(), factorial(n as u64)))).collect();
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &F {
        &self.coeffs[n]
    }

    /// `n! * a_n`, the coefficient of `y^n / n!`.
    pub fn egf_coeff(&self, n: usize) -> F {
        self.coeffs[n].scale_q(&Rational::from_integer(factorial(n as u64)))
    }

    /// Drops the constant term and divides by `y`; the order drops by one.
    pub fn shift_down(&self) -> Self {
        assert!(self.order() >= 1);
        PowerSeries { coeffs: self.coeffs[1..].to_vec() }
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Quotient `self / d`; `None` if the constant term of `d` is zero.
    pub fn div(&self, d: &Self) -> Option<Self> {
        let n = self.order().min(d.order());
        let inv0 = d.coeffs[0].inv_el()?;
        let mut q: Vec<F> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc = acc.sub_el(&d.coeffs[j].mul_el(&q[k - j]));
            }
            q.push(acc.mul_el(&inv0));
        }
        Some(PowerSeries { coeffs: q })
    }
}

impl<F: Field> Add for &PowerSeries<F> {
    type Output = PowerSeries<F>;
    fn add(self, o: &PowerSeries<F>) -> PowerSeries<F> {
        let n = self.order().min(o.order());
        PowerSeries { coeffs: (0..=n).map(|i| self.coeffs[i].add_el(&o.coeffs[i])).collect() }
    }
}

impl<F: Field> Sub for &PowerSeries<F> {
    type Output = PowerSeries<F>;
    fn sub(self, o: &PowerSeries<F>) -> PowerSeries<F> {
        let n = self.order().min(o.order());
        PowerSeries { coeffs: (0..=n).map(|i| self.coeffs[i].sub_el(&o.coeffs[i])).collect() }
    }
}

impl<F: Field> Neg for &PowerSeries<F> {
    type Output = PowerSeries<F>;
    fn neg(self) -> PowerSeries<F> {
        let z = self.coeffs[0].zero_like();
        PowerSeries { coeffs: self.coeffs.iter().map(|c| z.sub_el(c)).collect() }
    }
}

impl<F: Field> Mul for &PowerSeries<F> {
    type Output = PowerSeries<F>;
    fn mul(self, o: &PowerSeries<F>) -> PowerSeries<F> {
        let n = self.order().min(o.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(self.coeffs[0].zero_like(), |acc, i| {
                    if self.coeffs[i].is_zero_el() {
                        acc
                    } else {
                        acc.add_el(&self.coeffs[i].mul_el(&o.coeffs[k - i]))
                    }
                })
            })
            .collect();
        PowerSeries { coeffs }
    }
}
