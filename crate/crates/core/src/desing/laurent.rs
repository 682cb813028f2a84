use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use crate::models::Scalar;

/// Exponent pair: non-negative powers of `u_1..u_d`, integer powers of
/// `v_1..v_d`.
pub type Monomial = (Vec<u32>, Vec<i32>);

/// Polynomial in `u_1..u_d` and Laurent polynomial in `v_1..v_d`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeriesPoly {
    d: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl LaurentSeriesPoly {
    pub fn zero(d: usize) -> Self {
        LaurentSeriesPoly { d, terms: BTreeMap::new() }
    }

    pub fn constant(d: usize, c: Scalar) -> Self {
        let mut p = Self::zero(d);
        p.add_term((vec![0; d], vec![0; d]), c);
        p
    }

    /// `c * u^l * v^m`.
    pub fn monomial(d: usize, l: Vec<u32>, m: Vec<i32>, c: Scalar) -> Self {
        assert_eq!(l.len(), d);
        assert_eq!(m.len(), d);
        let mut p = Self::zero(d);
        p.add_term((l, m), c);
        p
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, l: &[u32], m: &[i32]) -> Scalar {
        self.terms.get(&(l.to_vec(), m.to_vec())).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, mono: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mono.clone()).or_insert_with(Scalar::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut p = Self::zero(self.d);
        for (k, v) in &self.terms {
            p.add_term(k.clone(), v * c);
        }
        p
    }

    /// Largest total degree in the `u` variables.
    pub fn u_degree(&self) -> u32 {
        self.terms.keys().map(|(l, _)| l.iter().sum()).max().unwrap_or(0)
    }
}

impl Add for &LaurentSeriesPoly {
    type Output = LaurentSeriesPoly;
    fn add(self, o: &LaurentSeriesPoly) -> LaurentSeriesPoly {
        let mut p = self.clone();
        for (k, v) in &o.terms {
            p.add_term(k.clone(), v.clone());
        }
        p
    }
}

impl Sub for &LaurentSeriesPoly {
    type Output = LaurentSeriesPoly;
    fn sub(self, o: &LaurentSeriesPoly) -> LaurentSeriesPoly {
        let mut p = self.clone();
        for (k, v) in &o.terms {
            p.add_term(k.clone(), -v);
        }
        p
    }
}

impl Mul for &LaurentSeriesPoly {
    type Output = LaurentSeriesPoly;
    fn mul(self, o: &LaurentSeriesPoly) -> LaurentSeriesPoly {
        let mut p = LaurentSeriesPoly::zero(self.d);
        for ((l1, m1), a) in &self.terms {
            for ((l2, m2), b) in &o.terms {
                let l = l1.iter().zip(l2).map(|(x, y)| x + y).collect();
                let m = m1.iter().zip(m2).map(|(x, y)| x + y).collect();
                p.add_term((l, m), a * b);
            }
        }
        p
    }
}

/// Polynomial in `s_1..s_d` with [`Scalar`] coefficients, keyed by exponent
/// vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct SPoly {
    d: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl SPoly {
    pub fn zero(d: usize) -> Self {
        SPoly { d, terms: BTreeMap::new() }
    }

    pub fn constant(d: usize, c: Scalar) -> Self {
        let mut p = Self::zero(d);
        p.add_term(vec![0; d], c);
        p
    }

    /// The variable `s_j` (0-based `j`).
    pub fn var(d: usize, j: usize) -> Self {
        let mut e = vec![0; d];
        e[j] = 1;
        let mut p = Self::zero(d);
        p.add_term(e, Scalar::one());
        p
    }

    /// `s_j + c`.
    pub fn var_plus(d: usize, j: usize, c: i64) -> Self {
        &Self::var(d, j) + &Self::constant(d, Scalar::int(c))
    }

    /// Rising factorial `(s_j)_l = s_j (s_j + 1) ... (s_j + l - 1)`.
    pub fn pochhammer(d: usize, j: usize, l: u32) -> Self {
        (0..l).fold(Self::constant(d, Scalar::one()), |acc, i| &acc * &Self::var_plus(d, j, i as i64))
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(e.clone()).or_insert_with(Scalar::zero);
        *v = &*v + &c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut p = Self::zero(self.d);
        for (k, v) in &self.terms {
            p.add_term(k.clone(), v * c);
        }
        p
    }

    pub fn eval(&self, s: &[num_complex::Complex64]) -> num_complex::Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().enumerate().fold(c.to_complex(), |acc, (j, &k)| acc * s[j].powu(k)))
            .sum()
    }

    pub fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    let v = if latex { format!("s_{}", j + 1) } else { format!("s{}", j + 1) };
                    if k == 1 {
                        v
                    } else if latex {
                        format!("{v}^{{{k}}}")
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            let (neg, mag) = match c {
                Scalar::Exact(q) if q < &num_traits::Zero::zero() => (true, Scalar::Exact(-q)),
                _ => (false, c.clone()),
            };
            out.push_str(if out.is_empty() {
                if neg {
                    "-"
                } else {
                    ""
                }
            } else if neg {
                " - "
            } else {
                " + "
            });
            let sep = if latex { " " } else { "*" };
            let coef = match &mag {
                Scalar::Exact(q) if latex && !q.is_integer() => format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom()),
                Scalar::Complex(_) => format!("({mag})"),
                _ => mag.to_string(),
            };
            if mono.is_empty() {
                out.push_str(&coef);
            } else if mag == Scalar::one() {
                out.push_str(&mono.join(sep));
            } else {
                out.push_str(&format!("{coef}{sep}{}", mono.join(sep)));
            }
        }
        out
    }
}

impl Add for &SPoly {
    type Output = SPoly;
    fn add(self, o: &SPoly) -> SPoly {
        let mut p = self.clone();
        for (k, v) in &o.terms {
            p.add_term(k.clone(), v.clone());
        }
        p
    }
}

impl Sub for &SPoly {
    type Output = SPoly;
    fn sub(self, o: &SPoly) -> SPoly {
        let mut p = self.clone();
        for (k, v) in &o.terms {
            p.add_term(k.clone(), -v);
        }
        p
    }
}

impl Mul for &SPoly {
    type Output = SPoly;
    fn mul(self, o: &SPoly) -> SPoly {
        let mut p = SPoly::zero(self.d);
        for (e1, a) in &self.terms {
            for (e2, b) in &o.terms {
                p.add_term(e1.iter().zip(e2).map(|(x, y)| x + y).collect(), a * b);
            }
        }
        p
    }
}
