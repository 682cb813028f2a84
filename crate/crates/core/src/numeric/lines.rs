use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::config::EvalConfig;
use super::zeta::riemann_zeta;
use crate::desing::{desing_identity, DesingIdentity, SPoly};
use crate::error::{Error, Result};
use crate::exact::{binomial, rat, rat_int, rat_to_f64, zeta_neg, QPoly, Rational};
use crate::models::ez_data;

/// A function of one variable `s` of the form `sum_a P_a(s) zeta(s + a)`
/// with rational polynomials `P_a`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ZetaLine {
    terms: BTreeMap<i64, QPoly>,
}

/// Exact value `q_0 + sum_k q_k zeta(k)` with `k >= 2`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MixedValue {
    pub rational: Rational,
    pub zetas: BTreeMap<u64, Rational>,
}

impl MixedValue {
    fn add_zeta(&mut self, k: u64, q: Rational) {
        let e = self.zetas.entry(k).or_insert_with(Rational::zero);
        *e += q;
        if e.is_zero() {
            self.zetas.remove(&k);
        }
    }

    pub fn from_parts(rational: Rational, zetas: &[(u64, Rational)]) -> Self {
        let mut v = MixedValue { rational, zetas: BTreeMap::new() };
        for (k, q) in zetas {
            v.add_zeta(*k, q.clone());
        }
        v
    }

    pub fn to_f64(&self, cfg: &EvalConfig) -> Result<f64> {
        let mut x = rat_to_f64(&self.rational);
        for (&k, q) in &self.zetas {
            x += rat_to_f64(q) * riemann_zeta(Complex64::new(k as f64, 0.0), cfg)?.re;
        }
        Ok(x)
    }

    pub fn to_json(&self) -> Value {
        let z: Vec<Value> = self.zetas.iter().map(|(k, q)| json!({"k": k, "coeff": q.to_string()})).collect();
        json!({"rational": self.rational.to_string(), "zeta": z})
    }
}

impl fmt::Display for MixedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.rational.is_zero() || self.zetas.is_empty() {
            parts.push(self.rational.to_string());
        }
        for (k, q) in &self.zetas {
            parts.push(if q.is_one() { format!("zeta({k})") } else { format!("({q})*zeta({k})") });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl ZetaLine {
    pub fn new() -> Self {
        ZetaLine::default()
    }

    pub fn terms(&self) -> &BTreeMap<i64, QPoly> {
        &self.terms
    }

    /// Adds `p(s) zeta(s + shift)`.
    pub fn add_term(&mut self, shift: i64, p: QPoly) {
        let e = self.terms.entry(shift).or_insert_with(QPoly::zero);
        *e = &*e + &p;
        if e.is_zero() {
            self.terms.remove(&shift);
        }
    }

    pub fn add(&self, other: &ZetaLine) -> ZetaLine {
        let mut out = self.clone();
        for (a, p) in &other.terms {
            out.add_term(*a, p.clone());
        }
        out
    }

    /// `s -> s + a`.
    pub fn shift(&self, a: i64) -> ZetaLine {
        let mut out = ZetaLine::new();
        for (b, p) in &self.terms {
            out.add_term(b + a, p.shift(&rat_int(a)));
        }
        out
    }

    pub fn mul_poly(&self, q: &QPoly) -> ZetaLine {
        let mut out = ZetaLine::new();
        for (a, p) in &self.terms {
            out.add_term(*a, p * q);
        }
        out
    }

    pub fn eval_complex(&self, s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&a, p) in &self.terms {
            let w = s + a as f64;
            if w == Complex64::new(1.0, 0.0) {
                if p.eval_complex(s).norm() != 0.0 {
                    return Err(Error::Pole(format!("zeta(s{a:+}) at s = {s}")));
                }
                acc += p.derivative().eval_complex(s);
            } else {
                acc += p.eval_complex(s) * riemann_zeta(w, cfg)?;
            }
        }
        Ok(acc)
    }

    /// Exact value at the integer `n`; a term `P(s) zeta(s + a)` with
    /// `n + a = 1` contributes its limit `P'(n)` when `P(n) = 0`.
    pub fn eval_integer(&self, n: i64) -> Result<MixedValue> {
        let mut v = MixedValue::default();
        let x = rat_int(n);
        for (&a, p) in &self.terms {
            let w = n + a;
            let pv = p.eval(&x);
            if w == 1 {
                if !pv.is_zero() {
                    return Err(Error::Pole(format!("zeta(s{a:+}) at s = {n}")));
                }
                v.rational += p.derivative().eval(&x);
            } else if w <= 0 {
                v.rational += pv * zeta_neg((-w) as usize);
            } else {
                v.add_zeta(w as u64, pv);
            }
        }
        Ok(v)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> =
            self.terms.iter().map(|(a, p)| format!("({})*zeta(s{})", p.render("s"), shift_str(*a))).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for ZetaLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn shift_str(a: i64) -> String {
    match a {
        0 => String::new(),
        a if a > 0 => format!(" + {a}"),
        a => format!(" - {}", -a),
    }
}

fn q(c: Rational) -> QPoly {
    QPoly::constant(c)
}

fn lin(a: i64) -> QPoly {
    QPoly::linear(rat_int(a))
}

fn binom_q(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

fn zneg(k: i64) -> Rational {
    zeta_neg(k as usize)
}

/// `zeta_2(s, -N)` as a function of `s`.
pub fn zeta2_second_neg(n: u32) -> ZetaLine {
    let n = n as i64;
    let mut l = ZetaLine::new();
    l.add_term(-n - 1, q(rat(-1, n + 1)));
    for k in 0..=n {
        l.add_term(-n + k, q(binom_q(n as u64, k as u64) * zneg(k)));
    }
    l
}

/// `zeta_2(-N, s)` as a function of `s`.
pub fn zeta2_first_neg(n: u32) -> ZetaLine {
    let n = n as i64;
    let mut l = ZetaLine::new();
    l.add_term(-n - 1, q(rat(1, n + 1)));
    for k in 0..=n {
        l.add_term(-n + k, q(-binom_q(n as u64, k as u64) * zneg(k)));
    }
    l.add_term(0, q(zneg(n)));
    l.add_term(-n, q(-Rational::one()));
    l
}

/// Desingularized double zeta on `s2 = -N`, closed form.
pub fn des_second_neg(n: u32) -> ZetaLine {
    let n = n as i64;
    let mut l = ZetaLine::new();
    for k in 0..=n {
        let c = -binom_q(n as u64, k as u64) * rat_int(k + 1) * zneg(k);
        l.add_term(-n + k, lin(-n + k - 1).scale(&c));
    }
    l
}

/// Desingularized double zeta on `s1 = -N`, closed form.
pub fn des_first_neg(n: u32) -> ZetaLine {
    let n = n as i64;
    let mut l = ZetaLine::new();
    let lead = &lin(-n - 3) * &lin(-n - 2);
    l.add_term(-n - 1, lead.scale(&rat(1, (n + 3) * (n + 2))));
    for k in 0..=n + 1 {
        // (k s + N - k + 2)(s - N + k - 1)
        let a = QPoly::new(vec![rat_int(n - k + 2), rat_int(k)]);
        let c = binom_q((n + 2) as u64, k as u64) * zneg(k) / rat_int(n + 2);
        l.add_term(-n + k, (&a * &lin(-n + k - 1)).scale(&c));
    }
    l.add_term(0, lin(-1).scale(&(-rat_int(n + 1) * zneg(n))));
    l.add_term(1, (&QPoly::x() * &lin(n + 1)).scale(&zneg(n + 1)));
    l.add_term(-n, lin(-n - 1));
    l
}

/// Restriction of a two-variable polynomial to `s_fixed = v`, together with
/// its derivative in `s_fixed`, as polynomials in the free variable.
fn restrict(p: &SPoly, fixed: usize, v: &Rational) -> Result<(QPoly, QPoly)> {
    let free = 1 - fixed;
    let (mut val, mut der) = (QPoly::zero(), QPoly::zero());
    for (e, c) in p.terms() {
        let c =
            c.as_exact().ok_or_else(|| Error::Parameter("substitution needs rational coefficients".into()))?.clone();
        let pow = |k: u32| (0..k).fold(Rational::one(), |acc, _| acc * v);
        let mono = QPoly::monomial(e[free] as usize);
        val = &val + &mono.scale(&(c.clone() * pow(e[fixed])));
        if e[fixed] > 0 {
            der = &der + &mono.scale(&(c * rat_int(e[fixed] as i64) * pow(e[fixed] - 1)));
        }
    }
    Ok((val, der))
}

/// Puts `s_fixed = -N` into a depth-two Euler–Zagier desingularization
/// identity and replaces each `zeta_2` by its line. A term whose second
/// argument lands on the pole `s2 = 1` must have a coefficient vanishing
/// there; its limit is the `s2`-derivative of the coefficient times the
/// residue `zeta(s1)`.
pub fn des_line_by_substitution(id: &DesingIdentity, fixed: usize, n: u32) -> Result<ZetaLine> {
    if id.base != ez_data(2) || fixed > 1 {
        return Err(Error::Unsupported("line substitution is implemented for the depth-two Euler–Zagier case".into()));
    }
    let v = rat_int(-(n as i64));
    let mut out = ZetaLine::new();
    for (m, p) in id.grouped() {
        let (val, der) = restrict(&p, fixed, &v)?;
        let (a, b) = (m[0] as i64, m[1] as i64);
        if fixed == 1 {
            let y = -(n as i64) + b;
            if y == 1 {
                if !val.is_zero() {
                    return Err(Error::Consistency(format!("coefficient of shift {m:?} does not vanish at the pole")));
                }
                out.add_term(a, der);
            } else if val.is_zero() {
                continue;
            } else if y <= 0 {
                out = out.add(&zeta2_second_neg((-y) as u32).shift(a).mul_poly(&val));
            } else {
                return Err(Error::Unsupported(format!("zeta_2(s, {y}) is not a zeta line")));
            }
        } else {
            let x = -(n as i64) + a;
            if val.is_zero() {
                continue;
            }
            if x > 0 {
                return Err(Error::Unsupported(format!("zeta_2({x}, s) is not a zeta line")));
            }
            out = out.add(&zeta2_first_neg((-x) as u32).shift(b).mul_poly(&val));
        }
    }
    Ok(out)
}

fn ez2_identity() -> DesingIdentity {
    let data = ez_data(2);
    let c = data.cmatrix().expect("Euler–Zagier data has a c-matrix");
    desing_identity(&data, &c)
}

/// `zeta^des(s, -N)` by substitution into the desingularization identity.
pub fn des_second_neg_by_substitution(n: u32) -> ZetaLine {
    des_line_by_substitution(&ez2_identity(), 1, n).expect("Euler–Zagier substitution")
}

/// `zeta^des(-N, s)` by substitution into the desingularization identity.
pub fn des_first_neg_by_substitution(n: u32) -> ZetaLine {
    des_line_by_substitution(&ez2_identity(), 0, n).expect("Euler–Zagier substitution")
}
