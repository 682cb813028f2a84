use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::laurent::{LaurentSeriesPoly, SPoly};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::models::{CMatrix, HLData, Scalar};

/// `G(u, v) = prod_{k: xi_k = 1} (1 - (c_k0 + sum_j c_kj v_j^{-1}) (sum_j gamma_jk u_j v_j))`.
pub fn generating_function(data: &HLData, c: &CMatrix) -> LaurentSeriesPoly {
    let d = data.d();
    let mut g = LaurentSeriesPoly::constant(d, Scalar::one());
    for k in 0..data.r() {
        if !data.delta(k) {
            continue;
        }
        let mut a = LaurentSeriesPoly::constant(d, c.c0()[k].clone());
        let mut b = LaurentSeriesPoly::zero(d);
        for j in 0..d {
            let mut m = vec![0; d];
            m[j] = -1;
            a = &a + &LaurentSeriesPoly::monomial(d, vec![0; d], m, c.c()[k][j].clone());
            let mut l = vec![0; d];
            l[j] = 1;
            let mut m = vec![0; d];
            m[j] = 1;
            b = &b + &LaurentSeriesPoly::monomial(d, l, m, data.gamma()[j][k].clone());
        }
        let factor = &LaurentSeriesPoly::constant(d, Scalar::one()) - &(&a * &b);
        g = &g * &factor;
    }
    g
}

/// One summand `alpha * prod_j (s_j)_{l_j} * zeta(s + m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdTerm {
    pub alpha: Scalar,
    pub l: Vec<u32>,
    pub m: Vec<i32>,
}

impl IdTerm {
    /// `alpha * prod_j (s_j)_{l_j}` expanded.
    pub fn coefficient(&self) -> SPoly {
        let d = self.l.len();
        let mut p = SPoly::constant(d, self.alpha.clone());
        for (j, &lj) in self.l.iter().enumerate() {
            p = &p * &SPoly::pochhammer(d, j, lj);
        }
        p
    }
}

/// `zeta^des(s) = sum_terms alpha * prod_j (s_j)_{l_j} * zeta(s + m)` over
/// the base data. Terms are ordered lexicographically by `(m, l)`.
///
/// The same shape also carries linear relations whose right-hand side is 0
/// (see [`super::trivial_relation_terms`]).
#[derive(Clone, Debug, PartialEq)]
pub struct DesingIdentity {
    pub base: HLData,
    pub terms: Vec<IdTerm>,
}

/// Reads off the identity from the monomials of `G`: `u^l -> (s)_l`,
/// `v^m -> shift by m`.
pub fn desing_identity(data: &HLData, c: &CMatrix) -> DesingIdentity {
    DesingIdentity::from_poly(data, &generating_function(data, c))
}

impl DesingIdentity {
    pub fn from_poly(data: &HLData, g: &LaurentSeriesPoly) -> Self {
        let mut terms: Vec<IdTerm> =
            g.terms().iter().map(|((l, m), a)| IdTerm { alpha: a.clone(), l: l.clone(), m: m.clone() }).collect();
        terms.sort_by(|x, y| (&x.m, &x.l).cmp(&(&y.m, &y.l)));
        DesingIdentity { base: data.clone(), terms }
    }

    /// Coefficient polynomials in `s` grouped by shift vector.
    pub fn grouped(&self) -> BTreeMap<Vec<i32>, SPoly> {
        let mut out: BTreeMap<Vec<i32>, SPoly> = BTreeMap::new();
        for t in &self.terms {
            let p = t.coefficient();
            let e = out.entry(t.m.clone()).or_insert_with(|| SPoly::zero(t.l.len()));
            *e = &*e + &p;
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    fn shifted_args(m: &[i32], latex: bool) -> String {
        m.iter()
            .enumerate()
            .map(|(j, &k)| {
                let v = if latex { format!("s_{}", j + 1) } else { format!("s{}", j + 1) };
                match k {
                    0 => v,
                    k if k > 0 => format!("{v}+{k}"),
                    k => format!("{v}{k}"),
                }
            })
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Plain-text rendering, one group per shift.
    pub fn render_text(&self) -> String {
        let parts: Vec<String> = self
            .grouped()
            .iter()
            .rev()
            .map(|(m, p)| format!("({})*zeta({})", p.render(false), Self::shifted_args(m, false)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn render_latex(&self) -> String {
        let parts: Vec<String> = self
            .grouped()
            .iter()
            .rev()
            .map(|(m, p)| format!("\\left({}\\right)\\zeta({})", p.render(true), Self::shifted_args(m, true)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms.iter().map(|t| json!({"alpha": alpha_to_json(&t.alpha), "l": t.l, "m": t.m})).collect();
        json!({"base": serde_json::to_value(&self.base).expect("HLData serializes"), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parameter(format!("bad identity JSON: {m}"));
        let base: HLData = serde_json::from_value(v.get("base").cloned().ok_or_else(|| bad("base"))?)
            .map_err(|e| Error::Parameter(e.to_string()))?;
        let mut terms = Vec::new();
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("terms"))? {
            let alpha = alpha_from_json(t.get("alpha").ok_or_else(|| bad("alpha"))?)?;
            let l: Vec<u32> = serde_json::from_value(t.get("l").cloned().ok_or_else(|| bad("l"))?)
                .map_err(|e| Error::Parameter(e.to_string()))?;
            let m: Vec<i32> = serde_json::from_value(t.get("m").cloned().ok_or_else(|| bad("m"))?)
                .map_err(|e| Error::Parameter(e.to_string()))?;
            if l.len() != base.d() || m.len() != base.d() {
                return Err(bad("term length differs from d"));
            }
            terms.push(IdTerm { alpha, l, m });
        }
        Ok(DesingIdentity { base, terms })
    }
}

fn int_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| Error::Parameter("bad integer".into())),
        Value::String(s) => s.parse().map_err(|_| Error::Parameter("bad integer".into())),
        _ => Err(Error::Parameter("bad integer".into())),
    }
}

/// `{num, den}` for exact values, `{re, im}` otherwise.
pub fn alpha_to_json(a: &Scalar) -> Value {
    match a {
        Scalar::Exact(q) => json!({"num": int_json(q.numer()), "den": int_json(q.denom())}),
        Scalar::Complex(z) => json!({"re": z.re, "im": z.im}),
    }
}

pub fn alpha_from_json(v: &Value) -> Result<Scalar> {
    if let (Some(n), Some(d)) = (v.get("num"), v.get("den")) {
        return Ok(Scalar::Exact(Rational::new(int_from_json(n)?, int_from_json(d)?)));
    }
    crate::models::scalar_from_json(v)
}
