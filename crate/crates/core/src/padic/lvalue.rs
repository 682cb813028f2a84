use num_traits::{One, Zero};
use serde::Serialize;

use super::bernoulli::{twisted_multi_bernoulli, TwistedBernoulliKey};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, rat_int, CyclotomicNumber, Rational};
use crate::par;

/// Evaluation point `(-n_1, ..., -n_r)` with auxiliary `c` and prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PadicLRequest {
    pub n: Vec<u32>,
    pub c: u64,
    pub p: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PadicLValue {
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    pub terms_enumerated: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KlCheck {
    pub n: u32,
    pub c: u64,
    pub p: u64,
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
    pub holds: bool,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Rational", 2)?;
    st.serialize_field("num", &q.numer().to_string())?;
    st.serialize_field("den", &q.denom().to_string())?;
    st.end()
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl PadicLRequest {
    pub fn validate(&self) -> Result<()> {
        if self.n.is_empty() {
            return Err(Error::Parameter("depth r must be at least 1".into()));
        }
        if self.c < 2 {
            return Err(Error::Parameter(format!("c = {} must exceed 1", self.c)));
        }
        if !is_prime(self.p) {
            return Err(Error::Parameter(format!("p = {} is not prime", self.p)));
        }
        if self.c.is_multiple_of(self.p) {
            return Err(Error::Parameter(format!("p = {} divides c = {}", self.p, self.c)));
        }
        Ok(())
    }
}

/// One term of the enumeration: `d = |subset|` and the twists as exponents of
/// a primitive `cp`-th root of unity.
struct Term {
    d: usize,
    exps: Vec<u64>,
}

fn enumerate(r: usize, c: u64, p: u64) -> Vec<Term> {
    let order = c * p;
    let mut out = Vec::new();
    let xi_tuples = tuples(r, 1, c);
    for mask in 0u32..(1 << r) {
        let subset: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
        for rho in tuples(subset.len(), 0, p) {
            for xi in &xi_tuples {
                let exps = (0..r)
                    .map(|j| {
                        let shift: u64 = subset.iter().zip(&rho).filter(|(&i, _)| j <= i).map(|(_, &b)| c * b).sum();
                        (p * xi[j] + shift) % order
                    })
                    .collect();
                out.push(Term { d: subset.len(), exps });
            }
        }
    }
    out
}

/// All tuples of length `len` with entries in `lo..hi`.
fn tuples(len: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (lo..hi).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// The right-hand side of the value formula before projecting to `Q`: a sum
/// over `xi_j^c = 1, xi_j != 1`, subsets `{i_1 < ... < i_d}` and
/// `rho_{i_l}^p = 1`, weighted by `(-1/p)^d`, where the `j`-th twist is
/// `xi_j` times every `rho_{i_l}` with `j <= i_l`. Returns the sum in
/// `Q(zeta_{cp})` and the number of terms.
pub fn padic_l_sum(req: &PadicLRequest, exec: par::Execution) -> Result<(CyclotomicNumber, usize)> {
    req.validate()?;
    let order = req.c * req.p;
    let terms = enumerate(req.n.len(), req.c, req.p);
    let vals = par::map(exec, &terms, |t| {
        if let Some(j) = t.exps.iter().position(|&e| e == 0) {
            return Err(Error::Consistency(format!("twisted argument {} collapsed to 1", j + 1)));
        }
        let xi = t.exps.iter().map(|&e| CyclotomicNumber::root_of_unity(order, e as i64)).collect();
        let b = twisted_multi_bernoulli(&TwistedBernoulliKey { n: req.n.clone(), xi })?;
        Ok((t.d, b))
    });
    let r = req.n.len();
    let mut by_d = vec![CyclotomicNumber::zero(order); r + 1];
    for v in vals {
        let (d, b) = v?;
        by_d[d] = &by_d[d] + &b;
    }
    let mut total = CyclotomicNumber::zero(order);
    let mut w = Rational::one();
    let step = -Rational::new(1.into(), (req.p as i64).into());
    for part in &by_d {
        total = &total + &part.scale(&w);
        w *= &step;
    }
    Ok((total, terms.len()))
}

/// `L_{p,r}(-n_1, ..., -n_r; omega^{n_1}, ..., omega^{n_r}; c)`.
///
/// Fails with a consistency error if the cyclotomic sum is not rational.
pub fn padic_l_nonpos(req: &PadicLRequest, exec: par::Execution) -> Result<PadicLValue> {
    let (v, count) = padic_l_sum(req, exec)?;
    let value =
        v.as_rational().ok_or_else(|| Error::Consistency(format!("p-adic value for {req:?} is not rational: {v}")))?;
    Ok(PadicLValue { value, terms_enumerated: count })
}

/// `(1 - c^{n+1})(1 - p^n) B_{n+1}/(n+1)` for `n > 0`, and `0` for `n = 0`.
pub fn kubota_leopoldt_rhs(n: u32, c: u64, p: u64) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let pow = |b: u64, e: u32| (0..e).fold(Rational::one(), |acc, _| acc * rat_int(b as i64));
    (Rational::one() - pow(c, n + 1)) * (Rational::one() - pow(p, n)) * bernoulli(n as usize + 1)
        / rat_int(n as i64 + 1)
}

/// Compares the depth-one value with the Kubota–Leopoldt closed form.
pub fn kubota_leopoldt_check(n: u32, c: u64, p: u64, exec: par::Execution) -> Result<KlCheck> {
    let req = PadicLRequest { n: vec![n], c, p };
    let lhs = padic_l_nonpos(&req, exec)?.value;
    let rhs = kubota_leopoldt_rhs(n, c, p);
    Ok(KlCheck { n, c, p, holds: lhs == rhs, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::par::Execution;

    #[test]
    fn spec_examples() {
        let v = padic_l_nonpos(&PadicLRequest { n: vec![1], c: 2, p: 3 }, Execution::Sequential).unwrap();
        assert_eq!(v.value, rat(1, 2));
        for (c, p) in [(2, 3), (3, 5), (4, 7)] {
            let v = padic_l_nonpos(&PadicLRequest { n: vec![0], c, p }, Execution::Sequential).unwrap();
            assert!(v.value.is_zero());
        }
        let k = kubota_leopoldt_check(2, 3, 5, Execution::Parallel).unwrap();
        assert!(k.holds && k.lhs.is_zero());
    }

    #[test]
    fn term_count() {
        // (c-1)^r * sum_d C(r,d) p^d = (c-1)^r (1+p)^r.
        let v = padic_l_nonpos(&PadicLRequest { n: vec![1, 1], c: 2, p: 3 }, Execution::Parallel).unwrap();
        assert_eq!(v.terms_enumerated, 16);
    }

    #[test]
    fn bad_parameters() {
        for (c, p) in [(1, 3), (6, 3), (2, 4)] {
            let e = padic_l_nonpos(&PadicLRequest { n: vec![1], c, p }, Execution::Sequential);
            assert!(matches!(e, Err(Error::Parameter(_))), "{c} {p}");
        }
    }
}
