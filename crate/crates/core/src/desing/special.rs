use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{f_delta_coeff, factorial, CyclotomicNumber, Rational};
use crate::models::HLData;

/// Evaluation point `s_j = -lambda_j` for [`special_value_nonpos`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialValueRequest {
    pub lambda: Vec<u32>,
}

/// Per-row choice `(m_j, nu_j1..nu_jr)` with its weight
/// `D_j^{m_j}/m_j! * prod_k gamma_jk^{nu_jk}/nu_jk!`.
struct RowChoice {
    nu: Vec<u32>,
    weight: Rational,
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn qpow(q: &Rational, e: u32) -> Rational {
    // 0^0 = 1.
    (0..e).fold(Rational::one(), |acc, _| acc * q)
}

/// Exact value of the desingularized zeta-function at `(-lambda_1, ..., -lambda_d)`.
///
/// Needs rational `gamma`, `beta` and root-of-unity twists; the result lives
/// in `Q(zeta_N)` with `N` the lcm of the twist orders.
pub fn special_value_nonpos(data: &HLData, req: &SpecialValueRequest) -> Result<CyclotomicNumber> {
    let (d, r) = (data.d(), data.r());
    if req.lambda.len() != d {
        return Err(Error::Parameter(format!("lambda must have length d = {d}")));
    }
    if !data.is_exact() {
        return Err(Error::Parameter(
            "exact special values need rational gamma, beta and root-of-unity twists; use the numeric evaluators"
                .into(),
        ));
    }
    let gamma: Vec<Vec<Rational>> =
        data.gamma().iter().map(|row| row.iter().map(|g| g.as_exact().unwrap().clone()).collect()).collect();
    let dj: Vec<Rational> =
        (0..d).map(|j| gamma[j].iter().sum::<Rational>() - data.beta()[j].as_exact().unwrap()).collect();
    let xis: Vec<CyclotomicNumber> = data.xi().iter().map(|x| x.to_cyclotomic().unwrap()).collect();
    let order = xis.iter().fold(1u64, |acc, x| acc.lcm(&x.order()));

    let rows: Vec<Vec<RowChoice>> = (0..d)
        .map(|j| {
            compositions(req.lambda[j], r + 1)
                .into_iter()
                .filter_map(|comp| {
                    let (m, nu) = (comp[0], &comp[1..]);
                    let mut w = qpow(&dj[j], m) / Rational::from_integer(factorial(m as u64));
                    for k in 0..r {
                        w *= qpow(&gamma[j][k], nu[k]) / Rational::from_integer(factorial(nu[k] as u64));
                    }
                    (!w.is_zero()).then(|| RowChoice { nu: nu.to_vec(), weight: w })
                })
                .collect()
        })
        .collect();

    let mut f_cache: HashMap<(usize, u32), CyclotomicNumber> = HashMap::new();
    let mut total = CyclotomicNumber::zero(order);
    let mut n = vec![0u32; r];
    let mut pick = vec![0usize; d];
    // Odometer over the row choices.
    'outer: loop {
        let mut w = Rational::one();
        n.iter_mut().for_each(|x| *x = 0);
        for j in 0..d {
            if rows[j].is_empty() {
                break 'outer;
            }
            let ch = &rows[j][pick[j]];
            w *= &ch.weight;
            for k in 0..r {
                n[k] += ch.nu[k];
            }
        }
        let mut term = CyclotomicNumber::from_rational(order, w);
        for k in 0..r {
            let f = match f_cache.get(&(k, n[k])) {
                Some(f) => f.clone(),
                None => {
                    let f = f_delta_coeff(n[k] as usize, &xis[k])?;
                    f_cache.insert((k, n[k]), f.clone());
                    f
                }
            };
            term = &term * &f;
        }
        total = &total + &term;
        let mut j = 0;
        loop {
            if j == d {
                break 'outer;
            }
            pick[j] += 1;
            if pick[j] < rows[j].len() {
                break;
            }
            pick[j] = 0;
            j += 1;
        }
    }
    let mut pre = Rational::one();
    for &l in &req.lambda {
        let f = Rational::from_integer(factorial(l as u64));
        pre *= if l % 2 == 1 { -f } else { f };
    }
    Ok(total.scale(&pre))
}
