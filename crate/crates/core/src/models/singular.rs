use num_complex::Complex64;
use serde::Serialize;

use super::scalar::Twist;
use crate::error::{Error, Result};

/// Case label of a singular hyperplane family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    I,
    II,
    III,
    IV,
    V,
}

/// The hyperplanes `s_first + ... + s_last = v` for `v` in `values`
/// (indices are 1-based).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hyperplane {
    pub first: usize,
    pub last: usize,
    pub values: Vec<i64>,
    pub family: String,
    pub case: Case,
}

impl Hyperplane {
    fn partial_sum(&self, s: &[Complex64]) -> Complex64 {
        s[self.first - 1..self.last].iter().sum()
    }

    /// Whether `s` lies exactly on one of the listed hyperplanes.
    pub fn contains(&self, s: &[Complex64]) -> bool {
        let t = self.partial_sum(s);
        t.im == 0.0 && self.values.iter().any(|&v| t.re == v as f64)
    }

    /// Distance of `s_first + ... + s_last` to the nearest listed value.
    pub fn distance(&self, s: &[Complex64]) -> f64 {
        let t = self.partial_sum(s);
        self.values.iter().map(|&v| (t - v as f64).norm()).fold(f64::INFINITY, f64::min)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularityCatalog {
    pub r: usize,
    pub hyperplanes: Vec<Hyperplane>,
}

impl SingularityCatalog {
    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hit(&self, s: &[Complex64]) -> Option<&Hyperplane> {
        self.hyperplanes.iter().find(|h| h.contains(s))
    }

    pub fn distance(&self, s: &[Complex64]) -> f64 {
        self.hyperplanes.iter().map(|h| h.distance(s)).fold(f64::INFINITY, f64::min)
    }
}

/// `C(j, r)`: the number of `h` in `j..=r` with `xi_h = 1` (1-based).
pub fn count_ones(xi: &[Twist], j: usize, r: usize) -> usize {
    xi[j - 1..r].iter().filter(|x| x.is_one()).count()
}

/// Singular hyperplanes of the Euler–Zagier–Lerch zeta-function with twists
/// `xi` on the unit circle, listing each family up to `l = l_max`.
pub fn singular_hyperplanes(xi: &[Twist], l_max: usize) -> Result<SingularityCatalog> {
    let r = xi.len();
    if r == 0 {
        return Err(Error::Parameter("empty twist vector".into()));
    }
    for x in xi {
        if (x.norm() - 1.0).abs() > 1e-15 {
            return Err(Error::Unsupported("singularity catalog needs |xi_j| = 1".into()));
        }
    }
    let l = l_max as i64;
    let evens: Vec<i64> = (0..=l).map(|k| -2 * k).collect();
    let mut hs = Vec::new();
    for j in 1..=r.saturating_sub(2) {
        if xi[j - 1].is_one() {
            let c = count_ones(xi, j, r) as i64;
            hs.push(Hyperplane {
                first: j,
                last: r,
                values: (0..=l).map(|k| c - k).collect(),
                family: format!("C({j},{r}) - l"),
                case: Case::I,
            });
        }
    }
    if r >= 2 && xi[r - 2].is_one() {
        let last = xi[r - 1];
        let (values, family, case) = if last.is_one() {
            ([vec![2, 1], evens.clone()].concat(), "2, 1, -2l", Case::II)
        } else if last == Twist::minus_one() {
            ([vec![1], evens.clone()].concat(), "1, -2l", Case::III)
        } else {
            ((0..=l).map(|k| 1 - k).collect(), "1 - l", Case::IV)
        };
        hs.push(Hyperplane { first: r - 1, last: r, values, family: family.into(), case });
    }
    if xi[r - 1].is_one() {
        hs.push(Hyperplane { first: r, last: r, values: vec![1], family: "1".into(), case: Case::V });
    }
    Ok(SingularityCatalog { r, hyperplanes: hs })
}
