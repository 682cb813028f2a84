use std::sync::OnceLock;

use num_complex::Complex64;

use super::config::{EvalConfig, EvalResult, Method};
use super::identity::evaluate_identity;
use super::lines::{des_first_neg, des_second_neg, MixedValue};
use super::mellin::ezl2_continued;
use super::zeta::riemann_zeta;
use crate::desing::{desing_identity, DesingIdentity};
use crate::error::Result;
use crate::exact::rat;
use crate::models::{ez_data, singular_hyperplanes, SingularityCatalog, Twist};

fn ez2_identity() -> &'static DesingIdentity {
    static ID: OnceLock<DesingIdentity> = OnceLock::new();
    ID.get_or_init(|| {
        let data = ez_data(2);
        let c = data.cmatrix().expect("Euler–Zagier data has a c-matrix");
        desing_identity(&data, &c)
    })
}

fn as_int(z: Complex64) -> Option<i64> {
    (z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 1e15).then_some(z.re as i64)
}

fn zeta2(s1: f64, s2: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    let one = Complex64::new(1.0, 0.0);
    ezl2_continued([Twist::one(); 2], [one; 2], [Complex64::new(s1, 0.0), Complex64::new(s2, 0.0)], cfg)
}

/// `zeta^des(N, 1)` for an integer `N >= 2` from the closed expression in
/// `zeta(N)`, `zeta_2(N - 1, 2)` and `zeta_2(N - 2, 3)`.
pub fn ez2_des_at_n1(n: i64, cfg: &EvalConfig) -> Result<EvalResult> {
    let nf = n as f64;
    let z = riemann_zeta(Complex64::new(nf, 0.0), cfg)?;
    let a = zeta2(nf - 1.0, 2.0, cfg)?;
    let b = zeta2(nf - 2.0, 3.0, cfg)?;
    let v = z * (nf - 1.0) + a.value * (2.0 - nf) - b.value * 2.0;
    let err = (2.0 - nf).abs() * a.error_bound + 2.0 * b.error_bound + 1e-15 * v.norm();
    Ok(EvalResult::new(v, err, Method::ClosedForm))
}

fn catalog(s: &[Complex64; 2]) -> Result<SingularityCatalog> {
    let l_max = (s[0].norm() + s[1].norm()) as usize + 8;
    singular_hyperplanes(&[Twist::one(); 2], l_max)
}

/// Distance from `s` to the nearest singular hyperplane of any constituent
/// `zeta_2(s + m)` of the identity.
fn constituent_distance(s: &[Complex64; 2]) -> Result<f64> {
    let cat = catalog(s)?;
    Ok(ez2_identity()
        .grouped()
        .keys()
        .map(|m| cat.distance(&[s[0] + m[0] as f64, s[1] + m[1] as f64]))
        .fold(f64::INFINITY, f64::min))
}

fn via_identity(s: [Complex64; 2], cfg: &EvalConfig) -> Result<EvalResult> {
    evaluate_identity(ez2_identity(), &s, cfg)
}

/// Mean of the entire function over a small circle around `s` in a generic
/// complex direction; each node is evaluated through the identity.
fn circle_mean(s: [Complex64; 2], cfg: &EvalConfig) -> Result<EvalResult> {
    const N: usize = 16;
    const RHO: f64 = 0.25;
    let w = Complex64::from_polar(std::f64::consts::FRAC_1_SQRT_2, 0.3);
    let vals = crate::par::map_range(cfg.exec, N, |j| {
        let t = Complex64::from_polar(RHO, 2.0 * std::f64::consts::PI * j as f64 / N as f64);
        via_identity([s[0] + t * w, s[1] + t * w], cfg)
    });
    let mut all = Complex64::new(0.0, 0.0);
    let mut even = Complex64::new(0.0, 0.0);
    let mut err: f64 = 0.0;
    for (j, v) in vals.into_iter().enumerate() {
        let v = v?;
        all += v.value;
        if j % 2 == 0 {
            even += v.value;
        }
        err = err.max(v.error_bound);
    }
    let mean = all / N as f64;
    let half = even / (N / 2) as f64;
    let diff = (mean - half).norm();
    err += diff * diff / mean.norm().max(1e-300) + 1e-14 * mean.norm();
    Ok(EvalResult::new(mean, err, Method::Limit))
}

/// The desingularized double zeta-function of Euler–Zagier type.
///
/// Exact lines are used on `s1 = -N` and `s2 = -N`, the value `1/2` at
/// `(1, 1)` and a closed expression at `(N, 1)`; near a singular hyperplane
/// of a constituent the value is a circle mean; elsewhere the identity is
/// evaluated with contour-continued `zeta_2`.
pub fn ez2_des(s: [Complex64; 2], cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    let (i1, i2) = (as_int(s[0]), as_int(s[1]));
    if i1 == Some(1) && i2 == Some(1) {
        return Ok(EvalResult::new(Complex64::new(0.5, 0.0), 0.0, Method::ClosedForm));
    }
    if let Some(n2) = i2.filter(|&n| n <= 0) {
        let line = des_second_neg((-n2) as u32);
        return exact_or_complex(&line, s[0], i1, cfg);
    }
    if let Some(n1) = i1.filter(|&n| n <= 0) {
        let line = des_first_neg((-n1) as u32);
        return exact_or_complex(&line, s[1], i2, cfg);
    }
    if let (Some(n), Some(1)) = (i1, i2) {
        if n >= 2 {
            return ez2_des_at_n1(n, cfg);
        }
    }
    if constituent_distance(&s)? < cfg.near_singularity {
        return circle_mean(s, cfg);
    }
    via_identity(s, cfg)
}

fn exact_or_complex(
    line: &super::lines::ZetaLine,
    s: Complex64,
    int: Option<i64>,
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    let v = match int {
        Some(n) => Complex64::new(line.eval_integer(n)?.to_f64(cfg)?, 0.0),
        None => line.eval_complex(s, cfg)?,
    };
    Ok(EvalResult::new(v, 1e-15 * v.norm().max(1e-300), Method::ClosedForm))
}

/// Exact value at an integer point where a closed form applies: on
/// `s1 <= 0`, on `s2 <= 0`, and at `(1, 1)`.
pub fn ez2_des_exact(s1: i64, s2: i64) -> Result<Option<MixedValue>> {
    if s1 == 1 && s2 == 1 {
        return Ok(Some(MixedValue::from_parts(rat(1, 2), &[])));
    }
    if s2 <= 0 {
        return des_second_neg((-s2) as u32).eval_integer(s1).map(Some);
    }
    if s1 <= 0 {
        return des_first_neg((-s1) as u32).eval_integer(s2).map(Some);
    }
    Ok(None)
}

/// Forces the identity route at `s`, bypassing the exact lines.
pub fn ez2_des_via_identity(s: [Complex64; 2], cfg: &EvalConfig) -> Result<EvalResult> {
    if constituent_distance(&s)? < cfg.near_singularity {
        circle_mean(s, cfg)
    } else {
        via_identity(s, cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn z(x: f64) -> f64 {
        riemann_zeta(c(x), &EvalConfig::default()).unwrap().re
    }

    #[test]
    fn values_at_n1() {
        let cfg = EvalConfig::default();
        let want = [
            (2, 2.0 * z(3.0) - z(2.0)),
            (3, 2.0 * z(3.0) - 1.25 * z(4.0)),
            (4, 3.0 * z(4.0) + 2.0 * z(5.0) - 2.0 * z(2.0) * z(3.0)),
        ];
        for (n, w) in want {
            let a = ez2_des([c(n as f64), c(1.0)], &cfg).unwrap().value.re;
            assert!((a - w).abs() < 1e-12, "({n},1): {a} vs {w}");
            let b = circle_mean([c(n as f64), c(1.0)], &cfg).unwrap().value.re;
            assert!((b - w).abs() < 1e-10, "circle ({n},1): {b} vs {w}");
        }
    }

    #[test]
    fn lines_agree_with_identity_off_integers() {
        let cfg = EvalConfig::default();
        let z = Complex64::new(0.5, 0.7);
        for s in [[c(2.5), c(-2.0)], [c(-1.0), c(1.7)], [c(0.3), c(-3.0)], [z, c(0.0)], [z, c(-1.0)], [c(-1.0), z]] {
            let a = ez2_des(s, &cfg).unwrap().value;
            let b = ez2_des_via_identity(s, &cfg).unwrap().value;
            assert!((a - b).norm() < 1e-9 * a.norm().max(1.0), "{s:?}: {a} vs {b}");
        }
    }

    #[test]
    fn one_one() {
        let cfg = EvalConfig::default();
        let b = circle_mean([c(1.0), c(1.0)], &cfg).unwrap().value;
        assert!((b - 0.5).norm() < 1e-10, "{b}");
    }
}
