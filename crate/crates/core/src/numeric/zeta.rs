use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::config::{finite, EvalConfig};
use super::gamma::ln_gamma;
use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial, rat_to_f64, Rational};
use crate::models::Twist;

/// `B_{2k}/(2k)!` for `k = 0..=60`.
fn b2k_over_fact() -> &'static [f64] {
    static T: OnceLock<Vec<f64>> = OnceLock::new();
    T.get_or_init(|| {
        (0..=60).map(|k| rat_to_f64(&(bernoulli(2 * k) / Rational::from_integer(factorial(2 * k as u64))))).collect()
    })
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Number of directly summed terms for argument `s`.
fn em_cutoff(s: Complex64, cfg: &EvalConfig) -> usize {
    cfg.em_terms.max((0.5 * s.norm()) as usize + 10)
}

/// Euler–Maclaurin remainder pieces at `x = N + a` without the pole term:
/// `x^{-s}/2 + sum_k B_2k/(2k)! (s)_{2k-1} x^{-s-2k+1}`.
fn em_corrections(s: Complex64, x: f64, cfg: &EvalConfig) -> Complex64 {
    let b = b2k_over_fact();
    let xs = (-s * x.ln()).exp();
    let mut acc = xs * 0.5;
    let mut poch = s; // (s)_{2k-1}
    let mut xp = xs / x; // x^{-s-2k+1}
    for k in 1..=cfg.em_bernoulli_order.min(60) {
        let t = poch * xp * b[k];
        acc += t;
        if t.norm() <= 1e-18 * acc.norm() {
            break;
        }
        poch *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        xp /= x * x;
    }
    acc
}

/// Hurwitz zeta `sum_{n>=0} (n + a)^{-s}` by Euler–Maclaurin summation.
///
/// Accurate for `Re s > -1`; far left of that, cancellation in the
/// direct part degrades the result, and callers should go through
/// [`riemann_zeta`] or [`lerch_phi`], which reflect first.
pub fn hurwitz_zeta(s: Complex64, a: f64, cfg: &EvalConfig) -> Result<Complex64> {
    if s == c(1.0) {
        return Err(Error::Pole("Hurwitz zeta at s = 1".into()));
    }
    if !(a > 0.0) {
        return Err(Error::Parameter("Hurwitz parameter must be positive".into()));
    }
    let n = em_cutoff(s, cfg);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        acc += (-s * (k as f64 + a).ln()).exp();
    }
    let x = n as f64 + a;
    acc += ((c(1.0) - s) * x.ln()).exp() / (s - 1.0);
    acc += em_corrections(s, x, cfg);
    finite(acc)
}

/// Riemann zeta; reflects to `Re s > 1/2` when `Re s < -1/2`.
pub fn riemann_zeta(s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    if s == c(1.0) {
        return Err(Error::Pole("Riemann zeta at s = 1".into()));
    }
    if s.re < -0.5 {
        if s.im == 0.0 && s.re.fract() == 0.0 && (s.re as i64) % 2 == 0 {
            return Ok(c(0.0));
        }
        let w = c(1.0) - s;
        let z = hurwitz_zeta(w, 1.0, cfg)?;
        return finite(periodic_reflection(s, z, z));
    }
    hurwitz_zeta(s, 1.0, cfg)
}

/// `Gamma(1-s)/(2 pi)^{1-s} [e^{i pi (1-s)/2} z1 + e^{-i pi (1-s)/2} z2]`, the
/// right-hand side of the functional equation of the periodic zeta-function
/// with `z1 = zeta(1-s, a)`, `z2 = zeta(1-s, 1-a)`.
fn periodic_reflection(s: Complex64, z1: Complex64, z2: Complex64) -> Complex64 {
    let w = c(1.0) - s;
    let base = ln_gamma(w) - w * (2.0 * PI).ln();
    let rot = Complex64::i() * PI * w * 0.5;
    (base + rot).exp() * z1 + (base - rot).exp() * z2
}

/// Analytic Lerch zeta `phi(s, xi) = sum_{m>=1} xi^m m^{-s}` for a root of
/// unity `xi = e^{2 pi i p/c}`; at `s = 0` this is `xi/(1 - xi)`.
pub fn lerch_phi(s: Complex64, xi: Twist, cfg: &EvalConfig) -> Result<Complex64> {
    let Twist::Root { order, power } = xi else {
        return Err(Error::Unsupported("Lerch zeta needs a root-of-unity twist".into()));
    };
    if order == 1 {
        return riemann_zeta(s, cfg);
    }
    if s.re < -0.5 {
        let a = power as f64 / order as f64;
        let w = c(1.0) - s;
        let z1 = hurwitz_zeta(w, a, cfg)?;
        let z2 = hurwitz_zeta(w, 1.0 - a, cfg)?;
        return finite(periodic_reflection(s, z1, z2));
    }
    // phi = c^{-s} sum_j xi^j zeta(s, j/c); the pole parts cancel because
    // sum_j xi^j = 0, so they are combined before dividing by s - 1.
    let cc = order as f64;
    let n = em_cutoff(s, cfg);
    let w = 2.0 * PI * power as f64 / cc;
    let u = c(1.0) - s;
    let x_ref = n as f64 + 1.0;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 1..=order {
        let a = j as f64 / cc;
        let root = Complex64::from_polar(1.0, w * j as f64);
        let mut part = Complex64::new(0.0, 0.0);
        for k in 0..n {
            part += (-s * (k as f64 + a).ln()).exp();
        }
        let x = n as f64 + a;
        part += em_corrections(s, x, cfg);
        // (x^{u} - x_ref^{u}) / (s - 1) = -x_ref^{u} * delta * E(u delta).
        let delta = (x / x_ref).ln();
        let pole = -(u * x_ref.ln()).exp() * delta * expm1_over_x(u * delta);
        acc += root * (part + pole);
    }
    finite((-s * cc.ln()).exp() * acc)
}

/// `(e^x - 1)/x`, accurate near 0.
fn expm1_over_x(x: Complex64) -> Complex64 {
    if x.norm() < 1e-3 {
        c(1.0) + x / 2.0 + x * x / 6.0 + x * x * x / 24.0
    } else {
        (x.exp() - 1.0) / x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn z(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn riemann_reference_values() {
        let c = cfg();
        assert!((riemann_zeta(z(2.0, 0.0), &c).unwrap() - PI * PI / 6.0).norm() < 1e-14);
        assert!((riemann_zeta(z(0.0, 0.0), &c).unwrap() + 0.5).norm() < 1e-14);
        assert!((riemann_zeta(z(-1.0, 0.0), &c).unwrap() + 1.0 / 12.0).norm() < 1e-14);
        assert!((riemann_zeta(z(-3.0, 0.0), &c).unwrap() - 1.0 / 120.0).norm() < 1e-15);
        assert!(riemann_zeta(z(1.0, 0.0), &c).is_err());
        // Reflection and direct Euler-Maclaurin agree in the overlap.
        let s = z(-0.8, 3.0);
        let a = riemann_zeta(s, &c).unwrap();
        let b = hurwitz_zeta(s, 1.0, &c).unwrap();
        assert!((a - b).norm() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn zeta_on_critical_line() {
        // zeta(1/2 + 14.134725141734693 i) is a zero.
        let v = riemann_zeta(z(0.5, 14.134725141734693), &cfg()).unwrap();
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn lerch_alternating() {
        let c = cfg();
        let m1 = Twist::minus_one();
        let v = lerch_phi(z(2.0, 0.0), m1, &c).unwrap();
        assert!((v + PI * PI / 12.0).norm() < 1e-14);
        let v0 = lerch_phi(z(0.0, 0.0), m1, &c).unwrap();
        assert!((v0 + 0.5).norm() < 1e-14);
        // Finite at s = 1: phi(1, -1) = -log 2.
        let v1 = lerch_phi(z(1.0, 0.0), m1, &c).unwrap();
        assert!((v1 + 2f64.ln()).norm() < 1e-14);
    }

    #[test]
    fn lerch_reflection_matches_direct() {
        let c = cfg();
        let xi = Twist::root(5, 2);
        let s = z(-0.6, 1.5);
        let a = lerch_phi(s, xi, &c).unwrap();
        // Direct Euler-Maclaurin combination without reflection.
        let mut b = Complex64::new(0.0, 0.0);
        for j in 1..=5 {
            let root = Complex64::from_polar(1.0, 2.0 * PI * 2.0 * j as f64 / 5.0);
            b += root * hurwitz_zeta(s, j as f64 / 5.0, &c).unwrap();
        }
        b *= (-s * 5f64.ln()).exp();
        assert!((a - b).norm() < 1e-11, "{a} vs {b}");
    }
}
