use num_complex::Complex64;

use super::config::{finite, EvalConfig, EvalResult, Method};
use super::gamma::ln_gamma;
use super::quad::gl20;
use super::zeta::lerch_phi;
use crate::error::{Error, Result};
use crate::models::{singular_hyperplanes, HLData, Twist};
use crate::par;

/// Twists and weights of a depth-two datum of Euler–Zagier–Lerch shape,
/// i.e. forms `g1 + g1 m1` and `g1 + g2 + g1 m1 + g2 m2`.
pub fn as_ezl2(data: &HLData) -> Option<([Twist; 2], [Complex64; 2])> {
    if data.d() != 2 || data.r() != 2 {
        return None;
    }
    let g = data.gamma();
    let b = data.beta();
    let (g1, g2) = (&g[0][0], &g[1][1]);
    let ok = g[0][1].is_zero() && g[1][0] == *g1 && b[0] == *g1 && b[1] == g1.clone() + g2.clone();
    ok.then(|| ([data.xi()[0], data.xi()[1]], [g1.to_complex(), g2.to_complex()]))
}

fn pow_c(g: Complex64, w: Complex64) -> Complex64 {
    (w * g.ln()).exp()
}

fn zeta1(w: Complex64, xi1: Twist, g1: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    Ok(pow_c(g1, -w) * lerch_phi(w, xi1, cfg)?)
}

fn is_nonpos_int(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

fn binom_neg(s2: Complex64, k: usize) -> Complex64 {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (-s2 - i as f64) / (i + 1) as f64)
}

/// Smallest admissible shift of the Mellin–Barnes contour.
fn contour_shift(s: [Complex64; 2], eps: f64) -> usize {
    let need = |sigma: f64, offset: f64| (offset + eps + 0.5 - sigma).floor() as i64 + 1;
    need(s[1].re, 0.0).max(need(s[0].re + s[1].re, 1.0)).max(0) as usize
}

/// Depth-two zeta of Euler–Zagier–Lerch type
/// `sum_{m1, m2 >= 1} xi1^m1 xi2^m2 (g1 m1)^{-s1} (g1 m1 + g2 m2)^{-s2}`,
/// continued to all of `C^2` off its singular hyperplanes by shifting a
/// Mellin–Barnes contour past `M` poles of `Gamma(-z)`.
pub fn ezl2_continued(
    xi: [Twist; 2],
    gamma: [Complex64; 2],
    s: [Complex64; 2],
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    cfg.validate()?;
    if xi.iter().any(|x| matches!(x, Twist::Complex(_))) {
        return Err(Error::Unsupported("contour continuation needs root-of-unity twists".into()));
    }
    if gamma.iter().any(|g| g.re <= 0.0) {
        return Err(Error::Parameter("weights must have positive real part".into()));
    }
    let l_max = (s[0].norm() + s[1].norm()) as usize + 4;
    if let Some(h) = singular_hyperplanes(&xi, l_max)?.hit(&s) {
        let lhs: Vec<String> = (h.first..=h.last).map(|j| format!("s{j}")).collect();
        return Err(Error::Pole(format!("({}, {}) lies on {} = const ({})", s[0], s[1], lhs.join("+"), h.family)));
    }
    let [s1, s2] = s;
    let [g1, g2] = gamma;
    let eps = cfg.mb_epsilon;
    let m = cfg.mb_m.unwrap_or(0).max(contour_shift(s, eps));
    let one = Complex64::new(1.0, 0.0);

    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    if xi[1].is_one() {
        total += zeta1(s1 + s2 - 1.0, xi[0], g1, cfg)? / (g2 * (s2 - one));
    }
    let xi2 = xi[1].to_cyclotomic().expect("root twist");
    for k in 0..m {
        let phi = crate::exact::lerch_neg_analytic(k, &xi2);
        if phi.is_zero() {
            continue;
        }
        let b = binom_neg(s2, k);
        if b == Complex64::new(0.0, 0.0) {
            continue;
        }
        total += b
            * zeta1(s1 + s2 + k as f64, xi[0], g1, cfg)?
            * pow_c(g2, Complex64::new(k as f64, 0.0))
            * phi.to_complex();
    }
    err += 1e-15 * total.norm();

    if !is_nonpos_int(s2) {
        let c = m as f64 - eps;
        let lg_s2 = ln_gamma(s2);
        let integrand = |t: f64| -> Result<Complex64> {
            let z = Complex64::new(c, t);
            let g = (ln_gamma(s2 + z) + ln_gamma(-z) - lg_s2).exp();
            Ok(g * zeta1(s1 + s2 + z, xi[0], g1, cfg)? * pow_c(g2, z) * lerch_phi(-z, xi[1], cfg)?)
        };
        let (x, w) = gl20();
        let width = 0.5;
        let panel = |a: f64| -> Result<Complex64> {
            let mut acc = Complex64::new(0.0, 0.0);
            for (xi_, wi) in x.iter().zip(w) {
                acc += integrand(a + 0.5 * width * (1.0 + xi_))? * (0.5 * width * wi);
            }
            Ok(acc)
        };
        let t0 = cfg.mb_line_halflength + s1.im.abs() + s2.im.abs();
        let n0 = (2.0 * t0 / width).ceil() as usize;
        let starts: Vec<f64> = (0..n0).map(|i| -t0 + i as f64 * width).collect();
        let mut z_int = Complex64::new(0.0, 0.0);
        for p in par::map(cfg.exec, &starts, |&a| panel(a)) {
            z_int += p?;
        }
        let scale = |z: Complex64| (total + z / (2.0 * std::f64::consts::PI)).norm().max(1e-300);
        let (mut lo, mut hi) = (-t0, -t0 + n0 as f64 * width);
        loop {
            let left = panel(lo - width)?;
            let right = panel(hi)?;
            z_int += left + right;
            lo -= width;
            hi += width;
            let last = (left.norm() + right.norm()) / (2.0 * std::f64::consts::PI);
            if last < 0.1 * cfg.tolerance * scale(z_int) {
                err += last;
                break;
            }
            if hi > cfg.mb_max_halflength {
                return Err(Error::Accuracy { achieved: last / scale(z_int), requested: cfg.tolerance });
            }
        }
        total += z_int / (2.0 * std::f64::consts::PI);
        err += 1e-14 * total.norm();
    }
    Ok(EvalResult::new(finite(total)?, err, Method::Mb))
}

/// Contour continuation for an HL datum of depth-two Euler–Zagier–Lerch
/// shape; the HL sum starts at `m = 0`, which costs a factor `(xi1 xi2)^{-1}`.
pub fn hl_zeta_mb(data: &HLData, s: &[Complex64], cfg: &EvalConfig) -> Result<EvalResult> {
    let (xi, g) = as_ezl2(data)
        .ok_or_else(|| Error::Unsupported("contour continuation is implemented for depth-two EZL data".into()))?;
    if s.len() != 2 {
        return Err(Error::Parameter(format!("expected 2 arguments, got {}", s.len())));
    }
    let mut r = ezl2_continued(xi, g, [s[0], s[1]], cfg)?;
    r.value /= xi[0].to_complex() * xi[1].to_complex();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{ezl_data, Scalar};
    use crate::numeric::hl_zeta_direct;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn agrees_with_direct_for_every_shift() {
        let cases = [
            ([Twist::one(), Twist::one()], [c(2.0, 0.0), c(2.0, 0.0)]),
            ([Twist::minus_one(), Twist::one()], [c(1.5, 1.0), c(2.2, -0.5)]),
            ([Twist::root(3, 1), Twist::root(4, 3)], [c(1.7, 0.0), c(1.3, 2.0)]),
        ];
        for (xi, s) in cases {
            let g = vec![Scalar::one(), Scalar::int(2)];
            let data = ezl_data(xi.to_vec(), g).unwrap();
            let d = hl_zeta_direct(&data, &s, &EvalConfig::default()).unwrap().value;
            for m in 1..5 {
                let cfg = EvalConfig { mb_m: Some(m), ..EvalConfig::default() };
                let v = hl_zeta_mb(&data, &s, &cfg).unwrap().value;
                assert!((v - d).norm() < 1e-11 * d.norm().max(1.0), "{xi:?} {s:?} M={m}: {v} vs {d}");
            }
        }
    }

    #[test]
    fn lemma_values_at_nonpositive_second_argument() {
        // zeta_2(s, 0) = -zeta(s - 1) + zeta(s) zeta(0) at s = 3.5.
        let cfg = EvalConfig::default();
        let v = ezl2_continued([Twist::one(); 2], [c(1.0, 0.0); 2], [c(3.5, 0.0), c(0.0, 0.0)], &cfg).unwrap();
        let z = |x: f64| crate::numeric::riemann_zeta(c(x, 0.0), &cfg).unwrap();
        let want = -z(2.5) - 0.5 * z(3.5);
        assert!((v.value - want).norm() < 1e-13, "{} vs {want}", v.value);
    }

    #[test]
    fn poles_are_reported() {
        let cfg = EvalConfig::default();
        let e = ezl2_continued([Twist::one(); 2], [c(1.0, 0.0); 2], [c(0.5, 0.0), c(1.0, 0.0)], &cfg);
        assert!(matches!(e, Err(Error::Pole(_))));
    }
}
