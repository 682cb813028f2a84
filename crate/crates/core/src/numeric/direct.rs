use num_complex::Complex64;

use super::config::{finite, EvalConfig, EvalResult, Method};
use super::quad::{exp_sinh_nodes, gl20};
use crate::error::{Error, Result};
use crate::models::{HLData, Twist};
use crate::par;

/// Whether the series converges absolutely at `s`: for every nonempty set
/// `K` of summation indices with unimodular twist, the real parts of the
/// exponents of all linear forms involving some index of `K` must sum to
/// more than `|K|`.
pub fn in_direct_region(data: &HLData, s: &[Complex64]) -> bool {
    region_violation(data, s).is_none()
}

fn region_violation(data: &HLData, s: &[Complex64]) -> Option<Vec<usize>> {
    let (d, r) = (data.d(), data.r());
    let free: Vec<usize> = (0..r).filter(|&k| data.xi()[k].norm() >= 1.0).collect();
    for mask in 1u32..(1 << free.len()) {
        let ks: Vec<usize> = free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &k)| k).collect();
        let sigma: f64 = (0..d).filter(|&j| ks.iter().any(|&k| !data.gamma()[j][k].is_zero())).map(|j| s[j].re).sum();
        if sigma <= ks.len() as f64 {
            return Some(ks);
        }
    }
    None
}

struct Ctx {
    r: usize,
    beta: Vec<Complex64>,
    gamma: Vec<Vec<Complex64>>,
    s: Vec<Complex64>,
    xi: Vec<Twist>,
    n: usize,
    tol: f64,
    width: f64,
    max_u: f64,
}

/// A one-dimensional summation plan over a residue class: integer points
/// `0..n+4` followed by the exp-sinh nodes of the tail integral.
fn plan_abscissae(n: usize) -> Vec<(f64, f64, f64)> {
    let mut v: Vec<(f64, f64, f64)> = (0..n + 4).map(|q| (q as f64, 0.0, 0.0)).collect();
    let nf = n as f64;
    v.extend(exp_sinh_nodes().iter().map(|&(x, wc, wf)| (nf * (1.0 + x), nf * wc, nf * wf)));
    v
}

impl Ctx {
    fn term(&self, x: &[f64]) -> Complex64 {
        let mut ln = Complex64::new(0.0, 0.0);
        for (j, row) in self.gamma.iter().enumerate() {
            let mut lin = self.beta[j];
            for (k, g) in row.iter().enumerate() {
                lin += g * x[k];
            }
            ln -= self.s[j] * lin.ln();
        }
        ln.exp()
    }

    fn eval_at(&self, k: usize, prefix: &[f64], m: f64) -> (Complex64, f64) {
        let mut x = prefix.to_vec();
        x.push(m);
        if k + 1 == self.r {
            (self.term(&x), 0.0)
        } else {
            self.sum_level(k + 1, &x, par::Execution::Sequential)
        }
    }

    /// Sum over `m_k >= 0` of the level-`k` function with `m_0..m_{k-1}` fixed.
    fn sum_level(&self, k: usize, prefix: &[f64], exec: par::Execution) -> (Complex64, f64) {
        match self.xi[k] {
            Twist::Root { order, power } => {
                let plan = plan_abscissae(self.n);
                let c = order as usize;
                let pts: Vec<(usize, usize)> = (0..c).flat_map(|rho| (0..plan.len()).map(move |i| (rho, i))).collect();
                let vals =
                    par::map(exec, &pts, |&(rho, i)| self.eval_at(k, prefix, (c as f64) * plan[i].0 + rho as f64));
                let mut total = Complex64::new(0.0, 0.0);
                let mut err = 0.0;
                for rho in 0..c {
                    let v = &vals[rho * plan.len()..(rho + 1) * plan.len()];
                    let f = |q: f64| self.eval_at(k, prefix, (c as f64) * q + rho as f64);
                    let (s, e) = self.combine(&plan, v, &f, exec);
                    let root = Complex64::from_polar(
                        1.0,
                        2.0 * std::f64::consts::PI * (power as f64) * rho as f64 / order as f64,
                    );
                    total += root * s;
                    err += e;
                }
                (total, err)
            }
            Twist::Complex(z) => {
                // |z| < 1: plain geometric summation in chunks.
                let mut total = Complex64::new(0.0, 0.0);
                let mut err = 0.0;
                let mut m = 0usize;
                let mut zp = Complex64::new(1.0, 0.0);
                let chunk = 64;
                loop {
                    let ms: Vec<usize> = (m..m + chunk).collect();
                    let vals = par::map(exec, &ms, |&mm| self.eval_at(k, prefix, mm as f64));
                    let mut last = 0.0;
                    for (v, e) in vals {
                        let t = zp * v;
                        total += t;
                        err += zp.norm() * e;
                        last = t.norm();
                        zp *= z;
                    }
                    m += chunk;
                    if last <= 1e-18 * total.norm().max(1e-300) || zp.norm() < 1e-18 || m > 1_000_000 {
                        if m > 1_000_000 {
                            err += last * 1e6;
                        }
                        break;
                    }
                }
                (total, err)
            }
        }
    }

    /// Direct part, Euler–Maclaurin corrections and tail integral of one
    /// residue class.
    fn combine<F>(
        &self,
        plan: &[(f64, f64, f64)],
        v: &[(Complex64, f64)],
        f: &F,
        exec: par::Execution,
    ) -> (Complex64, f64)
    where
        F: Fn(f64) -> (Complex64, f64) + Sync,
    {
        let n = self.n;
        let h = |q: usize| v[q].0;
        let mut direct = Complex64::new(0.0, 0.0);
        let mut err = 0.0;
        for (val, e) in &v[..n] {
            direct += val;
            err += e;
        }
        let d = |k: usize| h(n + k) - h(n - k);
        let d1 = (d(1) * 45.0 - d(2) * 9.0 + d(3)) / 60.0;
        let d3 = (d(1) * -13.0 + d(2) * 8.0 - d(3)) / 8.0;
        let d5 = (d(1) * 5.0 - d(2) * 4.0 + d(3)) / 2.0;
        let corr = h(n) * 0.5 - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0;
        let (mut coarse, mut fine) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for (i, &(_, wc, wf)) in plan.iter().enumerate().skip(n + 4) {
            coarse += v[i].0 * wc;
            fine += v[i].0 * wf;
            err += wf * v[i].1;
        }
        let base = direct + corr;
        let diff = (fine - coarse).norm();
        if diff <= 1e-6 * (base + fine).norm().max(1e-300) {
            err += diff * 1e-3;
        } else {
            let (tail, e) = self.log_panels(f, exec);
            fine = tail;
            err += e;
        }
        err += d5.norm() / (30240.0 * n as f64) + 1e-16 * direct.norm();
        (base + fine, err)
    }

    /// Tail integral over `q >= n` on Gauss–Legendre panels in `u = ln(q/n)`,
    /// extended until a panel contributes below a tenth of the tolerance.
    fn log_panels<F>(&self, f: &F, exec: par::Execution) -> (Complex64, f64)
    where
        F: Fn(f64) -> (Complex64, f64) + Sync,
    {
        let (x, w) = gl20();
        let nf = self.n as f64;
        let mut total = Complex64::new(0.0, 0.0);
        let mut err = 0.0;
        let mut a = 0.0;
        while a < self.max_u {
            let b = a + self.width;
            let vals = par::map(exec, x, |&t| {
                let u = 0.5 * (a + b) + 0.5 * self.width * t;
                let q = nf * u.exp();
                let (v, e) = f(q);
                (v * q, e * q)
            });
            let mut panel = Complex64::new(0.0, 0.0);
            for (i, (v, e)) in vals.iter().enumerate() {
                panel += v * (0.5 * self.width * w[i]);
                err += 0.5 * self.width * w[i] * e;
            }
            total += panel;
            a = b;
            if panel.norm() < 0.1 * self.tol * total.norm().max(1e-300) {
                return (total, err + panel.norm());
            }
        }
        (total, err + 1e-3 * total.norm())
    }
}

/// Direct evaluation of the multiple series inside its region of absolute
/// convergence: `direct_sum_cap` terms per index, then an Euler–Maclaurin
/// tail whose integral is computed by exp-sinh quadrature. Twists that are
/// roots of unity of order `c` are handled by splitting each index into
/// residue classes mod `c`; other twists need `|xi| < 1`.
pub fn hl_zeta_direct(data: &HLData, s: &[Complex64], cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if s.len() != data.d() {
        return Err(Error::Parameter(format!("expected {} arguments, got {}", data.d(), s.len())));
    }
    if let Some(ks) = region_violation(data, s) {
        let idx: Vec<String> = ks.iter().map(|k| (k + 1).to_string()).collect();
        let at: Vec<String> = s.iter().map(|z| z.to_string()).collect();
        return Err(Error::Region(format!(
            "series does not converge absolutely at ({}) (summation indices {{{}}})",
            at.join(", "),
            idx.join(",")
        )));
    }
    for x in data.xi() {
        if let Twist::Complex(z) = x {
            if z.norm() >= 1.0 {
                return Err(Error::Unsupported("unimodular twists must be given as roots of unity".into()));
            }
        }
    }
    let ctx = Ctx {
        r: data.r(),
        beta: data.beta().iter().map(|b| b.to_complex()).collect(),
        gamma: data.gamma().iter().map(|row| row.iter().map(|g| g.to_complex()).collect()).collect(),
        s: s.to_vec(),
        xi: data.xi().to_vec(),
        n: cfg.direct_sum_cap,
        tol: cfg.tolerance,
        width: (6.0 / s.iter().map(|z| z.im.abs()).sum::<f64>().max(1e-9)).min(2.0),
        max_u: 2000.0,
    };
    let (v, e) = ctx.sum_level(0, &[], cfg.exec);
    Ok(EvalResult::new(finite(v)?, e, Method::Direct))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{ez_data, ezl_data, mt2_data, Scalar};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn depth_one_is_riemann() {
        let v = hl_zeta_direct(&ez_data(1), &[c(2.0)], &EvalConfig::default()).unwrap();
        assert!((v.value - std::f64::consts::PI.powi(2) / 6.0).norm() < 1e-13);
        let v = hl_zeta_direct(&ez_data(1), &[Complex64::new(1.5, 4.0)], &EvalConfig::default()).unwrap();
        let z = super::super::riemann_zeta(Complex64::new(1.5, 4.0), &EvalConfig::default()).unwrap();
        assert!((v.value - z).norm() < 1e-12, "{} vs {} ({})", v.value, z, v.error_bound);
    }

    #[test]
    fn euler_sum() {
        // zeta_2(1, 2) in the HL normalization is sum_{m1<m2} ... = zeta(3)... with
        // zeta_2(s1, s2) = sum_{0<m1<n} m1^{-s1} n^{-s2}; zeta_2(1,2) = zeta(3).
        let v = hl_zeta_direct(&ez_data(2), &[c(1.0), c(2.0)], &EvalConfig::default()).unwrap();
        assert!((v.value - 1.2020569031595942).norm() < 1e-12, "{}", v.value);
    }

    #[test]
    fn region_errors() {
        let e = hl_zeta_direct(&ez_data(2), &[c(0.5), c(0.5)], &EvalConfig::default());
        assert!(matches!(e, Err(Error::Region(_))));
        assert!(!in_direct_region(&mt2_data(), &[c(0.2), c(0.2), c(0.9)]));
        assert!(in_direct_region(&mt2_data(), &[c(2.0), c(2.0), c(2.0)]));
    }

    #[test]
    fn alternating_lerch() {
        let h = ezl_data(vec![Twist::minus_one()], vec![Scalar::one()]).unwrap();
        // HL sum from m = 0 is xi^{-1} times phi(2, -1) = -pi^2/12.
        let v = hl_zeta_direct(&h, &[c(2.0)], &EvalConfig::default()).unwrap();
        assert!((v.value - std::f64::consts::PI.powi(2) / 12.0).norm() < 1e-13);
    }

    #[test]
    fn witten_222() {
        let v = hl_zeta_direct(&mt2_data(), &[c(2.0), c(2.0), c(2.0)], &EvalConfig::default()).unwrap();
        assert!((v.value - std::f64::consts::PI.powi(6) / 2835.0).norm() < 1e-13, "{}", v.value);
    }
}
