use std::f64::consts::PI;
use std::sync::OnceLock;

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, 0.0);
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            dp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Cached 20-point rule.
pub fn gl20() -> &'static (Vec<f64>, Vec<f64>) {
    static R: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    R.get_or_init(|| gauss_legendre(20))
}

/// Exp-sinh rule for `int_0^inf f(x) dx` with `x = exp(pi/2 sinh tau)`.
///
/// Returns `(x, w_coarse, w_fine)`: the trapezoidal weights at step `h`
/// (zero on the odd fine nodes) and at step `h/2`, so that one pass over the
/// nodes yields two estimates whose difference serves as an error estimate.
pub fn exp_sinh_nodes() -> &'static [(f64, f64, f64)] {
    static R: OnceLock<Vec<(f64, f64, f64)>> = OnceLock::new();
    R.get_or_init(|| {
        let h = 1.0 / 16.0;
        let (lo, hi) = (-72i32, 88i32);
        (lo..=hi)
            .map(|i| {
                let t = i as f64 * h;
                let u = 0.5 * PI * t.sinh();
                let x = u.exp();
                let dx = x * 0.5 * PI * t.cosh();
                let coarse = if i % 2 == 0 { 2.0 * h * dx } else { 0.0 };
                (x, coarse, h * dx)
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_integrates_polynomials() {
        let (x, w) = gauss_legendre(20);
        let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(38)).sum();
        assert!((s - 2.0 / 39.0).abs() < 1e-14);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn exp_sinh_algebraic_decay() {
        // int_0^inf (1 + x)^{-3} dx = 1/2; int_0^inf (1+x)^{-1.5} dx = 2.
        for (p, want) in [(3.0f64, 0.5), (1.5, 2.0)] {
            let (mut a, mut b) = (0.0, 0.0);
            for &(x, wc, wf) in exp_sinh_nodes() {
                let f = (1.0 + x).powf(-p);
                a += wc * f;
                b += wf * f;
            }
            assert!((b - want).abs() < 1e-13, "p = {p}: {b}");
            assert!((a - b).abs() < 1e-6);
        }
    }
}
