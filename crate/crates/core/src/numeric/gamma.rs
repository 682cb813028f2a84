use std::f64::consts::PI;

use num_complex::Complex64;

const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

/// `log Gamma(z)` on some branch; only `exp` of the result is meaningful
/// to callers, so branch jumps of `2 pi i` are harmless.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.im < 0.0 {
        return ln_gamma(z.conj()).conj();
    }
    if z.re < 0.5 {
        // Reflection with log sin(pi z) written to avoid overflow for large Im z:
        // sin(pi z) = -e^{-i pi z} (1 - e^{2 pi i z}) / (2i).
        let i = Complex64::i();
        let ln_sin = -i * PI * z + (Complex64::new(1.0, 0.0) - (2.0 * PI * i * z).exp()).ln() - (2.0 * i).ln()
            + Complex64::new(0.0, PI);
        return Complex64::new(PI.ln(), 0.0) - ln_sin - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < 16.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - shift
}

pub fn gamma(z: Complex64) -> Complex64 {
    ln_gamma(z).exp()
}
