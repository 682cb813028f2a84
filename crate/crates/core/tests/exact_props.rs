use hlzeta::exact::{
    bernoulli, binomial, cyclotomic_polynomial, euler_phi, f_delta_coeff, f_delta_coeff_by_series, frobenius_euler,
    lerch_neg_coeff, rat, rat_int, zeta_neg, CyclotomicNumber, QPoly, Rational,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn cyc(order: u64, coeffs: &[i64]) -> CyclotomicNumber {
    CyclotomicNumber::from_poly(order, &QPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect()))
}

fn order_and_coeffs() -> impl Strategy<Value = (u64, Vec<i64>, Vec<i64>)> {
    prop::sample::select(vec![3u64, 4, 5, 8, 12]).prop_flat_map(|n| {
        let len = euler_phi(n) as usize;
        (Just(n), prop::collection::vec(-5i64..6, len), prop::collection::vec(-5i64..6, len))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_division_undoes_multiplication((n, a, b) in order_and_coeffs()) {
        let (a, b) = (cyc(n, &a), cyc(n, &b));
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(&(&a * &b) * &inv, b);
    }

    #[test]
    fn ring_laws((n, a, b) in order_and_coeffs(), k in 1u64..4) {
        let (a, b) = (cyc(n, &a), cyc(n, &b));
        prop_assert_eq!(&a * &b, &b * &a);
        let s = &a + &b;
        prop_assert_eq!(&(&s * &s) - &(&a * &a), &(&a * &b).scale(&rat_int(2)) + &(&b * &b));
        // Lifting to a multiple of the order is a field embedding.
        prop_assert_eq!((&a * &b).lift(n * k), &a.lift(n * k) * &b.lift(n * k));
    }

    #[test]
    fn galois_action_is_multiplicative((n, a, b) in order_and_coeffs(), g in 1u64..24) {
        prop_assume!(num_integer::gcd(g, n) == 1);
        let (a, b) = (cyc(n, &a), cyc(n, &b));
        prop_assert_eq!((&a * &b).galois(g), &a.galois(g) * &b.galois(g));
        prop_assert_eq!((&a + &b).galois(g), &a.galois(g) + &b.galois(g));
    }

    #[test]
    fn polynomial_division(a in prop::collection::vec(-9i64..10, 1..8), b in prop::collection::vec(-9i64..10, 1..5)) {
        let (a, b) = (QPoly::from_ints(&a), QPoly::from_ints(&b));
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn leibniz_and_shift(a in prop::collection::vec(-9i64..10, 1..6), b in prop::collection::vec(-9i64..10, 1..6), t in -5i64..6) {
        let (a, b) = (QPoly::from_ints(&a), QPoly::from_ints(&b));
        prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
        let x = rat(3, 7);
        prop_assert_eq!(a.shift(&rat_int(t)).eval(&x), a.eval(&(x + rat_int(t))));
    }

    #[test]
    fn bernoulli_recurrence(n in 1usize..60) {
        let s: Rational = (0..=n).map(|k| Rational::from_integer(binomial(n as u64 + 1, k as u64)) * bernoulli(k)).sum();
        prop_assert!(s.is_zero());
    }
}

#[test]
fn roots_of_unity_sum() {
    for n in 1..=12u64 {
        for j in 0..n {
            let s = (0..n as i64)
                .fold(CyclotomicNumber::zero(n), |acc, k| &acc + &CyclotomicNumber::root_of_unity(n, j as i64 * k));
            let want = if j == 0 { rat_int(n as i64) } else { Rational::zero() };
            assert_eq!(s.as_rational(), Some(want), "n={n} j={j}");
        }
    }
}

#[test]
fn cyclotomic_polynomials_multiply_to_x_n_minus_1() {
    for n in 1..=30u64 {
        let prod = (1..=n)
            .filter(|d| n % d == 0)
            .fold(QPoly::constant(Rational::one()), |acc, d| &acc * &*cyclotomic_polynomial(d));
        let mut want = vec![Rational::zero(); n as usize + 1];
        want[0] = rat_int(-1);
        want[n as usize] = rat_int(1);
        assert_eq!(prod, QPoly::new(want), "n={n}");
    }
}

fn roots_up_to(max_order: u64) -> Vec<(u64, i64)> {
    (2..=max_order)
        .flat_map(|n| (1..n as i64).filter(move |&k| num_integer::gcd(k as u64, n) == 1).map(move |k| (n, k)))
        .collect()
}

#[test]
fn f_coefficients_closed_form_equals_series() {
    for (n, k) in roots_up_to(12).into_iter().chain([(1, 0)]) {
        let xi = CyclotomicNumber::root_of_unity(n, k);
        for m in 0..=20 {
            assert_eq!(f_delta_coeff(m, &xi).unwrap(), f_delta_coeff_by_series(m, &xi), "xi=e({k}/{n}) n={m}");
        }
    }
}

#[test]
fn lerch_at_minus_one() {
    let xi = CyclotomicNumber::root_of_unity(2, 1);
    for k in 0..=20usize {
        let two = rat_int(2).pow(k as i32 + 1);
        let want = (two - rat_int(1)) * (-bernoulli(k + 1) / rat_int(k as i64 + 1));
        assert_eq!(lerch_neg_coeff(k, &xi).unwrap().as_rational(), Some(want), "k={k}");
    }
}

#[test]
fn lerch_nonvanishing_off_real_axis() {
    for (n, k) in roots_up_to(12).into_iter().filter(|&(n, _)| n > 2) {
        let xi = CyclotomicNumber::root_of_unity(n, k);
        for m in 0..=20 {
            assert!(!lerch_neg_coeff(m, &xi).unwrap().is_zero(), "xi=e({k}/{n}) k={m}");
        }
    }
}

#[test]
fn frobenius_euler_relation() {
    // H_k(xi^{-1}) = (1 - xi) phi(-k, xi) read through the F coefficient.
    for (n, k) in roots_up_to(8) {
        let xi = CyclotomicNumber::root_of_unity(n, k);
        let one = CyclotomicNumber::one(n);
        for m in 0..=10 {
            let h = frobenius_euler(m, &xi).unwrap();
            assert_eq!(h, &(&one - &xi) * &lerch_neg_coeff(m, &xi).unwrap());
        }
    }
    assert_eq!(zeta_neg(1), rat(-1, 12));
}
