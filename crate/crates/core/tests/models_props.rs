use hlzeta::exact::{rat, rat_int, Rational};
use hlzeta::models::{
    count_ones, ez_data, ezl_data, mt2_cmatrix, mt2_data, root_system_rank2_data, singular_hyperplanes, solve_c_matrix,
    CMatrix, Case, HLData, Scalar, Twist,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn check_cmatrix(data: &HLData, cm: &CMatrix) -> bool {
    let r = data.r();
    (0..r).all(|m| {
        (0..r).all(|k| {
            let s =
                (0..data.d()).fold(Scalar::zero(), |acc, j| acc + cm.c()[m][j].clone() * data.gamma()[j][k].clone());
            s == if m == k { Scalar::one() } else { Scalar::zero() }
        })
    })
}

fn twist() -> impl Strategy<Value = Twist> {
    prop_oneof![
        Just(Twist::one()),
        Just(Twist::minus_one()),
        (2u64..7, 1i64..7).prop_map(|(n, k)| Twist::root(n, k % n as i64))
    ]
}

proptest! {
    #[test]
    fn constructor_c_matrices(a in -5i64..6, b in -5i64..6, g in prop::collection::vec((1i64..5, 1i64..4), 1..4)) {
        let mt = mt2_data();
        prop_assert!(check_cmatrix(&mt, &mt2_cmatrix(Scalar::int(a), Scalar::int(b))));
        let r = g.len();
        let ez = ez_data(r);
        prop_assert!(check_cmatrix(&ez, &ez.cmatrix().unwrap()));
        let gam: Vec<Scalar> = g.iter().map(|&(n, d)| Scalar::Exact(rat(n, d))).collect();
        let ezl = ezl_data(vec![Twist::one(); r], gam).unwrap();
        prop_assert!(check_cmatrix(&ezl, &ezl.cmatrix().unwrap()));
        prop_assert!(check_cmatrix(&ezl, &solve_c_matrix(&ezl).unwrap()));
    }

    #[test]
    fn hldata_json_roundtrip(xi in prop::collection::vec(twist(), 1..4), g in prop::collection::vec((1i64..5, 1i64..4), 3)) {
        let r = xi.len();
        let gam: Vec<Scalar> = g.iter().take(r).map(|&(n, d)| Scalar::Exact(rat(n, d))).collect();
        let data = ezl_data(xi, gam).unwrap();
        let text = serde_json::to_string(&data).unwrap();
        let back: HLData = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, data);
    }

    #[test]
    fn twist_text_roundtrip(t in twist()) {
        prop_assert_eq!(Twist::parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn count_ones_recursion(xi in prop::collection::vec(twist(), 2..6)) {
        let r = xi.len();
        for j in 1..r {
            let step = count_ones(&xi, j, r) - count_ones(&xi, j, r - 1);
            prop_assert_eq!(step, usize::from(xi[r - 1].is_one()));
        }
    }

    #[test]
    fn catalog_hits_are_at_distance_zero(xi in prop::collection::vec(twist(), 1..4), pick in 0usize..20) {
        let cat = singular_hyperplanes(&xi, 4).unwrap();
        if let Some(h) = cat.hyperplanes.get(pick % cat.hyperplanes.len().max(1)) {
            let r = xi.len();
            let mut s = vec![Complex64::new(0.0, 0.0); r];
            s[h.last - 1] = Complex64::new(h.values[0] as f64, 0.0);
            prop_assert!(cat.hit(&s).is_some());
            prop_assert_eq!(cat.distance(&s), 0.0);
        }
    }
}

#[test]
fn no_singularities_without_trivial_twists() {
    for xi in [vec![Twist::minus_one()], vec![Twist::root(3, 1), Twist::root(4, 1)], vec![Twist::root(5, 2); 3]] {
        assert!(singular_hyperplanes(&xi, 6).unwrap().is_empty());
    }
}

#[test]
fn depth_two_euler_zagier_catalog() {
    let cat = singular_hyperplanes(&[Twist::one(), Twist::one()], 3).unwrap();
    assert_eq!(cat.hyperplanes.len(), 2);
    let h = &cat.hyperplanes[0];
    assert_eq!((h.first, h.last, h.case), (1, 2, Case::II));
    assert_eq!(h.values, vec![2, 1, 0, -2, -4, -6]);
    let h = &cat.hyperplanes[1];
    assert_eq!((h.first, h.last, h.case, h.values.clone()), (2, 2, Case::V, vec![1]));
}

#[test]
fn a2_root_system_is_mordell_tornheim() {
    let rows: Vec<Vec<Rational>> =
        [[1, 0], [0, 1], [1, 1]].iter().map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect();
    let (data, cm) = root_system_rank2_data(&rows, vec![Twist::one(); 2]).unwrap();
    assert_eq!(data, mt2_data());
    assert_eq!(cm, mt2_cmatrix(Scalar::zero(), Scalar::zero()));
}
