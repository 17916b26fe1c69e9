//! Property tests for the exact substrate, against independent oracles.

mod support;

use fibkit_core::exact::hull::zero_in_hull;
use fibkit_core::exact::linalg::{mat_kernel, QMatrix};
use fibkit_core::exact::rat::Rat;
use fibkit_core::exact::resultant::{binary_resultant, BinaryForm};
use fibkit_core::exact::series::TruncSeries;
use num_traits::Zero;
use proptest::prelude::*;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn series_strategy(order: usize) -> impl Strategy<Value = TruncSeries> {
    proptest::collection::vec(rat_strategy(), order + 1).prop_map(TruncSeries::from_coeffs)
}

fn form_strategy(degree: usize) -> impl Strategy<Value = BinaryForm> {
    proptest::collection::vec(-4i64..=4, degree + 1)
        .prop_filter("nonzero form", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| BinaryForm::new(c.into_iter().map(|x| Rat::from_integer(x.into())).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_product_is_commutative_and_associative(
        a in series_strategy(7),
        b in series_strategy(7),
        c in series_strategy(7),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn kernel_dimension_plus_rank_is_column_count(
        entries in proptest::collection::vec(-5i64..=5, 24),
    ) {
        let rows: Vec<Vec<Rat>> = entries
            .chunks(6)
            .map(|ch| ch.iter().map(|&x| Rat::from_integer(x.into())).collect())
            .collect();
        let m = QMatrix::from_rows(rows);
        let kernel = mat_kernel(&m);
        prop_assert_eq!(kernel.len() + m.rank(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn resultant_vanishes_iff_common_root(
        f in form_strategy(3),
        g in form_strategy(2),
    ) {
        let res = binary_resultant(&f, &g).unwrap();
        prop_assert_eq!(res.is_zero(), support::common_root_by_euclid(&f, &g));
    }

    #[test]
    fn resultant_detects_planted_common_factor(
        factor in form_strategy(1),
        f1 in form_strategy(2),
        g1 in form_strategy(1),
    ) {
        let f = support::form_product(&factor, &f1);
        let g = support::form_product(&factor, &g1);
        let res = binary_resultant(&f, &g).unwrap();
        prop_assert!(res.is_zero());
        prop_assert!(support::common_root_by_euclid(&f, &g));
    }

    #[test]
    fn hull_membership_matches_brute_force(
        raw in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 1..=6),
    ) {
        let points: Vec<Vec<Rat>> = raw
            .iter()
            .map(|p| p.iter().map(|&x| Rat::from_integer(x.into())).collect())
            .collect();
        let fast = zero_in_hull(&points).unwrap().is_inside();
        let brute = support::zero_in_hull_brute_force(&points);
        prop_assert_eq!(fast, brute);
    }
}

#[test]
fn hull_membership_matches_brute_force_on_edge_cases() {
    let cases: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![0, 0, 0]],                                  // the origin itself
        vec![vec![1, 0, 0]],                                  // single off-origin point
        vec![vec![1, 1, 0], vec![-1, -1, 0]],                 // origin on a segment
        vec![vec![1, 1, 1], vec![1, 1, 1], vec![-2, -2, -2]], // duplicates
        vec![
            vec![2, 0, 0],
            vec![0, 2, 0],
            vec![0, 0, 2],
            vec![-1, -1, -1],
        ],
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], // separated
        vec![vec![0, 0, 1], vec![0, 0, -1], vec![1, 0, 0]], // origin on an edge
    ];
    for case in cases {
        let points: Vec<Vec<Rat>> = case
            .iter()
            .map(|p| p.iter().map(|&x| Rat::from_integer(x.into())).collect())
            .collect();
        assert_eq!(
            zero_in_hull(&points).unwrap().is_inside(),
            support::zero_in_hull_brute_force(&points),
            "case {case:?}"
        );
    }
}

#[test]
fn separator_certificates_are_strict() {
    use fibkit_core::exact::hull::HullResult;
    // a spread of outside instances; every separator must pair strictly
    // positively with every point
    for shift in 1..6i64 {
        let points: Vec<Vec<Rat>> = (0..4)
            .map(|k| {
                vec![
                    Rat::from_integer((shift + k).into()),
                    Rat::from_integer((2 * shift - k).into()),
                    Rat::from_integer(1.into()),
                ]
            })
            .collect();
        match zero_in_hull(&points).unwrap() {
            HullResult::Outside { separator } => {
                for p in &points {
                    let pairing: Rat = separator.iter().zip(p).map(|(a, b)| a * b).sum();
                    assert!(pairing > Rat::zero());
                }
            }
            HullResult::Inside { .. } => panic!("points lie in an open half-space"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn phi5_is_invariant_under_random_coordinate_changes(
        seed in 0u64..20,
        entries in proptest::collection::vec(-2i64..=2, 25),
    ) {
        use fibkit_core::curve5::random_curve;
        use fibkit_core::phi5::phi5;
        let rows: Vec<Vec<Rat>> = entries
            .chunks(5)
            .map(|ch| ch.iter().map(|&x| Rat::from_integer(x.into())).collect())
            .collect();
        let m = QMatrix::from_rows(rows);
        prop_assume!(!m.det().is_zero());
        let curve = random_curve(seed);
        let moved = curve.change_coordinates(&m);
        prop_assert_eq!(phi5(&moved).unwrap(), phi5(&curve).unwrap());
    }
}
