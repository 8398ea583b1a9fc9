mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;
use waring_eig::critvar::{
    degree_check_line, h_pairing, is_eigen_x0, jacobian_rank_at, sample_chart, sample_x0, we_equations,
    we_membership_binary, SecantParams,
};
use waring_eig::eigen::is_eigenvector;
use waring_eig::exactnum::GaussRat;
use waring_eig::forms::{LinForm, NForm};

fn x0(nvars: usize) -> LinForm {
    LinForm::new((0..nvars).map(|k| if k == 0 { GaussRat::one() } else { GaussRat::zero() }).collect())
}

fn params() -> impl Strategy<Value = SecantParams> {
    (1usize..=2, 2usize..=4, 2u32..=5).prop_flat_map(|(n, r, d)| {
        prop_oneof![
            prop::collection::vec(prop::collection::vec(-4i64..=4, n + 1), r - 1).prop_map(move |rows| {
                let alpha = rows.iter().map(|row| row.iter().map(|&v| GaussRat::from_int(v)).collect()).collect();
                SecantParams::new(n, r, d, alpha).unwrap()
            }),
            any::<u64>().prop_map(move |s| sample_chart(n, r, d, s).unwrap()),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn equations_detect_x0_eigenvector(p in params()) {
        let f = p.expand();
        prop_assert_eq!(is_eigen_x0(&p).unwrap(), is_eigenvector(&f, &x0(p.n + 1)));
    }

    #[test]
    fn jacobian_has_full_rank_on_the_chart(n in 1usize..=3, r in 2usize..=5, d in 2u32..=5, seed in any::<u64>()) {
        let p = sample_chart(n, r, d, seed).unwrap();
        prop_assert!(p.alpha.iter().all(|row| !row[0].is_zero()));
        let eqs = we_equations(n, r, d).unwrap();
        prop_assert_eq!(jacobian_rank_at(&eqs, &p.flat(), false).unwrap(), n);
        prop_assert_eq!(jacobian_rank_at(&eqs, &p.flat(), true).unwrap(), n + 1);
    }

    #[test]
    fn join_hyperplanes_cut_out_eigenvector_condition(
        (n, d, rows, coeffs) in (1usize..=2, 2u32..=5, 1usize..=4).prop_flat_map(|(n, d, k)| (
            Just(n),
            Just(d),
            prop::collection::vec(prop::collection::vec(-3i64..=3, n + 1), k),
            prop::collection::vec(-3i64..=3, k),
        )),
        on_chart in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let g = if on_chart {
            sample_chart(n, rows.len() + 1, d, seed).unwrap().tail()
        } else {
            rows.iter().zip(&coeffs).fold(NForm::zero(n + 1, d), |acc, (row, &c)| {
                let a: Vec<GaussRat> = row.iter().map(|&v| GaussRat::from_int(v)).collect();
                acc.add(&NForm::linear_power(&a, d).scale(&GaussRat::from_int(c))).unwrap()
            })
        };
        let mut e0 = vec![0; n + 1];
        e0[0] = d;
        let f = NForm::monomial(&e0).add(&g).unwrap();
        let all_vanish = (1..=n).all(|i| h_pairing(&g, i).unwrap().is_zero());
        prop_assert_eq!(all_vanish, is_eigenvector(&f, &x0(n + 1)));
    }

    #[test]
    fn membership_is_orthogonally_invariant(f in common::int_bform(3..=6), a in common::ortho(2)) {
        let m = we_membership_binary(&f).unwrap();
        let am = we_membership_binary(&a.act_binary(&f).unwrap()).unwrap();
        prop_assert_eq!(m.member, am.member);
        prop_assert_eq!(m.exact, am.exact);
    }

    #[test]
    fn samples_with_x0_are_members(
        (r, d) in (3u32..=8).prop_flat_map(|d| (2usize..=(d as usize).div_ceil(2), Just(d))),
        seed in any::<u64>(),
        a in common::ortho(2),
    ) {
        let s = sample_x0(1, r, d, seed).unwrap();
        let f = s.params.expand_binary().unwrap();
        let m = we_membership_binary(&f).unwrap();
        prop_assert!(m.member);
        prop_assert!(we_membership_binary(&a.act_binary(&f).unwrap()).unwrap().member);
    }

    #[test]
    fn line_sections_have_degree_d(d in 2u32..=7, r in 2usize..=5, seed in any::<u64>()) {
        prop_assert_eq!(degree_check_line(d, r, seed).unwrap().degree, d as usize);
    }
}
