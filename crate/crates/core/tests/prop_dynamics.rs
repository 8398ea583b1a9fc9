mod common;

use proptest::prelude::*;
use waring_eig::apolarity::{decompose_binary, waring_rank_binary, Decomposition, Mode};
use waring_eig::dynamics::rank_pencil;
use waring_eig::exactnum::GaussRat;
use waring_eig::forms::LinForm;

/// `r` distinct summands of degree `d` with `r < (d+1)/2`, plus one more
/// direction distinct from all of them.
fn subgeneric() -> impl Strategy<Value = (usize, Vec<LinForm>)> {
    (4usize..=9).prop_flat_map(|d| {
        let rmax = d / 2;
        (Just(d), (1..=rmax).prop_flat_map(|r| common::distinct_linforms(r + 1)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exceptional_ranks_are_at_most_one_above_generic(f in common::int_bform(2..=6), l in common::linform(2)) {
        let p = rank_pencil(&f, &l, Mode::Exact, 1e-9).unwrap();
        for e in &p.exceptional {
            prop_assert_ne!(e.rank, p.generic_rank);
            prop_assert!(e.rank <= p.generic_rank + 1, "{} + λ·({})^d at λ = {}: rank {} vs generic {}", f, l, e.lambda, e.rank, p.generic_rank);
        }
        prop_assert!(p.exceptional.len() <= f.degree() + 2);
    }

    #[test]
    fn zero_parameter_reports_base_rank(f in common::int_bform(2..=6), l in common::linform(2)) {
        let p = rank_pencil(&f, &l, Mode::Exact, 1e-9).unwrap();
        prop_assert_eq!(p.base_rank, waring_rank_binary(&f).unwrap());
        if p.base_rank != p.generic_rank {
            prop_assert!(p.exceptional.iter().any(|e| e.lambda.is_zero() && e.rank == p.base_rank));
        } else {
            prop_assert!(p.exceptional.iter().all(|e| !e.lambda.is_zero()));
        }
    }

    #[test]
    fn forbidden_directions_raise_rank_by_one((d, ls) in subgeneric()) {
        let (l, summands) = ls.split_last().unwrap();
        let r = summands.len();
        let f = common::power_sum(summands, d);
        let p = rank_pencil(&f, l, Mode::Exact, 1e-9).unwrap();
        prop_assert_eq!(p.base_rank, r);
        prop_assert_eq!(p.generic_rank, r + 1);
        prop_assert_eq!(p.exceptional.len(), 1);
        prop_assert!(p.exceptional[0].lambda.is_zero());
        prop_assert_eq!(p.exceptional[0].rank, r);
    }

    #[test]
    fn waring_directions_lower_rank(
        (d, ls) in (3usize..=9).prop_flat_map(|d| (Just(d), (2..=d.div_ceil(2)).prop_flat_map(common::distinct_linforms))),
        cs in prop::collection::vec((1i64..=4, any::<bool>()), 5),
    ) {
        let f = ls.iter().zip(&cs).fold(waring_eig::forms::BForm::zero(d), |acc, (l, &(c, neg))| {
            let c = GaussRat::from_int(if neg { -c } else { c });
            acc.add(&l.power_binary(d).scale(&c)).unwrap()
        });
        let r = waring_rank_binary(&f).unwrap();
        prop_assume!(r == ls.len());
        let Decomposition::Exact(terms) = decompose_binary(&f, Mode::Exact, 1e-9).unwrap() else {
            return Err(TestCaseError::fail("rational summands give an exact decomposition"));
        };
        for (l, c) in &terms {
            let g = f.sub(&l.power_binary(d).scale(c)).unwrap();
            prop_assert_eq!(waring_rank_binary(&g).unwrap(), r - 1);
        }
    }
}
