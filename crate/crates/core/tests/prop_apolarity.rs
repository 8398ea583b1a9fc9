mod common;

use proptest::prelude::*;
use waring_eig::apolarity::{
    annihilates, annihilator_binary, catalecticant, decompose_binary, waring_rank_binary, Mode,
};
use waring_eig::forms::NumPoint;

fn same_points(a: &[NumPoint], b: &[NumPoint]) -> bool {
    a.len() == b.len() && a.iter().all(|p| b.iter().any(|q| p.chordal_distance(q) < 1e-7))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn power_sums_round_trip(
        (d, ls) in (2usize..=9).prop_flat_map(|d| (Just(d), (1..=d.div_ceil(2)).prop_flat_map(common::distinct_linforms)))
    ) {
        let f = common::power_sum(&ls, d);
        prop_assume!(!f.is_zero());
        let r = ls.len();
        prop_assert_eq!(waring_rank_binary(&f).unwrap(), r);
        let dec = decompose_binary(&f, Mode::Exact, 1e-9).unwrap();
        let expected: Vec<NumPoint> = ls.iter().map(|l| l.to_point().unwrap().to_numeric()).collect();
        prop_assert!(same_points(&dec.points(), &expected), "{} gives {:?}", f, dec);
    }

    #[test]
    fn annihilator_generators(f in common::bform(1..=9)) {
        let d = f.degree();
        let ann = annihilator_binary(&f).unwrap();
        prop_assert!(annihilates(&ann.g1, &f) && annihilates(&ann.g2, &f));
        prop_assert_eq!(ann.g1.degree() + ann.g2.degree(), d + 2);
        // nothing of lower degree annihilates: the catalecticant has full
        // column rank one degree below g1
        let k = ann.g1.degree();
        if k >= 1 {
            let cat = catalecticant(&f, k - 1).unwrap();
            prop_assert_eq!(cat.rank_exact(), cat.cols());
        }
    }

    #[test]
    fn rank_is_orthogonally_invariant(f in common::bform(2..=8), a in common::ortho(2)) {
        let af = a.act_binary(&f).unwrap();
        prop_assert_eq!(waring_rank_binary(&af).unwrap(), waring_rank_binary(&f).unwrap());
    }

    #[test]
    fn catalecticant_ranks_bound_waring_rank(f in common::bform(1..=9)) {
        let r = waring_rank_binary(&f).unwrap();
        for k in 0..=f.degree() {
            prop_assert!(catalecticant(&f, k).unwrap().rank_exact() <= r);
        }
    }
}
