mod common;

use num_traits::Zero;
use proptest::prelude::*;
use waring_eig::exactnum::GaussRat;
use waring_eig::exactnum::factorial;
use waring_eig::forms::{apolar_apply, bw_inner, form_from_json, form_to_json, parse_form_in, NForm};

fn pair(max_vars: usize, max_d: u32) -> impl Strategy<Value = (NForm, NForm)> {
    (2..=max_vars, 1..=max_d).prop_flat_map(|(n, d)| (common::nform(n, d), common::nform(n, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn apolarity_is_scaled_bombieri_weyl((f, g) in pair(4, 6)) {
        let d = f.degree();
        let lhs = apolar_apply(&g, &f).unwrap();
        let c = lhs.coeff(&vec![0; f.nvars()]);
        prop_assert_eq!(c, &GaussRat::from_big(factorial(d)) * &bw_inner(&f, &g).unwrap());
    }

    #[test]
    fn powers_pair_to_powers(
        (u, v) in (2usize..=4).prop_flat_map(|n| (common::linform(n), common::linform(n))),
        d in 1u32..=7,
    ) {
        prop_assert_eq!(u.power(d).bw_inner(&v.power(d)).unwrap(), u.dot(&v).pow(d));
    }

    #[test]
    fn perp_is_an_orthogonal_involution(l in common::linform(2)) {
        let p = l.perp().unwrap();
        prop_assert!(l.dot(&p).is_zero());
        prop_assert!(p.perp().unwrap().proportional(&l));
    }

    #[test]
    fn orthogonal_action_preserves_bw(
        (f, g, a) in (2usize..=3).prop_flat_map(|n| (1u32..=4).prop_flat_map(move |d| {
            (common::nform(n, d), common::nform(n, d), common::ortho(n))
        }))
    ) {
        let lhs = a.act(&f).unwrap().bw_inner(&a.act(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, f.bw_inner(&g).unwrap());
    }

    #[test]
    fn numeric_roots_count_and_residual(f in common::bform(1..=9)) {
        let roots = f.roots_numeric(1e-9).unwrap();
        prop_assert_eq!(roots.iter().map(|(_, m)| m).sum::<usize>(), f.degree());
        let scale = f.norm1_f64();
        for (p, _) in &roots {
            let c = p.coords();
            let n = (c[0].norm_sqr() + c[1].norm_sqr()).sqrt();
            prop_assert!(f.eval_complex(c[0] / n, c[1] / n).norm() <= 1e-8 * scale, "{} at {}", f, p);
        }
    }

    #[test]
    fn print_then_parse_is_identity((f, _) in pair(4, 5)) {
        prop_assume!(!f.is_zero());
        let back = parse_form_in(&f.to_string(), f.nvars()).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(&form_from_json(&form_to_json(&f)).unwrap(), &f);
    }
}
