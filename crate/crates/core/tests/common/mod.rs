//! Strategies shared by the property tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use waring_eig::exactnum::GaussRat;
use waring_eig::forms::{BForm, LinForm, NForm, OrthoMatrix};

pub fn gauss() -> impl Strategy<Value = GaussRat> {
    (-6i64..=6, -3i64..=3, 1i64..=3).prop_map(|(re, im, den)| GaussRat::from_ints(re, im) * GaussRat::from_frac(1, den))
}

pub fn int() -> impl Strategy<Value = GaussRat> {
    (-6i64..=6).prop_map(GaussRat::from_int)
}

pub fn bform(d: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = BForm> {
    d.prop_flat_map(|d| prop::collection::vec(gauss(), d + 1))
        .prop_map(BForm::new)
        .prop_filter("nonzero", |f| !f.is_zero())
}

pub fn int_bform(d: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = BForm> {
    d.prop_flat_map(|d| prop::collection::vec(int(), d + 1))
        .prop_map(BForm::new)
        .prop_filter("nonzero", |f| !f.is_zero())
}

pub fn nform(nvars: usize, d: u32) -> impl Strategy<Value = NForm> {
    let basis = waring_eig::forms::exponents(nvars, d);
    prop::collection::vec(gauss(), basis.len()).prop_map(move |c| {
        NForm::from_terms(nvars, d, basis.iter().cloned().zip(c)).expect("homogeneous")
    })
}

pub fn linform(nvars: usize) -> impl Strategy<Value = LinForm> {
    prop::collection::vec(int(), nvars).prop_map(LinForm::new).prop_filter("nonzero", |l| !l.is_zero())
}

pub fn ortho(size: usize) -> impl Strategy<Value = OrthoMatrix> {
    any::<u64>().prop_map(move |s| OrthoMatrix::random(size, &mut ChaCha8Rng::seed_from_u64(s)))
}

/// `r` pairwise non-proportional integer binary linear forms.
pub fn distinct_linforms(r: usize) -> impl Strategy<Value = Vec<LinForm>> {
    prop::collection::vec((-5i64..=5, -5i64..=5), r..=4 * r)
        .prop_map(move |pairs| {
            let mut out: Vec<LinForm> = Vec::new();
            for (a, b) in pairs {
                let l = LinForm::from_ints(&[a, b]);
                if !l.is_zero() && !out.iter().any(|m| m.proportional(&l)) && out.len() < r {
                    out.push(l);
                }
            }
            out
        })
        .prop_filter("enough distinct forms", move |v| v.len() == r)
}

pub fn power_sum(ls: &[LinForm], d: usize) -> BForm {
    ls.iter().fold(BForm::zero(d), |acc, l| acc.add(&l.power_binary(d)).expect("same degree"))
}
