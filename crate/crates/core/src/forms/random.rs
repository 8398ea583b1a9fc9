//! Seeded random exact data for experiments and tests.

use num_traits::Zero;
use rand::Rng;

use super::{exponents, BForm, NForm};
use crate::exactnum::GaussRat;

/// Integer in `[-bound, bound]`.
pub fn small_int(rng: &mut impl Rng, bound: i64) -> GaussRat {
    GaussRat::from_int(rng.gen_range(-bound..=bound))
}

/// Nonzero integer in `[-bound, bound]`.
pub fn nonzero_int(rng: &mut impl Rng, bound: i64) -> GaussRat {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return GaussRat::from_int(v);
        }
    }
}

/// Gaussian integer with both parts in `[-bound, bound]`.
pub fn small_gauss(rng: &mut impl Rng, bound: i64) -> GaussRat {
    GaussRat::from_ints(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

/// Rational `p/q` with `|p| ≤ bound`, `1 ≤ q ≤ den`.
pub fn small_rat(rng: &mut impl Rng, bound: i64, den: i64) -> GaussRat {
    GaussRat::from_frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=den))
}

/// Binary form with integer coefficients in `[-bound, bound]`, nonzero.
pub fn bform_int(rng: &mut impl Rng, d: usize, bound: i64) -> BForm {
    loop {
        let f = BForm::new((0..=d).map(|_| small_int(rng, bound)).collect());
        if !f.is_zero() {
            return f;
        }
    }
}

/// Binary form with Gaussian-integer coefficients, nonzero.
pub fn bform_gauss(rng: &mut impl Rng, d: usize, bound: i64) -> BForm {
    loop {
        let f = BForm::new((0..=d).map(|_| small_gauss(rng, bound)).collect());
        if !f.is_zero() {
            return f;
        }
    }
}

/// Dense form in `nvars` variables with Gaussian-integer coefficients.
pub fn nform_gauss(rng: &mut impl Rng, nvars: usize, d: u32, bound: i64) -> NForm {
    loop {
        let mut f = NForm::zero(nvars, d);
        for a in exponents(nvars, d) {
            f.add_term(a, small_gauss(rng, bound));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// Vector of small integers, not all zero.
pub fn int_vector(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<GaussRat> {
    loop {
        let v: Vec<GaussRat> = (0..n).map(|_| small_int(rng, bound)).collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}
