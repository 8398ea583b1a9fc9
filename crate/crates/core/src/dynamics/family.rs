//! The family `x^(d−1)·y + (a·x + b·y)^d`.

use num_traits::{One, Zero};

use super::{rank_pencil, RankPencilProfile};
use crate::apolarity::{waring_rank_binary, Mode};
use crate::eigen::eigen_poly_binary;
use crate::error::{Error, Result};
use crate::exactnum::GaussRat;
use crate::forms::{BForm, LinForm, UPoly};
use crate::locus::{intersect_waring_eigen_binary, waring_locus_binary, IntersectionReport, LocusDesc};

fn family_form(d: usize, a: &GaussRat, b: &GaussRat) -> BForm {
    BForm::monomial(d, 1).add(&BForm::linear_power(a, b, d)).expect("same degree")
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExampleFamilyReport {
    pub d: usize,
    pub a: GaussRat,
    pub b: GaussRat,
    pub form: BForm,
    pub rank: usize,
    pub locus: LocusDesc,
    pub eigen_poly: BForm,
    /// `D_F` at `[1:0]`.
    pub eigen_at_infinity: GaussRat,
    /// `a^(d−1) = −1/(d·b)`.
    pub infinity_condition: bool,
    /// `D_F` at `[a:b]`.
    pub eigen_at_ab: GaussRat,
    /// `a = 0` or `a² = (d−1)·b²`.
    pub ab_condition: bool,
    pub intersection: IntersectionReport,
    /// Pencil along `x`.
    pub along_x: RankPencilProfile,
    /// Pencil along `a·x + b·y`; `λ = −1` leaves `x^(d−1)·y`.
    pub along_l: RankPencilProfile,
}

impl ExampleFamilyReport {
    /// Both eigen conditions agree with direct evaluation of `D_F`.
    pub fn conditions_hold(&self) -> bool {
        self.eigen_at_infinity.is_zero() == self.infinity_condition && self.eigen_at_ab.is_zero() == self.ab_condition
    }
}

pub fn analyze_example_family(d: usize, a: &GaussRat, b: &GaussRat) -> Result<ExampleFamilyReport> {
    if d < 3 {
        return Err(Error::Precondition(format!("family needs d ≥ 3, got {d}")));
    }
    if b.is_zero() {
        return Err(Error::Precondition("family needs b ≠ 0".into()));
    }
    let form = family_form(d, a, b);
    let rank = waring_rank_binary(&form)?;
    let locus = waring_locus_binary(&form)?;
    let eigen_poly = eigen_poly_binary(&form)?;
    let eigen_at_infinity = eigen_poly.eval(&GaussRat::one(), &GaussRat::zero());
    let eigen_at_ab = eigen_poly.eval(a, b);
    let dd = GaussRat::from_int(d as i64);
    let infinity_condition = &(&a.pow(d as u32 - 1) * &dd) * b == -GaussRat::one();
    let ab_condition = a.is_zero() || a.pow(2) == &GaussRat::from_int(d as i64 - 1) * &b.pow(2);
    let intersection = intersect_waring_eigen_binary(&form, Mode::Exact, 1e-10)?;
    let along_x = rank_pencil(&form, &LinForm::from_ints(&[1, 0]), Mode::Exact, 1e-10)?;
    let along_l = rank_pencil(&form, &LinForm::new(vec![a.clone(), b.clone()]), Mode::Exact, 1e-10)?;
    Ok(ExampleFamilyReport {
        d,
        a: a.clone(),
        b: b.clone(),
        form,
        rank,
        locus,
        eigen_poly,
        eigen_at_infinity,
        infinity_condition,
        eigen_at_ab,
        ab_condition,
        intersection,
        along_x,
        along_l,
    })
}

/// `D_F([1:0])` and `D_F(a, b)` as polynomials in `a` for fixed `b`,
/// against their closed forms `−(d·b·a^(d−1) + 1)` and
/// `a^(d−2)·((d−1)·b² − a²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyIdentities {
    pub at_infinity: UPoly,
    pub at_infinity_expected: UPoly,
    pub at_ab: UPoly,
    pub at_ab_expected: UPoly,
}

impl FamilyIdentities {
    pub fn hold(&self) -> bool {
        self.at_infinity == self.at_infinity_expected && self.at_ab == self.at_ab_expected
    }
}

/// Interpolates both evaluations of the eigenpolynomial in `a` at `d + 1`
/// integer points (each has degree at most `d`) and checks one more.
pub fn example_family_identities(d: usize, b: &GaussRat) -> Result<FamilyIdentities> {
    if d < 3 || b.is_zero() {
        return Err(Error::Precondition("family identities need d ≥ 3 and b ≠ 0".into()));
    }
    let xs: Vec<GaussRat> = (0..=d as i64 + 1).map(GaussRat::from_int).collect();
    let mut inf = Vec::with_capacity(xs.len());
    let mut ab = Vec::with_capacity(xs.len());
    for a in &xs {
        let dp = eigen_poly_binary(&family_form(d, a, b))?;
        inf.push(dp.eval(&GaussRat::one(), &GaussRat::zero()));
        ab.push(dp.eval(a, b));
    }
    let at_infinity = UPoly::interpolate(&xs[..=d], &inf[..=d]);
    let at_ab = UPoly::interpolate(&xs[..=d], &ab[..=d]);
    if at_infinity.eval(&xs[d + 1]) != inf[d + 1] || at_ab.eval(&xs[d + 1]) != ab[d + 1] {
        return Err(Error::Precondition("eigenpolynomial exceeds its degree bound in a".into()));
    }
    let dd = GaussRat::from_int(d as i64);
    let mut c = vec![GaussRat::zero(); d];
    c[0] = -GaussRat::one();
    c[d - 1] = -(&dd * b);
    let at_infinity_expected = UPoly::new(c);
    let mut c = vec![GaussRat::zero(); d + 1];
    c[d - 2] = &GaussRat::from_int(d as i64 - 1) * &b.pow(2);
    c[d] = -GaussRat::one();
    let at_ab_expected = UPoly::new(c);
    Ok(FamilyIdentities { at_infinity, at_infinity_expected, at_ab, at_ab_expected })
}
