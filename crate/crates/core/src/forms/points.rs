//! Linear forms and projective points, exact and floating.

use std::fmt;

use num_traits::{One, Zero};

use super::{BForm, NForm};
use crate::error::{Error, Result};
use crate::exactnum::{CFloat, GaussRat};

/// `Σ a_i x_i`
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinForm {
    pub coords: Vec<GaussRat>,
}

impl LinForm {
    pub fn new(coords: Vec<GaussRat>) -> Self {
        LinForm { coords }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| GaussRat::from_int(v)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Complex bilinear pairing `Σ a_i b_i` (no conjugation).
    pub fn dot(&self, o: &LinForm) -> GaussRat {
        self.coords.iter().zip(&o.coords).map(|(a, b)| a * b).sum()
    }

    /// `Σ a_i² = 0`.
    pub fn is_isotropic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroLinearForm);
        }
        Ok(self.dot(self).is_zero())
    }

    /// `-a1 x0 + a0 x1` for a binary form `a0 x0 + a1 x1`.
    pub fn perp(&self) -> Result<LinForm> {
        if self.nvars() != 2 {
            return Err(Error::VariableMismatch(self.nvars(), 2));
        }
        if self.is_zero() {
            return Err(Error::ZeroLinearForm);
        }
        Ok(LinForm::new(vec![-&self.coords[1], self.coords[0].clone()]))
    }

    pub fn power(&self, d: u32) -> NForm {
        NForm::linear_power(&self.coords, d)
    }

    pub fn power_binary(&self, d: usize) -> BForm {
        assert_eq!(self.nvars(), 2);
        BForm::linear_power(&self.coords[0], &self.coords[1], d)
    }

    pub fn to_point(&self) -> Result<ProjPoint> {
        ProjPoint::new(self.coords.clone())
    }

    pub fn proportional(&self, o: &LinForm) -> bool {
        match (self.to_point(), o.to_point()) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.power(1), f)
    }
}

/// Exact projective point, stored with its first nonzero coordinate equal
/// to 1, so `==` is equality in projective space.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint {
    coords: Vec<GaussRat>,
}

impl ProjPoint {
    pub fn new(coords: Vec<GaussRat>) -> Result<Self> {
        let Some(lead) = coords.iter().find(|c| !c.is_zero()) else {
            return Err(Error::ZeroLinearForm);
        };
        let inv = lead.inv();
        Ok(ProjPoint { coords: coords.iter().map(|c| c * &inv).collect() })
    }

    pub fn from_ints(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&v| GaussRat::from_int(v)).collect())
    }

    pub fn coords(&self) -> &[GaussRat] {
        &self.coords
    }

    pub fn to_linform(&self) -> LinForm {
        LinForm::new(self.coords.clone())
    }

    pub fn to_numeric(&self) -> NumPoint {
        NumPoint::new(self.coords.iter().map(GaussRat::to_complex).collect())
    }

    /// The point `[1:0]`, `[0:1]`, … with a single nonzero coordinate.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut c = vec![GaussRat::zero(); n];
        c[i] = GaussRat::one();
        ProjPoint { coords: c }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// Floating projective point, stored with unit Euclidean norm and the
/// phase chosen so its largest coordinate is real and positive.
#[derive(Clone, PartialEq, Debug)]
pub struct NumPoint {
    coords: Vec<CFloat>,
}

impl NumPoint {
    /// Panics on a zero or non-finite vector.
    pub fn new(coords: Vec<CFloat>) -> Self {
        let norm = coords.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!(norm > 0.0 && norm.is_finite(), "a projective point needs a nonzero finite vector");
        let big = coords
            .iter()
            .copied()
            .max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap())
            .unwrap();
        let phase = big.conj() / big.norm();
        NumPoint { coords: coords.iter().map(|z| z * phase / norm).collect() }
    }

    pub fn coords(&self) -> &[CFloat] {
        &self.coords
    }

    /// Sine of the angle between the two lines; zero iff equal. Computed
    /// as the residual of projecting one unit representative on the other.
    pub fn chordal_distance(&self, o: &NumPoint) -> f64 {
        let ip: CFloat = self.coords.iter().zip(&o.coords).map(|(a, b)| a.conj() * b).sum();
        self.coords
            .iter()
            .zip(&o.coords)
            .map(|(a, b)| (b - ip * a).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Coordinates scaled so the first coordinate of modulus above
    /// `1e-12` is 1, for display.
    pub fn affine_coords(&self) -> Vec<CFloat> {
        let lead = self
            .coords
            .iter()
            .copied()
            .find(|z| z.norm() > 1e-12)
            .unwrap_or(CFloat::new(1.0, 0.0));
        self.coords.iter().map(|z| z / lead).collect()
    }

    /// Complex bilinear self-pairing `Σ p_i²` of the unit representative.
    pub fn self_pairing(&self) -> CFloat {
        self.coords.iter().map(|z| z * z).sum()
    }

    /// Round to an exact point if every affine coordinate is within `tol`
    /// of a Gaussian rational with denominator at most `max_den`.
    pub fn rationalize(&self, max_den: i64, tol: f64) -> Option<ProjPoint> {
        let aff = self.affine_coords();
        let mut exact = Vec::with_capacity(aff.len());
        for z in &aff {
            let q = GaussRat::approximate(*z, max_den)?;
            if (q.to_complex() - z).norm() > tol {
                return None;
            }
            exact.push(q);
        }
        ProjPoint::new(exact).ok()
    }
}

impl fmt::Display for NumPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.affine_coords().iter().map(|z| fmt_complex(*z)).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

pub fn fmt_complex(z: CFloat) -> String {
    let clean = |x: f64| if x.abs() < 1e-14 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else if im < 0.0 {
        format!("{re}-{}i", -im)
    } else {
        format!("{re}+{im}i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perp_examples() {
        let x0 = LinForm::from_ints(&[1, 0]);
        assert!(x0.perp().unwrap().proportional(&LinForm::from_ints(&[0, 1])));
        let iso = LinForm::new(vec![GaussRat::one(), GaussRat::i()]);
        assert!(iso.perp().unwrap().proportional(&iso));
        let l = LinForm::from_ints(&[1, 2]);
        assert_eq!(l.perp().unwrap(), LinForm::from_ints(&[-2, 1]));
        assert!(l.dot(&l.perp().unwrap()).is_zero());
        assert!(LinForm::from_ints(&[0, 0]).perp().is_err());
    }

    #[test]
    fn isotropy_examples() {
        assert!(LinForm::new(vec![GaussRat::one(), GaussRat::i()]).is_isotropic().unwrap());
        assert!(!LinForm::from_ints(&[1, 0]).is_isotropic().unwrap());
        assert!(!LinForm::new(vec![GaussRat::from_int(3), GaussRat::from_ints(0, 4)]).is_isotropic().unwrap());
        assert!(LinForm::from_ints(&[0, 0]).is_isotropic().is_err());
    }

    #[test]
    fn projective_equality() {
        let a = ProjPoint::from_ints(&[2, 4]).unwrap();
        let b = ProjPoint::from_ints(&[-1, -2]).unwrap();
        assert_eq!(a, b);
        let na = NumPoint::new(vec![CFloat::new(2.0, 0.0), CFloat::new(0.0, 4.0)]);
        let nb = NumPoint::new(vec![CFloat::new(0.0, -1.0), CFloat::new(2.0, 0.0)]);
        assert!(na.chordal_distance(&nb) < 1e-15);
        assert_eq!(na.rationalize(100, 1e-9).unwrap(), ProjPoint::new(vec![GaussRat::one(), GaussRat::from_ints(0, 2)]).unwrap());
    }
}
