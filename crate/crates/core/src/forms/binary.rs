//! Dense binary forms. `coeffs[k]` is the coefficient of `x0^(d-k) x1^k`.
//!
//! Dehomogenizing at `x1 = 1` gives a univariate polynomial in
//! `s = x0/x1` whose coefficient of `s^(d-k)` is `coeffs[k]`; a drop in its
//! degree is a root at `[1:0]`.

use std::fmt;

use num_traits::{One, Zero};

use super::points::NumPoint;
use super::univariate::UPoly;
use crate::error::{Error, Result};
use crate::exactnum::{factorial, CFloat, GaussRat};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BForm {
    coeffs: Vec<GaussRat>,
}

impl BForm {
    /// Form of degree `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<GaussRat>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BForm { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| GaussRat::from_int(v)).collect())
    }

    pub fn zero(d: usize) -> Self {
        Self::new(vec![GaussRat::zero(); d + 1])
    }

    /// `x0^(d-k) x1^k`
    pub fn monomial(d: usize, k: usize) -> Self {
        let mut f = Self::zero(d);
        f.coeffs[k] = GaussRat::one();
        f
    }

    /// `(a0 x0 + a1 x1)^d`
    pub fn linear_power(a0: &GaussRat, a1: &GaussRat, d: usize) -> Self {
        Self::new(vec![a0.clone(), a1.clone()]).pow(d as u32)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &GaussRat {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_same_degree(&self, o: &BForm) -> Result<()> {
        if self.degree() != o.degree() {
            return Err(Error::DegreeMismatch(format!("{} vs {}", self.degree(), o.degree())));
        }
        Ok(())
    }

    pub fn add(&self, o: &BForm) -> Result<BForm> {
        self.check_same_degree(o)?;
        Ok(BForm::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, o: &BForm) -> Result<BForm> {
        self.check_same_degree(o)?;
        Ok(BForm::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, s: &GaussRat) -> BForm {
        BForm::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &BForm) -> BForm {
        let mut out = vec![GaussRat::zero(); self.degree() + o.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        BForm::new(out)
    }

    pub fn pow(&self, e: u32) -> BForm {
        let mut acc = BForm::new(vec![GaussRat::one()]);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// ∂F/∂x0
    pub fn d0(&self) -> BForm {
        let d = self.degree();
        if d == 0 {
            return BForm::zero(0);
        }
        BForm::new(
            (0..d)
                .map(|k| &self.coeffs[k] * &GaussRat::from_int((d - k) as i64))
                .collect(),
        )
    }

    /// ∂F/∂x1
    pub fn d1(&self) -> BForm {
        let d = self.degree();
        if d == 0 {
            return BForm::zero(0);
        }
        BForm::new(
            (0..d)
                .map(|k| &self.coeffs[k + 1] * &GaussRat::from_int((k + 1) as i64))
                .collect(),
        )
    }

    pub fn eval(&self, p0: &GaussRat, p1: &GaussRat) -> GaussRat {
        let d = self.degree();
        // Horner in the ratio, kept homogeneous.
        let mut acc = GaussRat::zero();
        let mut p1_pow = GaussRat::one();
        let p0_pows: Vec<GaussRat> = std::iter::successors(Some(GaussRat::one()), |x| Some(x * p0))
            .take(d + 1)
            .collect();
        for k in 0..=d {
            if !self.coeffs[k].is_zero() {
                acc += &(&self.coeffs[k] * &(&p0_pows[d - k] * &p1_pow));
            }
            p1_pow = &p1_pow * p1;
        }
        acc
    }

    pub fn eval_complex(&self, p0: CFloat, p1: CFloat) -> CFloat {
        let d = self.degree();
        let mut acc = CFloat::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c.to_complex() * p0.powu((d - k) as u32) * p1.powu(k as u32);
            }
        }
        acc
    }

    pub fn to_complex(&self) -> Vec<CFloat> {
        self.coeffs.iter().map(GaussRat::to_complex).collect()
    }

    /// ℓ¹ norm of the coefficient vector, as a float.
    pub fn norm1_f64(&self) -> f64 {
        self.coeffs.iter().map(|c| c.to_complex().norm()).sum()
    }

    /// Substitute `x0 ← l0`, `x1 ← l1` for binary linear forms `l0`, `l1`.
    pub fn substitute(&self, l0: &BForm, l1: &BForm) -> BForm {
        let d = self.degree();
        let p0: Vec<BForm> = (0..=d).map(|e| l0.pow(e as u32)).collect();
        let p1: Vec<BForm> = (0..=d).map(|e| l1.pow(e as u32)).collect();
        let mut out = BForm::zero(d);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = p0[d - k].mul(&p1[k]).scale(c);
            out = out.add(&term).expect("same degree");
        }
        out
    }

    /// Univariate polynomial in `s = x0/x1`.
    pub fn dehomogenize(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Inverse of [`dehomogenize`](Self::dehomogenize) at a given degree.
    pub fn from_univariate(h: &UPoly, d: usize) -> BForm {
        let hd = h.degree().unwrap_or(0);
        assert!(hd <= d, "polynomial degree exceeds form degree");
        BForm::new((0..=d).map(|k| h.coeff(d - k)).collect())
    }

    /// Multiplicity of the root `[1:0]`, i.e. the power of `x1` dividing F.
    pub fn mult_at_infinity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Scale so that the first nonzero coefficient is 1.
    pub fn normalized(&self) -> BForm {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// True if `self = c · o` for some nonzero scalar `c`.
    pub fn proportional(&self, o: &BForm) -> bool {
        self.degree() == o.degree() && !self.is_zero() && !o.is_zero() && self.normalized() == o.normalized()
    }

    /// Dense apolar action `self(∂) ∘ f`.
    pub fn apolar_apply(&self, f: &BForm) -> Result<BForm> {
        let k = self.degree();
        let d = f.degree();
        if k > d {
            return Err(Error::DegreeMismatch(format!("operator degree {k} exceeds form degree {d}")));
        }
        let mut out = vec![GaussRat::zero(); d - k + 1];
        for (j, g) in self.coeffs.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            // ∂0^(k-j) ∂1^j applied to x0^(d-m) x1^m
            for m in j..=(d - k + j) {
                let fm = &f.coeffs[m];
                if fm.is_zero() {
                    continue;
                }
                let w = falling(d - m, k - j) * falling(m, j);
                out[m - j] += &(&(g * fm) * &GaussRat::from_big(w));
            }
        }
        Ok(BForm::new(out))
    }

    /// Bombieri–Weyl product `Σ binom(d,k)^(-1) F_k G_k`.
    pub fn bw_inner(&self, g: &BForm) -> Result<GaussRat> {
        self.check_same_degree(g)?;
        let d = self.degree() as u32;
        let mut acc = GaussRat::zero();
        for (k, (a, b)) in self.coeffs.iter().zip(&g.coeffs).enumerate() {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let w = GaussRat::from_big(crate::exactnum::binomial(d, k as u32)).inv();
            acc += &(&(a * b) * &w);
        }
        Ok(acc)
    }

    /// Monic gcd (first nonzero coefficient 1).
    pub fn gcd(&self, o: &BForm) -> Result<BForm> {
        match (self.is_zero(), o.is_zero()) {
            (true, true) => return Err(Error::ZeroForm),
            (true, false) => return Ok(o.normalized()),
            (false, true) => return Ok(self.normalized()),
            _ => {}
        }
        let g = self.dehomogenize().gcd(&o.dehomogenize());
        let e = self.mult_at_infinity().min(o.mult_at_infinity());
        let gd = g.degree().unwrap_or(0);
        Ok(BForm::from_univariate(&g, gd + e))
    }

    /// `(F_1, F_2, …)` monic, pairwise coprime, squarefree, with
    /// `F = c · Π F_m^m`. Trailing constant factors are dropped.
    pub fn squarefree_decomposition(&self) -> Result<Vec<BForm>> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let e = self.mult_at_infinity();
        let (_, parts) = self.dehomogenize().squarefree_decomposition();
        let len = parts.len().max(e);
        let mut out = Vec::with_capacity(len);
        for m in 1..=len {
            let p = parts
                .get(m - 1)
                .cloned()
                .unwrap_or_else(|| UPoly::constant(GaussRat::one()));
            let pd = p.degree().unwrap_or(0);
            let form = if m == e {
                BForm::from_univariate(&p, pd + 1)
            } else {
                BForm::from_univariate(&p, pd)
            };
            out.push(form);
        }
        Ok(out)
    }

    /// Product of the distinct linear factors, normalized.
    pub fn squarefree_part(&self) -> Result<BForm> {
        let parts = self.squarefree_decomposition()?;
        Ok(parts
            .iter()
            .fold(BForm::new(vec![GaussRat::one()]), |acc, p| acc.mul(p))
            .normalized())
    }

    /// No repeated linear factor over ℂ. Nonzero forms of degree ≤ 1 are squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.mult_at_infinity() >= 2 {
            return false;
        }
        let u = self.dehomogenize();
        u.gcd(&u.derivative()).degree().unwrap_or(0) == 0
    }

    /// Homogeneous resultant; vanishes iff F and G share a projective root.
    pub fn resultant(&self, o: &BForm) -> Result<GaussRat> {
        if self.is_zero() && o.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(self
            .dehomogenize()
            .resultant_formal(self.degree(), &o.dehomogenize(), o.degree()))
    }

    /// `(-1)^(k(k-1)/2) Res(∂0F, ∂1F) / k^(k-2)`; for `x0² + x1²` this is −4.
    pub fn discriminant(&self) -> Result<GaussRat> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let k = self.degree();
        if k <= 1 {
            return Ok(GaussRat::one());
        }
        let r = self.d0().resultant(&self.d1())?;
        let sign = if (k * (k - 1) / 2) % 2 == 1 { -GaussRat::one() } else { GaussRat::one() };
        let scale = GaussRat::from_int(k as i64).pow((k - 2) as u32).inv();
        Ok(&(&sign * &r) * &scale)
    }

    /// Projective roots with multiplicity. Repeated factors are split off
    /// exactly first, so each cluster comes from a squarefree factor and is
    /// Newton-polished. Roots closer than `tol` (chordal distance) are
    /// merged. For a unit-normalized reported root `p̂`,
    /// `|F(p̂)| ≤ 1e-8 · ‖F‖₁` in all tested regimes.
    pub fn roots_numeric(&self, tol: f64) -> Result<Vec<(NumPoint, usize)>> {
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(Error::InvalidTolerance(tol));
        }
        let parts = self.squarefree_decomposition()?;
        let mut found: Vec<(NumPoint, usize)> = Vec::new();
        for (idx, part) in parts.iter().enumerate() {
            let mult = idx + 1;
            let e = part.mult_at_infinity();
            let mut pts: Vec<NumPoint> = Vec::new();
            if e > 0 {
                pts.push(NumPoint::new(vec![CFloat::new(1.0, 0.0), CFloat::new(0.0, 0.0)]));
            }
            for s in part.dehomogenize().numeric_roots()? {
                pts.push(NumPoint::new(vec![s, CFloat::new(1.0, 0.0)]));
            }
            for p in pts {
                if let Some(slot) = found.iter_mut().find(|(q, _)| q.chordal_distance(&p) < tol) {
                    slot.1 += mult;
                } else {
                    found.push((p, mult));
                }
            }
        }
        Ok(found)
    }

    pub fn to_nform(&self) -> super::NForm {
        let d = self.degree() as u32;
        let mut f = super::NForm::zero(2, d);
        for (k, c) in self.coeffs.iter().enumerate() {
            f.add_term(vec![d - k as u32, k as u32], c.clone());
        }
        f
    }
}

/// `n (n-1) ··· (n-k+1)`
pub fn falling(n: usize, k: usize) -> num_bigint::BigInt {
    if k > n {
        return num_bigint::BigInt::from(0);
    }
    factorial(n as u32) / factorial((n - k) as u32)
}

impl fmt::Display for BForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_nform(), f)
    }
}

impl fmt::Debug for BForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BForm({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussRat {
        GaussRat::from_int(v)
    }

    #[test]
    fn apolar_power_examples() {
        for d in 2..7usize {
            let f = BForm::monomial(d, 0);
            let op = BForm::monomial(d - 1, 0);
            let want = BForm::monomial(1, 0).scale(&GaussRat::from_big(factorial(d as u32)));
            assert_eq!(op.apolar_apply(&f).unwrap(), want);
            assert!(BForm::monomial(1, 1).apolar_apply(&f).unwrap().is_zero());
            // (∂0+∂1)^(d-1) ∘ (x0+x1)^d = d! 2^(d-1) (x0+x1)
            let l = BForm::linear_power(&g(1), &g(1), d);
            let op = BForm::linear_power(&g(1), &g(1), d - 1);
            let c = GaussRat::from_big(factorial(d as u32)) * g(2).pow((d - 1) as u32);
            assert_eq!(op.apolar_apply(&l).unwrap(), BForm::from_ints(&[1, 1]).scale(&c));
        }
    }

    #[test]
    fn apolar_degree_mismatch() {
        let f = BForm::monomial(2, 0);
        assert!(matches!(BForm::monomial(3, 0).apolar_apply(&f), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn bw_examples() {
        for d in 1..8usize {
            let x0d = BForm::monomial(d, 0);
            assert_eq!(x0d.bw_inner(&x0d).unwrap(), GaussRat::one());
            let sum = BForm::linear_power(&g(1), &g(1), d);
            assert_eq!(sum.bw_inner(&x0d).unwrap(), GaussRat::one());
            let m = BForm::monomial(d, 1);
            assert_eq!(m.bw_inner(&m).unwrap(), GaussRat::from_frac(1, d as i64));
        }
    }

    #[test]
    fn gcd_and_squarefree() {
        // x0²x1 and x0x1²
        let a = BForm::from_ints(&[0, 1, 0, 0]);
        let b = BForm::from_ints(&[0, 0, 1, 0]);
        assert_eq!(a.gcd(&b).unwrap(), BForm::from_ints(&[0, 1, 0]));
        // x0 x1 (x0 + x1) = x0²x1 + x0x1²
        assert!(BForm::from_ints(&[0, 1, 1, 0]).is_squarefree());
        assert!(!a.is_squarefree());
        assert!(!BForm::from_ints(&[0, 0, 1]).is_squarefree());
        assert!(BForm::from_ints(&[0, 1]).is_squarefree());
        assert!(matches!(BForm::zero(2).gcd(&BForm::zero(2)), Err(Error::ZeroForm)));
    }

    #[test]
    fn squarefree_decomposition_with_x1_power() {
        // x0^3 x1^2 (x0 - x1)
        let f = BForm::from_ints(&[0, 1]).pow(2).mul(&BForm::from_ints(&[1, 0]).pow(3)).mul(&BForm::from_ints(&[1, -1]));
        let parts = f.squarefree_decomposition().unwrap();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], BForm::from_ints(&[1, -1]));
        assert_eq!(parts[1], BForm::from_ints(&[0, 1]));
        assert_eq!(parts[2], BForm::from_ints(&[1, 0]));
        assert_eq!(f.squarefree_part().unwrap(), BForm::from_ints(&[0, 1, -1, 0]));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(BForm::from_ints(&[1, 0, 1]).discriminant().unwrap(), g(-4));
        assert!(BForm::from_ints(&[1, 2, 1]).discriminant().unwrap().is_zero());
        // cubic x0³ - x0 x1² = x0 (x0-x1)(x0+x1): b²c² − 4ac³ − 4b³d − 27a²d² + 18abcd with
        // a=1, b=0, c=−1, d=0 gives 4
        assert_eq!(BForm::from_ints(&[1, 0, -1, 0]).discriminant().unwrap(), g(4));
    }

    #[test]
    fn resultant_common_root() {
        let a = BForm::from_ints(&[0, 1, 0]);
        let b = BForm::from_ints(&[0, 1]);
        assert!(a.resultant(&b).unwrap().is_zero());
        // Res(x0, x1) = ±1
        let r = BForm::from_ints(&[1, 0]).resultant(&BForm::from_ints(&[0, 1])).unwrap();
        assert_eq!(r.norm(), crate::exactnum::Rat::one());
    }

    #[test]
    fn numeric_roots_examples() {
        let roots = BForm::from_ints(&[0, 1, 0]).roots_numeric(1e-9).unwrap();
        assert_eq!(roots.len(), 2);
        let inf = NumPoint::new(vec![CFloat::new(1.0, 0.0), CFloat::new(0.0, 0.0)]);
        let zero = NumPoint::new(vec![CFloat::new(0.0, 0.0), CFloat::new(1.0, 0.0)]);
        assert!(roots.iter().any(|(p, m)| *m == 1 && p.chordal_distance(&inf) < 1e-12));
        assert!(roots.iter().any(|(p, m)| *m == 1 && p.chordal_distance(&zero) < 1e-12));

        let cube = BForm::from_ints(&[1, -1]).pow(3);
        let roots = cube.roots_numeric(1e-9).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].1, 3);
        let one = NumPoint::new(vec![CFloat::new(1.0, 0.0), CFloat::new(1.0, 0.0)]);
        assert!(roots[0].0.chordal_distance(&one) < 1e-12);

        let iso = BForm::from_ints(&[1, 0, 1]).roots_numeric(1e-9).unwrap();
        for target in [CFloat::new(0.0, 1.0), CFloat::new(0.0, -1.0)] {
            let p = NumPoint::new(vec![CFloat::new(1.0, 0.0), target]);
            assert!(iso.iter().any(|(q, _)| q.chordal_distance(&p) < 1e-12));
        }
        assert!(BForm::from_ints(&[1, 0]).roots_numeric(0.0).is_err());
    }

    #[test]
    fn x0_power_multiplicities() {
        // x0^(d-1) x1 vanishes at [0:1] to order d-1 and at [1:0] once.
        let d = 5;
        let roots = BForm::monomial(d, 1).roots_numeric(1e-9).unwrap();
        let zero = NumPoint::new(vec![CFloat::new(0.0, 0.0), CFloat::new(1.0, 0.0)]);
        let inf = NumPoint::new(vec![CFloat::new(1.0, 0.0), CFloat::new(0.0, 0.0)]);
        assert!(roots.iter().any(|(p, m)| *m == d - 1 && p.chordal_distance(&zero) < 1e-12));
        assert!(roots.iter().any(|(p, m)| *m == 1 && p.chordal_distance(&inf) < 1e-12));
    }

    #[test]
    fn substitution_matches_evaluation() {
        let f = BForm::from_ints(&[2, -1, 3, 5]);
        let l0 = BForm::from_ints(&[1, 2]);
        let l1 = BForm::from_ints(&[-3, 1]);
        let h = f.substitute(&l0, &l1);
        let (p0, p1) = (g(7), g(-2));
        assert_eq!(h.eval(&p0, &p1), f.eval(&l0.eval(&p0, &p1), &l1.eval(&p0, &p1)));
    }
}
