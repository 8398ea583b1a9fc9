//! Dense univariate polynomials over ℚ(i), coefficients in ascending order.
//! This is the workhorse behind binary-form gcd, squarefree decomposition,
//! interpolation and root finding.

use num_traits::{One, Zero};

use crate::exactnum::numeric::{self, CFloat};
use crate::exactnum::{ExactMatrix, GaussRat};
use crate::error::Result;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly {
    coeffs: Vec<GaussRat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::new(vec![c])
    }

    /// `a + b·t`
    pub fn linear(a: GaussRat, b: GaussRat) -> Self {
        Self::new(vec![a, b])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| GaussRat::from_int(v)).collect())
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> GaussRat {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn lead(&self) -> Option<&GaussRat> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &GaussRat) -> GaussRat {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussRat::zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn eval_f64(&self, t: CFloat) -> CFloat {
        self.coeffs
            .iter()
            .rev()
            .fold(CFloat::new(0.0, 0.0), |acc, c| acc * t + c.to_complex())
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn scale(&self, s: &GaussRat) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
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
        UPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::constant(GaussRat::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussRat::from_int(k as i64))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().unwrap().inv();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![GaussRat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    r[k + j] -= &(&c * dc);
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn monic(&self) -> UPoly {
        match self.lead() {
            Some(l) => {
                let inv = l.inv();
                self.scale(&inv)
            }
            None => UPoly::zero(),
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn divides(&self, o: &UPoly) -> bool {
        o.div_rem(self).1.is_zero()
    }

    /// Yun's squarefree decomposition: returns `(c, [P_1, P_2, …])` with
    /// `self = c · Π P_m^m` and each `P_m` monic squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> (GaussRat, Vec<UPoly>) {
        let lc = self.lead().cloned().unwrap_or_else(GaussRat::zero);
        if self.degree().unwrap_or(0) == 0 {
            return (lc, Vec::new());
        }
        let f = self.monic();
        let fp = f.derivative();
        let a = f.gcd(&fp);
        let mut b = f.div_rem(&a).0;
        let mut c = fp.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        loop {
            let ai = b.gcd(&d);
            b = b.div_rem(&ai).0;
            c = d.div_rem(&ai).0;
            out.push(ai);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            d = c.sub(&b.derivative());
        }
        while out.last().is_some_and(|p| p.degree() == Some(0)) {
            out.pop();
        }
        (lc, out)
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> UPoly {
        let (_, parts) = self.squarefree_decomposition();
        parts
            .iter()
            .fold(UPoly::constant(GaussRat::one()), |acc, p| acc.mul(p))
    }

    /// Lagrange interpolation through `(xs[k], ys[k])`, degree < xs.len().
    pub fn interpolate(xs: &[GaussRat], ys: &[GaussRat]) -> UPoly {
        assert_eq!(xs.len(), ys.len());
        // Newton divided differences.
        let n = xs.len();
        let mut dd: Vec<GaussRat> = ys.to_vec();
        for level in 1..n {
            for k in (level..n).rev() {
                let num = &dd[k] - &dd[k - 1];
                let den = &xs[k] - &xs[k - level];
                dd[k] = &num / &den;
            }
        }
        let mut p = UPoly::constant(dd[n - 1].clone());
        for k in (0..n - 1).rev() {
            let factor = UPoly::linear(-&xs[k], GaussRat::one());
            p = p.mul(&factor).add(&UPoly::constant(dd[k].clone()));
        }
        p
    }

    /// Resultant with the given formal degrees, via the Sylvester matrix.
    pub fn resultant_formal(&self, m: usize, o: &UPoly, n: usize) -> GaussRat {
        let size = m + n;
        if size == 0 {
            return GaussRat::one();
        }
        let mut s = ExactMatrix::zeros(size, size);
        for row in 0..n {
            for k in 0..=m {
                s[(row, row + k)] = self.coeff(m - k);
            }
        }
        for row in 0..m {
            for k in 0..=n {
                s[(n + row, row + k)] = o.coeff(n - k);
            }
        }
        s.det()
    }

    /// All complex roots (with repetition) of a squarefree polynomial:
    /// companion-matrix eigenvalues, then Newton polishing.
    pub fn numeric_roots(&self) -> Result<Vec<CFloat>> {
        let Some(deg) = self.degree() else {
            return Ok(Vec::new());
        };
        if deg == 0 {
            return Ok(Vec::new());
        }
        let lead = self.lead().unwrap().to_complex();
        let c: Vec<CFloat> = self.coeffs.iter().map(|z| z.to_complex() / lead).collect();
        let mut comp = vec![vec![CFloat::new(0.0, 0.0); deg]; deg];
        for i in 1..deg {
            comp[i][i - 1] = CFloat::new(1.0, 0.0);
        }
        for i in 0..deg {
            comp[i][deg - 1] = -c[i];
        }
        let mut roots = numeric::eigenvalues(&comp)?;
        let dp = self.derivative();
        for r in roots.iter_mut() {
            for _ in 0..8 {
                let f = self.eval_f64(*r);
                let fp = dp.eval_f64(*r);
                if fp.norm() == 0.0 {
                    break;
                }
                let step = f / fp;
                if !step.re.is_finite() || !step.im.is_finite() {
                    break;
                }
                *r -= step;
                if step.norm() <= 1e-17 * (1.0 + r.norm()) {
                    break;
                }
            }
        }
        Ok(roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_and_gcd() {
        // (t-1)(t+2) and (t-1)(t-3)
        let a = UPoly::from_ints(&[-2, 1, 1]);
        let b = UPoly::from_ints(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), UPoly::from_ints(&[-1, 1]));
        let (q, r) = a.div_rem(&UPoly::from_ints(&[-1, 1]));
        assert_eq!(q, UPoly::from_ints(&[2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn yun_decomposition() {
        // (t-1)^3 (t+1)
        let p = UPoly::from_ints(&[-1, 1]).pow(3).mul(&UPoly::from_ints(&[1, 1]));
        let (c, parts) = p.squarefree_decomposition();
        assert_eq!(c, GaussRat::one());
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], UPoly::from_ints(&[1, 1]));
        assert_eq!(parts[1], UPoly::from_ints(&[1]));
        assert_eq!(parts[2], UPoly::from_ints(&[-1, 1]));
        assert_eq!(p.squarefree_part(), UPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UPoly::new(vec![
            GaussRat::from_ints(1, 2),
            GaussRat::from_int(-3),
            GaussRat::from_frac(1, 5),
            GaussRat::i(),
        ]);
        let xs: Vec<GaussRat> = (0..4).map(GaussRat::from_int).collect();
        let ys: Vec<GaussRat> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UPoly::interpolate(&xs, &ys), p);
    }

    #[test]
    fn resultant_detects_common_root() {
        let a = UPoly::from_ints(&[-2, 1, 1]);
        let b = UPoly::from_ints(&[3, -4, 1]);
        assert!(a.resultant_formal(2, &b, 2).is_zero());
        let c = UPoly::from_ints(&[1, 0, 1]);
        // Res(t²+t−2, t²+1) = Π over roots ±i of (t²+t−2) = (−3+i)(−3−i) = 10
        assert_eq!(a.resultant_formal(2, &c, 2), GaussRat::from_int(10));
    }

    #[test]
    fn numeric_roots_of_cubic() {
        let p = UPoly::from_ints(&[-6, 11, -6, 1]);
        let mut r: Vec<f64> = p.numeric_roots().unwrap().iter().map(|z| z.re).collect();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (x, e) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((x - e).abs() < 1e-12);
        }
    }
}
