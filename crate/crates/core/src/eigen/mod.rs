//! Eigenschemes of forms: the binary eigenpolynomial, the ideal of 2×2
//! minors of `[∇F(x); x]`, eigenvector tests and singular values.

mod monomial;

pub use monomial::{monomial_eigen_binary, monomial_minor, MonomialEigen};

use std::fmt;

use num_traits::Zero;

use crate::apolarity::Mode;
use crate::error::{Error, Result};
use crate::exactnum::{factorial, CFloat, GaussRat};
use crate::forms::{BForm, LinForm, NForm, NumPoint, ProjPoint};

/// `D = ∂F/∂x0 · x1 − ∂F/∂x1 · x0`. Zero exactly for multiples of
/// `(x0² + x1²)^(d/2)`.
pub fn eigen_poly_binary(f: &BForm) -> Result<BForm> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    if f.degree() == 0 {
        return Ok(BForm::zero(1));
    }
    let x0 = BForm::from_ints(&[1, 0]);
    let x1 = BForm::from_ints(&[0, 1]);
    f.d0().mul(&x1).sub(&f.d1().mul(&x0))
}

/// The 2×2 minors `∂_iF · x_j − ∂_jF · x_i` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigIdeal {
    pub generators: Vec<NForm>,
    pub pairs: Vec<(usize, usize)>,
}

impl EigIdeal {
    pub fn contains_point(&self, p: &[GaussRat]) -> bool {
        self.generators.iter().all(|g| g.eval(p).is_zero())
    }

    /// Largest generator value at a unit-normalized point.
    pub fn residual(&self, p: &[CFloat]) -> f64 {
        let n = p.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let q: Vec<CFloat> = p.iter().map(|z| z / n).collect();
        self.generators
            .iter()
            .map(|g| g.eval_complex(&q).norm() / g.norm1_f64().max(f64::MIN_POSITIVE))
            .fold(0.0, f64::max)
    }
}

pub fn eigen_ideal(f: &NForm) -> Result<EigIdeal> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    if f.degree() == 0 {
        return Err(Error::Precondition("constant form".into()));
    }
    let n = f.nvars();
    let grad = f.gradient();
    let xs: Vec<NForm> = (0..n)
        .map(|i| {
            let mut a = vec![0; n];
            a[i] = 1;
            NForm::monomial(&a)
        })
        .collect();
    let mut generators = Vec::new();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let g = grad[i].mul(&xs[j])?.sub(&grad[j].mul(&xs[i])?)?;
            generators.push(g);
            pairs.push((i, j));
        }
    }
    Ok(EigIdeal { generators, pairs })
}

/// `∇F(a) ∝ a`, tested exactly by 2×2 minors. Zero gradient counts.
pub fn is_eigenvector(f: &NForm, l: &LinForm) -> bool {
    if l.nvars() != f.nvars() || l.is_zero() || f.degree() == 0 {
        return false;
    }
    let g: Vec<GaussRat> = f.gradient().iter().map(|p| p.eval(&l.coords)).collect();
    let a = &l.coords;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if !(&(&g[i] * &a[j]) - &(&g[j] * &a[i])).is_zero() {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq)]
pub enum SingularValue {
    Exact(GaussRat),
    Numeric(CFloat),
    /// Isotropic eigenvector with zero gradient: every value works.
    Indeterminate,
    /// Isotropic eigenvector with nonzero gradient: no value works.
    UndefinedIsotropicNonzero,
}

impl fmt::Display for SingularValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularValue::Exact(v) => write!(f, "{v}"),
            SingularValue::Numeric(z) => write!(f, "{}", crate::forms::fmt_complex(*z)),
            SingularValue::Indeterminate => write!(f, "indeterminate"),
            SingularValue::UndefinedIsotropicNonzero => write!(f, "undefined (isotropic, nonzero gradient)"),
        }
    }
}

/// The `μ` with `L^(d−1) ∘ (F − μ L^d) = 0`, computed from
/// `L^(d−1) ∘ F = μ · d! · ⟨L,L⟩^(d−1) · L`.
pub fn singular_value(f: &NForm, l: &LinForm) -> Result<SingularValue> {
    if l.is_zero() {
        return Err(Error::ZeroLinearForm);
    }
    if !is_eigenvector(f, l) {
        return Err(Error::NotEigenvector(l.to_string()));
    }
    let d = f.degree();
    let op = l.power(d - 1);
    let g = op.apolar_apply(f)?;
    let c = l.dot(l);
    if c.is_zero() {
        return Ok(if g.is_zero() {
            SingularValue::Indeterminate
        } else {
            SingularValue::UndefinedIsotropicNonzero
        });
    }
    let (i, ai) = l
        .coords
        .iter()
        .enumerate()
        .find(|(_, a)| !a.is_zero())
        .expect("nonzero");
    let mut alpha = vec![0u32; f.nvars()];
    alpha[i] = 1;
    let gi = g.coeff(&alpha);
    let denom = &(&GaussRat::from_big(factorial(d)) * &c.pow(d - 1)) * ai;
    Ok(SingularValue::Exact(&gi / &denom))
}

/// `F(p) / ⟨p,p⟩^d` in floating point, after checking that `p` is an
/// eigenvector to tolerance. Isotropy is decided by `|⟨p̂,p̂⟩| ≤ tol`.
pub fn singular_value_numeric(f: &NForm, p: &NumPoint, tol: f64) -> SingularValue {
    let q = p.coords();
    let c = p.self_pairing();
    if c.norm() <= tol {
        let grad: f64 = f
            .gradient()
            .iter()
            .map(|g| g.eval_complex(q).norm_sqr())
            .sum::<f64>()
            .sqrt();
        return if grad <= tol * f.norm1_f64().max(1.0) {
            SingularValue::Indeterminate
        } else {
            SingularValue::UndefinedIsotropicNonzero
        };
    }
    SingularValue::Numeric(f.eval_complex(q) / c.powu(f.degree()))
}

#[derive(Clone, Debug, PartialEq)]
pub enum EigLocation {
    Exact(ProjPoint),
    Numeric(NumPoint),
}

impl EigLocation {
    pub fn to_numeric(&self) -> NumPoint {
        match self {
            EigLocation::Exact(p) => p.to_numeric(),
            EigLocation::Numeric(p) => p.clone(),
        }
    }

    pub fn exact(&self) -> Option<&ProjPoint> {
        match self {
            EigLocation::Exact(p) => Some(p),
            EigLocation::Numeric(_) => None,
        }
    }
}

impl fmt::Display for EigLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigLocation::Exact(p) => write!(f, "{p}"),
            EigLocation::Numeric(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigPoint {
    pub point: EigLocation,
    pub multiplicity: usize,
    pub singular_value: SingularValue,
}

/// Roots of a binary form with multiplicity. In exact mode a root is
/// returned exactly when it lies in ℚ(i), which is confirmed by exact
/// evaluation; otherwise it is a floating point.
pub fn split_roots(form: &BForm, mode: Mode, tol: f64) -> Result<Vec<(EigLocation, usize)>> {
    let mut out = Vec::new();
    for (idx, part) in form.squarefree_decomposition()?.iter().enumerate() {
        let mult = idx + 1;
        if part.degree() == 0 {
            continue;
        }
        for (p, m) in part.roots_numeric(tol)? {
            let exact = match mode {
                Mode::Exact => p
                    .rationalize(1 << 20, 1e-8)
                    .filter(|q| part.eval(&q.coords()[0], &q.coords()[1]).is_zero()),
                Mode::Numeric => None,
            };
            let loc = match exact {
                Some(q) => EigLocation::Exact(q),
                None => EigLocation::Numeric(p),
            };
            out.push((loc, m * mult));
        }
    }
    Ok(out)
}

/// Attach the singular value of `F` at an eigenpoint.
pub fn eig_point(f: &NForm, loc: EigLocation, multiplicity: usize, tol: f64) -> Result<EigPoint> {
    let singular_value = match &loc {
        EigLocation::Exact(q) => singular_value(f, &q.to_linform())?,
        EigLocation::Numeric(p) => singular_value_numeric(f, p, tol),
    };
    Ok(EigPoint { point: loc, multiplicity, singular_value })
}

/// Points of the binary eigenscheme with multiplicity. Exact mode returns
/// exact points wherever the root lies in ℚ(i) and floating points
/// elsewhere.
pub fn eigen_support_binary(f: &BForm, mode: Mode, tol: f64) -> Result<Vec<EigPoint>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let dpoly = eigen_poly_binary(f)?;
    if dpoly.is_zero() {
        return Err(Error::DegenerateEigen(format!(
            "{f} is a multiple of a power of x0² + x1²; every point is an eigenvector"
        )));
    }
    let nf = f.to_nform();
    split_roots(&dpoly, mode, tol)?
        .into_iter()
        .map(|(loc, m)| eig_point(&nf, loc, m, tol))
        .collect()
}

/// Eigenpoints of a binary form whose coordinates are Gaussian rational,
/// with multiplicity, found exactly.
pub fn rational_eigenpoints(f: &BForm) -> Result<Vec<(ProjPoint, usize)>> {
    Ok(eigen_support_binary(f, Mode::Exact, 1e-10)?
        .into_iter()
        .filter_map(|e| e.point.exact().cloned().map(|p| (p, e.multiplicity)))
        .collect())
}

/// Does `D_F` vanish at `[L]`?
pub fn is_eigenvector_binary(f: &BForm, l: &LinForm) -> bool {
    eigen_poly_binary(f)
        .map(|d| d.eval(&l.coords[0], &l.coords[1]).is_zero())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::parse_form;

    fn lin(c: &[i64]) -> LinForm {
        LinForm::from_ints(c)
    }

    fn example_family(d: usize) -> BForm {
        parse_form(&format!("x^{d} + y^{d} + (x+y)^{d}")).unwrap().to_bform().unwrap()
    }

    #[test]
    fn power_eigenpoly() {
        for d in 2..8usize {
            let dp = eigen_poly_binary(&BForm::monomial(d, 0)).unwrap();
            assert_eq!(dp, BForm::monomial(d, 1).scale(&GaussRat::from_int(d as i64)));
            let pts = rational_eigenpoints(&BForm::monomial(d, 0)).unwrap();
            assert!(pts.contains(&(ProjPoint::from_ints(&[0, 1]).unwrap(), d - 1)));
            assert!(pts.contains(&(ProjPoint::from_ints(&[1, 0]).unwrap(), 1)));
        }
    }

    #[test]
    fn monomial_eigenpoly_closed_form() {
        for d in 2..9usize {
            for j in 1..d {
                let dp = eigen_poly_binary(&BForm::monomial(d, j)).unwrap();
                // x^(d-j-1) y^(j-1) ((d-j) y² − j x²)
                let want = BForm::monomial(d - 2, j - 1).mul(&BForm::from_ints(&[-(j as i64), 0, (d - j) as i64]));
                assert_eq!(dp, want);
            }
        }
    }

    #[test]
    fn isotropic_power_degenerates() {
        let f = parse_form("(x^2 + y^2)^2").unwrap().to_bform().unwrap();
        assert!(eigen_poly_binary(&f).unwrap().is_zero());
        assert!(matches!(eigen_support_binary(&f, Mode::Exact, 1e-9), Err(Error::DegenerateEigen(_))));
    }

    #[test]
    fn example_family_support() {
        for d in 3..9 {
            let f = example_family(d);
            let pts = rational_eigenpoints(&f).unwrap();
            assert!(pts.iter().any(|(p, _)| *p == ProjPoint::from_ints(&[1, 1]).unwrap()));
            assert!(!pts.iter().any(|(p, _)| *p == ProjPoint::from_ints(&[1, 0]).unwrap()));
            assert!(!pts.iter().any(|(p, _)| *p == ProjPoint::from_ints(&[0, 1]).unwrap()));
            assert!(!is_eigenvector(&f.to_nform(), &lin(&[1, 0])));
            let mu = GaussRat::from_int(1) + GaussRat::from_int(2).pow(d as u32 - 1).inv();
            assert_eq!(singular_value(&f.to_nform(), &lin(&[1, 1])).unwrap(), SingularValue::Exact(mu));
        }
    }

    #[test]
    fn singular_value_examples() {
        for d in 3..7u32 {
            let alpha = GaussRat::from_frac(7, 3);
            let f = parse_form(&format!("7/3*x0^{d} + x1^{d} + (x1 + x2)^{d}")).unwrap();
            assert_eq!(singular_value(&f, &lin(&[1, 0, 0])).unwrap(), SingularValue::Exact(alpha));
            let g = parse_form(&format!("(x0 + i*x1)^{d} + x2^{d} + (x2 + x3)^{d}")).unwrap();
            let l = LinForm::new(vec![GaussRat::from_int(1), GaussRat::i(), GaussRat::zero(), GaussRat::zero()]);
            assert_eq!(singular_value(&g, &l).unwrap(), SingularValue::Indeterminate);
        }
    }

    #[test]
    fn undefined_isotropic() {
        // x0 (x0² + x1²) has gradient 2·(1, i) at (1, i)
        let f = parse_form("x0*(x0^2 + x1^2)").unwrap();
        let l = LinForm::new(vec![GaussRat::from_int(1), GaussRat::i()]);
        assert!(is_eigenvector(&f, &l));
        assert_eq!(singular_value(&f, &l).unwrap(), SingularValue::UndefinedIsotropicNonzero);
        assert!(matches!(singular_value(&f, &lin(&[1, 1])), Err(Error::NotEigenvector(_))));
    }

    #[test]
    fn eigenvector_examples() {
        let f = BForm::monomial(5, 0).to_nform();
        assert!(is_eigenvector(&f, &lin(&[0, 1])));
        assert!(is_eigenvector(&f, &lin(&[1, 0])));
        assert!(!is_eigenvector(&f, &lin(&[1, 1])));
        let sum = parse_form("x0^4 + x1^4 + x2^4").unwrap();
        let ideal = eigen_ideal(&sum).unwrap();
        assert_eq!(ideal.generators.len(), 3);
        for i in 0..3 {
            let mut p = vec![GaussRat::zero(); 3];
            p[i] = GaussRat::from_int(1);
            assert!(ideal.contains_point(&p));
        }
    }

    #[test]
    fn singular_value_matches_ratio() {
        // F(a)/⟨a,a⟩^d for eigenvectors with nonzero gradient
        let f = example_family(5).to_nform();
        let a = [GaussRat::from_int(1), GaussRat::from_int(1)];
        let direct = &f.eval(&a) / &GaussRat::from_int(2).pow(5);
        assert_eq!(singular_value(&f, &lin(&[1, 1])).unwrap(), SingularValue::Exact(direct));
    }
}
