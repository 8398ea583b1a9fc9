//! Closed forms for eigenschemes of monomials.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::GaussRat;
use crate::forms::{BForm, LinForm, NForm, NumPoint, ProjPoint};

/// The minor `∂_iF·x_j − ∂_jF·x_i` of `F = Π x_k^(e_k)`, written as
/// `F/(x_i x_j) · (e_i x_j² − e_j x_i²)`. Requires every exponent ≥ 1.
pub fn monomial_minor(exps: &[u32], i: usize, j: usize) -> Result<NForm> {
    if exps.contains(&0) {
        return Err(Error::Precondition("every exponent must be positive".into()));
    }
    if i == j || i >= exps.len() || j >= exps.len() {
        return Err(Error::OutOfRange(format!("minor ({i}, {j})")));
    }
    let mut base = exps.to_vec();
    base[i] -= 1;
    base[j] -= 1;
    let mut a = base.clone();
    a[j] += 2;
    let mut b = base;
    b[i] += 2;
    NForm::from_terms(
        exps.len(),
        exps.iter().sum(),
        [
            (a, GaussRat::from_int(exps[i] as i64)),
            (b, GaussRat::from_int(-(exps[j] as i64))),
        ],
    )
}

/// Eigenscheme of `L^(d−j) M^j`: the factor `L^(d−j−1) M^(j−1)` of the
/// eigenpolynomial contributes the points `[L^⊥]` and `[M^⊥]`; the
/// remaining quadric contributes two more.
#[derive(Clone, Debug)]
pub struct MonomialEigen {
    pub form: BForm,
    /// Present when `d − j ≥ 2`.
    pub l_perp: Option<ProjPoint>,
    /// Present when `j ≥ 2`.
    pub m_perp: Option<ProjPoint>,
    /// `(d−j)·M·L̃ + j·L·M̃` where `L̃ = a0 x1 − a1 x0` for `L = a0 x0 + a1 x1`.
    pub quadric: BForm,
    pub quadric_roots: Vec<(NumPoint, usize)>,
    /// Quadric roots that are Gaussian rational.
    pub quadric_exact_roots: Vec<ProjPoint>,
}

impl MonomialEigen {
    /// All support points as floating points.
    pub fn support(&self) -> Vec<NumPoint> {
        let mut pts: Vec<NumPoint> = Vec::new();
        let mut push = |p: NumPoint| {
            if !pts.iter().any(|q| q.chordal_distance(&p) < 1e-9) {
                pts.push(p);
            }
        };
        if let Some(p) = &self.l_perp {
            push(p.to_numeric());
        }
        if let Some(p) = &self.m_perp {
            push(p.to_numeric());
        }
        for (p, _) in &self.quadric_roots {
            push(p.clone());
        }
        pts
    }
}

fn tilde(l: &LinForm) -> BForm {
    // a0 x1 − a1 x0
    BForm::new(vec![-&l.coords[1], l.coords[0].clone()])
}

pub fn monomial_eigen_binary(d: usize, j: usize, l: &LinForm, m: &LinForm) -> Result<MonomialEigen> {
    if l.nvars() != 2 || m.nvars() != 2 {
        return Err(Error::VariableMismatch(l.nvars().max(m.nvars()), 2));
    }
    if j == 0 || 2 * j > d {
        return Err(Error::OutOfRange(format!("need 1 ≤ j ≤ d/2, got j = {j}, d = {d}")));
    }
    if l.is_zero() || m.is_zero() {
        return Err(Error::ZeroLinearForm);
    }
    if (&(&l.coords[0] * &m.coords[1]) - &(&l.coords[1] * &m.coords[0])).is_zero() {
        return Err(Error::Proportional);
    }
    let lf = BForm::new(l.coords.clone());
    let mf = BForm::new(m.coords.clone());
    let form = lf.pow((d - j) as u32).mul(&mf.pow(j as u32));
    let quadric = mf
        .mul(&tilde(l))
        .scale(&GaussRat::from_int((d - j) as i64))
        .add(&lf.mul(&tilde(m)).scale(&GaussRat::from_int(j as i64)))?;
    let quadric_roots = if quadric.is_zero() { Vec::new() } else { quadric.roots_numeric(1e-10)? };
    let quadric_exact_roots = quadric_roots
        .iter()
        .filter_map(|(p, _)| p.rationalize(1 << 20, 1e-8))
        .filter(|q| quadric.eval(&q.coords()[0], &q.coords()[1]).is_zero())
        .collect();
    let perp = |x: &LinForm| x.perp().and_then(|p| p.to_point());
    Ok(MonomialEigen {
        form,
        l_perp: if d - j >= 2 { Some(perp(l)?) } else { None },
        m_perp: if j >= 2 { Some(perp(m)?) } else { None },
        quadric,
        quadric_roots,
        quadric_exact_roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{eigen_ideal, eigen_poly_binary};
    use crate::exactnum::CFloat;

    #[test]
    fn minors_match_eigen_ideal() {
        for exps in [vec![1u32, 1, 3], vec![2, 2, 3], vec![1, 2, 2, 3], vec![3, 1, 1]] {
            let f = NForm::monomial(&exps);
            let ideal = eigen_ideal(&f).unwrap();
            for (g, &(i, j)) in ideal.generators.iter().zip(&ideal.pairs) {
                assert_eq!(*g, monomial_minor(&exps, i, j).unwrap());
            }
        }
    }

    #[test]
    fn example_x_y_quartic() {
        let e = monomial_eigen_binary(4, 1, &LinForm::from_ints(&[1, 0]), &LinForm::from_ints(&[0, 1])).unwrap();
        assert_eq!(e.l_perp, Some(ProjPoint::from_ints(&[0, 1]).unwrap()));
        assert!(e.m_perp.is_none());
        // quadric proportional to 3y² − x²
        assert!(e.quadric.proportional(&BForm::from_ints(&[-1, 0, 3])));
        let s3 = 3f64.sqrt();
        for sign in [1.0, -1.0] {
            let want = NumPoint::new(vec![CFloat::new(sign * s3, 0.0), CFloat::new(1.0, 0.0)]);
            assert!(e.support().iter().any(|p| p.chordal_distance(&want) < 1e-12));
        }
        assert_eq!(e.support().len(), 3);
    }

    #[test]
    fn closed_form_agrees_with_direct_eigenpolynomial() {
        let pairs = [([1, 2], [3, -1]), ([2, 1], [1, 1]), ([1, 0], [1, 5])];
        for (a, b) in pairs {
            let (l, m) = (LinForm::from_ints(&a), LinForm::from_ints(&b));
            for d in 3..8usize {
                for j in 1..=d / 2 {
                    let e = monomial_eigen_binary(d, j, &l, &m).unwrap();
                    let lf = BForm::new(l.coords.clone());
                    let mf = BForm::new(m.coords.clone());
                    let want = lf.pow((d - j - 1) as u32).mul(&mf.pow((j - 1) as u32)).mul(&e.quadric);
                    assert_eq!(eigen_poly_binary(&e.form).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn isotropic_m_collapses_onto_m() {
        let l = LinForm::from_ints(&[1, 0]);
        let m = LinForm::new(vec![GaussRat::from_int(1), GaussRat::i()]);
        let e = monomial_eigen_binary(5, 1, &l, &m).unwrap();
        let mp = m.to_point().unwrap().to_numeric();
        assert!(e.quadric_roots.iter().any(|(p, _)| p.chordal_distance(&mp) < 1e-10));
    }

    #[test]
    fn proportional_forms_rejected() {
        let l = LinForm::from_ints(&[1, 2]);
        assert!(matches!(monomial_eigen_binary(4, 1, &l, &LinForm::from_ints(&[2, 4])), Err(Error::Proportional)));
    }
}
