//! Catalecticants, apolar generators of binary forms, Sylvester's rank
//! algorithm and decompositions of identifiable binary forms.

pub(crate) mod numeric;

pub use numeric::{catalecticant_numeric, relative_discriminant, resultant_numeric, waring_rank_numeric, NumericRank};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{numeric as fnum, CFloat, ExactMatrix, GaussRat};
use crate::forms::{BForm, LinForm, NumPoint};

/// Generators of the apolar ideal of a binary form, as dual forms.
/// When both have the same degree they are an echelon basis of the
/// annihilating pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnPair {
    pub g1: BForm,
    pub g2: BForm,
}

impl AnnPair {
    pub fn is_balanced(&self) -> bool {
        self.g1.degree() == self.g2.degree()
    }

    /// `g1 + t·g2` (only meaningful in the balanced case).
    pub fn pencil_member(&self, t: &GaussRat) -> BForm {
        self.g1.add(&self.g2.scale(t)).expect("balanced pencil")
    }
}

/// Matrix of `G ↦ G∘F` from dual forms of degree `k` to forms of degree
/// `d−k`. Row `p` is the monomial `x0^(d-k-p) x1^p`, column `q` the dual
/// monomial `∂0^(k-q) ∂1^q`.
pub fn catalecticant(f: &BForm, k: usize) -> Result<ExactMatrix> {
    if k > f.degree() {
        return Err(Error::OutOfRange(format!("catalecticant order {k} for degree {}", f.degree())));
    }
    Ok(cat_matrix(f, k))
}

/// As [`catalecticant`], but `k > d` gives the empty-row matrix.
pub(crate) fn cat_matrix(f: &BForm, k: usize) -> ExactMatrix {
    let d = f.degree();
    let rows = if k > d { 0 } else { d - k + 1 };
    ExactMatrix::from_fn(rows, k + 1, |p, q| {
        let c = f.coeff(p + q);
        if c.is_zero() {
            return GaussRat::zero();
        }
        // (d-p-q)!/(d-k-p)! · (p+q)!/p!
        let w = crate::forms::falling_weight(d - p - q, k - q) * crate::forms::falling_weight(p + q, q);
        c * &GaussRat::from_big(w)
    })
}

fn normalize_vec(v: &[GaussRat]) -> BForm {
    BForm::new(v.to_vec()).normalized()
}

/// Least `k` with a nontrivial catalecticant kernel, and that kernel.
fn minimal_kernel(f: &BForm) -> (usize, Vec<Vec<GaussRat>>) {
    let d = f.degree();
    for k in 1..=(d + 2) / 2 {
        let ker = cat_matrix(f, k).kernel_basis();
        if !ker.is_empty() {
            return (k, ker);
        }
    }
    unreachable!("kernel is nontrivial by degree (d+2)/2")
}

/// Apolar generators `(g1, g2)` with `deg g1 + deg g2 = d + 2`.
pub fn annihilator_binary(f: &BForm) -> Result<AnnPair> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let d = f.degree();
    if d == 0 {
        return Err(Error::Precondition("forms of degree 0 have no apolar generators here".into()));
    }
    let (k1, ker) = minimal_kernel(f);
    let k2 = d + 2 - k1;
    if k1 == k2 {
        let basis = ExactMatrix::from_rows(ker).rref().0;
        return Ok(AnnPair {
            g1: BForm::new(basis.row(0).to_vec()),
            g2: BForm::new(basis.row(1).to_vec()),
        });
    }
    debug_assert_eq!(ker.len(), 1);
    let g1 = normalize_vec(&ker[0]);
    // Degree-k2 annihilators modulo the multiples of g1.
    let shift = k2 - k1;
    let multiples: Vec<Vec<GaussRat>> = (0..=shift)
        .map(|j| g1.mul(&BForm::monomial(shift, j)).coeffs().to_vec())
        .collect();
    let (red, pivots) = ExactMatrix::from_rows(multiples).rref();
    for v in cat_matrix(f, k2).kernel_basis() {
        let mut r = v.clone();
        for (row, &pc) in pivots.iter().enumerate() {
            if r[pc].is_zero() {
                continue;
            }
            let c = r[pc].clone();
            for (j, e) in red.row(row).iter().enumerate() {
                if !e.is_zero() {
                    r[j] -= &(&c * e);
                }
            }
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Ok(AnnPair { g1, g2: normalize_vec(&r) });
        }
    }
    unreachable!("the second generator exists in degree d + 2 - k1")
}

/// Waring rank by Sylvester's rule.
pub fn waring_rank_binary(f: &BForm) -> Result<usize> {
    let ann = annihilator_binary(f)?;
    Ok(rank_from_pair(&ann))
}

pub(crate) fn rank_from_pair(ann: &AnnPair) -> usize {
    if ann.is_balanced() || ann.g1.is_squarefree() {
        ann.g1.degree()
    } else {
        ann.g2.degree()
    }
}

/// Squarefree dual form of degree `rank` cutting out a minimal
/// decomposition. In the balanced case this is the first squarefree member
/// of `g1, g2, g1 − g2, g1 + g2, g1 − 2 g2, …`.
pub fn decomposing_generator(ann: &AnnPair) -> Result<BForm> {
    if !ann.is_balanced() {
        return if ann.g1.is_squarefree() {
            Ok(ann.g1.clone())
        } else {
            Err(Error::WildCase(format!(
                "minimal generator {} is not squarefree; rank is {}",
                ann.g1,
                ann.g2.degree()
            )))
        };
    }
    if ann.g1.is_squarefree() {
        return Ok(ann.g1.clone());
    }
    if ann.g2.is_squarefree() {
        return Ok(ann.g2.clone());
    }
    // At most 2k−2 members of a base-point-free pencil are singular.
    let limit = 2 * ann.g1.degree() as i64 + 2;
    for m in 1..=limit {
        for t in [-m, m] {
            let g = ann.pencil_member(&GaussRat::from_int(t));
            if g.is_squarefree() {
                return Ok(g.normalized());
            }
        }
    }
    Err(Error::NoSquarefreeMember)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
}

/// `F = Σ c_i L_i^d`.
#[derive(Clone, Debug, PartialEq)]
pub enum Decomposition {
    Exact(Vec<(LinForm, GaussRat)>),
    /// Terms with unit-norm linear forms; `residual` is
    /// `‖F − Σ c_i L_i^d‖₂ / ‖F‖₂` on coefficient vectors.
    Numeric { terms: Vec<(Vec<CFloat>, CFloat)>, residual: f64 },
}

impl Decomposition {
    pub fn len(&self) -> usize {
        match self {
            Decomposition::Exact(t) => t.len(),
            Decomposition::Numeric { terms, .. } => terms.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Support as floating projective points.
    pub fn points(&self) -> Vec<NumPoint> {
        match self {
            Decomposition::Exact(t) => t.iter().map(|(l, _)| l.to_point().expect("nonzero").to_numeric()).collect(),
            Decomposition::Numeric { terms, .. } => terms.iter().map(|(l, _)| NumPoint::new(l.clone())).collect(),
        }
    }
}

/// Roots of a squarefree dual form, exact if they all lie in ℚ(i).
pub(crate) fn exact_roots(g: &BForm) -> Option<Vec<LinForm>> {
    let roots = g.roots_numeric(1e-10).ok()?;
    let mut out = Vec::with_capacity(roots.len());
    for (p, _) in roots {
        let q = p.rationalize(1 << 20, 1e-8)?;
        if !g.eval(&q.coords()[0], &q.coords()[1]).is_zero() {
            return None;
        }
        out.push(q.to_linform());
    }
    (out.len() == g.degree()).then_some(out)
}

/// Minimal decomposition of an identifiable (or balanced) binary form.
/// Exact mode falls back to floating point when the support points are
/// not Gaussian rational.
pub fn decompose_binary(f: &BForm, mode: Mode, tol: f64) -> Result<Decomposition> {
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let ann = annihilator_binary(f)?;
    let g = decomposing_generator(&ann)?;
    let d = f.degree();
    if mode == Mode::Exact {
        if let Some(ls) = exact_roots(&g) {
            let cols: Vec<BForm> = ls.iter().map(|l| l.power_binary(d)).collect();
            let m = ExactMatrix::from_fn(d + 1, cols.len(), |i, j| cols[j].coeff(i).clone());
            let c = m.solve(f.coeffs()).ok_or_else(|| Error::Precondition("support does not span F".into()))?;
            return Ok(Decomposition::Exact(ls.into_iter().zip(c).collect()));
        }
    }
    let roots = g.roots_numeric(1e-10)?;
    let pts: Vec<Vec<CFloat>> = roots.iter().map(|(p, _)| p.coords().to_vec()).collect();
    let m: Vec<Vec<CFloat>> = (0..=d)
        .map(|i| {
            pts.iter()
                .map(|p| {
                    let binom = crate::exactnum::binomial(d as u32, i as u32);
                    CFloat::new(crate::exactnum::rat_to_f64(&crate::exactnum::Rat::from_integer(binom)), 0.0)
                        * p[0].powu((d - i) as u32)
                        * p[1].powu(i as u32)
                })
                .collect()
        })
        .collect();
    let fc = f.to_complex();
    let c = fnum::lstsq(&m, &fc)?;
    let recon: Vec<CFloat> = m.iter().map(|row| row.iter().zip(&c).map(|(a, b)| a * b).sum()).collect();
    let diff: Vec<CFloat> = recon.iter().zip(&fc).map(|(a, b)| a - b).collect();
    let residual = fnum::norm2(&diff) / fnum::norm2(&fc);
    if residual > tol {
        return Err(Error::NoConvergence);
    }
    Ok(Decomposition::Numeric { terms: pts.into_iter().zip(c).collect(), residual })
}

/// `Σ c_i L_i^d` for an exact decomposition.
pub fn recombine(terms: &[(LinForm, GaussRat)], d: usize) -> BForm {
    terms.iter().fold(BForm::zero(d), |acc, (l, c)| {
        acc.add(&l.power_binary(d).scale(c)).expect("same degree")
    })
}

/// The dual form of degree 1 vanishing at `[L]`: `a1 ∂0 − a0 ∂1`.
pub fn dual_vanishing_at(l: &LinForm) -> BForm {
    BForm::new(vec![l.coords[1].clone(), -&l.coords[0]])
}

/// True iff `g(∂) ∘ F = 0`.
pub fn annihilates(g: &BForm, f: &BForm) -> bool {
    g.degree() > f.degree() || g.apolar_apply(f).map(|h| h.is_zero()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rat;
    use num_traits::One;

    fn one() -> GaussRat {
        GaussRat::one()
    }

    fn l(a: i64, b: i64) -> LinForm {
        LinForm::from_ints(&[a, b])
    }

    #[test]
    fn catalecticant_examples() {
        let d = 6;
        let c = catalecticant(&BForm::monomial(d, 0), 1).unwrap();
        assert_eq!((c.rows(), c.cols()), (d, 2));
        assert_eq!(c.rank_exact(), 1);
        for k in 1..d {
            assert_eq!(catalecticant(&BForm::monomial(d, 1), k).unwrap().rank_exact(), 2);
        }
        assert!(catalecticant(&BForm::monomial(d, 1), d + 1).is_err());
    }

    #[test]
    fn catalecticant_is_the_apolar_action() {
        let f = BForm::from_ints(&[3, -1, 4, 1, -5, 9]);
        for k in 0..=5 {
            let c = catalecticant(&f, k).unwrap();
            for q in 0..=k {
                let col = c.column(q);
                assert_eq!(col, BForm::monomial(k, q).apolar_apply(&f).unwrap().coeffs());
            }
        }
    }

    #[test]
    fn annihilator_of_power() {
        for d in 2..7 {
            let ann = annihilator_binary(&BForm::monomial(d, 0)).unwrap();
            assert_eq!(ann.g1, BForm::from_ints(&[0, 1]));
            assert_eq!(ann.g2, BForm::monomial(d + 1, 0));
        }
    }

    #[test]
    fn annihilator_of_monomial() {
        for d in 2..9usize {
            for j in 1..=d / 2 {
                let ann = annihilator_binary(&BForm::monomial(d, j)).unwrap();
                if 2 * j == d {
                    // balanced: echelon basis ∂0^(j+1), ∂1^(j+1)
                    assert_eq!(ann.g1, BForm::monomial(j + 1, 0));
                    assert_eq!(ann.g2, BForm::monomial(j + 1, j + 1));
                } else {
                    assert_eq!(ann.g1, BForm::monomial(j + 1, j + 1));
                    assert_eq!(ann.g2, BForm::monomial(d - j + 1, 0));
                }
                assert!(annihilates(&ann.g1, &BForm::monomial(d, j)));
                assert!(annihilates(&ann.g2, &BForm::monomial(d, j)));
            }
        }
    }

    #[test]
    fn annihilator_of_sum_of_two_powers() {
        for d in 3..7 {
            let f = BForm::monomial(d, 0).add(&BForm::monomial(d, d)).unwrap();
            let ann = annihilator_binary(&f).unwrap();
            assert_eq!(ann.g1, BForm::from_ints(&[0, 1, 0]));
        }
    }

    #[test]
    fn sylvester_examples() {
        for d in 2..9usize {
            assert_eq!(waring_rank_binary(&BForm::monomial(d, 0)).unwrap(), 1);
            for j in 1..=d / 2 {
                assert_eq!(waring_rank_binary(&BForm::monomial(d, j)).unwrap(), d - j + 1);
            }
        }
        for d in 4..9 {
            let f = recombine(&[(l(1, 0), one()), (l(0, 1), one()), (l(1, 1), one())], d);
            assert_eq!(waring_rank_binary(&f).unwrap(), 3);
        }
        // In degree 3 the same sum has rank 2: its quadratic annihilator
        // ∂0² − 3∂0∂1 + ∂1² is squarefree.
        let f = recombine(&[(l(1, 0), one()), (l(0, 1), one()), (l(1, 1), one())], 3);
        let ann = annihilator_binary(&f).unwrap();
        assert_eq!(ann.g1, BForm::from_ints(&[1, -3, 1]));
        assert_eq!(waring_rank_binary(&f).unwrap(), 2);
    }

    #[test]
    fn decompose_examples() {
        let d = 5;
        match decompose_binary(&BForm::monomial(d, 0), Mode::Exact, 1e-9).unwrap() {
            Decomposition::Exact(t) => assert_eq!(t, vec![(l(1, 0), one())]),
            other => panic!("{other:?}"),
        }
        let f = recombine(&[(l(1, 0), one()), (l(0, 1), one()), (l(1, 1), one())], d);
        match decompose_binary(&f, Mode::Exact, 1e-9).unwrap() {
            Decomposition::Exact(t) => {
                assert_eq!(t.len(), 3);
                assert!(t.iter().all(|(_, c)| *c == one()));
                for target in [l(1, 0), l(0, 1), l(1, 1)] {
                    assert!(t.iter().any(|(m, _)| m.proportional(&target)));
                }
                assert_eq!(recombine(&t, d), f);
            }
            other => panic!("{other:?}"),
        }
        // 2 x0 x1 = ½ (x0+x1)² − ½ (x0−x1)²
        let f = BForm::from_ints(&[0, 2, 0]);
        match decompose_binary(&f, Mode::Exact, 1e-9).unwrap() {
            Decomposition::Exact(t) => {
                let half = GaussRat::from_rat(Rat::new(1.into(), 2.into()));
                let plus = t.iter().find(|(m, _)| m.proportional(&l(1, 1))).unwrap();
                let minus = t.iter().find(|(m, _)| m.proportional(&l(1, -1))).unwrap();
                // coefficients depend on the representative; compare the products
                assert_eq!(plus.0.power_binary(2).scale(&plus.1), l(1, 1).power_binary(2).scale(&half));
                assert_eq!(minus.0.power_binary(2).scale(&minus.1), l(1, -1).power_binary(2).scale(&-half));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wild_form_is_reported() {
        let f = BForm::monomial(5, 1);
        assert!(matches!(decompose_binary(&f, Mode::Exact, 1e-9), Err(Error::WildCase(_))));
    }

    #[test]
    fn numeric_decomposition_of_irrational_support() {
        // ½((x0 + √2 x1)³ + (x0 − √2 x1)³) = x0³ + 6 x0 x1²
        let f = BForm::from_ints(&[1, 0, 6, 0]);
        let dec = decompose_binary(&f, Mode::Exact, 1e-9).unwrap();
        assert_eq!(dec.len(), 2);
        match dec {
            Decomposition::Numeric { residual, .. } => assert!(residual < 1e-12),
            other => panic!("{other:?}"),
        }
    }
}
