//! Waring and forbidden loci of binary forms and monomials, and the
//! intersection of the Waring locus with the eigenscheme.

mod monomial;

pub use monomial::{monomial_corollary_check, monomial_loci, monomial_rank, CorollaryCase, CorollaryCheck, MonomialLoci, MonomialRegime};

use std::fmt;

use num_traits::Zero;

use crate::apolarity::{annihilator_binary, decomposing_generator, rank_from_pair, relative_discriminant, AnnPair, Mode};
use crate::error::{Error, Result};
use crate::exactnum::{CFloat, GaussRat};
use crate::eigen::{eigen_poly_binary, eigen_support_binary, EigLocation, EigPoint};
use crate::forms::{BForm, NumPoint, ProjPoint, UPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocusKind {
    Finite,
    CofiniteMinus,
    Balanced,
    MonomialComplement,
}

impl fmt::Display for LocusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LocusKind::Finite => "finite",
            LocusKind::CofiniteMinus => "cofinite-minus",
            LocusKind::Balanced => "balanced",
            LocusKind::MonomialComplement => "monomial-complement",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocusDesc {
    /// `W(F)` is the zero set of this squarefree form.
    Finite { waring: BForm },
    /// `F(F)` is the zero set of this (non-squarefree) form.
    CofiniteMinus { forbidden: BForm },
    /// `F(F)` is the zero set of `forbidden = disc(G_p)`, where `G_p` is
    /// the pencil member through `p`.
    Balanced { pencil: AnnPair, forbidden: BForm },
    /// `F(F)` is the union of the coordinate hyperplanes `x_i = 0` over
    /// the variables of minimal exponent.
    MonomialComplement { vars: Vec<usize>, nvars: usize },
}

impl LocusDesc {
    pub fn kind(&self) -> LocusKind {
        match self {
            LocusDesc::Finite { .. } => LocusKind::Finite,
            LocusDesc::CofiniteMinus { .. } => LocusKind::CofiniteMinus,
            LocusDesc::Balanced { .. } => LocusKind::Balanced,
            LocusDesc::MonomialComplement { .. } => LocusKind::MonomialComplement,
        }
    }

    /// Exact membership in the forbidden locus.
    pub fn forbidden_contains(&self, p: &ProjPoint) -> bool {
        let c = p.coords();
        match self {
            LocusDesc::Finite { waring } => !waring.eval(&c[0], &c[1]).is_zero(),
            LocusDesc::CofiniteMinus { forbidden } => forbidden.eval(&c[0], &c[1]).is_zero(),
            LocusDesc::Balanced { pencil, .. } => !pencil_member_through(pencil, &c[0], &c[1]).is_squarefree(),
            LocusDesc::MonomialComplement { vars, .. } => vars.iter().any(|&i| c[i].is_zero()),
        }
    }

    /// Floating-point membership in the Waring locus, with the value the
    /// decision was based on.
    pub fn waring_contains_numeric(&self, p: &NumPoint, tol: f64) -> Result<(bool, f64)> {
        let c = p.coords();
        Ok(match self {
            LocusDesc::Finite { waring } => {
                let v = relative_value(waring, c);
                (v < tol, v)
            }
            LocusDesc::CofiniteMinus { forbidden } => {
                let v = relative_value(forbidden, c);
                (v >= tol, v)
            }
            LocusDesc::Balanced { pencil, .. } => {
                let g1 = pencil.g1.to_complex();
                let g2 = pencil.g2.to_complex();
                let (a, b) = (eval_c(&g2, c), eval_c(&g1, c));
                let gp: Vec<CFloat> = g1.iter().zip(&g2).map(|(x, y)| a * x - b * y).collect();
                let v = relative_discriminant(&gp)?;
                (v >= tol, v)
            }
            LocusDesc::MonomialComplement { vars, .. } => {
                let v = vars.iter().map(|&i| c[i].norm()).fold(f64::INFINITY, f64::min);
                (v >= tol, v)
            }
        })
    }
}

impl fmt::Display for LocusDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocusDesc::Finite { waring } => write!(f, "W(F) = V({waring})"),
            LocusDesc::CofiniteMinus { forbidden } => write!(f, "F(F) = V({forbidden})"),
            LocusDesc::Balanced { forbidden, .. } => write!(f, "F(F) = V({forbidden})"),
            LocusDesc::MonomialComplement { vars, .. } => {
                let names: Vec<String> = vars.iter().map(|i| format!("x{i}")).collect();
                write!(f, "F(F) = V({})", names.join("*"))
            }
        }
    }
}

fn eval_c(g: &[CFloat], p: &[CFloat]) -> CFloat {
    let k = g.len() - 1;
    g.iter()
        .enumerate()
        .map(|(i, c)| c * p[0].powu((k - i) as u32) * p[1].powu(i as u32))
        .sum()
}

fn relative_value(g: &BForm, p: &[CFloat]) -> f64 {
    let n = (p[0].norm_sqr() + p[1].norm_sqr()).sqrt();
    g.eval_complex(p[0] / n, p[1] / n).norm() / g.norm1_f64()
}

/// `g2(p)·g1 − g1(p)·g2`
fn pencil_member_through(pencil: &AnnPair, p0: &GaussRat, p1: &GaussRat) -> BForm {
    let a = pencil.g2.eval(p0, p1);
    let b = pencil.g1.eval(p0, p1);
    pencil.g1.scale(&a).sub(&pencil.g2.scale(&b)).expect("pencil members share a degree")
}

/// `a / b` for forms with `b | a`.
pub(crate) fn div_exact(a: &BForm, b: &BForm) -> BForm {
    let (q, r) = a.dehomogenize().div_rem(&b.dehomogenize());
    debug_assert!(r.is_zero());
    BForm::from_univariate(&q, a.degree() - b.degree())
}

/// The form `R(p) = disc(G_p)` of degree `k(2k−2)` whose zero set is the
/// forbidden locus of a balanced form. Computed by exact interpolation.
pub fn balanced_forbidden_form(pencil: &AnnPair) -> Result<BForm> {
    if !pencil.is_balanced() {
        return Err(Error::Precondition("pencil generators have different degrees".into()));
    }
    decomposing_generator(pencil)?;
    let k = pencil.g1.degree();
    let n = k * (2 * k - 2);
    let one = GaussRat::from_int(1);
    let mut xs = Vec::with_capacity(n + 1);
    let mut ys = Vec::with_capacity(n + 1);
    for s in 0..=n as i64 {
        let t = GaussRat::from_int(s);
        ys.push(pencil_member_through(pencil, &t, &one).discriminant()?);
        xs.push(t);
    }
    let r = BForm::from_univariate(&UPoly::interpolate(&xs, &ys), n);
    Ok(r.normalized())
}

/// Which of the three Sylvester regimes `F` falls in, with the form that
/// cuts out its Waring or forbidden locus.
pub fn waring_locus_binary(f: &BForm) -> Result<LocusDesc> {
    let ann = annihilator_binary(f)?;
    if ann.is_balanced() {
        let forbidden = balanced_forbidden_form(&ann)?;
        return Ok(LocusDesc::Balanced { pencil: ann, forbidden });
    }
    Ok(if ann.g1.is_squarefree() {
        LocusDesc::Finite { waring: ann.g1 }
    } else {
        LocusDesc::CofiniteMinus { forbidden: ann.g1 }
    })
}

pub fn forbidden_contains(f: &BForm, p: &ProjPoint) -> Result<bool> {
    if p.coords().len() != 2 {
        return Err(Error::VariableMismatch(p.coords().len(), 2));
    }
    Ok(waring_locus_binary(f)?.forbidden_contains(p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectionMethod {
    ExactGcd,
    PointwiseNumeric,
}

impl fmt::Display for IntersectionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntersectionMethod::ExactGcd => "exact-gcd",
            IntersectionMethod::PointwiseNumeric => "pointwise-numeric",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// Finite case: `W ∩ Eig = V(gcd(g1, D))`.
    Gcd { gcd: BForm },
    /// `W ∩ Eig = V(sf(D) / gcd(sf(D), sf(forbidden)))`; empty iff the
    /// quotient is constant, i.e. `sf(D) | sf(forbidden)`.
    Divisibility { sf_eigen: BForm, sf_forbidden: BForm, quotient: BForm },
    /// Per-eigenpoint decisions.
    Pointwise,
}

impl Certificate {
    /// Form whose zero set is `W ∩ Eig`, when the method is exact.
    pub fn witness_form(&self) -> Option<&BForm> {
        match self {
            Certificate::Gcd { gcd } => Some(gcd),
            Certificate::Divisibility { quotient, .. } => Some(quotient),
            Certificate::Pointwise => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointEvidence {
    pub point: EigLocation,
    pub in_waring: bool,
    /// The quantity the decision was read from: for exact points `0` or
    /// `1`; otherwise a relative residual or discriminant.
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionReport {
    pub locus: LocusDesc,
    pub eigen_poly: BForm,
    pub nonempty: bool,
    pub witnesses: Vec<EigPoint>,
    pub method: IntersectionMethod,
    pub certificate: Certificate,
    pub evidence: Vec<PointEvidence>,
}

fn pointwise(locus: &LocusDesc, pts: &[EigPoint], tol: f64) -> Result<Vec<PointEvidence>> {
    pts.iter()
        .map(|e| {
            let (in_waring, value) = match &e.point {
                EigLocation::Exact(q) => {
                    let inside = !locus.forbidden_contains(q);
                    (inside, if inside { 1.0 } else { 0.0 })
                }
                EigLocation::Numeric(p) => locus.waring_contains_numeric(p, tol)?,
            };
            Ok(PointEvidence { point: e.point.clone(), in_waring, value })
        })
        .collect()
}

fn on_form(h: &BForm, loc: &EigLocation) -> bool {
    match loc {
        EigLocation::Exact(q) => h.eval(&q.coords()[0], &q.coords()[1]).is_zero(),
        EigLocation::Numeric(p) => {
            h.degree() > 0
                && h.roots_numeric(1e-12)
                    .map(|rs| rs.iter().any(|(r, _)| r.chordal_distance(p) < 1e-6))
                    .unwrap_or(false)
        }
    }
}

/// Decide whether `W(F) ∩ Eig(F)` is empty. In exact mode the verdict is
/// exact in all three regimes: the Finite and CofiniteMinus regimes by gcd
/// and divisibility against `g1`, the balanced regime by divisibility
/// against the forbidden form (the pencil has no base points, so its zero
/// set is exactly the forbidden locus). Numeric mode tests each
/// eigenpoint separately.
pub fn intersect_waring_eigen_binary(f: &BForm, mode: Mode, tol: f64) -> Result<IntersectionReport> {
    let locus = waring_locus_binary(f)?;
    let dpoly = eigen_poly_binary(f)?;
    let pts = eigen_support_binary(f, mode, tol)?;
    let evidence = pointwise(&locus, &pts, tol)?;
    let (method, certificate, witnesses) = match mode {
        Mode::Numeric => {
            let w: Vec<EigPoint> = pts
                .iter()
                .zip(&evidence)
                .filter(|(_, e)| e.in_waring)
                .map(|(p, _)| p.clone())
                .collect();
            (IntersectionMethod::PointwiseNumeric, Certificate::Pointwise, w)
        }
        Mode::Exact => {
            let certificate = match &locus {
                LocusDesc::Finite { waring } => Certificate::Gcd { gcd: waring.gcd(&dpoly)?.normalized() },
                LocusDesc::CofiniteMinus { forbidden } | LocusDesc::Balanced { forbidden, .. } => {
                    let sf_eigen = dpoly.squarefree_part()?.normalized();
                    let sf_forbidden = forbidden.squarefree_part()?.normalized();
                    let common = sf_eigen.gcd(&sf_forbidden)?;
                    let quotient = div_exact(&sf_eigen, &common).normalized();
                    Certificate::Divisibility { sf_eigen, sf_forbidden, quotient }
                }
                LocusDesc::MonomialComplement { .. } => unreachable!(),
            };
            let h = certificate.witness_form().expect("exact certificate");
            let w = pts.iter().filter(|p| on_form(h, &p.point)).cloned().collect();
            (IntersectionMethod::ExactGcd, certificate, w)
        }
    };
    let nonempty = match certificate.witness_form() {
        Some(h) => h.degree() > 0,
        None => !witnesses.is_empty(),
    };
    Ok(IntersectionReport { locus, eigen_poly: dpoly, nonempty, witnesses, method, certificate, evidence })
}

/// Sufficient condition for a nonempty intersection on forms of rank
/// above `(d+1)/2`: at least `d − rk + 2` distinct eigenpoints. `false`
/// is inconclusive.
pub fn eig_count_sufficiency(f: &BForm) -> Result<bool> {
    let ann = annihilator_binary(f)?;
    let rank = rank_from_pair(&ann);
    let d = f.degree();
    if 2 * rank <= d + 1 {
        return Err(Error::Precondition(format!("rank {rank} is not above (d+1)/2 for d = {d}")));
    }
    let dpoly = eigen_poly_binary(f)?;
    if dpoly.is_zero() {
        return Err(Error::DegenerateEigen(format!("{f}")));
    }
    Ok(dpoly.squarefree_part()?.degree() + rank >= d + 2)
}
