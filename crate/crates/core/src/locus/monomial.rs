//! Monomials: forbidden loci in any number of variables, and the
//! intersection `W ∩ Eig` for binary forms `L^(d−j) M^j`.

use std::fmt;

use super::{intersect_waring_eigen_binary, LocusDesc};
use crate::apolarity::Mode;
use crate::eigen::monomial_eigen_binary;
use crate::error::{Error, Result};
use crate::exactnum::GaussRat;
use crate::forms::{LinForm, NumPoint, ProjPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialRegime {
    /// Minimal exponent at least 2: every forbidden point is an eigenpoint.
    ForbiddenInsideEig,
    /// Minimal exponent 1: `Eig ∩ F` is the union of the codimension-two
    /// coordinate subspaces `x_i = x_j = 0` listed here (`i < j`).
    Strata(Vec<(usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialLoci {
    pub exponents: Vec<u32>,
    pub locus: LocusDesc,
    pub regime: MonomialRegime,
    /// An exact point of `W ∩ Eig`.
    pub witness: ProjPoint,
}

/// Loci of `Π x_i^(e_i)` in at least three variables. Exponents need not
/// be sorted; indices in the result refer to the given variable order.
pub fn monomial_loci(exps: &[u32]) -> Result<MonomialLoci> {
    if exps.len() < 3 {
        return Err(Error::Precondition("monomials in two variables go through the binary routines".into()));
    }
    if exps.contains(&0) {
        return Err(Error::Precondition("every exponent must be positive".into()));
    }
    let n = exps.len();
    let low = *exps.iter().min().unwrap();
    let vars: Vec<usize> = (0..n).filter(|&i| exps[i] == low).collect();
    let regime = if low >= 2 {
        MonomialRegime::ForbiddenInsideEig
    } else {
        let mut strata: Vec<(usize, usize)> = vars
            .iter()
            .flat_map(|&i| (0..n).filter(move |&j| j != i).map(move |j| (i.min(j), i.max(j))))
            .collect();
        strata.sort_unstable();
        strata.dedup();
        MonomialRegime::Strata(strata)
    };
    let mut w = vec![1i64; n];
    if let Some(top) = (0..n).find(|&i| exps[i] > low) {
        w[top] = 0;
    }
    Ok(MonomialLoci {
        exponents: exps.to_vec(),
        locus: LocusDesc::MonomialComplement { vars, nvars: n },
        regime,
        witness: ProjPoint::from_ints(&w)?,
    })
}

/// Waring rank of `Π x_i^(e_i)` with positive exponents: the product of
/// `e_i + 1` over all variables but one of minimal exponent.
pub fn monomial_rank(exps: &[u32]) -> Result<u128> {
    if exps.is_empty() || exps.contains(&0) {
        return Err(Error::Precondition("every exponent must be positive".into()));
    }
    let low = exps.iter().position(|e| e == exps.iter().min().unwrap()).unwrap();
    let mut rank: u128 = 1;
    for (i, &e) in exps.iter().enumerate() {
        if i != low {
            rank = rank
                .checked_mul(e as u128 + 1)
                .ok_or_else(|| Error::OutOfRange("monomial rank overflows".into()))?;
        }
    }
    Ok(rank)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorollaryCase {
    BothIsotropic,
    LinearLIsotropic,
    LinearMIsotropic,
    LinearGeneric,
    HigherLIsotropic,
    HigherMIsotropic,
    HigherGeneric,
}

impl fmt::Display for CorollaryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorollaryCase::BothIsotropic => "L, M isotropic",
            CorollaryCase::LinearLIsotropic => "j = 1, L isotropic",
            CorollaryCase::LinearMIsotropic => "j = 1, M isotropic",
            CorollaryCase::LinearGeneric => "j = 1, neither isotropic",
            CorollaryCase::HigherLIsotropic => "j > 1, L isotropic",
            CorollaryCase::HigherMIsotropic => "j > 1, M isotropic",
            CorollaryCase::HigherGeneric => "j > 1, neither isotropic",
        })
    }
}

/// Comparison of the case table for `W ∩ Eig` of `L^(d−j) M^j` against
/// the set computed directly from the apolar ideal and the eigenpolynomial.
#[derive(Clone, Debug)]
pub struct CorollaryCheck {
    pub case: CorollaryCase,
    pub computed: Vec<NumPoint>,
    pub predicted: Vec<NumPoint>,
    /// Predicted but not in `W ∩ Eig`.
    pub spurious: Vec<NumPoint>,
    /// In `W ∩ Eig` but not predicted.
    pub missing: Vec<NumPoint>,
}

impl CorollaryCheck {
    pub fn agrees(&self) -> bool {
        self.spurious.is_empty() && self.missing.is_empty()
    }
}

const SAME: f64 = 1e-7;

fn dedup(pts: Vec<NumPoint>) -> Vec<NumPoint> {
    let mut out: Vec<NumPoint> = Vec::new();
    for p in pts {
        if !out.iter().any(|q| q.chordal_distance(&p) < SAME) {
            out.push(p);
        }
    }
    out
}

fn minus(a: &[NumPoint], b: &[NumPoint]) -> Vec<NumPoint> {
    a.iter().filter(|p| !b.iter().any(|q| q.chordal_distance(p) < SAME)).cloned().collect()
}

pub fn monomial_corollary_check(d: usize, j: usize, l: &LinForm, m: &LinForm) -> Result<CorollaryCheck> {
    let eig = monomial_eigen_binary(d, j, l, m)?;
    let report = intersect_waring_eigen_binary(&eig.form, Mode::Exact, 1e-10)?;
    let computed = dedup(report.witnesses.iter().map(|w| w.point.to_numeric()).collect());

    let num = |x: &LinForm| NumPoint::new(x.coords.iter().map(GaussRat::to_complex).collect());
    let (lp, mp) = (num(l), num(m));
    let l_perp = num(&l.perp()?);
    let m_perp = num(&m.perp()?);
    let qs: Vec<NumPoint> = eig.quadric_roots.iter().map(|(p, _)| p.clone()).collect();
    // The quadric root other than `near`.
    let other = |near: &NumPoint| -> Vec<NumPoint> {
        let mut sorted = qs.clone();
        sorted.sort_by(|a, b| b.chordal_distance(near).total_cmp(&a.chordal_distance(near)));
        sorted.into_iter().take(1).collect()
    };
    let (li, mi) = (l.is_isotropic()?, m.is_isotropic()?);
    let (case, predicted) = match (li, mi, j == 1) {
        (true, true, _) => (CorollaryCase::BothIsotropic, vec![mp.clone()]),
        (true, false, true) => (CorollaryCase::LinearLIsotropic, other(&lp)),
        (false, true, true) => (CorollaryCase::LinearMIsotropic, [vec![l_perp, mp.clone()], other(&mp)].concat()),
        (false, false, true) => (CorollaryCase::LinearGeneric, [vec![l_perp], qs.clone()].concat()),
        (true, false, false) => (CorollaryCase::HigherLIsotropic, [vec![m_perp], other(&lp)].concat()),
        (false, true, false) => (CorollaryCase::HigherMIsotropic, [vec![l_perp, mp.clone()], other(&mp)].concat()),
        (false, false, false) => (CorollaryCase::HigherGeneric, [vec![l_perp, m_perp], qs.clone()].concat()),
    };
    let predicted = dedup(predicted);
    Ok(CorollaryCheck {
        case,
        spurious: minus(&predicted, &computed),
        missing: minus(&computed, &predicted),
        computed,
        predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{eigen_ideal, is_eigenvector};
    use crate::forms::NForm;

    #[test]
    fn monomial_rank_matches_sylvester_in_two_variables() {
        use crate::apolarity::waring_rank_binary;
        use crate::forms::BForm;
        for d in 2..9usize {
            for j in 1..d {
                let exact = waring_rank_binary(&BForm::monomial(d, j)).unwrap();
                assert_eq!(monomial_rank(&[(d - j) as u32, j as u32]).unwrap(), exact as u128, "d={d} j={j}");
            }
        }
        assert_eq!(monomial_rank(&[1, 1, 1]).unwrap(), 4);
        assert_eq!(monomial_rank(&[3, 1, 2]).unwrap(), 12);
        assert!(monomial_rank(&[2, 0]).is_err());
    }

    #[test]
    fn regimes() {
        let a = monomial_loci(&[2, 2, 3]).unwrap();
        assert_eq!(a.regime, MonomialRegime::ForbiddenInsideEig);
        assert_eq!(a.locus, LocusDesc::MonomialComplement { vars: vec![0, 1], nvars: 3 });

        let b = monomial_loci(&[1, 1, 2]).unwrap();
        assert_eq!(b.regime, MonomialRegime::Strata(vec![(0, 1), (0, 2), (1, 2)]));

        let c = monomial_loci(&[1, 1, 1]).unwrap();
        assert_eq!(c.witness, ProjPoint::from_ints(&[1, 1, 1]).unwrap());
        assert!(matches!(monomial_loci(&[1, 2]), Err(Error::Precondition(_))));
    }

    #[test]
    fn witnesses_are_waring_eigenpoints() {
        for exps in [vec![2u32, 2, 3], vec![1, 1, 2], vec![1, 1, 1], vec![3, 1, 2, 1], vec![2, 2, 2, 5]] {
            let loci = monomial_loci(&exps).unwrap();
            let f = NForm::monomial(&exps);
            assert!(is_eigenvector(&f, &loci.witness.to_linform()), "{exps:?}");
            assert!(!loci.locus.forbidden_contains(&loci.witness));
            assert!(eigen_ideal(&f).unwrap().contains_point(loci.witness.coords()));
        }
    }

    #[test]
    fn generic_linear_case_agrees() {
        let c = monomial_corollary_check(5, 1, &LinForm::from_ints(&[1, 2]), &LinForm::from_ints(&[3, -1])).unwrap();
        assert_eq!(c.case, CorollaryCase::LinearGeneric);
        assert!(c.agrees(), "{c:?}");
        assert_eq!(c.computed.len(), 3);
    }

    #[test]
    fn orthogonal_pair_breaks_the_table() {
        // M^⊥ = [L] is forbidden, so the table's M^⊥ is spurious.
        let c = monomial_corollary_check(7, 2, &LinForm::from_ints(&[1, 0]), &LinForm::from_ints(&[0, 1])).unwrap();
        assert_eq!(c.case, CorollaryCase::HigherGeneric);
        assert_eq!(c.spurious.len(), 1);
        assert!(c.spurious[0].chordal_distance(&ProjPoint::from_ints(&[1, 0]).unwrap().to_numeric()) < 1e-9);
    }

    #[test]
    fn middle_exponent_forbids_m_as_well() {
        // j = d/2 with M isotropic: [M] is forbidden, the table lists it.
        let l = LinForm::from_ints(&[1, 0]);
        let m = LinForm::new(vec![GaussRat::from_int(1), GaussRat::i()]);
        let c = monomial_corollary_check(4, 2, &l, &m).unwrap();
        assert_eq!(c.case, CorollaryCase::HigherMIsotropic);
        let mp = m.to_point().unwrap().to_numeric();
        assert!(c.spurious.iter().any(|p| p.chordal_distance(&mp) < 1e-9));
    }
}
