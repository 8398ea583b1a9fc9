//! The critical Waring variety: forms of rank `r` having an eigenvector
//! in their Waring locus. Works on the parameter space of
//! `F = x0^d + Σ_{i=1}^{r−1} (α_{i,0} x0 + … + α_{i,n} xn)^d`.

mod degree;
mod dimension;
mod hyperplane;

pub use degree::{degree_check_line, degree_check_surface, DegreeCheck};
pub use dimension::{dim_estimate_we, DimEstimate};
pub use hyperplane::{h_tilde, HyperplaneFunctional};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::apolarity::{annihilator_binary, waring_rank_binary, Mode};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussRat};
use crate::forms::{random::small_int, BForm, LinForm, NForm};
use crate::locus::{intersect_waring_eigen_binary, IntersectionReport, LocusKind};

/// Rows `α_i = (α_{i,0}, …, α_{i,n})` of the tail summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecantParams {
    pub n: usize,
    pub r: usize,
    pub d: u32,
    pub alpha: Vec<Vec<GaussRat>>,
}

impl SecantParams {
    pub fn new(n: usize, r: usize, d: u32, alpha: Vec<Vec<GaussRat>>) -> Result<Self> {
        if r < 2 || alpha.len() != r - 1 || alpha.iter().any(|row| row.len() != n + 1) {
            return Err(Error::Precondition(format!("need {} rows of length {}", r.saturating_sub(1), n + 1)));
        }
        Ok(SecantParams { n, r, d, alpha })
    }

    pub fn from_ints(n: usize, d: u32, rows: &[&[i64]]) -> Result<Self> {
        let alpha = rows.iter().map(|r| r.iter().map(|&v| GaussRat::from_int(v)).collect()).collect();
        SecantParams::new(n, rows.len() + 1, d, alpha)
    }

    /// The point of the parameter space, `α_{i,j}` at index `(i−1)(n+1) + j`.
    pub fn flat(&self) -> Vec<GaussRat> {
        self.alpha.iter().flatten().cloned().collect()
    }

    /// The tail `Σ (α_i · x)^d`.
    pub fn tail(&self) -> NForm {
        self.alpha
            .iter()
            .map(|row| NForm::linear_power(row, self.d))
            .fold(NForm::zero(self.n + 1, self.d), |acc, t| acc.add(&t).expect("same shape"))
    }

    pub fn expand(&self) -> NForm {
        let mut e0 = vec![0; self.n + 1];
        e0[0] = self.d;
        NForm::monomial(&e0).add(&self.tail()).expect("same shape")
    }

    pub fn expand_binary(&self) -> Result<BForm> {
        self.expand().to_bform()
    }

    /// Summands as linear forms, `x0` first.
    pub fn summands(&self) -> Vec<LinForm> {
        let mut e0 = vec![GaussRat::zero(); self.n + 1];
        e0[0] = GaussRat::one();
        std::iter::once(LinForm::new(e0)).chain(self.alpha.iter().map(|r| LinForm::new(r.clone()))).collect()
    }

    /// Whether the `r` summands are pairwise non-proportional and nonzero.
    pub fn distinct_points(&self) -> bool {
        let s = self.summands();
        s.iter().all(|l| !l.is_zero()) && (0..s.len()).all(|i| (i + 1..s.len()).all(|j| !s[i].proportional(&s[j])))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WEEquations {
    pub n: usize,
    pub r: usize,
    pub d: u32,
    /// `g_j = Σ_i α_{i,0}^(d−1) α_{i,j}`, `j = 1..n`.
    pub gs: Vec<NForm>,
    /// `Σ_i α_{i,0}^d`, singular value 1.
    pub g0prime: NForm,
}

impl WEEquations {
    pub fn nvars(&self) -> usize {
        (self.n + 1) * (self.r - 1)
    }

    pub fn var(&self, i: usize, j: usize) -> usize {
        (i - 1) * (self.n + 1) + j
    }
}

pub fn we_equations(n: usize, r: usize, d: u32) -> Result<WEEquations> {
    if n < 1 || r < 2 || d < 2 {
        return Err(Error::Precondition("need n ≥ 1, r ≥ 2, d ≥ 2".into()));
    }
    let nv = (n + 1) * (r - 1);
    let var = |i: usize, j: usize| (i - 1) * (n + 1) + j;
    let term = |pairs: &[(usize, u32)]| {
        let mut e = vec![0u32; nv];
        for &(k, p) in pairs {
            e[k] += p;
        }
        (e, GaussRat::one())
    };
    let gs = (1..=n)
        .map(|j| NForm::from_terms(nv, d, (1..r).map(|i| term(&[(var(i, 0), d - 1), (var(i, j), 1)]))))
        .collect::<Result<Vec<_>>>()?;
    let g0prime = NForm::from_terms(nv, d, (1..r).map(|i| term(&[(var(i, 0), d)])))?;
    Ok(WEEquations { n, r, d, gs, g0prime })
}

/// `(x0^(d−1) x_i)(∂) ∘ G`, a constant.
pub fn h_pairing(g: &NForm, i: usize) -> Result<GaussRat> {
    let n = g.nvars();
    if i == 0 || i >= n || g.degree() == 0 {
        return Err(Error::OutOfRange(format!("functional index {i}")));
    }
    let mut a = vec![0; n];
    a[0] = g.degree() - 1;
    a[i] += 1;
    Ok(NForm::monomial(&a).apolar_apply(g)?.coeff(&vec![0; n]))
}

/// Whether `x0` is an eigenvector of the expanded form, read off the
/// equations `g_j`.
pub fn is_eigen_x0(params: &SecantParams) -> Result<bool> {
    let eqs = we_equations(params.n, params.r, params.d)?;
    let p = params.flat();
    Ok(eqs.gs.iter().all(|g| g.eval(&p).is_zero()))
}

/// Exact rank of the Jacobian of `g_1..g_n` (and `g0prime` if asked) at `point`.
pub fn jacobian_rank_at(eqs: &WEEquations, point: &[GaussRat], with_g0prime: bool) -> Result<usize> {
    if point.len() != eqs.nvars() {
        return Err(Error::VariableMismatch(point.len(), eqs.nvars()));
    }
    let mut rows: Vec<&NForm> = eqs.gs.iter().collect();
    if with_g0prime {
        rows.push(&eqs.g0prime);
    }
    let nv = eqs.nvars();
    let grads: Vec<Vec<NForm>> = rows.iter().map(|g| g.gradient()).collect();
    let m = ExactMatrix::from_fn(rows.len(), nv, |a, b| grads[a][b].eval(point));
    Ok(m.rank_exact())
}

/// Exact evidence that the expanded binary form has rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    /// Squarefree minimal annihilator; its roots are the summands.
    pub generator: BForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSample {
    pub params: SecantParams,
    pub certificate: Option<RankCertificate>,
}

fn rank_certificate(params: &SecantParams) -> Result<RankCertificate> {
    let f = params.expand_binary()?;
    let rank = waring_rank_binary(&f)?;
    let ann = annihilator_binary(&f)?;
    if rank != params.r || !ann.g1.is_squarefree() || ann.g1.degree() != rank {
        return Err(Error::Precondition(format!("sample has rank {rank}, wanted {}", params.r)));
    }
    Ok(RankCertificate { rank, generator: ann.g1 })
}

const MAX_DRAWS: usize = 1000;

/// A rational point of `g_1 = … = g_n = 0` with `α_{i,0} = 1`, drawn by
/// choosing all rows but the last at random and solving for the last.
/// Draws whose summands are not pairwise distinct are rejected. For `n = 1`
/// the result carries an exact rank certificate.
///
/// With `n = 1, r = 2` the only rank-2 solutions have `α_{1,0} = 0`; that
/// component is used instead.
pub fn sample_x0(n: usize, r: usize, d: u32, seed: u64) -> Result<XSample> {
    if n < 1 || r < 2 || d < 2 {
        return Err(Error::Precondition("need n ≥ 1, r ≥ 2, d ≥ 2".into()));
    }
    if n == 1 && 2 * r > d as usize + 1 {
        return Err(Error::Precondition(format!("rank certificate needs r ≤ (d+1)/2, got r = {r}, d = {d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let alpha: Vec<Vec<GaussRat>> = if r == 2 && n == 1 {
            vec![vec![GaussRat::zero(), nonzero(&mut rng, 6)]]
        } else {
            let mut rows: Vec<Vec<GaussRat>> = (0..r - 2)
                .map(|_| std::iter::once(GaussRat::one()).chain((0..n).map(|_| small_int(&mut rng, 6))).collect())
                .collect();
            let last = std::iter::once(GaussRat::one())
                .chain((1..=n).map(|j| -rows.iter().map(|row| row[j].clone()).sum::<GaussRat>()))
                .collect();
            rows.push(last);
            rows
        };
        let params = SecantParams::new(n, r, d, alpha)?;
        if !params.distinct_points() {
            continue;
        }
        let certificate = if n == 1 { Some(rank_certificate(&params)?) } else { None };
        return Ok(XSample { params, certificate });
    }
    Err(Error::NoConvergence)
}

fn nonzero(rng: &mut impl Rng, bound: i64) -> GaussRat {
    crate::forms::random::nonzero_int(rng, bound)
}

/// A point of `g_1 = … = g_n = 0` with random nonzero `α_{i,0}`, solving
/// for the last row. No distinctness or rank guarantee.
pub fn sample_chart(n: usize, r: usize, d: u32, seed: u64) -> Result<SecantParams> {
    if n < 1 || r < 2 || d < 2 {
        return Err(Error::Precondition("need n ≥ 1, r ≥ 2, d ≥ 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<GaussRat>> = (0..r - 2)
        .map(|_| std::iter::once(nonzero(&mut rng, 4)).chain((0..n).map(|_| small_int(&mut rng, 6))).collect())
        .collect();
    let a0 = nonzero(&mut rng, 4);
    let w = a0.pow(d - 1).inv();
    let last = std::iter::once(a0.clone())
        .chain((1..=n).map(|j| {
            -(rows.iter().map(|row| &row[0].pow(d - 1) * &row[j]).sum::<GaussRat>() * w.clone())
        }))
        .collect();
    rows.push(last);
    SecantParams::new(n, r, d, rows)
}

/// Rows `(1, ξ^i)`, `i = 1..r−1`, for a primitive `(r−1)`-th root of unity
/// `ξ`. Only available inside ℚ(i), i.e. for `r − 1 ∈ {2, 4}`; for
/// `r − 1 = 1` the row `(1, 1)` does not satisfy `g_1 = 0`.
pub fn roots_of_unity_params(r: usize, d: u32) -> Result<SecantParams> {
    let xi = match r - 1 {
        2 => GaussRat::from_int(-1),
        4 => GaussRat::i(),
        k => return Err(Error::Unsupported(format!("{k}-th roots of unity are not in ℚ(i)"))),
    };
    let rows = (1..r as u32).map(|i| vec![GaussRat::one(), xi.pow(i)]).collect();
    SecantParams::new(1, r, d, rows)
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeMembership {
    pub member: bool,
    /// The verdict is exact only on the identifiable stratum (squarefree
    /// minimal generator of degree at most `(d+1)/2`).
    pub exact: bool,
    /// `gcd(g1, D)` on the identifiable stratum.
    pub certificate: Option<BForm>,
    pub report: IntersectionReport,
}

/// Membership of a binary form in the critical Waring variety through
/// `W(F) ∩ Eig(F) ≠ ∅`.
pub fn we_membership_binary(f: &BForm) -> Result<WeMembership> {
    let report = intersect_waring_eigen_binary(f, Mode::Exact, 1e-10)?;
    let exact = report.locus.kind() == LocusKind::Finite;
    let certificate = if exact { report.certificate.witness_form().cloned() } else { None };
    Ok(WeMembership { member: report.nonempty, exact, certificate, report })
}

/// One experiment outcome, serialized for reports.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub n: usize,
    pub r: usize,
    pub d: u32,
    pub check: String,
    pub seed: u64,
    pub value: serde_json::Value,
    pub expected: serde_json::Value,
    pub pass: bool,
    pub evidence: serde_json::Value,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::is_eigenvector;

    fn var_name(eqs: &WEEquations, a: &[u32]) -> Vec<(usize, usize, u32)> {
        a.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| (k / (eqs.n + 1) + 1, k % (eqs.n + 1), e))
            .collect()
    }

    #[test]
    fn equations_small_cases() {
        let e = we_equations(1, 3, 3).unwrap();
        let terms: Vec<_> = e.gs[0].terms().keys().map(|a| var_name(&e, a)).collect();
        assert_eq!(terms.len(), 2);
        assert!(terms.contains(&vec![(1, 0, 2), (1, 1, 1)]));
        assert!(terms.contains(&vec![(2, 0, 2), (2, 1, 1)]));

        let e = we_equations(2, 2, 2).unwrap();
        assert_eq!(e.gs.len(), 2);
        assert_eq!(e.gs[0].terms().keys().map(|a| var_name(&e, a)).collect::<Vec<_>>(), vec![vec![(1, 0, 1), (1, 1, 1)]]);
        assert_eq!(e.gs[1].terms().keys().map(|a| var_name(&e, a)).collect::<Vec<_>>(), vec![vec![(1, 0, 1), (1, 2, 1)]]);

        for (n, r, d) in [(1, 4, 5), (2, 3, 4), (3, 5, 3)] {
            let e = we_equations(n, r, d).unwrap();
            for g in &e.gs {
                assert_eq!(g.terms().len(), r - 1);
                assert_eq!(g.degree(), d);
            }
        }
    }

    #[test]
    fn eigen_x0_examples() {
        assert!(is_eigen_x0(&SecantParams::from_ints(2, 4, &[&[0, 1, 2], &[0, -3, 1]]).unwrap()).unwrap());
        assert!(is_eigen_x0(&SecantParams::from_ints(1, 4, &[&[1, 1], &[1, -1]]).unwrap()).unwrap());
        assert!(!is_eigen_x0(&SecantParams::from_ints(1, 4, &[&[1, 1]]).unwrap()).unwrap());
    }

    #[test]
    fn h_pairing_is_d_times_g() {
        let p = SecantParams::from_ints(2, 5, &[&[2, 1, -1], &[1, 3, 2]]).unwrap();
        let eqs = we_equations(2, 3, 5).unwrap();
        for j in 1..=2 {
            // (x0^4 x_j)(∂)∘(α·x)^5 = 5!·α_0^4 α_j
            let want = &eqs.gs[j - 1].eval(&p.flat()) * &GaussRat::from_int(120);
            assert_eq!(h_pairing(&p.tail(), j).unwrap(), want);
        }
    }

    #[test]
    fn sampler_certificates() {
        let s = sample_x0(1, 3, 5, 7).unwrap();
        assert!(is_eigen_x0(&s.params).unwrap());
        assert_eq!(s.certificate.as_ref().unwrap().rank, 3);
        assert!(is_eigenvector(&s.params.expand(), &LinForm::from_ints(&[1, 0])));

        let s = sample_x0(1, 2, 4, 1).unwrap();
        assert_eq!(s.certificate.unwrap().rank, 2);

        let s = sample_x0(2, 4, 3, 3).unwrap();
        assert!(is_eigen_x0(&s.params).unwrap());
        assert!(s.certificate.is_none());

        assert!(sample_x0(1, 4, 5, 0).is_err());
    }

    #[test]
    fn roots_of_unity_rows() {
        for r in [3, 5] {
            let p = roots_of_unity_params(r, 9).unwrap();
            assert!(is_eigen_x0(&p).unwrap());
            assert_eq!(waring_rank_binary(&p.expand_binary().unwrap()).unwrap(), r);
        }
        assert!(roots_of_unity_params(2, 5).is_err());
    }

    #[test]
    fn jacobian_ranks() {
        let eqs = we_equations(2, 4, 4).unwrap();
        let s = sample_chart(2, 4, 4, 11).unwrap();
        assert!(is_eigen_x0(&s).unwrap());
        assert_eq!(jacobian_rank_at(&eqs, &s.flat(), false).unwrap(), 2);
        assert_eq!(jacobian_rank_at(&eqs, &s.flat(), true).unwrap(), 3);
        let zero = vec![GaussRat::zero(); eqs.nvars()];
        assert_eq!(jacobian_rank_at(&eqs, &zero, false).unwrap(), 0);
    }

    #[test]
    fn membership() {
        let f = BForm::monomial(6, 0)
            .add(&BForm::monomial(6, 6))
            .unwrap()
            .add(&BForm::linear_power(&GaussRat::one(), &GaussRat::one(), 6))
            .unwrap();
        let m = we_membership_binary(&f).unwrap();
        assert!(m.member && m.exact);
        let s = sample_x0(1, 3, 6, 2).unwrap();
        assert!(we_membership_binary(&s.params.expand_binary().unwrap()).unwrap().member);
    }
}
