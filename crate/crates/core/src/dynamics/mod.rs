//! Rank along pencils `F + λ·L^d` of binary forms.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::apolarity::numeric::{derivative0, derivative1};
use crate::apolarity::{
    annihilator_binary, cat_matrix, resultant_numeric, waring_rank_binary, waring_rank_numeric, Mode,
};
use crate::eigen::{eigen_poly_binary, eigen_support_binary, EigLocation};
use crate::error::{Error, Result};
use crate::exactnum::{numeric as fnum, CFloat, ExactMatrix, GaussRat};
use crate::forms::{fmt_complex, random::small_int, BForm, LinForm, NumPoint, ProjPoint, UPoly};
use crate::locus::{forbidden_contains, intersect_waring_eigen_binary, waring_locus_binary, IntersectionReport, LocusDesc};

mod family;

pub use family::{analyze_example_family, example_family_identities, ExampleFamilyReport, FamilyIdentities};

/// A value of the pencil parameter.
#[derive(Clone, Debug, PartialEq)]
pub enum PencilParam {
    Exact(GaussRat),
    Numeric(CFloat),
}

impl PencilParam {
    pub fn to_complex(&self) -> CFloat {
        match self {
            PencilParam::Exact(q) => q.to_complex(),
            PencilParam::Numeric(z) => *z,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            PencilParam::Exact(q) => q.is_zero(),
            PencilParam::Numeric(z) => z.norm() == 0.0,
        }
    }

    fn same(&self, o: &PencilParam) -> bool {
        match (self, o) {
            (PencilParam::Exact(a), PencilParam::Exact(b)) => a == b,
            _ => {
                let (a, b) = (self.to_complex(), o.to_complex());
                (a - b).norm() <= 1e-9 * (1.0 + a.norm())
            }
        }
    }
}

impl fmt::Display for PencilParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PencilParam::Exact(q) => write!(f, "{q}"),
            PencilParam::Numeric(z) => write!(f, "{}", fmt_complex(*z)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Exceptional {
    pub lambda: PencilParam,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RankPencilProfile {
    pub base_rank: usize,
    pub direction: LinForm,
    pub generic_rank: usize,
    /// Parameters whose rank differs from the generic one, `λ = 0` first
    /// when it is among them.
    pub exceptional: Vec<Exceptional>,
    pub method: Mode,
}

impl RankPencilProfile {
    /// Largest rank met along the pencil.
    pub fn max_rank(&self) -> usize {
        self.exceptional.iter().map(|e| e.rank).fold(self.generic_rank, usize::max)
    }
}

/// Row subsets of size `k` in lexicographic order.
struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Common root of affine polynomials `a + b·λ`. `None` when they have no
/// common root or all vanish identically.
fn common_root(pairs: impl Iterator<Item = (GaussRat, GaussRat)>) -> Option<GaussRat> {
    let mut root: Option<GaussRat> = None;
    for (a, b) in pairs {
        if b.is_zero() {
            if a.is_zero() {
                continue;
            }
            return None;
        }
        let t = -(&a * &b.inv());
        match &root {
            Some(r) if *r != t => return None,
            Some(_) => {}
            None => root = Some(t),
        }
    }
    root
}

/// `(det A, det(A + B) − det A)`: a determinant affine in `λ`, as it is
/// for `A + λ·B` with `B` of rank one.
fn affine_det(a: &ExactMatrix, b: &ExactMatrix) -> (GaussRat, GaussRat) {
    let d0 = a.det();
    let d1 = a.add(b).det();
    let slope = &d1 - &d0;
    (d0, slope)
}

fn drop_col(m: &ExactMatrix, rows: &[usize], col: usize) -> ExactMatrix {
    let cols: Vec<usize> = (0..m.cols()).filter(|&c| c != col).collect();
    m.select(rows, &cols)
}

fn random_lambda(rng: &mut impl Rng) -> GaussRat {
    loop {
        let p = rng.gen_range(-60i64..=60);
        if p != 0 {
            return GaussRat::from_frac(p, rng.gen_range(1..=17));
        }
    }
}

/// Roots of a nonzero polynomial in `λ`. Rational ones are confirmed exactly
/// in exact mode.
fn param_roots(p: &UPoly, mode: Mode) -> Result<Vec<PencilParam>> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let sf = p.squarefree_part();
    let mut out = Vec::new();
    for z in sf.numeric_roots()? {
        let exact = match mode {
            Mode::Exact => GaussRat::approximate(z, 1 << 20).filter(|q| sf.eval(q).is_zero()),
            Mode::Numeric => None,
        };
        out.push(match exact {
            Some(q) => PencilParam::Exact(q),
            None => PencilParam::Numeric(z),
        });
    }
    Ok(out)
}

fn pencil_at(f: &BForm, ld: &BForm, t: &GaussRat) -> BForm {
    f.add(&ld.scale(t)).expect("same degree")
}

fn rank_at(f: &BForm, ld: &BForm, t: &PencilParam, tol: f64) -> Result<usize> {
    match t {
        PencilParam::Exact(q) => {
            let g = pencil_at(f, ld, q);
            if g.is_zero() {
                return Ok(0);
            }
            waring_rank_binary(&g)
        }
        PencilParam::Numeric(z) => {
            let coeffs: Vec<CFloat> = f
                .to_complex()
                .iter()
                .zip(ld.to_complex())
                .map(|(a, b)| a + z * b)
                .collect();
            Ok(waring_rank_numeric(&coeffs, tol)?.rank)
        }
    }
}

/// Candidates where the minimal catalecticant kernel appears earlier than
/// it does generically: common roots of the maximal minors of
/// `Cat_k(F) + λ·Cat_k(L^d)`, which are affine in `λ`.
fn catalecticant_drops(f: &BForm, ld: &BForm, k1: usize) -> Vec<GaussRat> {
    let mut out = Vec::new();
    for k in 1..k1 {
        let a = cat_matrix(f, k);
        let b = cat_matrix(ld, k);
        let cols: Vec<usize> = (0..=k).collect();
        let minors = Subsets::new(a.rows(), k + 1).map(|rows| affine_det(&a.select(&rows, &cols), &b.select(&rows, &cols)));
        if let Some(t) = common_root(minors) {
            out.push(t);
        }
    }
    out
}

/// Minimal generator along the pencil, `h0 + λ·h1`, from signed maximal
/// minors of `k` independent catalecticant rows, plus the parameter where
/// that formula degenerates (if any).
fn generator_line(f: &BForm, ld: &BForm, k: usize, probe: &GaussRat) -> Result<(BForm, BForm, Option<GaussRat>)> {
    let a = cat_matrix(f, k);
    let b = cat_matrix(ld, k);
    let at_probe = a.add(&b.scale(probe));
    let (_, pivots) = at_probe.transpose().rref();
    if pivots.len() != k {
        return Err(Error::Precondition(format!("catalecticant of order {k} does not have rank {k} on the pencil")));
    }
    let mut h0 = Vec::with_capacity(k + 1);
    let mut h1 = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let (c0, c1) = affine_det(&drop_col(&a, &pivots, j), &drop_col(&b, &pivots, j));
        let sign = if j % 2 == 1 { -GaussRat::one() } else { GaussRat::one() };
        h0.push(&sign * &c0);
        h1.push(&sign * &c1);
    }
    let degenerate = common_root(h0.iter().cloned().zip(h1.iter().cloned()));
    Ok((BForm::new(h0), BForm::new(h1), degenerate))
}

fn disc_or_zero(h: &BForm) -> Result<GaussRat> {
    if h.is_zero() {
        return Ok(GaussRat::zero());
    }
    h.discriminant()
}

/// `disc(h0 + λ·h1)` as a polynomial of degree at most `2k − 2`, by exact
/// interpolation, checked at two further points.
fn discriminant_in_lambda(h0: &BForm, h1: &BForm) -> Result<UPoly> {
    let k = h0.degree();
    let n = 2 * k - 2;
    let xs: Vec<GaussRat> = (0..=n as i64 + 2).map(GaussRat::from_int).collect();
    let ys = xs
        .iter()
        .map(|t| disc_or_zero(&h0.add(&h1.scale(t))?))
        .collect::<Result<Vec<_>>>()?;
    let p = UPoly::interpolate(&xs[..=n], &ys[..=n]);
    if (n + 1..=n + 2).any(|i| p.eval(&xs[i]) != ys[i]) {
        return Err(Error::Precondition("discriminant along the pencil exceeds its degree bound".into()));
    }
    Ok(p)
}

/// Rank profile of `F + λ·L^d` over all `λ`.
///
/// The generic rank is read off two random rational parameters (a third
/// settles a disagreement). Rank can only change where the minimal
/// catalecticant kernel appears early, or, in the unbalanced regime, where
/// the minimal generator acquires a repeated root. Both give finitely many
/// candidates, each of which is checked individually; `λ = 0` is always
/// checked.
pub fn rank_pencil(f: &BForm, l: &LinForm, mode: Mode, tol: f64) -> Result<RankPencilProfile> {
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    if l.nvars() != 2 {
        return Err(Error::VariableMismatch(l.nvars(), 2));
    }
    if l.is_zero() {
        return Err(Error::ZeroLinearForm);
    }
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let d = f.degree();
    if d < 2 {
        return Err(Error::Precondition("pencils need degree at least 2".into()));
    }
    let ld = l.power_binary(d);
    let base_rank = waring_rank_binary(f)?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9);
    let probes: Vec<GaussRat> = (0..3).map(|_| random_lambda(&mut rng)).collect();
    let mut ranks = Vec::new();
    let mut anns = Vec::new();
    for t in &probes {
        let g = pencil_at(f, &ld, t);
        let ann = annihilator_binary(&g)?;
        ranks.push(crate::apolarity::rank_from_pair(&ann));
        anns.push(ann);
        if ranks.len() == 2 && ranks[0] == ranks[1] {
            break;
        }
    }
    let pick = if ranks.len() == 2 || ranks[0] == ranks[2] {
        0
    } else if ranks[1] == ranks[2] {
        1
    } else {
        return Err(Error::NoConvergence);
    };
    let generic_rank = ranks[pick];
    let probe = &probes[pick];
    let k1 = anns[pick].g1.degree();
    let balanced = anns[pick].is_balanced();

    let mut candidates: Vec<PencilParam> = vec![PencilParam::Exact(GaussRat::zero())];
    for t in catalecticant_drops(f, &ld, k1) {
        candidates.push(PencilParam::Exact(t));
    }
    if !balanced && k1 >= 2 {
        let (h0, h1, degenerate) = generator_line(f, &ld, k1, probe)?;
        if let Some(t) = degenerate {
            candidates.push(PencilParam::Exact(t));
        }
        let disc = discriminant_in_lambda(&h0, &h1)?;
        if !disc.is_zero() {
            candidates.extend(param_roots(&disc, mode)?);
        }
    }

    let mut seen: Vec<PencilParam> = Vec::new();
    let mut exceptional = Vec::new();
    for t in candidates {
        if seen.iter().any(|s| s.same(&t)) {
            continue;
        }
        seen.push(t.clone());
        let rank = rank_at(f, &ld, &t, tol)?;
        if rank != generic_rank {
            exceptional.push(Exceptional { lambda: t, rank });
        }
    }
    Ok(RankPencilProfile { base_rank, direction: l.clone(), generic_rank, exceptional, method: mode })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExceptionalJson {
    pub lambda: String,
    pub rank: usize,
}

/// One pencil experiment, in report form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PencilTrial {
    pub family: String,
    pub trial: usize,
    #[serde(rename = "F")]
    pub form: String,
    pub direction: String,
    pub generic_rank: usize,
    pub exceptional: Vec<ExceptionalJson>,
    pub pass: bool,
}

impl PencilTrial {
    fn from_profile(family: &str, trial: usize, f: &BForm, p: &RankPencilProfile, pass: bool) -> Self {
        PencilTrial {
            family: family.into(),
            trial,
            form: f.to_string(),
            direction: p.direction.to_string(),
            generic_rank: p.generic_rank,
            exceptional: p
                .exceptional
                .iter()
                .map(|e| ExceptionalJson { lambda: e.lambda.to_string(), rank: e.rank })
                .collect(),
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    pub d: usize,
    pub r: usize,
    pub trials: Vec<PencilTrial>,
    /// Draws rejected before a trial was accepted.
    pub resamples: usize,
    /// Balanced forms `L^(d/2) M^(d/2)` where every eigenvector lies in the
    /// Waring locus, so no eigenvector pencil raises the rank.
    pub control: Vec<PencilTrial>,
    pub pass: bool,
}

const MAX_DRAWS: usize = 200;

/// `Σ L_i^d` for `r` pairwise non-proportional small integer `L_i`, with
/// its rank certified to be `r`.
fn random_rank_r(rng: &mut impl Rng, d: usize, r: usize) -> Result<(BForm, usize)> {
    for draw in 0..MAX_DRAWS {
        let mut ls: Vec<LinForm> = Vec::new();
        while ls.len() < r {
            let l = LinForm::new(vec![small_int(rng, 4), small_int(rng, 4)]);
            if !l.is_zero() && !ls.iter().any(|m| m.proportional(&l)) {
                ls.push(l);
            }
        }
        let mut f = BForm::zero(d);
        for l in &ls {
            f = f.add(&l.power_binary(d))?;
        }
        if !f.is_zero() && waring_rank_binary(&f)? == r {
            return Ok((f, draw));
        }
    }
    Err(Error::NoConvergence)
}

/// Adding a new power to a form of subgeneric rank: for `r < (d+1)/2` and
/// `[L0]` forbidden, `F + λ·L0^d` has rank `r + 1` for every `λ ≠ 0`.
pub fn verify_subgeneric_growth(d: usize, r: usize, trials: usize, seed: u64) -> Result<GrowthReport> {
    if r == 0 || 2 * r > d {
        return Err(Error::Precondition(format!("subgeneric rank needs 1 ≤ r < (d+1)/2, got r = {r}, d = {d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    let mut resamples = 0;
    for trial in 0..trials {
        let (f, rejected) = random_rank_r(&mut rng, d, r)?;
        resamples += rejected;
        let l0 = loop {
            let c = vec![small_int(&mut rng, 6), small_int(&mut rng, 6)];
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            if forbidden_contains(&f, &ProjPoint::new(c.clone())?)? {
                break LinForm::new(c);
            }
            resamples += 1;
        };
        let p = rank_pencil(&f, &l0, Mode::Exact, 1e-10)?;
        let pass = p.generic_rank == r + 1
            && p.exceptional.len() == 1
            && p.exceptional[0].lambda.is_zero()
            && p.exceptional[0].rank == r;
        out.push(PencilTrial::from_profile("subgeneric", trial, &f, &p, pass));
    }
    let pass = out.iter().all(|t| t.pass);
    Ok(GrowthReport { d, r, trials: out, resamples, control: Vec::new(), pass })
}

fn complex_roots(c: &[CFloat]) -> Result<Vec<CFloat>> {
    let scale = c.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mut deg = c.len() - 1;
    while deg > 0 && c[deg].norm() <= 1e-12 * scale {
        deg -= 1;
    }
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = c[deg];
    let mut comp = vec![vec![CFloat::new(0.0, 0.0); deg]; deg];
    for i in 1..deg {
        comp[i][i - 1] = CFloat::new(1.0, 0.0);
    }
    for i in 0..deg {
        comp[i][deg - 1] = -c[i] / lead;
    }
    let eval = |z: CFloat| c[..=deg].iter().rev().fold(CFloat::new(0.0, 0.0), |acc, a| acc * z + a);
    let deval = |z: CFloat| {
        (1..=deg).rev().fold(CFloat::new(0.0, 0.0), |acc, k| acc * z + c[k] * k as f64)
    };
    let mut roots = fnum::eigenvalues(&comp)?;
    for r in roots.iter_mut() {
        for _ in 0..10 {
            let fp = deval(*r);
            if fp.norm() == 0.0 {
                break;
            }
            let step = eval(*r) / fp;
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            *r -= step;
            if step.norm() <= 1e-16 * (1.0 + r.norm()) {
                break;
            }
        }
    }
    Ok(roots)
}

/// Secant steps on a directly evaluated function, starting from an
/// interpolated root.
fn secant_polish(phi: &dyn Fn(CFloat) -> Result<CFloat>, z: CFloat) -> Result<CFloat> {
    let mut x0 = z;
    let mut x1 = z + CFloat::new(1e-7, 1e-7) * (1.0 + z.norm());
    let mut f0 = phi(x0)?;
    let mut f1 = phi(x1)?;
    for _ in 0..40 {
        let den = f1 - f0;
        if den.norm() == 0.0 || f1.norm() == 0.0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / den;
        if !x2.re.is_finite() || !x2.im.is_finite() {
            break;
        }
        let step = (x2 - x1).norm();
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = phi(x1)?;
        if step <= 1e-15 * (1.0 + x1.norm()) {
            break;
        }
    }
    Ok(if f1.norm() <= phi(z)?.norm() { x1 } else { z })
}

fn convolve(a: &[CFloat], b: &[CFloat]) -> Vec<CFloat> {
    let mut out = vec![CFloat::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn binary_power_numeric(p: &NumPoint, d: usize) -> Vec<CFloat> {
    let (a, b) = (p.coords()[0], p.coords()[1]);
    (0..=d)
        .map(|k| {
            let binom = crate::exactnum::binomial(d as u32, k as u32);
            let c = crate::exactnum::rat_to_f64(&crate::exactnum::Rat::from_integer(binom));
            a.powu((d - k) as u32) * b.powu(k as u32) * c
        })
        .collect()
}

/// Numeric analogue of the discriminant candidates of [`rank_pencil`] for a
/// floating-point direction: parameters where the minimal generator of
/// `F + λ·L0^d` acquires a repeated root, each with its numeric rank.
pub fn discriminant_parameters_numeric(f: &[CFloat], l0: &NumPoint, tol: f64) -> Result<(usize, Vec<(CFloat, usize)>)> {
    let d = f.len() - 1;
    // unit scale for F and L0^d keeps the minors and resultants in range;
    // parameters are mapped back at the end
    let (fs, ls) = (fnum::norm2(f), fnum::norm2(&binary_power_numeric(l0, d)));
    let f: Vec<CFloat> = f.iter().map(|z| z / fs).collect();
    let ld: Vec<CFloat> = binary_power_numeric(l0, d).iter().map(|z| z / ls).collect();
    let f = &f[..];
    let at = |z: CFloat| -> Vec<CFloat> { f.iter().zip(&ld).map(|(a, b)| a + z * b).collect() };
    let probe = CFloat::new(0.7373, -0.3119);
    let generic = waring_rank_numeric(&at(probe), tol)?;
    let k = generic.k1;
    if generic.balanced || k < 2 {
        return Ok((generic.rank, Vec::new()));
    }
    let a = crate::apolarity::catalecticant_numeric(f, k);
    let b = crate::apolarity::catalecticant_numeric(&ld, k);
    let c_probe: Vec<Vec<CFloat>> = a.iter().zip(&b).map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + probe * y).collect()).collect();
    let mut rows: Vec<usize> = Vec::new();
    for i in 0..c_probe.len() {
        let mut trial = rows.clone();
        trial.push(i);
        let sub: Vec<Vec<CFloat>> = trial.iter().map(|&r| c_probe[r].clone()).collect();
        if fnum::rank_numeric(&sub, tol)? == trial.len() {
            rows = trial;
        }
        if rows.len() == k {
            break;
        }
    }
    if rows.len() != k {
        return Err(Error::Precondition("catalecticant rank along the pencil".into()));
    }
    let generator = |z: CFloat| -> Result<Vec<CFloat>> {
        (0..=k)
            .map(|j| {
                let m: Vec<Vec<CFloat>> = rows
                    .iter()
                    .map(|&r| (0..=k).filter(|&c| c != j).map(|c| a[r][c] + z * b[r][c]).collect())
                    .collect();
                let s = if j % 2 == 1 { -1.0 } else { 1.0 };
                Ok(fnum::det(&m)? * s)
            })
            .collect()
    };
    // the generator is affine in z: h(z) = h0 + z·h1. A repeated root t of
    // h0 + z·h1 is a zero of the Jacobian of (h0, h1) with
    // ∇h0(t) = −z·∇h1(t).
    let h0 = generator(CFloat::new(0.0, 0.0))?;
    let h1: Vec<CFloat> = generator(CFloat::new(1.0, 0.0))?.iter().zip(&h0).map(|(a, b)| a - b).collect();
    let (g00, g01, g10, g11) = (derivative0(&h0), derivative1(&h0), derivative0(&h1), derivative1(&h1));
    let jac: Vec<CFloat> = convolve(&g00, &g11).iter().zip(convolve(&g01, &g10)).map(|(a, b)| a - b).collect();
    let n = jac.len() - 1;
    let eval_at = |c: &[CFloat], x: CFloat, y: CFloat| {
        let m = c.len() - 1;
        c.iter().enumerate().map(|(j, v)| v * x.powu((m - j) as u32) * y.powu(j as u32)).sum::<CFloat>()
    };
    let mut points: Vec<(CFloat, CFloat)> = Vec::new();
    // chart x1 = 1: ascending coefficients in t = x0
    let ascending: Vec<CFloat> = jac.iter().rev().copied().collect();
    let affine = complex_roots(&ascending)?;
    for t in &affine {
        if t.re.is_finite() && t.im.is_finite() {
            points.push((*t, CFloat::new(1.0, 0.0)));
        }
    }
    if affine.len() < n {
        points.push((CFloat::new(1.0, 0.0), CFloat::new(0.0, 0.0)));
    }
    let direct = |z: CFloat| -> Result<CFloat> {
        let h = generator(z)?;
        resultant_numeric(&derivative0(&h), &derivative1(&h))
    };
    let mut out: Vec<(CFloat, usize)> = Vec::new();
    for (x, y) in points {
        let (p0, p1) = (eval_at(&g10, x, y), eval_at(&g11, x, y));
        let mu = if p0.norm() >= p1.norm() {
            -eval_at(&g00, x, y) / p0
        } else {
            -eval_at(&g01, x, y) / p1
        };
        if !mu.re.is_finite() || !mu.im.is_finite() || mu.norm() > 1e8 {
            continue;
        }
        let z = secant_polish(&direct, mu)?;
        let lambda = z * fs / ls;
        if out.iter().any(|(w, _)| (w - lambda).norm() <= 1e-9 * (1.0 + lambda.norm())) {
            continue;
        }
        out.push((lambda, waring_rank_numeric(&at(z), tol)?.rank));
    }
    Ok((generic.rank, out))
}

/// Growth at generic odd rank: for `d` odd, `r = (d+1)/2` and `F` with
/// `Eig(F) ∩ W(F) = ∅`, every eigenvector `L0` has some `λ` with
/// `rank(F + λ·L0^d) = r + 1`, found among the discriminant roots and
/// confirmed numerically. Also runs the balanced control for `d = 4, 6`.
pub fn verify_generic_odd_growth(d: usize, trials: usize, seed: u64, tol: f64) -> Result<GrowthReport> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(Error::Precondition(format!("odd degree at least 3 required, got {d}")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let r = d.div_ceil(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    let mut resamples = 0;
    for trial in 0..trials {
        let f = loop {
            let (f, rejected) = random_rank_r(&mut rng, d, r)?;
            resamples += rejected;
            if !eigen_poly_binary(&f)?.is_zero() && !intersect_waring_eigen_binary(&f, Mode::Exact, tol)?.nonempty {
                break f;
            }
            resamples += 1;
            if resamples > MAX_DRAWS * trials.max(1) {
                return Err(Error::NoConvergence);
            }
        };
        let fc = f.to_complex();
        for (idx, e) in eigen_support_binary(&f, Mode::Numeric, tol)?.iter().enumerate() {
            let p = e.point.to_numeric();
            let (generic_rank, params) = discriminant_parameters_numeric(&fc, &p, tol)?;
            let raising: Vec<ExceptionalJson> = params
                .iter()
                .filter(|(_, k)| *k != generic_rank)
                .map(|(z, k)| ExceptionalJson { lambda: fmt_complex(*z), rank: *k })
                .collect();
            let pass = generic_rank == r && params.iter().any(|(z, k)| *k == r + 1 && z.norm() > tol);
            out.push(PencilTrial {
                family: "generic-odd".into(),
                trial: trial * (d + 1) + idx,
                form: f.to_string(),
                direction: p.to_string(),
                generic_rank,
                exceptional: raising,
                pass,
            });
        }
    }
    let mut control = Vec::new();
    for (i, dc) in [4usize, 6].into_iter().enumerate() {
        control.extend(balanced_control(dc, seed.wrapping_add(i as u64), tol)?);
    }
    let pass = out.iter().chain(&control).all(|t| t.pass);
    Ok(GrowthReport { d, r, trials: out, resamples, control, pass })
}

/// `L^(d/2) M^(d/2)` for generic `L, M`: every eigenpoint lies in the
/// Waring locus, and along each eigenvector with exact coordinates the
/// rank never exceeds that of `F`.
pub fn balanced_control(d: usize, seed: u64, tol: f64) -> Result<Vec<PencilTrial>> {
    if d % 2 == 1 || d < 4 {
        return Err(Error::Precondition(format!("balanced control needs even d ≥ 4, got {d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (f, report) = loop {
        let l = LinForm::new(vec![small_int(&mut rng, 5), small_int(&mut rng, 5)]);
        let m = LinForm::new(vec![small_int(&mut rng, 5), small_int(&mut rng, 5)]);
        if l.is_zero() || m.is_zero() || l.proportional(&m) || l.is_isotropic()? || m.is_isotropic()? || l.dot(&m).is_zero() {
            continue;
        }
        let f = l.power_binary(d / 2).mul(&m.power_binary(d / 2));
        let report: IntersectionReport = intersect_waring_eigen_binary(&f, Mode::Exact, tol)?;
        break (f, report);
    };
    let rank = waring_rank_binary(&f)?;
    let all_in_w = report.evidence.iter().all(|e| e.in_waring);
    let mut out = Vec::new();
    for (idx, e) in report.evidence.iter().enumerate() {
        let EigLocation::Exact(p) = &e.point else {
            out.push(PencilTrial {
                family: "balanced-control".into(),
                trial: idx,
                form: f.to_string(),
                direction: e.point.to_string(),
                generic_rank: rank,
                exceptional: Vec::new(),
                pass: all_in_w,
            });
            continue;
        };
        let prof = rank_pencil(&f, &p.to_linform(), Mode::Exact, tol)?;
        let pass = all_in_w && prof.max_rank() <= rank;
        out.push(PencilTrial::from_profile("balanced-control", idx, &f, &prof, pass));
    }
    Ok(out)
}

/// Waring locus of a pencil member, for reports.
pub fn pencil_member_locus(f: &BForm, l: &LinForm, t: &GaussRat) -> Result<LocusDesc> {
    waring_locus_binary(&pencil_at(f, &l.power_binary(f.degree()), t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::parse_form;

    fn bf(s: &str) -> BForm {
        parse_form(s).unwrap().to_bform().unwrap()
    }

    fn lin(c: &[i64]) -> LinForm {
        LinForm::from_ints(c)
    }

    #[test]
    fn subsets_enumerate_all() {
        let all: Vec<Vec<usize>> = Subsets::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(Subsets::new(3, 3).count(), 1);
        assert_eq!(Subsets::new(2, 3).count(), 0);
    }

    #[test]
    fn sum_of_two_fifth_powers_along_x_plus_y() {
        let p = rank_pencil(&bf("x^5+y^5"), &lin(&[1, 1]), Mode::Exact, 1e-10).unwrap();
        assert_eq!(p.base_rank, 2);
        assert_eq!(p.generic_rank, 3);
        assert_eq!(p.exceptional, vec![Exceptional { lambda: PencilParam::Exact(GaussRat::zero()), rank: 2 }]);
    }

    #[test]
    fn direction_inside_decomposition_drops_rank() {
        // x^5 + y^5 - x^5 = y^5
        let p = rank_pencil(&bf("x^5+y^5"), &lin(&[1, 0]), Mode::Exact, 1e-10).unwrap();
        assert_eq!(p.generic_rank, 2);
        assert_eq!(p.exceptional, vec![Exceptional { lambda: PencilParam::Exact(GaussRat::from_int(-1)), rank: 1 }]);
    }

    #[test]
    fn odd_growth_has_rational_witness() {
        // x^3 + y^3 has rank 2; adding λ(x+y)^3 reaches rank 3 where the
        // generator of the pencil member becomes a square.
        let f = bf("x^3+y^3");
        let p = rank_pencil(&f, &lin(&[1, 1]), Mode::Exact, 1e-10).unwrap();
        assert_eq!(p.generic_rank, 2);
        assert!(p.exceptional.iter().any(|e| e.rank == 3), "{p:?}");
        for e in &p.exceptional {
            if let PencilParam::Exact(t) = &e.lambda {
                let g = pencil_at(&f, &lin(&[1, 1]).power_binary(3), t);
                assert_eq!(waring_rank_binary(&g).unwrap(), e.rank);
            }
        }
    }

    #[test]
    fn subgeneric_growth_holds() {
        for (d, r) in [(5, 2), (6, 2), (7, 3), (6, 1)] {
            let rep = verify_subgeneric_growth(d, r, 3, 11).unwrap();
            assert!(rep.pass, "{rep:?}");
        }
    }

    #[test]
    fn generic_odd_growth_holds() {
        for d in [3, 5] {
            let rep = verify_generic_odd_growth(d, 2, 4, 1e-8).unwrap();
            assert!(rep.trials.iter().all(|t| t.pass), "{:?}", rep.trials);
            assert!(rep.control.iter().all(|t| t.pass), "{:?}", rep.control);
        }
    }

    #[test]
    fn numeric_parameters_match_exact_ones() {
        let f = bf("x^3+y^3");
        let p = rank_pencil(&f, &lin(&[1, 1]), Mode::Numeric, 1e-10).unwrap();
        let pt = ProjPoint::from_ints(&[1, 1]).unwrap().to_numeric();
        let (gr, params) = discriminant_parameters_numeric(&f.to_complex(), &pt, 1e-8).unwrap();
        assert_eq!(gr, p.generic_rank);
        for e in p.exceptional.iter().filter(|e| e.rank == 3) {
            let z = e.lambda.to_complex();
            // the direction is not unit-normalized in the exact profile
            let z = z * 2f64.powf(1.5);
            assert!(params.iter().any(|(w, _)| (w - z).norm() < 1e-6 * (1.0 + z.norm())), "{z} {params:?}");
        }
    }
}
