//! Floating-point Sylvester algorithm for binary forms with complex
//! coefficients. Every answer here depends on the tolerance.

use crate::error::{Error, Result};
use crate::exactnum::numeric as fnum;
use crate::exactnum::CFloat;

/// Same layout as the exact catalecticant, on a complex coefficient vector
/// (`f[k]` is the coefficient of `x0^(d-k) x1^k`).
pub fn catalecticant_numeric(f: &[CFloat], k: usize) -> Vec<Vec<CFloat>> {
    let d = f.len() - 1;
    if k > d {
        return Vec::new();
    }
    let falling = |n: usize, m: usize| ((n - m + 1)..=n).map(|v| v as f64).product::<f64>();
    (0..=d - k)
        .map(|p| {
            (0..=k)
                .map(|q| f[p + q] * falling(d - p - q, k - q) * falling(p + q, q))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericRank {
    pub rank: usize,
    pub k1: usize,
    /// Unit-norm minimal generator (balanced case: one pencil member).
    pub g1: Vec<CFloat>,
    /// Discriminant of `g1`, relative; see [`relative_discriminant`].
    pub g1_discriminant: f64,
    pub balanced: bool,
}

fn normalize(v: &[CFloat]) -> Vec<CFloat> {
    let n = fnum::norm2(v);
    v.iter().map(|z| z / n).collect()
}

pub(crate) fn derivative0(g: &[CFloat]) -> Vec<CFloat> {
    let k = g.len() - 1;
    (0..k).map(|j| g[j] * (k - j) as f64).collect()
}

pub(crate) fn derivative1(g: &[CFloat]) -> Vec<CFloat> {
    let k = g.len() - 1;
    (0..k).map(|j| g[j + 1] * (j + 1) as f64).collect()
}

/// Homogeneous Sylvester resultant of two complex binary forms.
pub fn resultant_numeric(a: &[CFloat], b: &[CFloat]) -> Result<CFloat> {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return Ok(CFloat::new(1.0, 0.0));
    }
    let mut s = vec![vec![CFloat::new(0.0, 0.0); size]; size];
    for row in 0..n {
        for k in 0..=m {
            s[row][row + k] = a[k];
        }
    }
    for row in 0..m {
        for k in 0..=n {
            s[n + row][row + k] = b[k];
        }
    }
    fnum::det(&s)
}

/// `|disc(g)|` for `g` scaled to unit coefficient norm. Zero exactly for
/// forms with a repeated root; a double root perturbed by `ε` gives a value
/// of order `ε`, whereas the roots themselves only move by `√ε`.
pub fn relative_discriminant(g: &[CFloat]) -> Result<f64> {
    let k = g.len() - 1;
    if k <= 1 {
        return Ok(1.0);
    }
    let g = normalize(g);
    let r = resultant_numeric(&derivative0(&g), &derivative1(&g))?;
    Ok(r.norm() / (k as f64).powi(k as i32 - 2))
}

/// Waring rank of a complex binary form by Sylvester's rule, with
/// catalecticant ranks and the squarefree test both thresholded at `tol`.
pub fn waring_rank_numeric(f: &[CFloat], tol: f64) -> Result<NumericRank> {
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    if f.iter().all(|z| z.norm() == 0.0) {
        return Err(Error::ZeroForm);
    }
    let d = f.len() - 1;
    if d == 0 {
        return Err(Error::Precondition("degree 0".into()));
    }
    let f = normalize(f);
    for k in 1..=(d + 2) / 2 {
        let cat = catalecticant_numeric(&f, k);
        let rank = if cat.is_empty() { 0 } else { fnum::rank_numeric(&cat, tol)? };
        if rank < k + 1 {
            let g1 = if cat.is_empty() {
                let mut v = vec![CFloat::new(0.0, 0.0); k + 1];
                v[0] = CFloat::new(1.0, 0.0);
                v
            } else {
                normalize(&fnum::smallest_right_singular_vector(&cat)?.0)
            };
            let balanced = 2 * k == d + 2;
            let disc = relative_discriminant(&g1)?;
            let rank = if balanced || disc > tol { k } else { d + 2 - k };
            return Ok(NumericRank { rank, k1: k, g1, g1_discriminant: disc, balanced });
        }
    }
    unreachable!("kernel is nontrivial by degree (d+2)/2")
}
