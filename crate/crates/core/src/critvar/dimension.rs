//! Numeric dimension of the critical Waring variety from the rank of the
//! differential of `(A, λ, α) ↦ λ·A·(x0^d + Σ (α_i·x)^d)` restricted to
//! `g_1 = … = g_n = 0`.

use num_traits::Zero;

use super::{sample_chart, we_equations, SecantParams};
use crate::error::{Error, Result};
use crate::exactnum::{numeric as fnum, rat_to_f64, CFloat, ExactMatrix, GaussRat, Rat};
use crate::forms::{exponents, multinomial, NForm};

#[derive(Clone, Debug, PartialEq)]
pub struct DimEstimate {
    pub n: usize,
    pub r: usize,
    pub d: u32,
    /// Dimension of the affine cone.
    pub cone_dim: usize,
    pub projective_dim: usize,
    pub singular_values: Vec<f64>,
    /// Last retained over first discarded singular value (infinite when
    /// nothing is discarded).
    pub gap: f64,
    pub params: SecantParams,
}

/// Point of the parameter space and a basis of the tangent space of
/// `V(g)` there. For `r = 2` the reduced component `α_{1,0} = 0` is used,
/// since the other components only give forms of rank 1.
fn sample_with_tangent(n: usize, r: usize, d: u32, seed: u64) -> Result<(SecantParams, Vec<Vec<GaussRat>>)> {
    if r == 2 {
        let mut p = sample_chart(n, r, d, seed)?;
        p.alpha[0][0] = GaussRat::zero();
        for j in 1..=n {
            if p.alpha[0][j].is_zero() {
                p.alpha[0][j] = GaussRat::from_int(j as i64);
            }
        }
        let tangent = (1..=n)
            .map(|j| {
                let mut v = vec![GaussRat::zero(); n + 1];
                v[j] = GaussRat::from_int(1);
                v
            })
            .collect();
        return Ok((p, tangent));
    }
    let p = moderate_chart(n, r, d, seed)?;
    let eqs = we_equations(n, r, d)?;
    let point = p.flat();
    let grads: Vec<Vec<NForm>> = eqs.gs.iter().map(NForm::gradient).collect();
    let jac = ExactMatrix::from_fn(n, eqs.nvars(), |a, b| grads[a][b].eval(&point));
    if jac.rank_exact() != n {
        return Err(Error::Precondition("sample is a singular point of the parameter variety".into()));
    }
    Ok((p, jac.kernel_basis()))
}

/// A chart sample whose entries all have modulus at most 8, so that no
/// summand dominates the others. Draws are taken from seeds derived from
/// `seed`.
fn moderate_chart(n: usize, r: usize, d: u32, seed: u64) -> Result<SecantParams> {
    for attempt in 0..500u64 {
        let p = sample_chart(n, r, d, seed.wrapping_mul(1_000_003).wrapping_add(attempt))?;
        if p.alpha.iter().flatten().all(|c| c.to_complex().norm() <= 8.0) && p.distinct_points() {
            return Ok(p);
        }
    }
    Err(Error::NoConvergence)
}

fn bw_coords(f: &NForm, basis: &[Vec<u32>]) -> Vec<CFloat> {
    basis
        .iter()
        .map(|a| {
            let w = rat_to_f64(&Rat::from_integer(multinomial(a))).sqrt();
            f.coeff(a).to_complex() / w
        })
        .collect()
}

/// Rank of the parametrization's differential at a random rational point.
/// The rank is exact; singular values are reported in a Bombieri–Weyl
/// orthonormal basis with unit columns, and `tol` only bounds the gap
/// between the retained and discarded parts of that spectrum.
pub fn dim_estimate_we(n: usize, r: usize, d: u32, seed: u64, tol: f64) -> Result<DimEstimate> {
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let (params, tangent) = sample_with_tangent(n, r, d, seed)?;
    let f = params.expand();
    let nv = n + 1;
    let mut columns: Vec<NForm> = vec![f.clone()];
    // rotations x_a ∂_b F − x_b ∂_a F
    let grad = f.gradient();
    let x = |k: usize| {
        let mut e = vec![0; nv];
        e[k] = 1;
        NForm::monomial(&e)
    };
    for a in 0..nv {
        for b in a + 1..nv {
            let t = x(a).mul(&grad[b])?.sub(&x(b).mul(&grad[a])?)?;
            columns.push(t);
        }
    }
    // moving the tail summands: Σ_i d (α_i·x)^(d−1) (v_i·x)
    let dd = GaussRat::from_int(d as i64);
    for v in &tangent {
        let mut t = NForm::zero(nv, d);
        for (i, row) in params.alpha.iter().enumerate() {
            let vi = &v[i * nv..(i + 1) * nv];
            if vi.iter().all(|c| c.is_zero()) {
                continue;
            }
            let term = NForm::linear_power(row, d - 1).mul(&NForm::linear_power(vi, 1))?.scale(&dd);
            t = t.add(&term)?;
        }
        columns.push(t);
    }
    let basis = exponents(nv, d);
    // unit columns: the rank is unchanged and the spread of scales between
    // `F` and the tangent moves no longer masks small singular values
    let cols: Vec<Vec<CFloat>> = columns
        .iter()
        .map(|c| {
            let v = bw_coords(c, &basis);
            let n = fnum::norm2(&v);
            if n > 0.0 {
                v.iter().map(|z| z / n).collect()
            } else {
                v
            }
        })
        .collect();
    let m: Vec<Vec<CFloat>> = (0..basis.len()).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let sv = fnum::singular_values(&m)?;
    let exact = ExactMatrix::from_fn(basis.len(), columns.len(), |i, j| columns[j].coeff(&basis[i]));
    let cone_dim = exact.rank_exact();
    let top = sv.first().copied().unwrap_or(0.0);
    if cone_dim > 0 && sv[cone_dim - 1] <= tol * tol * top {
        return Err(Error::Precondition("differential is numerically degenerate at the sample".into()));
    }
    let gap = match (cone_dim.checked_sub(1).map(|k| sv[k]), sv.get(cone_dim)) {
        (Some(kept), Some(&dropped)) if dropped > 0.0 => kept / dropped,
        _ => f64::INFINITY,
    };
    Ok(DimEstimate {
        n,
        r,
        d,
        cone_dim,
        projective_dim: cone_dim.saturating_sub(1),
        singular_values: sv,
        gap,
        params,
    })
}
