//! Floating-point complex linear algebra. Only used where a result is
//! explicitly numeric; every routine here is tolerance-dependent.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CFloat = Complex64;

fn to_dmatrix(m: &[Vec<CFloat>]) -> Result<DMatrix<CFloat>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if m.iter().flatten().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(DMatrix::from_fn(rows, cols, |i, j| m[i][j]))
}

/// Singular values in decreasing order.
pub fn singular_values(m: &[Vec<CFloat>]) -> Result<Vec<f64>> {
    let a = to_dmatrix(m)?;
    if a.nrows() == 0 || a.ncols() == 0 {
        return Ok(Vec::new());
    }
    let mut sv: Vec<f64> = a.singular_values().iter().copied().collect();
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(sv)
}

/// Number of singular values above `tol · σ_max`. The answer depends on
/// `tol`; a matrix with σ = (1, 1e-3, 1e-12) has numeric rank 2 at 1e-6
/// and 3 at 1e-15.
pub fn rank_numeric(m: &[Vec<CFloat>], tol: f64) -> Result<usize> {
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let sv = singular_values(m)?;
    let Some(&top) = sv.first() else {
        return Ok(0);
    };
    if top == 0.0 {
        return Ok(0);
    }
    Ok(sv.iter().filter(|&&s| s > tol * top).count())
}

/// Unit vector spanning (approximately) the smallest right singular
/// direction of `m`.
pub fn smallest_right_singular_vector(m: &[Vec<CFloat>]) -> Result<(Vec<CFloat>, f64)> {
    let a = to_dmatrix(m)?;
    let cols = a.ncols();
    // Pad to square so that V is complete even for wide matrices.
    let padded = if a.nrows() < cols {
        let mut p = DMatrix::zeros(cols, cols);
        p.view_mut((0, 0), (a.nrows(), cols)).copy_from(&a);
        p
    } else {
        a
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V");
    let (idx, smin) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.partial_cmp(y.1).unwrap())
        .map(|(i, s)| (i, *s))
        .expect("nonempty");
    let v = v_t.row(idx).iter().map(|z| z.conj()).collect();
    Ok((v, smin))
}

/// Eigenvalues of a square complex matrix via the Schur form.
pub fn eigenvalues(m: &[Vec<CFloat>]) -> Result<Vec<CFloat>> {
    let a = to_dmatrix(m)?;
    if a.nrows() == 0 {
        return Ok(Vec::new());
    }
    let n = a.nrows();
    let scale = a.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
    // Plain QR can stall when eigenvalues share a modulus (for instance
    // roots placed symmetrically about 0); a complex shift breaks the tie.
    for shift in [CFloat::new(0.0, 0.0), CFloat::new(0.3137, 0.1729), CFloat::new(-0.2213, 0.4411)] {
        let s = shift * scale;
        let shifted = &a + DMatrix::from_diagonal_element(n, n, s);
        if let Some(schur) = nalgebra::linalg::Schur::try_new(shifted, f64::EPSILON, 10_000) {
            let (_, t) = schur.unpack();
            return Ok((0..n).map(|i| t[(i, i)] - s).collect());
        }
    }
    Err(Error::NoConvergence)
}

/// Least-squares solution of `a · x = b`.
pub fn lstsq(a: &[Vec<CFloat>], b: &[CFloat]) -> Result<Vec<CFloat>> {
    let m = to_dmatrix(a)?;
    let rhs = nalgebra::DVector::from_column_slice(b);
    let svd = m.svd(true, true);
    let x = svd.solve(&rhs, 1e-13).map_err(|_| Error::NoConvergence)?;
    Ok(x.iter().copied().collect())
}

/// Determinant by LU with partial pivoting.
pub fn det(m: &[Vec<CFloat>]) -> Result<CFloat> {
    let a = to_dmatrix(m)?;
    if a.nrows() == 0 {
        return Ok(CFloat::new(1.0, 0.0));
    }
    Ok(a.lu().determinant())
}

pub fn norm2(v: &[CFloat]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
