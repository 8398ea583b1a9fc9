//! Dense exact matrices over ℚ(i).
//!
//! Rank and determinant use fraction-free (Bareiss) elimination over the
//! Gaussian integers after clearing row denominators; kernels come from a
//! reduced row echelon form with first-nonzero pivoting, so the returned
//! bases are canonical.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{GaussRat, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussRat>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![GaussRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussRat::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[GaussRat] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[GaussRat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<GaussRat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<GaussRat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = GaussRat::zero();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                acc += a * &other[(k, j)];
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &GaussRat) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    /// Submatrix with the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut a = self.row_vecs();
        let m = self.rows;
        let n = self.cols;
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..n {
            if pr >= m {
                break;
            }
            let Some(found) = (pr..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(found, pr);
            let inv = a[pr][col].inv();
            for v in a[pr].iter_mut().skip(col) {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
            for r in 0..m {
                if r == pr || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in col..n {
                    if a[pr][j].is_zero() {
                        continue;
                    }
                    let sub = &factor * &a[pr][j];
                    a[r][j] -= &sub;
                }
            }
            pivots.push(col);
            pr += 1;
        }
        (Self::from_rows_sized(a, m, n), pivots)
    }

    fn from_rows_sized(rows: Vec<Vec<GaussRat>>, m: usize, n: usize) -> Self {
        if m == 0 {
            return Self::zeros(0, n);
        }
        let mut out = Self::from_rows(rows);
        out.cols = n;
        out
    }

    /// Basis of the right null space. Each vector has a 1 in its free
    /// column and zeros in every other free column.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussRat>> {
        let n = self.cols;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![GaussRat::zero(); n];
                v[free] = GaussRat::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&r[(row, free)];
                }
                v
            })
            .collect()
    }

    /// Rank over ℚ(i) by fraction-free elimination.
    pub fn rank_exact(&self) -> usize {
        bareiss(self).0
    }

    pub fn det(&self) -> GaussRat {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        if self.rows == 0 {
            return GaussRat::one();
        }
        bareiss(self).1
    }

    /// Solves `self · x = b`; returns one solution (free variables zero) or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[GaussRat]) -> Option<Vec<GaussRat>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![GaussRat::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                GaussRat::one()
            } else {
                GaussRat::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    pub fn to_complex(&self) -> Vec<Vec<num_complex::Complex64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(GaussRat::to_complex).collect())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Gaussian integer used inside Bareiss elimination.
#[derive(Clone, PartialEq, Eq, Debug)]
struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn mul(&self, o: &GInt) -> GInt {
        GInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn sub(&self, o: &GInt) -> GInt {
        GInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn neg(&self) -> GInt {
        GInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
    /// Exact quotient; the Bareiss invariant guarantees divisibility.
    fn div_exact(&self, o: &GInt) -> GInt {
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        debug_assert!(re.is_multiple_of(&n) && im.is_multiple_of(&n));
        GInt { re: re / &n, im: im / n }
    }
    fn one() -> GInt {
        GInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }
}

/// Returns (rank, determinant). The determinant is only meaningful for
/// square input and is zero when rank-deficient.
fn bareiss(m: &ExactMatrix) -> (usize, GaussRat) {
    let rows = m.rows;
    let cols = m.cols;
    // Clear denominators row by row; remember the scale for the determinant.
    let mut scale = Rat::one();
    let mut a: Vec<Vec<GInt>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let l = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, z| acc.lcm(&z.denom_lcm()));
        scale *= Rat::from_integer(l.clone());
        a.push(
            m.row(i)
                .iter()
                .map(|z| GInt {
                    re: (z.re.numer() * &l) / z.re.denom(),
                    im: (z.im.numer() * &l) / z.im.denom(),
                })
                .collect(),
        );
    }
    let mut prev = GInt::one();
    let mut rank = 0;
    let mut sign_flip = false;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if p != row {
            a.swap(p, row);
            sign_flip = !sign_flip;
        }
        let pivot = a[row][col].clone();
        for r in row + 1..rows {
            let arc = a[r][col].clone();
            for c in col + 1..cols {
                let v = pivot.mul(&a[r][c]).sub(&arc.mul(&a[row][c]));
                a[r][c] = v.div_exact(&prev);
            }
            a[r][col] = GInt {
                re: BigInt::zero(),
                im: BigInt::zero(),
            };
        }
        prev = pivot;
        row += 1;
        rank += 1;
    }
    let det = if rows == cols && rank == rows {
        let d = if sign_flip { prev.neg() } else { prev };
        GaussRat::new(Rat::from_integer(d.re), Rat::from_integer(d.im))
            / GaussRat::from_rat(scale)
    } else {
        GaussRat::zero()
    };
    (rank, det)
}
