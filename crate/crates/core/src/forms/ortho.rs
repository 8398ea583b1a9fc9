//! Exact complex-orthogonal matrices (`AᵀA = I`, no conjugation) and their
//! action on forms, linear forms and points.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{BForm, LinForm, NForm, NumPoint, ProjPoint};
use crate::error::{Error, Result};
use crate::exactnum::{CFloat, ExactMatrix, GaussRat};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrthoMatrix {
    m: ExactMatrix,
}

impl OrthoMatrix {
    pub fn new(m: ExactMatrix) -> Result<Self> {
        if m.rows() != m.cols() || m.transpose().mul(&m) != ExactMatrix::identity(m.rows()) {
            return Err(Error::NotOrthogonal);
        }
        Ok(OrthoMatrix { m })
    }

    pub fn identity(n: usize) -> Self {
        OrthoMatrix { m: ExactMatrix::identity(n) }
    }

    /// Diagonal matrix with entries `±1`.
    pub fn signs(s: &[bool]) -> Self {
        let n = s.len();
        let m = ExactMatrix::from_fn(n, n, |i, j| match (i == j, s[i]) {
            (false, _) => GaussRat::zero(),
            (true, true) => -GaussRat::one(),
            (true, false) => GaussRat::one(),
        });
        OrthoMatrix { m }
    }

    /// `(I − S)(I + S)^(-1)` for skew-symmetric `S`.
    pub fn cayley(s: &ExactMatrix) -> Result<Self> {
        let n = s.rows();
        if s.transpose() != s.scale(&-GaussRat::one()) {
            return Err(Error::Precondition("Cayley parameter must be skew-symmetric".into()));
        }
        let id = ExactMatrix::identity(n);
        let inv = id
            .add(s)
            .inverse()
            .ok_or_else(|| Error::Precondition("I + S is singular".into()))?;
        let a = id.add(&s.scale(&-GaussRat::one())).mul(&inv);
        OrthoMatrix::new(a)
    }

    /// Random exact orthogonal matrix: Cayley transform of a skew matrix
    /// with small Gaussian-rational entries, times a random sign flip of
    /// the first coordinate so both determinants occur.
    pub fn random(size: usize, rng: &mut impl Rng) -> Self {
        loop {
            let mut s = ExactMatrix::zeros(size, size);
            for i in 0..size {
                for j in i + 1..size {
                    let re = GaussRat::from_frac(rng.gen_range(-3..=3), rng.gen_range(1..=3));
                    let im = if rng.gen_bool(0.3) {
                        GaussRat::from_frac(rng.gen_range(-2..=2), rng.gen_range(1..=2)) * GaussRat::i()
                    } else {
                        GaussRat::zero()
                    };
                    let v = re + im;
                    s[(j, i)] = -&v;
                    s[(i, j)] = v;
                }
            }
            if let Ok(a) = OrthoMatrix::cayley(&s) {
                if size > 0 && rng.gen_bool(0.5) {
                    let mut flips = vec![false; size];
                    flips[0] = true;
                    return OrthoMatrix::signs(&flips).compose(&a);
                }
                return a;
            }
        }
    }

    pub fn random_seeded(size: usize, seed: u64) -> Self {
        Self::random(size, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn size(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.m
    }

    pub fn det(&self) -> GaussRat {
        self.m.det()
    }

    /// Matrix product `self · o`.
    pub fn compose(&self, o: &OrthoMatrix) -> OrthoMatrix {
        OrthoMatrix { m: self.m.mul(&o.m) }
    }

    pub fn transpose(&self) -> OrthoMatrix {
        OrthoMatrix { m: self.m.transpose() }
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if n != self.size() {
            return Err(Error::VariableMismatch(n, self.size()));
        }
        Ok(())
    }

    /// `(A·F)(x) = F(Aᵀx)`.
    pub fn act(&self, f: &NForm) -> Result<NForm> {
        self.check_size(f.nvars())?;
        // x_j ↦ (Aᵀx)_j = Σ_i A_ij x_i
        let subs: Vec<Vec<GaussRat>> = (0..self.size()).map(|j| self.m.column(j)).collect();
        Ok(f.substitute_linear(&subs))
    }

    pub fn act_binary(&self, f: &BForm) -> Result<BForm> {
        self.check_size(2)?;
        let l0 = BForm::new(self.m.column(0));
        let l1 = BForm::new(self.m.column(1));
        Ok(f.substitute(&l0, &l1))
    }

    /// `p ↦ A p`
    pub fn act_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        self.check_size(p.coords().len())?;
        ProjPoint::new(self.m.mul_vec(p.coords()))
    }

    /// Coefficient vector `a ↦ A a`, consistent with [`act`](Self::act) on `L = a·x`.
    pub fn act_linform(&self, l: &LinForm) -> Result<LinForm> {
        self.check_size(l.nvars())?;
        Ok(LinForm::new(self.m.mul_vec(&l.coords)))
    }

    pub fn act_numpoint(&self, p: &NumPoint) -> Result<NumPoint> {
        self.check_size(p.coords().len())?;
        let c = self.m.to_complex();
        let v: Vec<CFloat> = c
            .iter()
            .map(|row| row.iter().zip(p.coords()).map(|(a, b)| a * b).sum())
            .collect();
        Ok(NumPoint::new(v))
    }
}

pub fn ortho_act(a: &OrthoMatrix, f: &NForm) -> Result<NForm> {
    a.act(f)
}

pub fn ortho_act_point(a: &OrthoMatrix, p: &ProjPoint) -> Result<ProjPoint> {
    a.act_point(p)
}

pub fn random_ortho(size: usize, seed: u64) -> OrthoMatrix {
    OrthoMatrix::random_seeded(size, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_examples() {
        let zero = ExactMatrix::zeros(3, 3);
        assert_eq!(OrthoMatrix::cayley(&zero).unwrap(), OrthoMatrix::identity(3));
        let s = ExactMatrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
        let a = OrthoMatrix::cayley(&s).unwrap();
        assert_eq!(a.matrix(), &ExactMatrix::from_int_rows(&[&[0, -1], &[1, 0]]));
        assert!(OrthoMatrix::new(ExactMatrix::from_int_rows(&[&[1, 1], &[0, 1]])).is_err());
    }

    #[test]
    fn random_matrices_are_orthogonal_with_both_determinants() {
        let mut dets = std::collections::HashSet::new();
        for seed in 0..20 {
            let a = random_ortho(3, seed);
            let d = a.det();
            assert!(d == GaussRat::one() || d == -GaussRat::one());
            dets.insert(d.to_string());
            assert_eq!(a.matrix().transpose().mul(a.matrix()), ExactMatrix::identity(3));
        }
        assert_eq!(dets.len(), 2);
    }

    #[test]
    fn action_examples() {
        let f = BForm::monomial(4, 1);
        assert_eq!(OrthoMatrix::identity(2).act_binary(&f).unwrap(), f);
        let flip = OrthoMatrix::signs(&[false, true]);
        assert_eq!(flip.act_binary(&f).unwrap(), f.scale(&-GaussRat::one()));
        // x0^d goes to (first column of A as a linear form)^d
        let a = random_ortho(2, 7);
        let col = a.matrix().column(0);
        let want = BForm::linear_power(&col[0], &col[1], 5);
        assert_eq!(a.act_binary(&BForm::monomial(5, 0)).unwrap(), want);
        assert_eq!(a.act(&BForm::monomial(5, 0).to_nform()).unwrap().to_bform().unwrap(), want);
    }
}
