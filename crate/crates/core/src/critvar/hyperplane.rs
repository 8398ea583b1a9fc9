//! The hyperplanes `H̃_i`: apolar pairing against `(g·x0)^(d−1)(g·x_i)`
//! for an orthogonal `g`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::GaussRat;
use crate::forms::{exponents, multinomial, NForm, OrthoMatrix};

/// A linear functional on forms of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneFunctional {
    pub nvars: usize,
    pub degree: u32,
    /// `c_α` in `Σ c_α Y_α`, where `Y_α` is the coefficient of `x^α`.
    pub coeffs: BTreeMap<Vec<u32>, GaussRat>,
}

impl HyperplaneFunctional {
    pub fn eval(&self, f: &NForm) -> Result<GaussRat> {
        if f.nvars() != self.nvars || f.degree() != self.degree {
            return Err(Error::DegreeMismatch(format!(
                "functional on degree {} in {} variables",
                self.degree, self.nvars
            )));
        }
        Ok(self.coeffs.iter().map(|(a, c)| c * &f.coeff(a)).sum())
    }
}

/// `Σ_ℓ binom(d−1; α − e_ℓ) g_0^(α−e_ℓ) g_{ℓ,i}`: the coefficient of `x^α`
/// in `(g·x0)^(d−1) (g·x_i)`, where `g_0` is the first column of `g`.
fn dual_coefficient(g: &OrthoMatrix, i: usize, alpha: &[u32]) -> GaussRat {
    let m = g.matrix();
    let n = alpha.len();
    let mut acc = GaussRat::zero();
    for l in 0..n {
        if alpha[l] == 0 {
            continue;
        }
        let mut beta = alpha.to_vec();
        beta[l] -= 1;
        let mut t = GaussRat::from_big(multinomial(&beta)) * m[(l, i)].clone();
        for (k, &b) in beta.iter().enumerate() {
            if b > 0 {
                t = &t * &m[(k, 0)].pow(b);
            }
        }
        acc += t;
    }
    acc
}

/// The dual form `(g·x0)^(d−1)(g·x_i)` with its coefficients given by the
/// explicit multinomial sum.
pub fn h_tilde_dual(g: &OrthoMatrix, i: usize, d: u32) -> Result<NForm> {
    let n = g.size();
    if i == 0 || i >= n || d == 0 {
        return Err(Error::OutOfRange(format!("functional index {i}")));
    }
    NForm::from_terms(n, d, exponents(n, d).into_iter().map(|a| {
        let c = dual_coefficient(g, i, &a);
        (a, c)
    }))
}

/// `H̃_i(F) = ((g·x0)^(d−1)(g·x_i))(∂) ∘ F`. In coordinates `Y_α` the
/// coefficient of `Y_α` is the dual coefficient times `α!`.
pub fn h_tilde(g: &OrthoMatrix, i: usize, d: u32) -> Result<HyperplaneFunctional> {
    let dual = h_tilde_dual(g, i, d)?;
    let coeffs = dual
        .terms()
        .iter()
        .map(|(a, c)| (a.clone(), c * &GaussRat::from_big(crate::forms::alpha_factorial(a))))
        .collect();
    Ok(HyperplaneFunctional { nvars: g.size(), degree: d, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::is_eigenvector;
    use crate::exactnum::{factorial, ExactMatrix};
    use crate::forms::{random::nform_gauss, LinForm};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_gives_coordinate_hyperplane() {
        let h = h_tilde(&OrthoMatrix::identity(3), 2, 4).unwrap();
        assert_eq!(h.coeffs.len(), 1);
        // (x0^3 x2)(∂) ∘ x^α is 3!·1! on α = (3,0,1)
        assert_eq!(h.coeffs[&vec![3, 0, 1]], GaussRat::from_int(6));
    }

    #[test]
    fn swap_tests_other_coordinate() {
        let swap = OrthoMatrix::new(ExactMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])).unwrap();
        // g·x0 = x1, g·x2 = x2
        let h = h_tilde(&swap, 2, 3).unwrap();
        assert_eq!(h.coeffs.len(), 1);
        assert!(h.coeffs.contains_key(&vec![0, 2, 1]));
        // g·x1 = x0
        let h = h_tilde(&swap, 1, 3).unwrap();
        assert!(h.coeffs.contains_key(&vec![1, 2, 0]));
    }

    #[test]
    fn formula_matches_expanded_dual_and_bw() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for size in [2usize, 3] {
            for d in [3u32, 4] {
                let g = OrthoMatrix::random(size, &mut rng);
                let cols: Vec<LinForm> = (0..size).map(|k| LinForm::new(g.matrix().column(k))).collect();
                for i in 1..size {
                    let dual = h_tilde_dual(&g, i, d).unwrap();
                    let direct = cols[0].power(d - 1).mul(&cols[i].power(1)).unwrap();
                    assert_eq!(dual, direct);
                    let f = nform_gauss(&mut rng, size, d, 3);
                    let h = h_tilde(&g, i, d).unwrap().eval(&f).unwrap();
                    let bw = f.bw_inner(&dual).unwrap();
                    assert_eq!(h, &bw * &GaussRat::from_big(factorial(d)));
                }
            }
        }
    }

    #[test]
    fn kernel_is_eigen_condition() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..6 {
            let g = OrthoMatrix::random(3, &mut rng);
            let l = LinForm::new(g.matrix().column(0));
            let d = 4;
            // F = L^d + G with G in the span of the H̃ kernels: project a
            // random form onto ∩ ker H̃_i by subtracting multiples of the
            // duals (which are orthogonal to L^d and to each other up to
            // scale).
            let mut f = l.power(d).add(&nform_gauss(&mut rng, 3, d, 2)).unwrap();
            assert_eq!(is_eigenvector(&f, &l), (1..3).all(|i| h_tilde(&g, i, d).unwrap().eval(&f).unwrap().is_zero()));
            for i in 1..3 {
                let dual = h_tilde_dual(&g, i, d).unwrap();
                let h = h_tilde(&g, i, d).unwrap();
                let c = &h.eval(&f).unwrap() * &h.eval(&dual).unwrap().inv();
                f = f.sub(&dual.scale(&c)).unwrap();
            }
            for i in 1..3 {
                assert!(h_tilde(&g, i, d).unwrap().eval(&f).unwrap().is_zero());
            }
            assert!(is_eigenvector(&f, &l));
        }
    }
}
