//! Degree of `V(g_1, …, g_n)` by restriction to random lines (`n = 1`)
//! and planes (`n = 2`).

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::we_equations;
use crate::error::{Error, Result};
use crate::exactnum::GaussRat;
use crate::forms::{random::int_vector, BForm, NForm, UPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    /// Number of intersection points counted with multiplicity.
    pub degree: usize,
    pub distinct: usize,
    /// The restricted equation (lines) or the eliminant (planes).
    pub eliminant: BForm,
    /// Random sections drawn, including degenerate ones.
    pub attempts: usize,
}

fn count(form: &BForm) -> Result<(usize, usize)> {
    let parts = form.squarefree_decomposition()?;
    let degree = parts.iter().enumerate().map(|(m, p)| (m + 1) * p.degree()).sum();
    let distinct = parts.iter().map(BForm::degree).sum();
    Ok((degree, distinct))
}

const ATTEMPTS: usize = 50;

/// Restrict `g_1` (`n = 1`) to a random rational line of the parameter
/// space and count its roots.
pub fn degree_check_line(d: u32, r: usize, seed: u64) -> Result<DegreeCheck> {
    let eqs = we_equations(1, r, d)?;
    let nv = eqs.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=ATTEMPTS {
        let p = int_vector(&mut rng, nv, 5);
        let q = int_vector(&mut rng, nv, 5);
        let subs: Vec<Vec<GaussRat>> = (0..nv).map(|k| vec![p[k].clone(), q[k].clone()]).collect();
        let restricted = eqs.gs[0].substitute_linear(&subs).to_bform()?;
        if restricted.is_zero() {
            continue;
        }
        let (degree, distinct) = count(&restricted)?;
        return Ok(DegreeCheck { degree, distinct, eliminant: restricted, attempts: attempt });
    }
    Err(Error::NoConvergence)
}

/// Coefficients in `u` of `h(s, t, u)` at fixed `(s, t)`.
fn in_u(h: &NForm, s: &GaussRat, t: &GaussRat) -> UPoly {
    let d = h.degree() as usize;
    let mut c = vec![GaussRat::zero(); d + 1];
    for (a, v) in h.terms() {
        c[a[2] as usize] += &(v * &(&s.pow(a[0]) * &t.pow(a[1])));
    }
    UPoly::new(c)
}

/// Restrict `g_1, g_2` (`n = 2`) to a random rational plane, eliminate one
/// coordinate by an exact resultant and count the roots of the eliminant.
/// The eliminant has degree `d²`; its values are interpolated at `d² + 1`
/// points and checked at two further points and at infinity.
pub fn degree_check_surface(d: u32, r: usize, seed: u64) -> Result<DegreeCheck> {
    let eqs = we_equations(2, r, d)?;
    let nv = eqs.nvars();
    let du = d as usize;
    let n = du * du;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=ATTEMPTS {
        let basis: Vec<Vec<GaussRat>> = (0..3).map(|_| int_vector(&mut rng, nv, 4)).collect();
        let subs: Vec<Vec<GaussRat>> = (0..nv).map(|k| basis.iter().map(|b| b[k].clone()).collect()).collect();
        let a = eqs.gs[0].substitute_linear(&subs);
        let b = eqs.gs[1].substitute_linear(&subs);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let res = |s: &GaussRat, t: &GaussRat| in_u(&a, s, t).resultant_formal(du, &in_u(&b, s, t), du);
        let one = GaussRat::one();
        let xs: Vec<GaussRat> = (0..=n as i64 + 2).map(GaussRat::from_int).collect();
        let ys: Vec<GaussRat> = xs.iter().map(|s| res(s, &one)).collect();
        let h = UPoly::interpolate(&xs[..=n], &ys[..=n]);
        if h.is_zero() {
            continue;
        }
        let eliminant = BForm::from_univariate(&h, n);
        let consistent = (n + 1..=n + 2).all(|k| h.eval(&xs[k]) == ys[k])
            && eliminant.eval(&one, &GaussRat::zero()) == res(&one, &GaussRat::zero());
        if !consistent {
            return Err(Error::Precondition(format!("eliminant is not a form of degree {n}")));
        }
        let (degree, distinct) = count(&eliminant)?;
        return Ok(DegreeCheck { degree, distinct, eliminant, attempts: attempt });
    }
    Err(Error::NoConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_sections_have_degree_d() {
        for (d, r) in [(3, 3), (5, 3), (4, 4)] {
            for seed in 0..3 {
                let c = degree_check_line(d, r, seed).unwrap();
                assert_eq!(c.degree, d as usize);
                assert_eq!(c.distinct, d as usize);
            }
        }
    }

    #[test]
    fn plane_sections_have_degree_d_squared() {
        for (d, r) in [(2, 3), (3, 4)] {
            let c = degree_check_surface(d, r, 1).unwrap();
            assert_eq!(c.degree, (d * d) as usize);
        }
    }
}
