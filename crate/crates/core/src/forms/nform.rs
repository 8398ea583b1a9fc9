//! Sparse homogeneous forms in any number of variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::BForm;
use crate::error::{Error, Result};
use crate::exactnum::{factorial, CFloat, GaussRat};

/// `Σ F_α x^α` over exponent vectors with `|α| = degree`; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NForm {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, GaussRat>,
}

/// Every exponent vector of length `nvars` summing to `d`, in
/// lexicographically decreasing order (`x0^d` first).
pub fn exponents(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, left: usize, rem: u32, out: &mut Vec<Vec<u32>>) {
        if left == 1 {
            prefix.push(rem);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=rem).rev() {
            prefix.push(a);
            rec(prefix, left - 1, rem - a, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(&mut Vec::with_capacity(nvars), nvars, d, &mut out);
    out
}

/// `d! / Π α_i!`
pub fn multinomial(alpha: &[u32]) -> BigInt {
    let d: u32 = alpha.iter().sum();
    alpha.iter().fold(factorial(d), |acc, &a| acc / factorial(a))
}

/// `Π α_i!`
pub fn alpha_factorial(alpha: &[u32]) -> BigInt {
    alpha.iter().fold(BigInt::one(), |acc, &a| acc * factorial(a))
}

impl NForm {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        NForm { nvars, degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, degree: u32, terms: impl IntoIterator<Item = (Vec<u32>, GaussRat)>) -> Result<Self> {
        let mut f = Self::zero(nvars, degree);
        for (alpha, c) in terms {
            if alpha.len() != nvars {
                return Err(Error::VariableMismatch(alpha.len(), nvars));
            }
            if alpha.iter().sum::<u32>() != degree {
                return Err(Error::DegreeMismatch(format!("monomial {alpha:?} in a form of degree {degree}")));
            }
            f.add_term(alpha, c);
        }
        Ok(f)
    }

    pub fn monomial(alpha: &[u32]) -> Self {
        let mut f = Self::zero(alpha.len(), alpha.iter().sum());
        f.add_term(alpha.to_vec(), GaussRat::one());
        f
    }

    /// `(Σ a_i x_i)^d`, expanded by the multinomial theorem.
    pub fn linear_power(a: &[GaussRat], d: u32) -> Self {
        let mut f = Self::zero(a.len(), d);
        let support: Vec<usize> = (0..a.len()).filter(|&i| !a[i].is_zero()).collect();
        if support.is_empty() {
            return f;
        }
        for beta in exponents(support.len(), d) {
            let mut c = GaussRat::from_big(multinomial(&beta));
            let mut alpha = vec![0u32; a.len()];
            for (pos, &i) in support.iter().enumerate() {
                alpha[i] = beta[pos];
                c = &c * &a[i].pow(beta[pos]);
            }
            f.add_term(alpha, c);
        }
        f
    }

    /// Adds `c·x^α`. Panics if `α` does not fit this form.
    pub fn add_term(&mut self, alpha: Vec<u32>, c: GaussRat) {
        assert_eq!(alpha.len(), self.nvars, "exponent length");
        assert_eq!(alpha.iter().sum::<u32>(), self.degree, "exponent degree");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, GaussRat> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &[u32]) -> GaussRat {
        self.terms.get(alpha).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, o: &NForm) -> Result<()> {
        if self.nvars != o.nvars {
            return Err(Error::VariableMismatch(self.nvars, o.nvars));
        }
        if self.degree != o.degree {
            return Err(Error::DegreeMismatch(format!("{} vs {}", self.degree, o.degree)));
        }
        Ok(())
    }

    pub fn add(&self, o: &NForm) -> Result<NForm> {
        self.check_compatible(o)?;
        let mut out = self.clone();
        for (a, c) in &o.terms {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &NForm) -> Result<NForm> {
        self.add(&o.scale(&-GaussRat::one()))
    }

    pub fn scale(&self, s: &GaussRat) -> NForm {
        if s.is_zero() {
            return NForm::zero(self.nvars, self.degree);
        }
        NForm {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, o: &NForm) -> Result<NForm> {
        if self.nvars != o.nvars {
            return Err(Error::VariableMismatch(self.nvars, o.nvars));
        }
        let mut out = NForm::zero(self.nvars, self.degree + o.degree);
        for (a, c) in &self.terms {
            for (b, e) in &o.terms {
                let ab: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(ab, c * e);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> NForm {
        let mut acc = NForm::constant(self.nvars, GaussRat::one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same variables");
        }
        acc
    }

    /// Degree-zero form with value `c`.
    pub fn constant(nvars: usize, c: GaussRat) -> NForm {
        let mut f = NForm::zero(nvars, 0);
        f.add_term(vec![0; nvars], c);
        f
    }

    /// ∂F/∂x_i
    pub fn partial(&self, i: usize) -> NForm {
        assert!(self.degree > 0, "cannot differentiate a constant form");
        let mut out = NForm::zero(self.nvars, self.degree - 1);
        for (a, c) in &self.terms {
            if a[i] == 0 {
                continue;
            }
            let mut b = a.clone();
            b[i] -= 1;
            out.add_term(b, c * &GaussRat::from_int(a[i] as i64));
        }
        out
    }

    pub fn gradient(&self) -> Vec<NForm> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// Number of essential variables: the rank of the first partials, i.e.
    /// of the degree-1 catalecticant.
    pub fn essential_variables(&self) -> usize {
        if self.degree == 0 {
            return 0;
        }
        let grad = self.gradient();
        let basis = exponents(self.nvars, self.degree - 1);
        crate::exactnum::ExactMatrix::from_fn(basis.len(), grad.len(), |i, j| grad[j].coeff(&basis[i])).rank_exact()
    }

    pub fn eval(&self, p: &[GaussRat]) -> GaussRat {
        assert_eq!(p.len(), self.nvars);
        let mut powers: Vec<Vec<GaussRat>> = Vec::with_capacity(self.nvars);
        for x in p {
            let v: Vec<GaussRat> = std::iter::successors(Some(GaussRat::one()), |acc| Some(acc * x))
                .take(self.degree as usize + 1)
                .collect();
            powers.push(v);
        }
        let mut acc = GaussRat::zero();
        for (a, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in a.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_complex(&self, p: &[CFloat]) -> CFloat {
        assert_eq!(p.len(), self.nvars);
        self.terms
            .iter()
            .map(|(a, c)| {
                a.iter()
                    .enumerate()
                    .fold(c.to_complex(), |t, (i, &e)| t * p[i].powu(e))
            })
            .sum()
    }

    /// `self(∂) ∘ f`, using `∂^β x^α = α!/(α−β)! x^(α−β)`.
    pub fn apolar_apply(&self, f: &NForm) -> Result<NForm> {
        if self.nvars != f.nvars {
            return Err(Error::VariableMismatch(self.nvars, f.nvars));
        }
        if self.degree > f.degree {
            return Err(Error::DegreeMismatch(format!(
                "operator degree {} exceeds form degree {}",
                self.degree, f.degree
            )));
        }
        let mut out = NForm::zero(f.nvars, f.degree - self.degree);
        for (beta, g) in &self.terms {
            for (alpha, c) in &f.terms {
                if alpha.iter().zip(beta).any(|(a, b)| a < b) {
                    continue;
                }
                let mut w = BigInt::one();
                let rest: Vec<u32> = alpha.iter().zip(beta).map(|(a, b)| a - b).collect();
                for (&a, &b) in alpha.iter().zip(beta) {
                    w *= super::binary::falling(a as usize, b as usize);
                }
                out.add_term(rest, &(g * c) * &GaussRat::from_big(w));
            }
        }
        Ok(out)
    }

    /// `Σ binom(d, α)^(-1) F_α G_α`
    pub fn bw_inner(&self, g: &NForm) -> Result<GaussRat> {
        self.check_compatible(g)?;
        let mut acc = GaussRat::zero();
        for (a, c) in &self.terms {
            if let Some(e) = g.terms.get(a) {
                acc += &(&(c * e) * &GaussRat::from_big(multinomial(a)).inv());
            }
        }
        Ok(acc)
    }

    /// Substitute `x_j ← Σ_i subs[j][i] x_i`.
    pub fn substitute_linear(&self, subs: &[Vec<GaussRat>]) -> NForm {
        assert_eq!(subs.len(), self.nvars);
        let out_vars = subs.first().map_or(self.nvars, Vec::len);
        let lin: Vec<NForm> = subs.iter().map(|row| NForm::linear_power(row, 1)).collect();
        let mut cache: Vec<Vec<NForm>> = lin
            .iter()
            .map(|l| vec![NForm::constant(out_vars, GaussRat::one()), l.clone()])
            .collect();
        let mut out = NForm::zero(out_vars, self.degree);
        for (a, c) in &self.terms {
            let mut t = NForm::constant(out_vars, c.clone());
            for (j, &e) in a.iter().enumerate() {
                while cache[j].len() <= e as usize {
                    let next = cache[j].last().unwrap().mul(&lin[j]).expect("same variables");
                    cache[j].push(next);
                }
                if e > 0 {
                    t = t.mul(&cache[j][e as usize]).expect("same variables");
                }
            }
            out = out.add(&t).expect("same shape");
        }
        out
    }

    pub fn to_bform(&self) -> Result<BForm> {
        if self.nvars != 2 {
            return Err(Error::VariableMismatch(self.nvars, 2));
        }
        let d = self.degree as usize;
        Ok(BForm::new((0..=d).map(|k| self.coeff(&[(d - k) as u32, k as u32])).collect()))
    }

    /// Same form viewed in more variables.
    pub fn embed(&self, nvars: usize) -> NForm {
        assert!(nvars >= self.nvars);
        let mut out = NForm::zero(nvars, self.degree);
        for (a, c) in &self.terms {
            let mut b = a.clone();
            b.resize(nvars, 0);
            out.add_term(b, c.clone());
        }
        out
    }

    pub fn norm1_f64(&self) -> f64 {
        self.terms.values().map(|c| c.to_complex().norm()).sum()
    }

    /// Scale so the coefficient of the lexicographically largest monomial is 1.
    pub fn normalized(&self) -> NForm {
        match self.terms.iter().next_back() {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    pub fn proportional(&self, o: &NForm) -> bool {
        !self.is_zero() && !o.is_zero() && self.normalized() == o.normalized()
    }
}

fn fmt_monomial(alpha: &[u32]) -> String {
    let parts: Vec<String> = alpha
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
        .collect();
    parts.join("*")
}

impl fmt::Display for NForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (alpha, c) in self.terms.iter().rev() {
            let mono = fmt_monomial(alpha);
            let term = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if (-c).is_one() {
                format!("-{mono}")
            } else {
                format!("{c}*{mono}")
            };
            match (first, term.strip_prefix('-')) {
                (true, _) => write!(f, "{term}")?,
                (false, Some(rest)) => write!(f, " - {rest}")?,
                (false, None) => write!(f, " + {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for NForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NForm[{} vars, deg {}]({self})", self.nvars, self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn essential_variables_count_partials() {
        let p = |s: &str| crate::forms::parse_form_in(s, 3).unwrap();
        assert_eq!(p("x0^3 + x1^3").essential_variables(), 2);
        assert_eq!(p("(x0 + 2*x1 - x2)^4").essential_variables(), 1);
        assert_eq!(p("x0*x1*x2").essential_variables(), 3);
        // a change of coordinates hides nothing: (x0+x1)^3 + (x0-x1)^3 uses two
        assert_eq!(p("(x0 + x1)^3 + (x0 - x1)^3").essential_variables(), 2);
    }

    #[test]
    fn exponent_enumeration() {
        let e = exponents(3, 2);
        assert_eq!(e.len(), 6);
        assert_eq!(e[0], vec![2, 0, 0]);
        assert_eq!(e[5], vec![0, 0, 2]);
        assert_eq!(multinomial(&[1, 1, 2]), BigInt::from(12));
    }

    #[test]
    fn linear_power_expansion() {
        // (x0 + 2 x1 - x2)^2
        let f = NForm::linear_power(&[1, 2, -1].map(GaussRat::from_int), 2);
        assert_eq!(f.coeff(&[2, 0, 0]), GaussRat::from_int(1));
        assert_eq!(f.coeff(&[1, 1, 0]), GaussRat::from_int(4));
        assert_eq!(f.coeff(&[0, 1, 1]), GaussRat::from_int(-4));
        assert_eq!(f.coeff(&[0, 0, 2]), GaussRat::from_int(1));
    }

    #[test]
    fn apolar_matches_binary() {
        let f = BForm::from_ints(&[3, -1, 4, 1, -5]);
        let g = BForm::from_ints(&[2, 7, 1]);
        let dense = g.apolar_apply(&f).unwrap();
        let sparse = g.to_nform().apolar_apply(&f.to_nform()).unwrap();
        assert_eq!(sparse.to_bform().unwrap(), dense);
        assert_eq!(f.bw_inner(&f).unwrap(), f.to_nform().bw_inner(&f.to_nform()).unwrap());
    }

    #[test]
    fn display_examples() {
        let f = NForm::from_terms(
            2,
            3,
            [
                (vec![3, 0], GaussRat::from_frac(3, 2)),
                (vec![1, 2], GaussRat::from_int(-1)),
                (vec![0, 3], GaussRat::from_ints(2, 1)),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "3/2*x0^3 - x0*x1^2 + (2+i)*x1^3");
    }

    #[test]
    fn substitution_is_evaluation() {
        let f = NForm::from_terms(3, 2, [(vec![1, 1, 0], GaussRat::one()), (vec![0, 0, 2], GaussRat::from_int(3))]).unwrap();
        let subs = vec![
            vec![GaussRat::from_int(1), GaussRat::from_int(2), GaussRat::zero()],
            vec![GaussRat::zero(), GaussRat::one(), GaussRat::i()],
            vec![GaussRat::from_int(-1), GaussRat::zero(), GaussRat::one()],
        ];
        let h = f.substitute_linear(&subs);
        let p = [GaussRat::from_int(2), GaussRat::from_int(-1), GaussRat::from_frac(1, 3)];
        let img: Vec<GaussRat> = subs
            .iter()
            .map(|row| row.iter().zip(&p).map(|(a, b)| a * b).sum())
            .collect();
        assert_eq!(h.eval(&p), f.eval(&img));
    }
}
