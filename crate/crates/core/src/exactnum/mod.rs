//! Exact scalars (ℚ and ℚ(i)), dense exact linear algebra, and the small
//! amount of floating-point linear algebra the numeric checks need.

mod gauss;
mod matrix;
pub mod numeric;

pub use gauss::{parse_rat, rat_string, GaussRat};
pub(crate) use gauss::rat_to_f64;
pub use matrix::ExactMatrix;
pub use numeric::{rank_numeric, CFloat};

/// Reduced arbitrary-precision rational with positive denominator.
pub type Rat = num_rational::BigRational;

/// Right null space of `m`, canonical basis.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<Vec<GaussRat>> {
    m.kernel_basis()
}

/// Rank of `m` over ℚ(i).
pub fn rank_exact(m: &ExactMatrix) -> usize {
    m.rank_exact()
}

pub fn factorial(n: u32) -> num_bigint::BigInt {
    (1..=n).fold(num_bigint::BigInt::from(1), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> num_bigint::BigInt {
    if k > n {
        return num_bigint::BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}
