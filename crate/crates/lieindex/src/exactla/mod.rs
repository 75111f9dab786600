//! Exact rational arithmetic and dense linear algebra.

mod matrix;
pub mod modular;
mod poly;
mod rational;

pub use matrix::{Echelon, QMatrix};
pub use poly::{divides_binary, poly_gcd_binary, uni_gcd, uni_rem, Poly, MAX_VARS};
pub use rational::Rational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

pub fn rank(m: &QMatrix) -> usize {
    m.rank()
}

pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    m.rref()
}

pub fn kernel_basis(m: &QMatrix) -> QMatrix {
    m.kernel_basis()
}

pub fn solve(m: &QMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, crate::Error> {
    m.solve(b)
}
