//! Exact arithmetic: rationals, bivariate polynomials, and small dense linear
//! algebra. Nothing in this crate touches floating point except for display.

mod matrix;
mod poly;
mod rational;
mod tutte;

pub use matrix::{affine_rank, RationalMatrix};
pub use poly::{BivariatePolynomial, Named};
pub use rational::{rat, Rational};
pub use tutte::{poly_substitute_tutte, tutte_to_cluster};

/// `poly_eval` under its operational name.
pub fn poly_eval(p: &BivariatePolynomial, q: &Rational, t: &Rational) -> Rational {
    p.eval(q, t)
}

/// Exact determinant of a square matrix.
pub fn determinant(m: &RationalMatrix) -> Result<Rational, crate::Error> {
    m.determinant()
}

/// `C(n, k)` as a `u128`; callers stay well within range for the node counts
/// handled here.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}
