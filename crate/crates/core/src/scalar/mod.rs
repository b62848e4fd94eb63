//! Coefficient arithmetic.
//!
//! Everything in this crate is generic over [`Scalar`]. Two backends exist:
//! [`Cyclotomic`] (exact, elements of ℚ(ζ_N)) and [`ApproxComplex`]
//! (double precision with a comparison tolerance).

mod approx;
mod cyclotomic;
mod poly;

use std::fmt;

use num_rational::BigRational;

pub use approx::{ApproxComplex, DEFAULT_TOLERANCE};
pub use cyclotomic::{cyclotomic_degree, parse_rational, unify_order, Cyclotomic, RootOfUnity};

use crate::error::{Error, Result};

/// A field of characteristic zero equipped with complex conjugation.
///
/// Method names avoid `add`/`mul` so that they never collide with the
/// `std::ops` impls on concrete types.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(n: i64) -> Self;
    fn from_rational(q: &BigRational) -> Self;
    /// `re + im·i`.
    fn gaussian(re: i64, im: i64) -> Self;

    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn conjugate(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn is_zero(&self) -> bool;
    /// Exact equality for exact backends, tolerance comparison otherwise.
    fn same_value(&self, other: &Self) -> bool;
    /// Floating point embedding, ζ_N ↦ exp(2πi/N).
    fn numeric(&self) -> ApproxComplex;

    fn divide(&self, other: &Self) -> Result<Self> {
        other
            .inverse()
            .map(|inv| self.times(&inv))
            .ok_or(Error::DivisionByZero)
    }

    fn is_one(&self) -> bool {
        self.same_value(&Self::one())
    }
}

/// `Σ a_i b_i`.
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc.plus(&x.times(y)))
}

pub fn vectors_equal<S: Scalar>(a: &[S], b: &[S]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.same_value(y))
}

/// Index of the first coordinate where the vectors differ.
pub fn first_difference<S: Scalar>(a: &[S], b: &[S]) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    a.iter().zip(b).position(|(x, y)| !x.same_value(y))
}

/// Renders a coordinate vector as `[c0, c1, ...]`.
pub fn format_vector<S: Scalar>(v: &[S]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(", "))
}
