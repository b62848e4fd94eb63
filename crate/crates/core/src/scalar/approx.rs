use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::Scalar;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Double precision complex number carrying its own comparison tolerance.
///
/// Binary operations keep the larger of the two tolerances.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ApproxComplex {
    pub re: f64,
    pub im: f64,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
}

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

impl ApproxComplex {
    pub fn new(re: f64, im: f64) -> Self {
        Self::with_tolerance(re, im, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(re: f64, im: f64, tolerance: f64) -> Self {
        ApproxComplex { re, im, tolerance }
    }

    /// Same value, different tolerance.
    pub fn retolerance(self, tolerance: f64) -> Self {
        ApproxComplex { tolerance, ..self }
    }

    pub fn norm(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// `exp(iθ)`.
    pub fn cis(theta: f64) -> Self {
        Self::new(theta.cos(), theta.sin())
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    fn tol(&self, other: &Self) -> f64 {
        self.tolerance.max(other.tolerance)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.re - other.re).hypot(self.im - other.im)
    }
}

impl PartialEq for ApproxComplex {
    fn eq(&self, other: &Self) -> bool {
        self.distance(other) <= self.tol(other)
    }
}

impl fmt::Display for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{}{:+}i", self.re, self.im)
        }
    }
}

impl Scalar for ApproxComplex {
    fn zero() -> Self {
        Self::new(0.0, 0.0)
    }
    fn one() -> Self {
        Self::new(1.0, 0.0)
    }
    fn from_integer(n: i64) -> Self {
        Self::new(n as f64, 0.0)
    }
    fn from_rational(q: &BigRational) -> Self {
        Self::new(q.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn gaussian(re: i64, im: i64) -> Self {
        Self::new(re as f64, im as f64)
    }
    fn plus(&self, o: &Self) -> Self {
        Self::with_tolerance(self.re + o.re, self.im + o.im, self.tol(o))
    }
    fn minus(&self, o: &Self) -> Self {
        Self::with_tolerance(self.re - o.re, self.im - o.im, self.tol(o))
    }
    fn times(&self, o: &Self) -> Self {
        Self::with_tolerance(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
            self.tol(o),
        )
    }
    fn negated(&self) -> Self {
        Self::with_tolerance(-self.re, -self.im, self.tolerance)
    }
    fn conjugate(&self) -> Self {
        Self::with_tolerance(self.re, -self.im, self.tolerance)
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.re * self.re + self.im * self.im;
        Some(Self::with_tolerance(
            self.re / d,
            -self.im / d,
            self.tolerance,
        ))
    }
    fn is_zero(&self) -> bool {
        self.norm() <= self.tolerance
    }
    fn same_value(&self, other: &Self) -> bool {
        self == other
    }
    fn numeric(&self) -> ApproxComplex {
        *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_comparison() {
        let a = ApproxComplex::new(1.0, 0.0);
        let b = ApproxComplex::new(1.0 + 1e-12, -1e-12);
        assert_eq!(a, b);
        assert_ne!(a, ApproxComplex::new(1.0 + 1e-6, 0.0));
        assert_eq!(a.retolerance(1e-3), ApproxComplex::new(1.0 + 1e-6, 0.0));
    }

    #[test]
    fn inverse_and_zero() {
        assert!(ApproxComplex::new(1e-12, 0.0).inverse().is_none());
        let z = ApproxComplex::new(3.0, 4.0);
        let p = z.times(&z.inverse().unwrap());
        assert_eq!(p, ApproxComplex::one());
    }
}
