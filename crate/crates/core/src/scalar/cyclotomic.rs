use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::poly::{cyclotomic_poly, euler_phi, invert_mod};
use super::{ApproxComplex, Scalar, DEFAULT_TOLERANCE};
use crate::error::{Error, Result};

/// Degree of Φ_N, i.e. the dimension of ℚ(ζ_N) over ℚ.
pub fn cyclotomic_degree(order: u64) -> u64 {
    euler_phi(order)
}

/// An element of ℚ(ζ_N), stored as a polynomial in ζ_N reduced modulo Φ_N.
///
/// Coefficients are kept sparsely (zero coefficients are absent), which
/// keeps sums of a few roots of unity of large prime-power order cheap.
/// The order is never lowered to the conductor; comparisons first bring
/// both operands to a common order.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u64,
    coeffs: BTreeMap<u64, BigRational>,
}

/// `ζ_order^exponent`, kept unevaluated for display.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    pub order: u64,
    pub exponent: u64,
}

impl RootOfUnity {
    pub fn value(&self) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.order, self.exponent as i64)
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent % self.order == 0
    }

    pub fn conjugate(&self) -> RootOfUnity {
        RootOfUnity {
            order: self.order,
            exponent: (self.order - self.exponent % self.order) % self.order,
        }
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta({})^{}", self.order, self.exponent)
    }
}

fn add_term(map: &mut BTreeMap<u64, BigRational>, exp: u64, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match map.entry(exp) {
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

/// Brings arbitrary exponents into the reduced basis `1, ζ, …, ζ^{φ(N)−1}`.
fn reduce(order: u64, raw: BTreeMap<u64, BigRational>) -> BTreeMap<u64, BigRational> {
    let poly = cyclotomic_poly(order);
    let mut acc = BTreeMap::new();
    for (e, c) in raw {
        add_term(&mut acc, e % order, c);
    }
    while let Some((&e, _)) = acc.last_key_value() {
        if e < poly.degree {
            break;
        }
        let c = acc.remove(&e).unwrap();
        let shift = e - poly.degree;
        for (t, a) in &poly.tail {
            add_term(&mut acc, shift + t, -(&c * BigRational::from_integer(a.clone())));
        }
    }
    acc
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn rational(q: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        add_term(&mut coeffs, 0, q);
        Cyclotomic { order: 1, coeffs }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn fraction(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(num.into(), den.into()))
    }

    /// `ζ_order^exponent`; negative exponents are allowed.
    pub fn root_of_unity(order: u64, exponent: i64) -> Self {
        assert!(order > 0, "root of unity order must be positive");
        let e = exponent.rem_euclid(order as i64) as u64;
        let mut raw = BTreeMap::new();
        raw.insert(e, BigRational::one());
        Cyclotomic {
            order,
            coeffs: reduce(order, raw),
        }
    }

    /// Primitive root `ζ_order = exp(2πi/order)`.
    pub fn zeta(order: u64) -> Self {
        Self::root_of_unity(order, 1)
    }

    /// Builds `Σ c_e ζ_N^e` from arbitrary (not necessarily reduced)
    /// exponent/coefficient pairs.
    pub fn from_terms<I>(order: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, BigRational)>,
    {
        assert!(order > 0, "cyclotomic order must be positive");
        let mut raw = BTreeMap::new();
        for (e, c) in terms {
            add_term(&mut raw, e, c);
        }
        Cyclotomic {
            order,
            coeffs: reduce(order, raw),
        }
    }

    /// Builds an element from a dense coefficient list in the reduced basis.
    pub fn from_reduced_coeffs(order: u64, coeffs: Vec<BigRational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Format("cyclotomic order must be positive".into()));
        }
        let degree = cyclotomic_degree(order) as usize;
        if coeffs.len() != degree {
            return Err(Error::DimensionMismatch {
                expected: degree,
                found: coeffs.len(),
            });
        }
        let map = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64, c))
            .collect();
        Ok(Cyclotomic { order, coeffs: map })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Dense coefficients in the reduced basis, length `φ(order)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); cyclotomic_degree(self.order) as usize];
        for (e, c) in &self.coeffs {
            out[*e as usize] = c.clone();
        }
        out
    }

    /// Nonzero `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The rational value, when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Re-expresses the element at an order divisible by its own.
    pub fn at_order(&self, order: u64) -> Self {
        assert!(
            order % self.order == 0,
            "order {} does not divide {}",
            self.order,
            order
        );
        if order == self.order {
            return self.clone();
        }
        let step = order / self.order;
        let raw = self
            .coeffs
            .iter()
            .map(|(e, c)| (e * step, c.clone()))
            .collect();
        Cyclotomic {
            order,
            coeffs: reduce(order, raw),
        }
    }

    /// Complex conjugation, `ζ_N ↦ ζ_N^{N−1}`.
    pub fn conjugate(&self) -> Self {
        let n = self.order;
        Cyclotomic::from_terms(
            n,
            self.coeffs.iter().map(|(e, c)| ((n - e) % n, c.clone())),
        )
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.coeffs.len() == 1 {
            let (&e, c) = self.coeffs.iter().next().unwrap();
            let n = self.order;
            return Some(Cyclotomic::from_terms(
                n,
                [((n - e % n) % n, c.recip())],
            ));
        }
        let modulus = cyclotomic_poly(self.order).dense();
        let inv = invert_mod(&self.coeffs(), &modulus)?;
        Some(Cyclotomic::from_terms(
            self.order,
            inv.into_iter().enumerate().map(|(e, c)| (e as u64, c)),
        ))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        other
            .inverse()
            .map(|inv| self * &inv)
            .ok_or(Error::DivisionByZero)
    }

    pub fn numeric_value(&self) -> ApproxComplex {
        self.numeric_value_with(DEFAULT_TOLERANCE)
    }

    pub fn numeric_value_with(&self, tolerance: f64) -> ApproxComplex {
        let n = self.order as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (e, c) in &self.coeffs {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let theta = std::f64::consts::TAU * (*e as f64) / n;
            re += c * theta.cos();
            im += c * theta.sin();
        }
        ApproxComplex::with_tolerance(re, im, tolerance)
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let (a, b) = unify_order(self, other);
        let mut coeffs = a.coeffs;
        for (e, c) in b.coeffs {
            add_term(&mut coeffs, e, if sign { c } else { -c });
        }
        Cyclotomic {
            order: a.order,
            coeffs,
        }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(q) = self.as_rational() {
            return other.scale(&q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(&q);
        }
        let (a, b) = unify_order(self, other);
        let mut raw = BTreeMap::new();
        for (e1, c1) in &a.coeffs {
            for (e2, c2) in &b.coeffs {
                add_term(&mut raw, (e1 + e2) % a.order, c1 * c2);
            }
        }
        Cyclotomic {
            order: a.order,
            coeffs: reduce(a.order, raw),
        }
    }

    /// Multiplication by a rational.
    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }
}

/// Re-expresses both operands at `lcm(N_a, N_b)` via `ζ_N = ζ_M^{M/N}`.
pub fn unify_order(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
    let m = a.order.lcm(&b.order);
    (a.at_order(m), b.at_order(m))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = unify_order(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::integer(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Self {
        Cyclotomic::rational(q)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.combine(rhs, true)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.combine(rhs, false)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.product(rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Scalar for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::integer(1)
    }
    fn from_integer(n: i64) -> Self {
        Cyclotomic::integer(n)
    }
    fn from_rational(q: &BigRational) -> Self {
        Cyclotomic::rational(q.clone())
    }
    fn gaussian(re: i64, im: i64) -> Self {
        if im == 0 {
            return Cyclotomic::integer(re);
        }
        Cyclotomic::from_terms(
            4,
            [
                (0, BigRational::from_integer(re.into())),
                (1, BigRational::from_integer(im.into())),
            ],
        )
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn conjugate(&self) -> Self {
        Cyclotomic::conjugate(self)
    }
    fn inverse(&self) -> Option<Self> {
        Cyclotomic::inverse(self)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn same_value(&self, other: &Self) -> bool {
        self == other
    }
    fn numeric(&self) -> ApproxComplex {
        self.numeric_value()
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *e == 0 {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "zeta({})^{}", self.order, e)?;
            } else {
                write!(f, "{}*zeta({})^{}", fmt_rational(&abs), self.order, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({})", self.order, self)
    }
}

fn number_of(n: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

fn bigint_of(n: &serde_json::Number) -> std::result::Result<BigInt, String> {
    BigInt::from_str(&n.to_string()).map_err(|_| format!("expected an integer, found {n}"))
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rational(text: &str) -> std::result::Result<BigRational, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| format!("invalid rational `{text}`"))?;
    let den = BigInt::from_str(den).map_err(|_| format!("invalid rational `{text}`"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(BigRational::new(num, den))
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<[serde_json::Number; 2]> = self
            .coeffs()
            .iter()
            .map(|c| [number_of(c.numer()), number_of(c.denom())])
            .collect();
        let mut st = serializer.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Full {
        order: u64,
        coeffs: Vec<[serde_json::Number; 2]>,
    },
    Integer(serde_json::Number),
    Text(String),
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match ScalarRepr::deserialize(deserializer)? {
            ScalarRepr::Full { order, coeffs } => {
                let mut out = Vec::with_capacity(coeffs.len());
                for [n, d] in &coeffs {
                    let n = bigint_of(n).map_err(de::Error::custom)?;
                    let d = bigint_of(d).map_err(de::Error::custom)?;
                    if d.is_zero() {
                        return Err(de::Error::custom("zero denominator"));
                    }
                    out.push(BigRational::new(n, d));
                }
                Cyclotomic::from_reduced_coeffs(order, out).map_err(de::Error::custom)
            }
            ScalarRepr::Integer(n) => Ok(Cyclotomic::rational(BigRational::from_integer(
                bigint_of(&n).map_err(de::Error::custom)?,
            ))),
            ScalarRepr::Text(t) => parse_rational(&t)
                .map(Cyclotomic::rational)
                .map_err(de::Error::custom),
        }
    }
}
