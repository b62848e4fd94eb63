//! Finite base-p expansions `Σ x_j p^j`, i.e. nonnegative elements of
//! `ℤ[1/p]` written with canonical digits.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Cyclotomic, RootOfUnity};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PAdic {
    prime: u64,
    /// Nonzero digits only.
    digits: BTreeMap<i64, u64>,
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(Error::Precondition(format!("{p} is not a prime")));
    }
    Ok(())
}

impl PAdic {
    pub fn zero(prime: u64) -> Self {
        PAdic {
            prime,
            digits: BTreeMap::new(),
        }
    }

    /// `Σ d p^j` over the given `(j, d)`; digits must be below `p` and
    /// exponents distinct.
    pub fn from_digits(prime: u64, digits: impl IntoIterator<Item = (i64, u64)>) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (j, d) in digits {
            if d >= prime {
                return Err(Error::DigitOutOfRange { digit: d, prime });
            }
            if d != 0 && out.insert(j, d).is_some() {
                return Err(Error::Precondition(format!("exponent {j} given twice")));
            }
        }
        Ok(PAdic { prime, digits: out })
    }

    pub fn from_u64(prime: u64, n: u64) -> Self {
        Self::from_scaled(prime, &BigUint::from(n), 0)
    }

    /// `p^j`.
    pub fn power(prime: u64, j: i64) -> Self {
        PAdic {
            prime,
            digits: BTreeMap::from([(j, 1)]),
        }
    }

    /// `u · p^s`.
    pub fn from_scaled(prime: u64, u: &BigUint, s: i64) -> Self {
        let p = BigUint::from(prime);
        let mut digits = BTreeMap::new();
        let mut u = u.clone();
        let mut j = s;
        while !u.is_zero() {
            let (q, r) = u.div_rem(&p);
            let r = r.to_u64().expect("digit fits");
            if r != 0 {
                digits.insert(j, r);
            }
            u = q;
            j += 1;
        }
        PAdic { prime, digits }
    }

    /// `(u, s)` with value `u · p^s`, `s` the lowest digit position (0 for
    /// zero).
    pub fn scaled(&self) -> (BigUint, i64) {
        let Some((&lo, _)) = self.digits.first_key_value() else {
            return (BigUint::zero(), 0);
        };
        let p = BigUint::from(self.prime);
        // Horner from the top digit down, skipping over gaps
        let mut u = BigUint::zero();
        let mut prev: Option<i64> = None;
        for (&j, &d) in self.digits.iter().rev() {
            if let Some(pj) = prev {
                u *= p.pow((pj - j) as u32);
            }
            u += d;
            prev = Some(j);
        }
        (u, lo)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn digits(&self) -> &BTreeMap<i64, u64> {
        &self.digits
    }

    pub fn digit(&self, j: i64) -> u64 {
        self.digits.get(&j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch(self.prime, other.prime));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let (u, s) = self.scaled();
        let (v, t) = other.scaled();
        let lo = s.min(t);
        let p = BigUint::from(self.prime);
        let sum = u * p.pow((s - lo) as u32) + v * p.pow((t - lo) as u32);
        Ok(Self::from_scaled(self.prime, &sum, lo))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let (u, s) = self.scaled();
        let (v, t) = other.scaled();
        Ok(Self::from_scaled(self.prime, &(u * v), s + t))
    }

    /// The representative of `−x` modulo `p^M` with digits below `M`.
    pub fn negate_mod(&self, m: i64) -> Self {
        let x = self.truncated(m);
        if x.is_zero() {
            return x;
        }
        let (u, s) = x.scaled();
        let modulus = BigUint::from(self.prime).pow((m - s) as u32);
        let neg = (&modulus - (u % &modulus)) % &modulus;
        Self::from_scaled(self.prime, &neg, s)
    }

    /// `x − y` modulo `p^M`, with digits below `M`.
    pub fn sub_mod(&self, other: &Self, m: i64) -> Result<Self> {
        Ok(self.add(&other.negate_mod(m))?.truncated(m))
    }

    /// Drops every digit at exponent `≥ m`: the center of the ball
    /// `x + p^m ℤ_p`.
    pub fn truncated(&self, m: i64) -> Self {
        PAdic {
            prime: self.prime,
            digits: self.digits.range(..m).map(|(j, d)| (*j, *d)).collect(),
        }
    }

    /// Least exponent with a nonzero digit; `None` stands for `+∞`.
    pub fn valuation(&self) -> Option<i64> {
        self.digits.first_key_value().map(|(j, _)| *j)
    }

    /// `|x| = p^{−v(x)}`, and `0` for `x = 0`.
    pub fn norm(&self) -> BigRational {
        match self.valuation() {
            None => BigRational::zero(),
            Some(v) => rational_power(self.prime, -v),
        }
    }

    /// `Σ_{j<0} x_j p^j ∈ [0, 1)`.
    pub fn fractional_part(&self) -> BigRational {
        self.truncated(0).to_rational()
    }

    pub fn to_rational(&self) -> BigRational {
        let (u, s) = self.scaled();
        BigRational::from_integer(BigInt::from(u)) * rational_power(self.prime, s)
    }

    /// `χ(x, y) = exp(2πi {xy})` as `ζ_{p^k}^a` with `{xy} = a/p^k` in
    /// lowest terms.
    pub fn character(&self, y: &Self) -> Result<RootOfUnity> {
        let z = self.mul(y)?;
        let frac = z.truncated(0);
        let Some(v) = frac.valuation() else {
            return Ok(RootOfUnity {
                order: 1,
                exponent: 0,
            });
        };
        // frac = u p^v with p ∤ u, so {xy} = u / p^{−v}
        let (u, _) = frac.scaled();
        let k = (-v) as u32;
        let order = self.prime.checked_pow(k).ok_or_else(|| {
            Error::Precondition(format!("character order {}^{k} exceeds 64 bits", self.prime))
        })?;
        Ok(RootOfUnity {
            order,
            exponent: u.to_u64().expect("u < p^k"),
        })
    }

    pub fn character_value(&self, y: &Self) -> Result<Cyclotomic> {
        Ok(self.character(y)?.value())
    }

    /// Parses either a sum of terms `d*p^j` (a bare `d` means `d*p^0`, a
    /// bare `p^j` means `1*p^j`) or a base-p digit string with an optional
    /// radix point, such as `102.1`.
    pub fn parse(text: &str, prime: u64) -> Result<Self> {
        check_prime(prime)?;
        if text.trim().is_empty() {
            return Err(Error::syntax(0, "empty literal"));
        }
        if text.contains(['+', '*', '^']) {
            parse_terms(text, prime)
        } else {
            parse_digit_string(text, prime)
        }
    }
}

pub(crate) fn rational_power(p: u64, e: i64) -> BigRational {
    let base = BigInt::from(p).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

fn parse_u64(s: &str, pos: usize) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::syntax(pos, format!("expected a nonnegative integer, found {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::syntax(pos, format!("integer {s:?} out of range")))
}

fn parse_i64(s: &str, pos: usize) -> Result<i64> {
    let body = s.strip_prefix('-').unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::syntax(pos, format!("expected an integer exponent, found {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::syntax(pos, format!("exponent {s:?} out of range")))
}

/// `p^j` with a literal base; returns `j`.
pub(crate) fn parse_power(s: &str, pos: usize, prime: u64) -> Result<i64> {
    let (base, exp) = s
        .split_once('^')
        .ok_or_else(|| Error::syntax(pos, format!("expected p^j, found {s:?}")))?;
    let base_t = base.trim();
    let b = if base_t == "p" {
        prime
    } else {
        parse_u64(base_t, pos)?
    };
    if b != prime {
        return Err(Error::syntax(pos, format!("base {b} does not match prime {prime}")));
    }
    let exp_pos = pos + base.len() + 1;
    let exp_t = exp.trim();
    parse_i64(exp_t, exp_pos + (exp.len() - exp.trim_start().len()))
}

fn parse_terms(text: &str, prime: u64) -> Result<PAdic> {
    let mut acc = PAdic::zero(prime);
    let mut offset = 0;
    for raw in text.split('+') {
        let pos = offset + raw.len() - raw.trim_start().len();
        offset += raw.len() + 1;
        let term = raw.trim();
        if term.is_empty() {
            return Err(Error::syntax(pos, "empty term"));
        }
        let (digit, exp) = match term.split_once('*') {
            Some((d, e)) => {
                let epos = pos + d.len() + 1 + (e.len() - e.trim_start().len());
                (parse_u64(d.trim(), pos)?, parse_power(e.trim(), epos, prime)?)
            }
            None if term.contains('^') => (1, parse_power(term, pos, prime)?),
            None => (parse_u64(term, pos)?, 0),
        };
        if digit >= prime {
            return Err(Error::DigitOutOfRange { digit, prime });
        }
        if digit != 0 {
            let t = PAdic::from_digits(prime, [(exp, digit)])?;
            acc = acc.add(&t)?;
        }
    }
    Ok(acc)
}

fn parse_digit_string(text: &str, prime: u64) -> Result<PAdic> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    let (int, frac) = t.split_once('.').unwrap_or((t, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(Error::syntax(lead, "no digits"));
    }
    let mut digits = Vec::new();
    let n = int.len() as i64;
    for (i, ch) in int.chars().chain(frac.chars()).enumerate() {
        let pos = lead + i + usize::from(i >= int.len());
        let d = ch
            .to_digit(36)
            .ok_or_else(|| Error::syntax(pos, format!("unexpected character {ch:?}")))? as u64;
        if d >= prime {
            return Err(Error::DigitOutOfRange { digit: d, prime });
        }
        digits.push((n - 1 - i as i64, d));
    }
    PAdic::from_digits(prime, digits)
}

impl Ord for PAdic {
    /// Primes first, then numeric value.
    fn cmp(&self, other: &Self) -> Ordering {
        self.prime
            .cmp(&other.prime)
            .then_with(|| self.to_rational().cmp(&other.to_rational()))
    }
}

impl PartialOrd for PAdic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PAdic {
    /// Canonical form, lowest exponent first: `1*5^-2 + 3 + 4*5^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .digits
            .iter()
            .map(|(j, d)| {
                if *j == 0 {
                    d.to_string()
                } else {
                    format!("{d}*{}^{j}", self.prime)
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PAdic[{}]({self})", self.prime)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parse_examples() {
        let x = PAdic::parse("1*5^-2 + 3", 5).unwrap();
        assert_eq!(x.digits(), &BTreeMap::from([(-2, 1), (0, 3)]));
        assert_eq!(
            PAdic::parse("7*5^0", 5),
            Err(Error::DigitOutOfRange { digit: 7, prime: 5 })
        );
        let y = PAdic::parse("1 + 1*2^1", 2).unwrap();
        assert_eq!(y.to_string(), "1 + 1*2^1");
        assert_eq!(PAdic::parse("102.1", 3).unwrap().to_rational(), q(9 * 1 + 2 * 1, 1) + q(1, 3));
        assert!(matches!(PAdic::parse("1 + x", 5), Err(Error::Syntax { position: 4, .. })));
        assert!(matches!(PAdic::parse("1*3^2", 5), Err(Error::Syntax { .. })));
        assert_eq!(PAdic::parse("5^1", 5).unwrap(), PAdic::power(5, 1));
    }

    #[test]
    fn arithmetic() {
        let one = PAdic::from_u64(2, 1);
        assert_eq!(one.add(&one).unwrap(), PAdic::power(2, 1));
        let a = PAdic::from_digits(5, [(-1, 2)]).unwrap();
        let b = PAdic::from_u64(5, 3);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.digits(), &BTreeMap::from([(-1, 1), (0, 1)]));
        assert_eq!(prod.to_rational(), q(6, 5));
        let x = PAdic::parse("3*7^-1 + 4 + 6*7^2", 7).unwrap();
        for m in [-1, 0, 1, 3, 5] {
            let sum = x.add(&x.negate_mod(m)).unwrap();
            assert!(sum.truncated(m).is_zero(), "m = {m}");
        }
        assert!(a.add(&b.mul(&PAdic::from_u64(5, 1)).unwrap()).is_ok());
        assert_eq!(a.add(&PAdic::from_u64(3, 1)), Err(Error::PrimeMismatch(5, 3)));
    }

    #[test]
    fn valuation_and_norm() {
        let x = PAdic::power(3, 4);
        assert_eq!((x.valuation(), x.norm()), (Some(4), q(1, 81)));
        let z = PAdic::zero(3);
        assert_eq!((z.valuation(), z.norm()), (None, q(0, 1)));
        let y = PAdic::parse("3*5^-2 + 1", 5).unwrap();
        assert_eq!((y.valuation(), y.norm()), (Some(-2), q(25, 1)));
    }

    #[test]
    fn fractional_parts() {
        assert_eq!(PAdic::parse("3*5^-2 + 2", 5).unwrap().fractional_part(), q(3, 25));
        assert_eq!(PAdic::parse("4 + 1*5^3", 5).unwrap().fractional_part(), q(0, 1));
        assert_eq!(PAdic::parse("1*2^-1 + 1*2^-2", 2).unwrap().fractional_part(), q(3, 4));
    }

    #[test]
    fn characters() {
        let one = PAdic::from_u64(7, 1);
        let c = PAdic::power(7, -1).character(&one).unwrap();
        assert_eq!(c, RootOfUnity { order: 7, exponent: 1 });
        let c = PAdic::power(2, -1).character(&PAdic::from_u64(2, 1)).unwrap();
        assert_eq!(c.value(), Cyclotomic::integer(-1));
        assert_eq!(c.to_string(), "zeta(2)^1");
        let c = PAdic::power(3, 2).character(&PAdic::power(3, -1)).unwrap();
        assert!(c.is_trivial());
    }

    #[test]
    fn scaled_round_trip_with_gaps() {
        let x = PAdic::parse("1*3^-2 + 2*3^1 + 1*3^4", 3).unwrap();
        let (u, s) = x.scaled();
        assert_eq!(PAdic::from_scaled(3, &u, s), x);
        assert_eq!(s, -2);
    }
}
