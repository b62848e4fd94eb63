//! Dense univariate polynomials with rational coefficients, used for the
//! cyclotomic polynomials themselves and for field inversion.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Φ_N stored as `x^degree + Σ tail`.
#[derive(Debug)]
pub(crate) struct CyclotomicPoly {
    pub degree: u64,
    /// Nonzero lower-order terms `(exponent, coefficient)`.
    pub tail: Vec<(u64, BigInt)>,
}

impl CyclotomicPoly {
    pub fn dense(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree as usize + 1];
        out[self.degree as usize] = BigRational::one();
        for (e, c) in &self.tail {
            out[*e as usize] = BigRational::from_integer(c.clone());
        }
        out
    }
}

static CACHE: LazyLock<RwLock<HashMap<u64, Arc<CyclotomicPoly>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

pub(crate) fn cyclotomic_poly(order: u64) -> Arc<CyclotomicPoly> {
    assert!(order > 0, "cyclotomic order must be positive");
    if let Some(p) = CACHE.read().unwrap().get(&order) {
        return p.clone();
    }
    let poly = Arc::new(compute(order));
    CACHE
        .write()
        .unwrap()
        .entry(order)
        .or_insert(poly)
        .clone()
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Φ_N = Π_{d | N} (x^d − 1)^{μ(N/d)}, multiplied out over the squarefree
/// divisors of N.
fn compute(order: u64) -> CyclotomicPoly {
    let primes: Vec<u64> = factorize(order).into_iter().map(|(p, _)| p).collect();
    let mut numer = Vec::new();
    let mut denom = Vec::new();
    for mask in 0u32..(1 << primes.len()) {
        let sq: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| *p)
            .product();
        if mask.count_ones() % 2 == 0 {
            numer.push(order / sq);
        } else {
            denom.push(order / sq);
        }
    }

    let mut coeffs = vec![BigInt::one()];
    for d in numer {
        // multiply by x^d − 1
        let d = d as usize;
        let mut next = vec![BigInt::zero(); coeffs.len() + d];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + d] += c;
            next[i] -= c;
        }
        coeffs = next;
    }
    for d in denom {
        // exact division by x^d − 1
        let d = d as usize;
        let mut rem = coeffs;
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if !c.is_zero() {
                rem[i - d] += &c;
                quot[i - d] = c;
            }
        }
        debug_assert!(rem.iter().all(Zero::is_zero));
        coeffs = quot;
    }

    let degree = (coeffs.len() - 1) as u64;
    debug_assert_eq!(degree, euler_phi(order));
    let tail = coeffs[..degree as usize]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (e as u64, c.clone()))
        .collect();
    CyclotomicPoly { degree, tail }
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead = &den[dd];
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let q = &rem[i] / lead;
        for (j, c) in den.iter().enumerate() {
            if !c.is_zero() {
                let t = &q * c;
                rem[i - dd + j] -= t;
            }
        }
        quot[i - dd] = q;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    // a − q·b
    let len = a.len().max(if q.is_empty() || b.is_empty() {
        0
    } else {
        q.len() + b.len() - 1
    });
    let mut out = vec![BigRational::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, x) in q.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] -= x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible `modulus`, via the extended
/// Euclidean algorithm. Returns `None` when `a ≡ 0`.
pub(crate) fn invert_mod(a: &[BigRational], modulus: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1);
        let s = sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is the gcd; irreducibility of the modulus makes it a constant.
    if r0.len() != 1 {
        return None;
    }
    let g = r0[0].clone();
    let mut inv: Vec<BigRational> = s0.into_iter().map(|c| c / &g).collect();
    let (_, rem) = divmod(&inv, modulus);
    inv = rem;
    Some(inv)
}
