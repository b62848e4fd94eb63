//! The pair `(ℂℤ, K(ℤ))`: the group algebra of `ℤ` with basis `e_n`, and the
//! finitely supported functions on `ℤ` with basis `δ_n`.
//!
//! `K(ℤ)` has no unit and its coproduct `Δ(f)(m, n) = f(m + n)` is not
//! finitely supported, so it is only reached through the slices
//! `Δ(a)(1 ⊗ b)` and `(a ⊗ 1)Δ(b)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::TypeClass;
use crate::report::{CheckRecord, CheckReport};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// `ℂℤ`, basis `e_n`.
    #[serde(rename = "CZ")]
    GroupAlgebra,
    /// `K(ℤ)`, basis `δ_n`.
    #[serde(rename = "KZ")]
    Functions,
}

impl Side {
    fn symbol(self) -> &'static str {
        match self {
            Side::GroupAlgebra => "e",
            Side::Functions => "delta",
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::GroupAlgebra => Side::Functions,
            Side::Functions => Side::GroupAlgebra,
        }
    }
}

/// A finitely supported combination `Σ c_n e_n` or `Σ c_n δ_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseElement<S> {
    side: Side,
    support: BTreeMap<i64, S>,
}

/// A finitely supported element of the tensor square, keyed by `(m, n)`.
pub type SparseTensor<S> = BTreeMap<(i64, i64), S>;

impl<S: Scalar> SparseElement<S> {
    pub fn new(side: Side, terms: impl IntoIterator<Item = (i64, S)>) -> Self {
        let mut support = BTreeMap::new();
        for (n, c) in terms {
            add_to(&mut support, n, c);
        }
        SparseElement { side, support }
    }

    pub fn zero(side: Side) -> Self {
        SparseElement {
            side,
            support: BTreeMap::new(),
        }
    }

    /// `e_n` or `δ_n`.
    pub fn basis(side: Side, n: i64) -> Self {
        Self::new(side, [(n, S::one())])
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn support(&self) -> &BTreeMap<i64, S> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn coefficient(&self, n: i64) -> S {
        self.support.get(&n).cloned().unwrap_or_else(S::zero)
    }

    pub fn same_value(&self, other: &Self) -> bool {
        self.side == other.side
            && self.support.keys().chain(other.support.keys()).all(|n| {
                self.coefficient(*n).same_value(&other.coefficient(*n))
            })
    }

    fn check_side(&self, other: &Self) -> Result<()> {
        if self.side != other.side {
            return Err(Error::OwnerMismatch {
                left: format!("{:?}", self.side),
                right: format!("{:?}", other.side),
            });
        }
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check_side(other)?;
        Ok(Self::new(
            self.side,
            self.support
                .iter()
                .chain(&other.support)
                .map(|(n, c)| (*n, c.clone())),
        ))
    }

    pub fn scaled(&self, s: &S) -> Self {
        Self::new(self.side, self.support.iter().map(|(n, c)| (*n, c.times(s))))
    }

    /// Convolution `e_m e_n = e_{m+n}` on `ℂℤ`, pointwise on `K(ℤ)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_side(other)?;
        Ok(match self.side {
            Side::GroupAlgebra => Self::new(
                self.side,
                self.support.iter().flat_map(|(m, a)| {
                    other.support.iter().map(move |(n, b)| (m + n, a.times(b)))
                }),
            ),
            Side::Functions => Self::new(
                self.side,
                self.support
                    .iter()
                    .filter_map(|(n, a)| other.support.get(n).map(|b| (*n, a.times(b)))),
            ),
        })
    }

    /// `ε(e_n) = 1`; `ε(f) = f(0)`.
    pub fn counit(&self) -> S {
        match self.side {
            Side::GroupAlgebra => self.support.values().fold(S::zero(), |acc, c| acc.plus(c)),
            Side::Functions => self.coefficient(0),
        }
    }

    /// `S(e_n) = e_{−n}`; `S(f)(n) = f(−n)`.
    pub fn antipode(&self) -> Self {
        Self::new(self.side, self.support.iter().map(|(n, c)| (-n, c.clone())))
    }

    /// `e_n* = e_{−n}`; `f*` is the pointwise conjugate.
    pub fn star(&self) -> Self {
        match self.side {
            Side::GroupAlgebra => {
                Self::new(self.side, self.support.iter().map(|(n, c)| (-n, c.conjugate())))
            }
            Side::Functions => {
                Self::new(self.side, self.support.iter().map(|(n, c)| (*n, c.conjugate())))
            }
        }
    }

    /// `φ(e_n) = [n = 0]`; on `K(ℤ)` the sum over `ℤ`.
    pub fn integral(&self) -> S {
        match self.side {
            Side::GroupAlgebra => self.coefficient(0),
            Side::Functions => self.support.values().fold(S::zero(), |acc, c| acc.plus(c)),
        }
    }

    /// The slice `Δ(self)(1 ⊗ b)`.
    pub fn delta_times_right(&self, b: &Self) -> Result<SparseTensor<S>> {
        self.check_side(b)?;
        let mut out = SparseTensor::new();
        for (k, a) in &self.support {
            for (y, c) in &b.support {
                let key = match self.side {
                    // e_k ⊗ e_k · e_y
                    Side::GroupAlgebra => (*k, k + y),
                    // (x, y) ↦ a(x + y) b(y)
                    Side::Functions => (k - y, *y),
                };
                add_tensor(&mut out, key, a.times(c));
            }
        }
        Ok(out)
    }

    /// The slice `(a ⊗ 1)Δ(self)`.
    pub fn left_times_delta(&self, a: &Self) -> Result<SparseTensor<S>> {
        self.check_side(a)?;
        let mut out = SparseTensor::new();
        for (x, c) in &a.support {
            for (k, b) in &self.support {
                let key = match self.side {
                    Side::GroupAlgebra => (x + k, *k),
                    // (x, y) ↦ a(x) b(x + y)
                    Side::Functions => (*x, k - x),
                };
                add_tensor(&mut out, key, c.times(b));
            }
        }
        Ok(out)
    }

    /// `Δ(f)(m, n) = f(m + n)` on `K(ℤ)`; on `ℂℤ` the coefficient of
    /// `e_m ⊗ e_n` in `Δ(self)`.
    pub fn coproduct_value(&self, m: i64, n: i64) -> S {
        match self.side {
            Side::Functions => self.coefficient(m + n),
            Side::GroupAlgebra if m == n => self.coefficient(m),
            Side::GroupAlgebra => S::zero(),
        }
    }

    /// Parses `e_3`, `delta_-2`, or sums such as `2*e_1 + e_-1`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut side = None;
        let mut terms = Vec::new();
        let mut offset = 0;
        for raw in text.split('+') {
            let term = raw.trim();
            let pos = offset + raw.len() - raw.trim_start().len();
            offset += raw.len() + 1;
            if term.is_empty() {
                return Err(Error::syntax(pos, "empty term"));
            }
            let (coef, atom) = match term.rsplit_once('*') {
                Some((c, a)) => (Some(c.trim()), a.trim()),
                None => (None, term),
            };
            let (s, index) = if let Some(rest) = atom.strip_prefix("delta_") {
                (Side::Functions, rest)
            } else if let Some(rest) = atom.strip_prefix("e_") {
                (Side::GroupAlgebra, rest)
            } else {
                return Err(Error::syntax(pos, format!("expected e_n or delta_n, found {atom:?}")));
            };
            if side.is_some_and(|x| x != s) {
                return Err(Error::syntax(pos, "terms from both sides of the pair"));
            }
            side = Some(s);
            let n: i64 = index
                .parse()
                .map_err(|_| Error::syntax(pos, format!("bad index {index:?}")))?;
            let c = match coef {
                None => S::one(),
                Some(c) => {
                    let q = crate::scalar::parse_rational(c)
                        .map_err(|_| Error::syntax(pos, format!("bad coefficient {c:?}")))?;
                    S::from_rational(&q)
                }
            };
            terms.push((n, c));
        }
        let side = side.ok_or_else(|| Error::syntax(0, "empty element"))?;
        Ok(Self::new(side, terms))
    }
}

impl<S: Scalar> fmt::Display for SparseElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        let sym = self.side.symbol();
        let parts: Vec<String> = self
            .support
            .iter()
            .map(|(n, c)| {
                if c.is_one() {
                    format!("{sym}_{n}")
                } else {
                    format!("({c})*{sym}_{n}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn add_to<S: Scalar>(m: &mut BTreeMap<i64, S>, n: i64, c: S) {
    let v = m.remove(&n).map_or(c.clone(), |old| old.plus(&c));
    if !v.is_zero() {
        m.insert(n, v);
    }
}

fn add_tensor<S: Scalar>(m: &mut SparseTensor<S>, key: (i64, i64), c: S) {
    let v = m.remove(&key).map_or(c.clone(), |old| old.plus(&c));
    if !v.is_zero() {
        m.insert(key, v);
    }
}

/// `⟨x, f⟩` for `x ∈ ℂℤ`, `f ∈ K(ℤ)`, with `⟨e_n, f⟩ = f(−n)`.
pub fn pairing<S: Scalar>(x: &SparseElement<S>, f: &SparseElement<S>) -> Result<S> {
    if x.side != Side::GroupAlgebra || f.side != Side::Functions {
        return Err(Error::Precondition("pairing takes an element of ℂℤ and one of K(ℤ)".into()));
    }
    Ok(x.support
        .iter()
        .fold(S::zero(), |acc, (n, c)| acc.plus(&c.times(&f.coefficient(-n)))))
}

/// `𝓕(x) = φ(· x)`, identified with an element of the other side through
/// the pairing: `𝓕(e_n) = δ_n` and `𝓕(f) = Σ f(k) e_{−k}`.
pub fn pair_fourier<S: Scalar>(x: &SparseElement<S>) -> SparseElement<S> {
    match x.side {
        Side::GroupAlgebra => SparseElement::new(Side::Functions, x.support.clone()),
        Side::Functions => SparseElement::new(
            Side::GroupAlgebra,
            x.support.iter().map(|(n, c)| (-n, c.clone())),
        ),
    }
}

/// Inverse of [`pair_fourier`].
pub fn pair_inverse_fourier<S: Scalar>(y: &SparseElement<S>) -> SparseElement<S> {
    match y.side {
        Side::Functions => SparseElement::new(Side::GroupAlgebra, y.support.clone()),
        Side::GroupAlgebra => SparseElement::new(
            Side::Functions,
            y.support.iter().map(|(n, c)| (-n, c.clone())),
        ),
    }
}

/// Unit of `ℂℤ`; `K(ℤ)` has none.
pub fn pair_unit<S: Scalar>(side: Side) -> Option<SparseElement<S>> {
    (side == Side::GroupAlgebra).then(|| SparseElement::basis(side, 0))
}

/// A nonzero left cointegral, if one exists: `δ_0` on `K(ℤ)`, none on
/// `ℂℤ`.
pub fn pair_cointegral<S: Scalar>(side: Side) -> Option<SparseElement<S>> {
    (side == Side::Functions).then(|| SparseElement::basis(side, 0))
}

/// Why `h` is not a left cointegral of `ℂℤ`: with `M` the top of its
/// support, `e_1 h` has a nonzero coefficient at `M + 1` where `h` has none,
/// so `e_1 h ≠ ε(e_1) h`. `None` only for `h = 0`.
fn cz_shift_obstruction<S: Scalar>(h: &SparseElement<S>) -> Option<String> {
    let (&top, _) = h.support.last_key_value()?;
    let shifted = SparseElement::basis(Side::GroupAlgebra, 1).mul(h).ok()?;
    (!shifted.coefficient(top + 1).is_zero() && h.coefficient(top + 1).is_zero())
        .then(|| format!("e_1·h has support at {} outside supp(h)", top + 1))
}

/// Why `u` is not a unit of `K(ℤ)`: `u δ_n = 0 ≠ δ_n` just above its
/// support.
fn kz_unit_obstruction<S: Scalar>(u: &SparseElement<S>) -> String {
    let n = u.support.last_key_value().map_or(0, |(k, _)| k + 1);
    format!("u·delta_{n} = 0")
}

/// Nullspace dimension of `h ↦ e_1 h − h` on elements supported in
/// `[−w, w]`, read in `[−w, w + 1]`.
fn cz_window_cointegrals<S: Scalar>(w: i64) -> usize {
    let cols: Vec<i64> = (-w..=w).collect();
    let rows: Vec<Vec<S>> = (-w..=w + 1)
        .map(|r| {
            cols.iter()
                .map(|&c| {
                    let shifted = if c + 1 == r { S::one() } else { S::zero() };
                    let same = if c == r { S::one() } else { S::zero() };
                    shifted.minus(&same)
                })
                .collect()
        })
        .collect();
    crate::linalg::nullspace(&rows, cols.len()).len()
}

/// Types of the two sides, read off from [`laurent_type_certificates`].
pub fn laurent_types() -> (TypeClass, TypeClass) {
    let r = laurent_type_certificates::<crate::scalar::Cyclotomic>();
    let passed = |case: &str| r.find(case).is_some_and(|c| c.passed());
    (
        TypeClass {
            compact: passed("laurent/CZ/compact"),
            discrete: !passed("laurent/CZ/not-discrete"),
        },
        TypeClass {
            compact: !passed("laurent/KZ/not-compact"),
            discrete: passed("laurent/KZ/discrete"),
        },
    )
}

/// Certificates for the types of both sides and for their duality.
pub fn laurent_type_certificates<S: Scalar>() -> CheckReport {
    const SUITE: &str = "types";
    const W: i64 = 6;
    let mut report = CheckReport::new();
    let probes = |side| (-W..=W).map(move |n| SparseElement::<S>::basis(side, n));

    // ℂℤ: e_0 is a unit
    let e0 = SparseElement::<S>::basis(Side::GroupAlgebra, 0);
    let unit = probes(Side::GroupAlgebra).find_map(|x| {
        let ok = e0.mul(&x).is_ok_and(|y| y.same_value(&x)) && x.mul(&e0).is_ok_and(|y| y.same_value(&x));
        (!ok).then(|| format!("e_0·{x} ≠ {x}"))
    });
    report.push(CheckRecord::from_witness(SUITE, "laurent/CZ/compact", unit));

    // ℂℤ: no cointegral; shift obstruction on sample supports, and the
    // windowed linear system has only the zero solution
    let mut samples: Vec<SparseElement<S>> = probes(Side::GroupAlgebra).collect();
    samples.push(SparseElement::new(
        Side::GroupAlgebra,
        (-W..=W).map(|n| (n, S::one())),
    ));
    let shift = samples
        .iter()
        .find(|h| cz_shift_obstruction(h).is_none())
        .map(|h| format!("no shift obstruction for {h}"));
    let window = (1..=W)
        .find(|&w| cz_window_cointegrals::<S>(w) != 0)
        .map(|w| format!("nonzero cointegral supported in [-{w},{w}]"));
    report.push(CheckRecord::from_witness(
        SUITE,
        "laurent/CZ/not-discrete",
        shift.or(window),
    ));

    // K(ℤ): δ_0 is a cointegral, f δ_0 = f(0) δ_0
    let d0 = SparseElement::<S>::basis(Side::Functions, 0);
    let mut fs: Vec<SparseElement<S>> = probes(Side::Functions).collect();
    fs.push(SparseElement::new(Side::Functions, (-2..=3).map(|n| (n, S::from_integer(n)))));
    let coint = fs.iter().find_map(|f| {
        let ok = f.mul(&d0).is_ok_and(|y| y.same_value(&d0.scaled(&f.counit())));
        (!ok).then(|| format!("{f}·delta_0 ≠ f(0)delta_0"))
    });
    report.push(CheckRecord::from_witness(SUITE, "laurent/KZ/discrete", coint));

    // K(ℤ): no finitely supported unit
    let candidates = [
        SparseElement::new(Side::Functions, (-W..=W).map(|n| (n, S::one()))),
        SparseElement::basis(Side::Functions, 0),
    ];
    let no_unit = candidates.iter().find_map(|u| {
        let n = u.support.last_key_value().map_or(0, |(k, _)| k + 1);
        let dn = SparseElement::basis(Side::Functions, n);
        let fails = u.mul(&dn).is_ok_and(|p| !p.same_value(&dn));
        (!fails).then(|| format!("{u} acts as unit on delta_{n}; {}", kz_unit_obstruction(u)))
    });
    report.push(CheckRecord::from_witness(SUITE, "laurent/KZ/not-compact", no_unit));

    let passed = |case: &str| report.find(case).is_some_and(|c| c.passed());
    let cz = TypeClass {
        compact: passed("laurent/CZ/compact"),
        discrete: !passed("laurent/CZ/not-discrete"),
    };
    let kz = TypeClass {
        compact: !passed("laurent/KZ/not-compact"),
        discrete: passed("laurent/KZ/discrete"),
    };
    // compact ⇒ dual discrete, discrete ⇒ dual compact
    let dual = ((cz.compact && !kz.discrete) || (cz.discrete && !kz.compact)
        || (kz.compact && !cz.discrete) || (kz.discrete && !cz.compact))
        .then(|| format!("CZ {cz:?}, KZ {kz:?}"));
    report.push(CheckRecord::from_witness(SUITE, "laurent/type-duality", dual));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclotomic;

    type E = SparseElement<Cyclotomic>;

    #[test]
    fn fourier_of_e_n_is_delta_n() {
        for n in -10..=10 {
            let f = pair_fourier(&E::basis(Side::GroupAlgebra, n));
            assert_eq!(f, E::basis(Side::Functions, n));
            assert_eq!(pair_inverse_fourier(&f), E::basis(Side::GroupAlgebra, n));
        }
    }

    #[test]
    fn pairing_reads_minus_n() {
        let f = E::new(Side::Functions, [(2, Cyclotomic::integer(5)), (-3, Cyclotomic::integer(7))]);
        assert_eq!(pairing(&E::basis(Side::GroupAlgebra, -2), &f).unwrap(), Cyclotomic::integer(5));
        assert_eq!(pairing(&E::basis(Side::GroupAlgebra, 3), &f).unwrap(), Cyclotomic::integer(7));
        assert!(pairing(&f, &f).is_err());
    }

    #[test]
    fn fourier_agrees_with_the_integral() {
        // 𝓕(x) evaluated on e_m through the pairing equals φ(e_m x)
        let x = E::parse("2*e_1 + e_-3").unwrap();
        let fx = pair_fourier(&x);
        for m in -5..=5 {
            let em = E::basis(Side::GroupAlgebra, m);
            assert_eq!(pairing(&em, &fx).unwrap(), em.mul(&x).unwrap().integral());
        }
    }

    #[test]
    fn slices() {
        let a = E::basis(Side::Functions, 3);
        let b = E::basis(Side::Functions, 1);
        // Δ(δ_3)(1 ⊗ δ_1) = δ_2 ⊗ δ_1
        let t = a.delta_times_right(&b).unwrap();
        assert_eq!(t.keys().copied().collect::<Vec<_>>(), vec![(2, 1)]);
        // (δ_1 ⊗ 1)Δ(δ_3) = δ_1 ⊗ δ_2
        let t = a.left_times_delta(&b).unwrap();
        assert_eq!(t.keys().copied().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn parse_and_display() {
        let x = E::parse("e_3").unwrap();
        assert_eq!(x.to_string(), "e_3");
        assert_eq!(E::parse("delta_-2").unwrap().to_string(), "delta_-2");
        assert!(matches!(E::parse("e_1 + delta_2"), Err(Error::Syntax { .. })));
        assert!(matches!(E::parse("f_1"), Err(Error::Syntax { position: 0, .. })));
    }

    #[test]
    fn certificates_pass() {
        let r = laurent_type_certificates::<Cyclotomic>();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        let (cz, kz) = laurent_types();
        assert_eq!(cz, TypeClass { compact: true, discrete: false });
        assert_eq!(kz, TypeClass { compact: false, discrete: true });
    }
}
