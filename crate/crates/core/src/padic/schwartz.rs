//! Balls `c + p^m ℤ_p` and locally constant, compactly supported functions
//! on `ℚ_p` stored as values on the balls of one level.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::number::{check_prime, parse_power, rational_power, PAdic};
use crate::error::{Error, Result};
use crate::scalar::{Cyclotomic, Scalar};

/// `c + p^m ℤ_p`, with the center reduced modulo `p^m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ball {
    center: PAdic,
    level: i64,
}

impl Ball {
    pub fn new(center: &PAdic, level: i64) -> Self {
        Ball {
            center: center.truncated(level),
            level,
        }
    }

    /// `p^m ℤ_p`.
    pub fn subgroup(prime: u64, level: i64) -> Self {
        Ball {
            center: PAdic::zero(prime),
            level,
        }
    }

    pub fn prime(&self) -> u64 {
        self.center.prime()
    }

    pub fn center(&self) -> &PAdic {
        &self.center
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn contains(&self, x: &PAdic) -> bool {
        x.prime() == self.prime() && x.truncated(self.level) == self.center
    }

    /// `p^{−m}`.
    pub fn measure(&self) -> BigRational {
        rational_power(self.prime(), -self.level)
    }

    /// The `p^{k−m}` balls of level `k ≥ m` that make up this one.
    pub fn refine(&self, k: i64) -> Vec<Ball> {
        assert!(k >= self.level, "refinement goes to finer levels");
        let p = self.prime();
        let mut out = vec![self.center.clone()];
        for j in self.level..k {
            out = out
                .into_iter()
                .flat_map(|c| {
                    (0..p).map(move |d| {
                        if d == 0 {
                            c.clone()
                        } else {
                            c.add(&PAdic::from_digits(p, [(j, d)]).unwrap()).unwrap()
                        }
                    })
                })
                .collect();
        }
        out.into_iter().map(|c| Ball { center: c, level: k }).collect()
    }

    /// Parses `[center +] p^m*Zp`; a bare `Zp` is level 0.
    pub fn parse(text: &str, prime: u64) -> Result<Self> {
        check_prime(prime)?;
        let mut level = None;
        let mut center_terms = Vec::new();
        let mut offset = 0;
        for raw in text.split('+') {
            let pos = offset + raw.len() - raw.trim_start().len();
            offset += raw.len() + 1;
            let term = raw.trim();
            if term.ends_with("Zp") {
                if level.is_some() {
                    return Err(Error::syntax(pos, "more than one Zp term"));
                }
                let head = term.trim_end_matches("Zp").trim_end();
                level = Some(if head.is_empty() {
                    0
                } else {
                    let power = head
                        .strip_suffix('*')
                        .ok_or_else(|| Error::syntax(pos, "expected p^m*Zp"))?;
                    parse_power(power.trim(), pos, prime)?
                });
            } else {
                center_terms.push(term);
            }
        }
        let level = level.ok_or_else(|| Error::syntax(text.len(), "missing `p^m*Zp` term"))?;
        let center = if center_terms.is_empty() {
            PAdic::zero(prime)
        } else {
            PAdic::parse(&center_terms.join(" + "), prime)?
        };
        Ok(Ball::new(&center, level))
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.center.is_zero() {
            write!(f, "{}^{}*Zp", self.prime(), self.level)
        } else {
            write!(f, "{} + {}^{}*Zp", self.center, self.prime(), self.level)
        }
    }
}

/// A finite combination of indicators of disjoint balls of one level.
///
/// Equality compares values after refining both sides to a common level, so
/// coarse and fine descriptions of one function are equal.
#[derive(Clone, Debug)]
pub struct SchwartzFunction {
    prime: u64,
    level: i64,
    /// Center (reduced modulo `p^level`) ↦ nonzero value.
    cells: BTreeMap<PAdic, Cyclotomic>,
}

impl SchwartzFunction {
    pub fn zero(prime: u64, level: i64) -> Self {
        SchwartzFunction {
            prime,
            level,
            cells: BTreeMap::new(),
        }
    }

    pub fn indicator(ball: &Ball) -> Self {
        Self::from_cells(ball.prime(), [(ball.clone(), Cyclotomic::one())])
            .expect("a single ball has one prime")
    }

    /// `1_{p^n ℤ_p}`.
    pub fn subgroup_indicator(prime: u64, n: i64) -> Self {
        Self::indicator(&Ball::subgroup(prime, n))
    }

    /// Sums `value · 1_ball` over balls of any levels, refined to the finest
    /// level present. Overlapping balls add.
    pub fn from_cells(prime: u64, cells: impl IntoIterator<Item = (Ball, Cyclotomic)>) -> Result<Self> {
        let cells: Vec<(Ball, Cyclotomic)> = cells.into_iter().collect();
        if let Some((b, _)) = cells.iter().find(|(b, _)| b.prime() != prime) {
            return Err(Error::PrimeMismatch(prime, b.prime()));
        }
        let level = cells.iter().map(|(b, _)| b.level).max().unwrap_or(0);
        let mut out = Self::zero(prime, level);
        for (ball, value) in cells {
            for fine in ball.refine(level) {
                out.add_cell(fine.center, &value);
            }
        }
        Ok(out)
    }

    fn add_cell(&mut self, center: PAdic, value: &Cyclotomic) {
        let v = match self.cells.remove(&center) {
            Some(old) => &old + value,
            None => value.clone(),
        };
        if !v.is_zero() {
            self.cells.insert(center, v);
        }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn cells(&self) -> impl Iterator<Item = (Ball, &Cyclotomic)> {
        self.cells.iter().map(|(c, v)| {
            (
                Ball {
                    center: c.clone(),
                    level: self.level,
                },
                v,
            )
        })
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cells.is_empty()
    }

    /// `(n, m)`: the support lies in `p^n ℤ_p` and the function is constant
    /// on cosets of `p^m ℤ_p`. For zero, `n = m`.
    pub fn window(&self) -> (i64, i64) {
        let n = self
            .cells
            .keys()
            .map(|c| c.valuation().unwrap_or(self.level).min(self.level))
            .min()
            .unwrap_or(self.level);
        (n, self.level)
    }

    pub fn eval(&self, x: &PAdic) -> Cyclotomic {
        if x.prime() != self.prime {
            return Cyclotomic::zero();
        }
        self.cells
            .get(&x.truncated(self.level))
            .cloned()
            .unwrap_or_else(Cyclotomic::zero)
    }

    /// Same function stored at level `k ≥ level`.
    pub fn refined(&self, k: i64) -> Self {
        if k <= self.level {
            return self.clone();
        }
        let mut out = Self::zero(self.prime, k);
        for (ball, v) in self.cells() {
            for fine in ball.refine(k) {
                out.cells.insert(fine.center, v.clone());
            }
        }
        out
    }

    /// Merges groups of `p` sibling cells with equal values into their
    /// parent, as far as possible. Never needed for correctness.
    pub fn coarsened(&self) -> Self {
        let mut f = self.clone();
        loop {
            let parent_level = f.level - 1;
            let mut groups: BTreeMap<PAdic, Vec<&Cyclotomic>> = BTreeMap::new();
            for (c, v) in &f.cells {
                groups.entry(c.truncated(parent_level)).or_default().push(v);
            }
            let mergeable = groups.values().all(|vs| {
                vs.len() as u64 == f.prime && vs.iter().all(|v| *v == vs[0])
            });
            if f.cells.is_empty() || !mergeable {
                return f;
            }
            let cells = groups
                .into_iter()
                .map(|(c, vs)| (c, vs[0].clone()))
                .collect();
            f = SchwartzFunction {
                prime: f.prime,
                level: parent_level,
                cells,
            };
        }
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch(self.prime, other.prime));
        }
        Ok(())
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self)> {
        self.same_prime(other)?;
        let k = self.level.max(other.level);
        Ok((self.refined(k), other.refined(k)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (mut f, g) = self.aligned(other)?;
        for (c, v) in g.cells {
            f.add_cell(c, &v);
        }
        Ok(f)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (f, g) = self.aligned(other)?;
        let mut out = Self::zero(f.prime, f.level);
        for (c, v) in &f.cells {
            if let Some(w) = g.cells.get(c) {
                out.add_cell(c.clone(), &(v * w));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.prime, self.level);
        for (c, v) in &self.cells {
            out.add_cell(c.clone(), &(v * s));
        }
        out
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        let mut out = Self::zero(self.prime, self.level);
        for (c, v) in &self.cells {
            out.add_cell(c.clone(), &v.scale(q));
        }
        out
    }

    /// Pointwise complex conjugate.
    pub fn star(&self) -> Self {
        SchwartzFunction {
            prime: self.prime,
            level: self.level,
            cells: self.cells.iter().map(|(c, v)| (c.clone(), v.conjugate())).collect(),
        }
    }

    /// `x ↦ f(−x)`.
    pub fn reflect(&self) -> Self {
        let mut out = Self::zero(self.prime, self.level);
        for (c, v) in &self.cells {
            out.add_cell(c.negate_mod(self.level), v);
        }
        out
    }

    /// `x ↦ f(x − t)`.
    pub fn translate(&self, t: &PAdic) -> Result<Self> {
        if t.prime() != self.prime {
            return Err(Error::PrimeMismatch(self.prime, t.prime()));
        }
        let mut out = Self::zero(self.prime, self.level);
        for (c, v) in &self.cells {
            out.add_cell(c.add(t)?.truncated(self.level), v);
        }
        Ok(out)
    }

    /// `∫ f dx` for the Haar measure with `μ(ℤ_p) = 1`.
    pub fn haar_integral(&self) -> Cyclotomic {
        let total = self
            .cells
            .values()
            .fold(Cyclotomic::zero(), |acc, v| &acc + v);
        total.scale(&rational_power(self.prime, -self.level))
    }

    /// `(f * g)(t) = ∫ f(s) g(t − s) ds`. For balls of levels `a ≤ b`,
    /// `1_{c₁ + p^a ℤ_p} * 1_{c₂ + p^b ℤ_p} = p^{−b} 1_{c₁ + c₂ + p^a ℤ_p}`,
    /// so the result lives at the coarser level and nothing is refined.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let k = self.level.min(other.level);
        let w = rational_power(self.prime, -self.level.max(other.level));
        let mut out = Self::zero(self.prime, k);
        for (c1, v1) in &self.cells {
            for (c2, v2) in &other.cells {
                out.add_cell(c1.add(c2)?.truncated(k), &(v1 * v2).scale(&w));
            }
        }
        Ok(out)
    }

    pub fn to_file(&self) -> SchwartzFile {
        SchwartzFile {
            p: self.prime,
            level: self.level,
            cells: self
                .cells
                .iter()
                .map(|(c, v)| CellEntry {
                    center: c.to_string(),
                    value: v.clone(),
                })
                .collect(),
        }
    }

    pub fn from_file(file: &SchwartzFile) -> Result<Self> {
        check_prime(file.p)?;
        let cells = file
            .cells
            .iter()
            .map(|e| Ok((Ball::new(&PAdic::parse(&e.center, file.p)?, file.level), e.value.clone())))
            .collect::<Result<Vec<_>>>()?;
        let mut f = Self::from_cells(file.p, cells)?;
        if f.level < file.level {
            f = f.refined(file.level);
        }
        Ok(f)
    }
}

impl PartialEq for SchwartzFunction {
    fn eq(&self, other: &Self) -> bool {
        match self.aligned(other) {
            Ok((f, g)) => f.cells == g.cells,
            Err(_) => false,
        }
    }
}

impl fmt::Display for SchwartzFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .cells()
            .map(|(ball, v)| format!("({v})·1[{ball}]"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Exchange format `{p, level, cells: [{center, value}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchwartzFile {
    pub p: u64,
    pub level: i64,
    pub cells: Vec<CellEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellEntry {
    /// P-adic literal.
    pub center: String,
    pub value: Cyclotomic,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(p: u64, n: i64) -> SchwartzFunction {
        SchwartzFunction::subgroup_indicator(p, n)
    }

    #[test]
    fn ball_parsing() {
        assert_eq!(Ball::parse("5^1*Zp", 5).unwrap(), Ball::subgroup(5, 1));
        assert_eq!(Ball::parse("Zp", 3).unwrap(), Ball::subgroup(3, 0));
        let b = Ball::parse("1 + 1*2^3 + 2^1*Zp", 2).unwrap();
        assert_eq!(b.center(), &PAdic::from_u64(2, 1));
        assert_eq!(b.to_string(), "1 + 2^1*Zp");
        assert!(Ball::parse("1 + 3", 5).is_err());
    }

    #[test]
    fn indicator_evaluation() {
        let f = h(3, 0);
        assert_eq!(f.eval(&PAdic::zero(3)), Cyclotomic::one());
        assert_eq!(f.eval(&PAdic::power(3, -1)), Cyclotomic::zero());
    }

    #[test]
    fn refinement_equality() {
        let halves = SchwartzFunction::from_cells(
            2,
            [
                (Ball::subgroup(2, 1), Cyclotomic::one()),
                (Ball::new(&PAdic::from_u64(2, 1), 1), Cyclotomic::one()),
            ],
        )
        .unwrap();
        assert_eq!(halves.level(), 1);
        assert_eq!(halves.cell_count(), 2);
        assert_eq!(halves, h(2, 0));
        assert_eq!(halves.coarsened().level(), 0);
        let sum = SchwartzFunction::indicator(&Ball::new(&PAdic::from_u64(5, 1), 1))
            .add(&h(5, 1))
            .unwrap();
        assert_eq!(sum.cell_count(), 2);
    }

    #[test]
    fn haar_values() {
        for n in -3..=3 {
            assert_eq!(h(3, n).haar_integral(), Cyclotomic::rational(rational_power(3, -n)));
        }
        assert!(SchwartzFunction::zero(3, 0).haar_integral().is_zero());
        let c = PAdic::parse("2*3^-2 + 1", 3).unwrap();
        let f = SchwartzFunction::indicator(&Ball::new(&c, 1));
        assert_eq!(f.haar_integral(), Cyclotomic::fraction(1, 3));
        assert_eq!(f.translate(&c).unwrap().haar_integral(), f.haar_integral());
    }

    #[test]
    fn pointwise_products() {
        let p = 5;
        assert_eq!(h(p, 0).mul(&h(p, 1)).unwrap(), h(p, 1));
        let coset = SchwartzFunction::indicator(&Ball::new(&PAdic::from_u64(p, 1), 1));
        assert!(coset.mul(&h(p, 1)).unwrap().is_zero());
        for n in -2..=2 {
            assert_eq!(h(p, n).mul(&h(p, n)).unwrap(), h(p, n));
        }
        assert!(h(2, 0).mul(&h(3, 0)).is_err());
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(h(3, 0).convolve(&h(3, 0)).unwrap(), h(3, 0));
        assert!(h(3, 0).convolve(&SchwartzFunction::zero(3, 0)).unwrap().is_zero());
        for n in -2..=2 {
            let expected = h(2, n).scale_rational(&rational_power(2, -n));
            assert_eq!(h(2, n).convolve(&h(2, n)).unwrap(), expected);
        }
        // mixed levels agree with the refined computation
        let c = PAdic::parse("1*3^-1 + 2", 3).unwrap();
        let fine = SchwartzFunction::indicator(&Ball::new(&c, 2));
        let coarse = h(3, -1).scale(&Cyclotomic::integer(2));
        let direct = fine.convolve(&coarse).unwrap();
        assert_eq!(direct.level(), -1);
        let refined = fine.convolve(&coarse.refined(2)).unwrap();
        assert_eq!(direct, refined);
        assert_eq!(direct, h(3, -1).scale_rational(&rational_power(3, -2)).scale(&Cyclotomic::integer(2)));
    }

    #[test]
    fn reflection_uses_negation_mod_level() {
        let c = PAdic::parse("1*5^-1 + 2", 5).unwrap();
        let f = SchwartzFunction::indicator(&Ball::new(&c, 1));
        let r = f.reflect();
        let (ball, _) = r.cells().next().unwrap();
        assert!(ball.center().add(&c).unwrap().truncated(1).is_zero());
        assert_eq!(r.reflect(), f);
    }

    #[test]
    fn file_round_trip() {
        let c = PAdic::parse("1*5^-1 + 2", 5).unwrap();
        let f = SchwartzFunction::indicator(&Ball::new(&c, 1)).scale(&Cyclotomic::zeta(5));
        let text = serde_json::to_string(&f.to_file()).unwrap();
        let back = SchwartzFunction::from_file(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.level(), 1);
    }
}
