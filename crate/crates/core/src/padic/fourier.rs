//! Exact Fourier transform on `ℚ_p` for the self-dual Haar measure
//! `μ(ℤ_p) = 1` and the character `χ(x, y) = exp(2πi xy)`.

use num_rational::BigRational;
use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive};

use super::number::{rational_power, PAdic};
use super::schwartz::{Ball, SchwartzFunction};
use crate::error::{Error, Result};
use crate::scalar::{ApproxComplex, Cyclotomic};

/// All `x` with digits only at exponents `lo..hi`.
pub(crate) fn enumerate_centers(prime: u64, lo: i64, hi: i64) -> Vec<PAdic> {
    let mut out = vec![PAdic::zero(prime)];
    for j in lo..hi {
        let mut next = Vec::with_capacity(out.len() * prime as usize);
        for c in &out {
            next.push(c.clone());
            for d in 1..prime {
                next.push(c.add(&PAdic::from_digits(prime, [(j, d)]).expect("digit below p")).expect("same prime"));
            }
        }
        out = next;
    }
    out
}

/// Level at which the transform of `1_{c + p^m ℤ_p}` is constant:
/// `max(−v(c), −m)`.
pub fn transform_level(ball: &Ball) -> i64 {
    let m = ball.level();
    match ball.center().valuation() {
        Some(v) => (-v).max(-m),
        None => -m,
    }
}

/// Largest window `p^{m−n}` the transform indexes densely.
const MAX_WINDOW: u64 = 1 << 22;

/// `𝓕f(y) = ∫ f(x) conj χ(x, y) dx`. A single cell transforms as
/// `𝓕 1_{c + p^m ℤ_p} = conj χ(c, ·) p^{−m} 1_{p^{−m} ℤ_p}`.
///
/// With centers `c = C p^n` in `p^n ℤ_p / p^m ℤ_p` and outputs
/// `y = Y p^{−m}`, `conj χ(c, y) = ζ_K^{−CY}` for `K = p^{m−n}`, so the sum
/// over cells is a length-`K` DFT.
pub fn padic_fourier(f: &SchwartzFunction) -> Result<SchwartzFunction> {
    let p = f.prime();
    let m = f.level();
    let cells: Vec<_> = f.cells().collect();
    let n = cells
        .iter()
        .filter_map(|(b, _)| b.center().valuation())
        .min()
        .unwrap_or(m);
    let k = (m - n) as u32;
    let size = p
        .checked_pow(k)
        .filter(|&s| s <= MAX_WINDOW)
        .ok_or_else(|| Error::Precondition(format!("window {p}^{k} is too wide to transform")))?
        as usize;
    let mut a = vec![Cyclotomic::zero(); size];
    for (ball, v) in &cells {
        let idx = match ball.center().valuation() {
            None => 0,
            Some(_) => {
                let (u, s) = ball.center().scaled();
                (u * BigUint::from(p).pow((s - n) as u32))
                    .to_usize()
                    .expect("index below the window size")
            }
        };
        a[idx] = &a[idx] + *v;
    }
    let weight = rational_power(p, -m);
    // the output is constant on cosets of p^{−n} ℤ_p
    let level = -n;
    let out: Vec<_> = dft(&a, p as usize)
        .into_iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(y, v)| {
            let y = PAdic::from_scaled(p, &BigUint::from(y), -m);
            (Ball::new(&y, level), v.scale(&weight))
        })
        .collect();
    let mut g = SchwartzFunction::from_cells(p, out)?;
    if g.level() < level {
        g = g.refined(level);
    }
    Ok(g)
}

/// `A(Y) = Σ_C a_C ζ_K^{−CY}` for `K = a.len()` a power of `p`, splitting
/// `C` on its lowest base-p digit.
fn dft(a: &[Cyclotomic], p: usize) -> Vec<Cyclotomic> {
    let size = a.len();
    if size == 1 || a.iter().all(Cyclotomic::is_zero) {
        return a.to_vec();
    }
    let sub = size / p;
    let parts: Vec<Vec<Cyclotomic>> = (0..p)
        .map(|r| {
            let strided: Vec<Cyclotomic> = a.iter().skip(r).step_by(p).cloned().collect();
            dft(&strided, p)
        })
        .collect();
    (0..size)
        .map(|y| {
            let mut total = Cyclotomic::zero();
            for (r, part) in parts.iter().enumerate() {
                let v = &part[y % sub];
                if v.is_zero() {
                    continue;
                }
                let e = (r * y) % size;
                total = if e == 0 {
                    &total + v
                } else {
                    &total + &(v * &Cyclotomic::root_of_unity(size as u64, -(e as i64)))
                };
            }
            total
        })
        .collect()
}

/// `𝓕⁻¹ = R ∘ 𝓕` with `Rf(x) = f(−x)`; the measure is self-dual.
pub fn padic_inverse_fourier(f: &SchwartzFunction) -> Result<SchwartzFunction> {
    Ok(padic_fourier(f)?.reflect())
}

/// The Haar measure `scale · μ` with `μ(ℤ_p) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaarMeasure {
    prime: u64,
    scale: BigRational,
}

impl HaarMeasure {
    pub fn standard(prime: u64) -> Self {
        HaarMeasure {
            prime,
            scale: BigRational::one(),
        }
    }

    /// Positive multiple of the standard measure.
    pub fn scaled(prime: u64, scale: BigRational) -> Self {
        assert!(scale.is_positive(), "Haar measures are positive");
        HaarMeasure { prime, scale }
    }

    /// The multiple of `μ` giving `f` total mass 1. `None` if `∫f dμ` is not
    /// a positive rational.
    pub fn normalized_for(f: &SchwartzFunction) -> Option<Self> {
        let total = f.haar_integral().as_rational()?;
        total
            .is_positive()
            .then(|| Self::scaled(f.prime(), total.recip()))
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    pub fn integral(&self, f: &SchwartzFunction) -> Cyclotomic {
        f.haar_integral().scale(&self.scale)
    }

    /// Transform computed with this measure, `scale · 𝓕f`.
    pub fn fourier(&self, f: &SchwartzFunction) -> Result<SchwartzFunction> {
        Ok(padic_fourier(f)?.scale_rational(&self.scale))
    }

    /// The measure on the dual side for which inversion holds.
    pub fn dual(&self) -> Self {
        Self::scaled(self.prime, self.scale.recip())
    }
}

/// Riemann sum for `𝓕f(y)` in floating point: each level-`m` cell is split
/// into `p²` subcells, one sample per subcell, with `{xy}` computed from
/// exact rationals. Exact for `|y| ≤ p^{m+2}`.
pub fn riemann_fourier_value(f: &SchwartzFunction, y: &PAdic) -> ApproxComplex {
    let p = f.prime();
    let k = f.level() + 2;
    let weight = 1.0 / (p as f64).powi(k as i32);
    let yr = y.to_rational();
    let mut re = 0.0;
    let mut im = 0.0;
    for (ball, value) in f.cells() {
        let v = value.numeric_value();
        for sub in ball.refine(k) {
            let xy = sub.center().to_rational() * &yr;
            let frac = &xy - xy.floor();
            let theta = -2.0 * std::f64::consts::PI * rational_to_f64(&frac);
            let (s, c) = theta.sin_cos();
            re += weight * (v.re * c - v.im * s);
            im += weight * (v.re * s + v.im * c);
        }
    }
    ApproxComplex::new(re, im)
}

fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().expect("fractional part is finite")
}

/// Sample points for comparing `𝓕f` against the Riemann sum: every output
/// cell center (at most `cap`) plus the points of `p^{−m−2} ℤ_p` with
/// digits only below `−m`.
pub fn oracle_samples(f: &SchwartzFunction, transform: &SchwartzFunction, cap: usize) -> Vec<PAdic> {
    let p = f.prime();
    let m = f.level();
    let mut ys: Vec<PAdic> = transform
        .cells()
        .map(|(b, _)| b.center().clone())
        .take(cap)
        .collect();
    let outer = enumerate_centers(p, -m - 2, -m);
    ys.extend(outer);
    ys.sort();
    ys.dedup();
    ys
}

/// Largest distance between `𝓕f` and its Riemann sum over the samples.
pub fn oracle_distance(f: &SchwartzFunction, cap: usize) -> Result<f64> {
    let t = padic_fourier(f)?;
    let mut worst: f64 = 0.0;
    for y in oracle_samples(f, &t, cap) {
        let exact = t.eval(&y).numeric_value();
        worst = worst.max(exact.distance(&riemann_fourier_value(f, &y)));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn h(p: u64, n: i64) -> SchwartzFunction {
        SchwartzFunction::subgroup_indicator(p, n)
    }

    /// The defining sum, one character per (cell, output) pair.
    fn direct_fourier(f: &SchwartzFunction) -> SchwartzFunction {
        let p = f.prime();
        let m = f.level();
        let cells: Vec<_> = f.cells().collect();
        let level = cells.iter().map(|(b, _)| transform_level(b)).max().unwrap_or(-m);
        let out = enumerate_centers(p, -m, level).into_iter().map(|y| {
            let mut total = Cyclotomic::zero();
            for (ball, v) in &cells {
                let chi = ball.center().character(&y).unwrap().conjugate().value();
                total = &total + &(*v * &chi);
            }
            (Ball::new(&y, level), total.scale(&rational_power(p, -m)))
        });
        SchwartzFunction::from_cells(p, out).unwrap()
    }

    #[test]
    fn fast_transform_matches_the_defining_sum() {
        use rand::SeedableRng;
        for seed in 0..40 {
            let p = [2, 3, 5, 7][seed as usize % 4];
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = super::super::random_schwartz(&mut rng, p);
            let g = padic_fourier(&f).unwrap();
            assert_eq!(g, direct_fourier(&f), "seed {seed}");
            if g.cell_count() <= 30 {
                assert_eq!(padic_fourier(&g).unwrap(), direct_fourier(&g), "seed {seed}");
            }
        }
    }

    #[test]
    fn subgroup_indicators_transform_to_dual_subgroups() {
        for p in [2, 3, 5, 7] {
            for n in -3..=3 {
                let expected = h(p, -n).scale_rational(&rational_power(p, -n));
                assert_eq!(padic_fourier(&h(p, n)).unwrap(), expected, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn half_plus_integers_transforms_to_parity_sign() {
        let c = PAdic::parse("1*2^-1", 2).unwrap();
        let f = SchwartzFunction::indicator(&Ball::new(&c, 0));
        let even = SchwartzFunction::indicator(&Ball::subgroup(2, 1));
        let odd = SchwartzFunction::indicator(&Ball::new(&PAdic::from_u64(2, 1), 1));
        let expected = even.add(&odd.scale(&Cyclotomic::integer(-1))).unwrap();
        let t = padic_fourier(&f).unwrap();
        assert_eq!(t, expected);
        // pointwise at digit-enumerated samples: (−1)^{y₀} on ℤ₂, 0 outside
        for y in enumerate_centers(2, -2, 3) {
            let inside = y.valuation().map_or(true, |v| v >= 0);
            let want = if !inside {
                0
            } else if y.digit(0) == 0 {
                1
            } else {
                -1
            };
            assert_eq!(t.eval(&y), Cyclotomic::integer(want), "y={y}");
        }
    }

    #[test]
    fn zero_transforms_to_zero() {
        assert!(padic_fourier(&SchwartzFunction::zero(5, 1)).unwrap().is_zero());
    }

    #[test]
    fn double_transform_reflects() {
        let c = PAdic::parse("2*3^-1 + 1", 3).unwrap();
        let f = SchwartzFunction::indicator(&Ball::new(&c, 1));
        let twice = padic_fourier(&padic_fourier(&f).unwrap()).unwrap();
        assert_eq!(twice, SchwartzFunction::indicator(&Ball::new(&c.negate_mod(1), 1)));
        assert_eq!(padic_inverse_fourier(&padic_fourier(&f).unwrap()).unwrap(), f);
        let hn = h(3, 2);
        assert_eq!(padic_fourier(&padic_fourier(&hn).unwrap()).unwrap(), hn);
    }

    #[test]
    fn normalized_measure_fixes_group_like_projections() {
        for n in -2..=2 {
            let mu = HaarMeasure::normalized_for(&h(5, n)).unwrap();
            assert_eq!(mu.integral(&h(5, n)), Cyclotomic::one());
            assert_eq!(mu.fourier(&h(5, n)).unwrap(), h(5, -n));
            assert_eq!(mu.dual().scale() * mu.scale(), BigRational::one());
        }
        assert!(HaarMeasure::normalized_for(&SchwartzFunction::zero(5, 0)).is_none());
    }

    #[test]
    fn riemann_sum_agrees_on_examples() {
        let c = PAdic::parse("1*5^-1 + 3", 5).unwrap();
        let f = SchwartzFunction::indicator(&Ball::new(&c, 1)).scale(&Cyclotomic::gaussian(2, -1));
        assert!(oracle_distance(&f, 200).unwrap() < 1e-9);
        assert!(oracle_distance(&h(2, -1), 200).unwrap() < 1e-9);
    }
}
