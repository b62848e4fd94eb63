//! Checks of the p-adic identities: group-like projections `h_n`, the
//! convolution theorem, Plancherel, inversion and the Riemann-sum oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::fourier::{enumerate_centers, oracle_distance, padic_fourier, padic_inverse_fourier, HaarMeasure};
use super::number::{rational_power, PAdic};
use super::schwartz::{Ball, SchwartzFunction};
use crate::report::{CheckRecord, CheckReport};
use crate::scalar::{Cyclotomic, Scalar};

const SUITE: &str = "padic";

/// Evaluates `Δ(f)(1⊗f)` as `(x, y) ↦ f(x+y) f(y)` and compares it with
/// `f(x) f(y)` on the grid of points with digits in `[n−1, m+1)`, where
/// `(n, m)` is the window of `f`.
pub fn coproduct_witness(f: &SchwartzFunction) -> Option<String> {
    let (n, m) = f.window();
    let grid = enumerate_centers(f.prime(), n - 1, m + 1);
    for x in &grid {
        let fx = f.eval(x);
        for y in &grid {
            let fy = f.eval(y);
            let lhs = &f.eval(&x.add(y).expect("same prime")) * &fy;
            if lhs != &fx * &fy {
                return Some(format!("x={x}, y={y}: f(x+y)f(y)={lhs}, f(x)f(y)={}", &fx * &fy));
            }
        }
    }
    None
}

fn group_like_witness(f: &SchwartzFunction) -> Option<String> {
    if f.is_zero() {
        return Some("h = 0".into());
    }
    if f.mul(f).ok()? != *f {
        return Some("h² ≠ h".into());
    }
    if f.star() != *f {
        return Some("h* ≠ h".into());
    }
    coproduct_witness(f)
}

fn compare(got: &SchwartzFunction, want: &SchwartzFunction) -> Option<String> {
    (got != want).then(|| format!("got {got}, expected {want}"))
}

/// For each `n`, checks that `h_n = 1_{p^n ℤ_p}` is a group-like projection,
/// that `𝓕h_n = p^{−n} h_{−n}`, and that with Haar rescaled so `∫h_n = 1`
/// the transform is `h_{−n}`, again group-like. Also checks that the coset
/// `1 + pℤ_p` fails the coproduct condition.
pub fn padic_group_like_suite(ns: &[i64], p: u64) -> CheckReport {
    let cases: Vec<(i64, usize)> = ns.iter().flat_map(|&n| (0..5).map(move |k| (n, k))).collect();
    let records: Vec<CheckRecord> = cases
        .par_iter()
        .map(|&(n, k)| {
            let h = SchwartzFunction::subgroup_indicator(p, n);
            let dual = SchwartzFunction::subgroup_indicator(p, -n);
            let case = |name: &str| format!("p{p}/h{n}/{name}");
            match k {
                0 => {
                    let w = (h.mul(&h).ok() != Some(h.clone())).then(|| "h² ≠ h".to_string());
                    CheckRecord::from_witness(SUITE, case("idempotent"), w)
                }
                1 => {
                    let w = (h.star() != h).then(|| "h* ≠ h".to_string());
                    CheckRecord::from_witness(SUITE, case("self-adjoint"), w)
                }
                2 => CheckRecord::from_witness(SUITE, case("coproduct"), coproduct_witness(&h)),
                3 => {
                    let w = match padic_fourier(&h) {
                        Ok(t) => compare(&t, &dual.scale_rational(&rational_power(p, -n))),
                        Err(e) => Some(e.to_string()),
                    };
                    CheckRecord::from_witness(SUITE, case("transform"), w)
                }
                _ => {
                    let mu = HaarMeasure::normalized_for(&h).expect("∫h_n > 0");
                    let w = match mu.fourier(&h) {
                        Ok(t) => compare(&t, &dual).or_else(|| group_like_witness(&t)),
                        Err(e) => Some(e.to_string()),
                    };
                    CheckRecord::from_witness(SUITE, case("normalized-transform"), w)
                }
            }
        })
        .collect();
    let mut report = CheckReport { records };
    let coset = SchwartzFunction::indicator(&Ball::new(&PAdic::from_u64(p, 1), 1));
    let w = coproduct_witness(&coset)
        .is_none()
        .then(|| "coproduct condition holds on the coset".to_string());
    report.push(CheckRecord::from_witness(SUITE, format!("p{p}/coset/not-group-like"), w));
    report
}

/// A random function with window `n ≤ m` in `[−2, 2]`, one to three cells
/// with centers in `p^n ℤ_p` and Gaussian-integer values in `[−3, 3]`.
pub fn random_schwartz<R: Rng>(rng: &mut R, p: u64) -> SchwartzFunction {
    let m = rng.gen_range(-2..=2);
    let n = rng.gen_range(-2..=m);
    let count = rng.gen_range(1..=3);
    let cells: Vec<(Ball, Cyclotomic)> = (0..count)
        .map(|_| {
            let digits: Vec<(i64, u64)> = (n..m).map(|j| (j, rng.gen_range(0..p))).collect();
            let center = PAdic::from_digits(p, digits).expect("digits below p");
            let value = Cyclotomic::gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            (Ball::new(&center, m), value)
        })
        .collect();
    let f = SchwartzFunction::from_cells(p, cells).expect("one prime");
    if f.level() < m {
        f.refined(m)
    } else {
        f
    }
}

fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn describe(f: &SchwartzFunction) -> String {
    serde_json::to_string(&f.to_file()).expect("serializable")
}

/// Convolution theorem, Plancherel, inversion and translation invariance of
/// the Haar integral on `count` random pairs; the prime cycles through
/// `primes`.
pub fn padic_identity_suite(primes: &[u64], count: usize, seed: u64) -> CheckReport {
    let records: Vec<Vec<CheckRecord>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let p = primes[i % primes.len()];
            let mut rng = case_rng(seed, i);
            let f = random_schwartz(&mut rng, p);
            let g = random_schwartz(&mut rng, p);
            let t = PAdic::from_digits(p, [(-2, rng.gen_range(0..p)), (1, rng.gen_range(0..p))])
                .expect("digits below p");
            let case = |name: &str| format!("p{p}/random-{i}/{name}");
            let ctx = || format!("f={}, g={}", describe(&f), describe(&g));
            let run = |r: crate::Result<Option<String>>| match r {
                Ok(w) => w.map(|w| format!("{w}; {}", ctx())),
                Err(e) => Some(e.to_string()),
            };
            let conv = run((|| {
                let lhs = padic_fourier(&f.convolve(&g)?)?;
                let rhs = padic_fourier(&f)?.mul(&padic_fourier(&g)?)?;
                Ok(compare(&lhs, &rhs))
            })());
            let planch = run((|| {
                let ft = padic_fourier(&f)?;
                let lhs = ft.mul(&ft.star())?.haar_integral();
                let rhs = f.mul(&f.star())?.haar_integral();
                let positive = rhs.as_rational().map_or(false, |q| q >= num_traits::Zero::zero());
                Ok((lhs != rhs || !positive).then(|| format!("∫|𝓕f|² = {lhs}, ∫|f|² = {rhs}")))
            })());
            let inversion = run((|| {
                let back = padic_inverse_fourier(&padic_fourier(&f)?)?;
                Ok(compare(&back, &f))
            })());
            let haar = run((|| {
                let shifted = f.translate(&t)?.haar_integral();
                let sum = f.add(&g)?.haar_integral();
                let w = if shifted != f.haar_integral() {
                    Some(format!("∫f(x−t)dx = {shifted} ≠ ∫f for t={t}"))
                } else if sum != &f.haar_integral() + &g.haar_integral() {
                    Some(format!("∫(f+g) = {sum} is not ∫f + ∫g"))
                } else {
                    None
                };
                Ok(w)
            })());
            vec![
                CheckRecord::from_witness(SUITE, case("convolution"), conv),
                CheckRecord::from_witness(SUITE, case("plancherel"), planch),
                CheckRecord::from_witness(SUITE, case("inversion"), inversion),
                CheckRecord::from_witness(SUITE, case("haar"), haar),
            ]
        })
        .collect();
    CheckReport {
        records: records.into_iter().flatten().collect(),
    }
}

/// Compares the exact transform of `count` random functions with the
/// floating-point Riemann sum.
pub fn padic_oracle_suite(primes: &[u64], count: usize, seed: u64, tolerance: f64) -> CheckReport {
    let records: Vec<CheckRecord> = (0..count)
        .into_par_iter()
        .map(|i| {
            let p = primes[i % primes.len()];
            // a separate stream range from the identity suite
            let mut rng = case_rng(seed, 1 << 32 | i);
            let f = random_schwartz(&mut rng, p);
            let case = format!("p{p}/random-{i}/riemann-sum");
            let w = match oracle_distance(&f, 400) {
                Ok(d) if d <= tolerance => None,
                Ok(d) => Some(format!("distance {d:e} for f={}", describe(&f))),
                Err(e) => Some(e.to_string()),
            };
            CheckRecord::from_witness("oracle", case, w)
        })
        .collect();
    CheckReport { records }
}
