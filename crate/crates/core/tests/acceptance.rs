//! One line per acceptance criterion. Run with `--nocapture` to see them.

use std::time::Instant;

use qfourier::fixtures::laurent::{laurent_types, pair_fourier, pairing, Side, SparseElement};
use qfourier::fixtures::{function_algebra, FiniteGroupTable};
use qfourier::oracle::dft_oracle_check;
use qfourier::padic::{
    padic_fourier, padic_group_like_suite, padic_identity_suite, padic_oracle_suite, SchwartzFunction,
};
use qfourier::quantum::{
    bidual_in_original_basis, convolution_check, dual_type_check, fourier_group_like, integral_differences,
    lemma_inversion_check, plancherel_check, structure_differences, TypeClass,
};
use qfourier::suites::{random_coords, random_element, standard_fixtures, FixtureSide};
use qfourier::{ApproxComplex, CheckReport, Cyclotomic, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 4] = [2, 3, 5, 7];
const SEED: u64 = 0;

fn verdict(id: u32, failures: &[String], detail: String) {
    if failures.is_empty() {
        println!("AC{id} pass: {detail}");
    } else {
        println!("AC{id} fail: {detail}; {}", failures.join("; "));
    }
    assert!(failures.is_empty(), "AC{id}: {}", failures.join("; "));
}

fn failures_of(report: &CheckReport) -> Vec<String> {
    report
        .failures()
        .map(|r| format!("{}: {}", r.case, r.witness.as_deref().unwrap_or("")))
        .collect()
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

#[test]
fn ac1_padic_golden_identity() {
    let mut failures = Vec::new();
    let mut slowest = 0.0f64;
    for p in PRIMES {
        for n in -3..=3 {
            let start = Instant::now();
            let got = padic_fourier(&SchwartzFunction::subgroup_indicator(p, n)).unwrap();
            let secs = start.elapsed().as_secs_f64();
            slowest = slowest.max(secs);
            let q = if n >= 0 {
                num_rational::BigRational::new(1.into(), num_bigint::BigInt::from(p).pow(n as u32))
            } else {
                num_rational::BigRational::from_integer(num_bigint::BigInt::from(p).pow((-n) as u32))
            };
            let want = SchwartzFunction::subgroup_indicator(p, -n).scale_rational(&q);
            if got != want {
                failures.push(format!("p={p} n={n}: got {got}"));
            }
            if secs >= 1.0 {
                failures.push(format!("p={p} n={n} took {secs:.2}s"));
            }
        }
    }
    verdict(1, &failures, format!("28 cases exact, slowest {:.1} ms", slowest * 1e3));
}

#[test]
fn ac2_laurent_pair() {
    let mut failures = Vec::new();
    for n in -10..=10 {
        let got = pair_fourier(&SparseElement::<Cyclotomic>::basis(Side::GroupAlgebra, n));
        if !got.same_value(&SparseElement::basis(Side::Functions, n)) {
            failures.push(format!("F(e_{n}) = {got}"));
        }
    }
    let sets: [&[i64]; 3] = [&[0], &[-3, 0, 2], &[-10, -1, 1, 7, 10]];
    for set in sets {
        let f = SparseElement::new(Side::Functions, set.iter().map(|&k| (k, Cyclotomic::one())));
        for n in -12..=12 {
            let got = pairing(&SparseElement::basis(Side::GroupAlgebra, n), &f).unwrap();
            let want = if set.contains(&-n) { Cyclotomic::one() } else { Cyclotomic::zero() };
            if got != want {
                failures.push(format!("<e_{n}, 1_{set:?}> = {got}"));
            }
        }
    }
    for m in -5..=5 {
        for n in -5..=5 {
            let em = SparseElement::<Cyclotomic>::basis(Side::GroupAlgebra, m);
            let en = SparseElement::basis(Side::GroupAlgebra, n);
            let got = em.mul(&en).unwrap().integral();
            let want = Cyclotomic::integer((m + n == 0) as i64);
            if got != want {
                failures.push(format!("phi(e_{m} e_{n}) = {got}"));
            }
        }
    }
    verdict(2, &failures, "21 transforms, 75 pairings, 121 integrals".into());
}

#[test]
fn ac3_inversion() {
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    let mut checked = 0;
    for (i, fx) in standard_fixtures().iter().enumerate() {
        let a = &fx.qg;
        let float = a.map_scalars(|c| c.numeric_value_with(1e-9));
        let mut r = rng(i as u64);
        let mut inputs: Vec<Vec<Cyclotomic>> = (0..a.dim()).map(|k| a.basis(k).into_coords()).collect();
        inputs.extend((0..100).map(|_| random_element(a, &mut r).into_coords()));
        for v in inputs {
            let x = a.element(v.clone()).unwrap();
            let back = a.inverse_fourier(&a.fourier(&x).unwrap()).unwrap();
            if !back.same_value(&x) {
                failures.push(format!("{}: exact round trip of {x}", a.id()));
            }
            let xf = float.element(v.iter().map(|c| c.numeric_value_with(1e-9)).collect()).unwrap();
            let backf = float.inverse_fourier(&float.fourier(&xf).unwrap()).unwrap();
            let err = xf
                .coords()
                .iter()
                .zip(backf.coords())
                .map(|(u, w): (&ApproxComplex, &ApproxComplex)| u.distance(w))
                .fold(0.0, f64::max);
            worst = worst.max(err);
            if err > 1e-9 {
                failures.push(format!("{}: float round trip of {x} off by {err:e}", a.id()));
            }
            checked += 1;
        }
    }
    verdict(3, &failures, format!("{checked} elements over 11 fixtures, float error ≤ {worst:.1e}"));
}

#[test]
fn ac4_lemma_inversion_identity() {
    let mut failures = Vec::new();
    let mut cases = 0;
    for fx in standard_fixtures() {
        let r = lemma_inversion_check(&fx.qg);
        cases += r.records.len();
        failures.extend(failures_of(&r));
    }
    verdict(4, &failures, format!("{cases} records over 11 fixtures"));
}

#[test]
fn ac5_convolution_theorem() {
    let mut failures = Vec::new();
    for fx in standard_fixtures() {
        failures.extend(failures_of(&convolution_check(&fx.qg)));
    }
    let padic = padic_identity_suite(&PRIMES, 50, SEED);
    let conv: Vec<_> = padic.records.iter().filter(|r| r.case.ends_with("/convolution")).collect();
    if conv.len() != 50 {
        failures.push(format!("{} p-adic convolution cases", conv.len()));
    }
    failures.extend(conv.iter().filter(|r| !r.passed()).map(|r| r.case.clone()));
    verdict(5, &failures, "11 fixtures on all basis pairs, 50 p-adic pairs".into());
}

#[test]
fn ac6_plancherel() {
    let mut failures = Vec::new();
    let mut star = 0;
    for (i, fx) in standard_fixtures().iter().enumerate() {
        let a = &fx.qg;
        if !a.is_star() {
            continue;
        }
        star += 1;
        let mut r = rng(100 + i as u64);
        for _ in 0..100 {
            failures.extend(failures_of(&plancherel_check(a, &random_element(a, &mut r))));
        }
    }
    let padic = padic_identity_suite(&PRIMES, 50, SEED);
    let planch: Vec<_> = padic.records.iter().filter(|r| r.case.ends_with("/plancherel")).collect();
    failures.extend(planch.iter().filter(|r| !r.passed()).map(|r| r.case.clone()));
    verdict(6, &failures, format!("100 elements on each of {star} *-fixtures, {} p-adic functions", planch.len()));
}

#[test]
fn ac7_biduality() {
    let mut failures = Vec::new();
    let mut integrals_equal = 0;
    let fixtures = standard_fixtures();
    for fx in &fixtures {
        let a = &fx.qg;
        let b = bidual_in_original_basis(a).unwrap();
        let diff = structure_differences(a, &b);
        if !diff.is_empty() {
            failures.push(format!("{}: {diff:?}", a.id()));
        }
        integrals_equal += integral_differences(a, &b).is_empty() as usize;
    }
    verdict(
        7,
        &failures,
        format!("{} fixtures, integrals also equal on {integrals_equal}", fixtures.len()),
    );
}

#[test]
fn ac8_type_duality() {
    let mut failures = Vec::new();
    for fx in standard_fixtures() {
        let a = &fx.qg;
        if let Some((g, side)) = &fx.group {
            let target: Vec<Cyclotomic> = match side {
                FixtureSide::Functions => (0..g.order())
                    .map(|k| Cyclotomic::integer((k == g.identity()) as i64))
                    .collect(),
                FixtureSide::GroupAlgebra => vec![Cyclotomic::one(); g.order()],
            };
            let span = a.find_cointegral();
            let proportional = span.len() == 1 && {
                let v = span[0].coords();
                let k = target.iter().position(|t| !t.is_zero()).unwrap();
                let c = v[k].clone();
                !c.is_zero() && v.iter().zip(&target).all(|(x, t)| x.same_value(&t.times(&c)))
            };
            if !proportional {
                failures.push(format!("{}: cointegral span {:?}", a.id(), span));
            }
        }
        match dual_type_check(a) {
            Ok(r) => failures.extend(failures_of(&r)),
            Err(e) => failures.push(format!("{}: {e}", a.id())),
        }
    }
    let (cz, kz) = laurent_types();
    if cz != (TypeClass { compact: true, discrete: false }) {
        failures.push(format!("CZ type {cz:?}"));
    }
    if kz != (TypeClass { compact: false, discrete: true }) {
        failures.push(format!("KZ type {kz:?}"));
    }
    verdict(8, &failures, "cointegral spans on 10 group fixtures, dual types, CZ compact, KZ discrete".into());
}

#[test]
fn ac9_group_like_projections() {
    let mut failures = Vec::new();
    let g = FiniteGroupTable::builtin("S3").unwrap();
    let a = function_algebra::<Cyclotomic>(&g);
    let indicator = |set: &[usize]| {
        a.element((0..g.order()).map(|k| Cyclotomic::integer(set.contains(&k) as i64)).collect())
            .unwrap()
    };
    let mut orders: Vec<usize> = Vec::new();
    for sub in g.subgroups() {
        let h = indicator(&sub);
        match fourier_group_like(&a, &h) {
            Ok(t) if t.dual_witness.is_none() => orders.push(sub.len()),
            Ok(t) => failures.push(format!("transform of 1_{sub:?}: {}", t.dual_witness.unwrap())),
            Err(e) => failures.push(format!("1_{sub:?}: {e}")),
        }
    }
    orders.sort();
    orders.dedup();
    if orders != [1, 2, 3, 6] {
        failures.push(format!("subgroup orders {orders:?}"));
    }
    let sub = g.subgroups().into_iter().find(|s| s.len() == 2).unwrap();
    let x = (0..g.order()).find(|k| !sub.contains(k)).unwrap();
    let coset: Vec<usize> = sub.iter().map(|&s| g.mul(x, s)).collect();
    if a.is_group_like_projection(&indicator(&coset)).unwrap() {
        failures.push(format!("coset {coset:?} passed"));
    }
    let ns: Vec<i64> = (-3..=3).collect();
    let mut padic_cases = 0;
    for p in PRIMES {
        let r = padic_group_like_suite(&ns, p);
        padic_cases += r.records.len();
        failures.extend(failures_of(&r));
        let h0 = SchwartzFunction::subgroup_indicator(p, 0);
        if padic_fourier(&h0).unwrap() != h0 {
            failures.push(format!("p={p}: transform of h_0 is not h_0"));
        }
    }
    verdict(9, &failures, format!("S3 subgroup orders {orders:?}, coset rejected, {padic_cases} p-adic cases"));
}

#[test]
fn ac10_oracles() {
    let mut failures = Vec::new();
    let r = padic_oracle_suite(&PRIMES, 50, SEED, 1e-6);
    if r.records.len() != 50 {
        failures.push(format!("{} Riemann cases", r.records.len()));
    }
    failures.extend(failures_of(&r));
    let mut dft_cases = 0;
    for (i, name) in ["Z2", "Z3", "Z4", "Z2xZ2"].iter().enumerate() {
        let g = FiniteGroupTable::builtin(name).unwrap();
        let mut rng = rng(200 + i as u64);
        let samples: Vec<Vec<Cyclotomic>> = (0..20).map(|_| random_coords(&mut rng, g.order())).collect();
        let r = dft_oracle_check(&g, &samples);
        dft_cases += r.records.len();
        failures.extend(failures_of(&r));
        if !r.records.iter().any(|c| c.case.ends_with("/dft") && c.passed()) {
            failures.push(format!("{name}: DFT oracle not run"));
        }
    }
    verdict(10, &failures, format!("50 Riemann sums within 1e-6, {dft_cases} exact DFT checks"));
}
