//! Named check suites over the standard fixtures, with seeded random
//! samples. Cases run in parallel and are reported in a fixed order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures::{
    function_algebra, group_algebra, laurent_type_certificates, sweedler_fixture, FiniteGroupTable,
};
use crate::oracle::dft_oracle_check;
use crate::padic::{padic_group_like_suite, padic_identity_suite, padic_oracle_suite};
use crate::quantum::{
    build_dual, classify_type, convolution_check, dual_type_check, fourier_group_like,
    lemma_inversion_check, plancherel_check, round_trip_check, verify_axioms, Element,
    FiniteQuantumGroup,
};
use crate::report::{CheckRecord, CheckReport, Status};
use crate::scalar::{ApproxComplex, Cyclotomic, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Axioms,
    Inversion,
    Convolution,
    Plancherel,
    Types,
    GroupLike,
    Padic,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Axioms,
        Suite::Inversion,
        Suite::Convolution,
        Suite::Plancherel,
        Suite::Types,
        Suite::GroupLike,
        Suite::Padic,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Inversion => "inversion",
            Suite::Convolution => "convolution",
            Suite::Plancherel => "plancherel",
            Suite::Types => "types",
            Suite::GroupLike => "group-like",
            Suite::Padic => "padic",
            Suite::Oracle => "oracle",
        }
    }

    /// Parses a comma-separated selector; `all` selects every suite.
    pub fn parse_list(text: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

impl FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            _ => Err(Error::Format(format!("unknown backend {s:?}, expected exact or float"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub backend: Backend,
    /// Comparison tolerance of the float backend and of the Riemann-sum
    /// oracle.
    pub tolerance: f64,
    /// Random elements per fixture.
    pub samples: usize,
    /// Random Schwartz functions (or pairs) per p-adic suite.
    pub padic_samples: usize,
    pub primes: Vec<u64>,
    /// Range of `n` for the p-adic group-like checks.
    pub padic_levels: Vec<i64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            backend: Backend::Exact,
            tolerance: 1e-9,
            samples: 100,
            padic_samples: 50,
            primes: vec![2, 3, 5, 7],
            padic_levels: (-3..=3).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureSide {
    Functions,
    GroupAlgebra,
}

/// A quantum group to check, with the group it was built from, if any.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub group: Option<(FiniteGroupTable, FixtureSide)>,
    pub qg: FiniteQuantumGroup<Cyclotomic>,
}

impl Fixture {
    pub fn plain(qg: FiniteQuantumGroup<Cyclotomic>) -> Self {
        Fixture { group: None, qg }
    }
}

/// `K(G)` and `ℂG` for `G` in `ℤ₂, ℤ₃, ℤ₄, ℤ₂×ℤ₂, S₃`, then Sweedler's algebra.
pub fn standard_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for name in ["Z2", "Z3", "Z4", "Z2xZ2", "S3"] {
        let g = FiniteGroupTable::builtin(name).expect("builtin");
        out.push(Fixture {
            qg: function_algebra(&g),
            group: Some((g.clone(), FixtureSide::Functions)),
        });
        out.push(Fixture {
            qg: group_algebra(&g),
            group: Some((g, FixtureSide::GroupAlgebra)),
        });
    }
    out.push(Fixture::plain(sweedler_fixture()));
    out
}

/// Gaussian integers with parts in `[−3, 3]`.
pub fn random_coords<S: Scalar, R: Rng>(rng: &mut R, dim: usize) -> Vec<S> {
    (0..dim)
        .map(|_| S::gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3)))
        .collect()
}

pub fn random_element<S: Scalar, R: Rng>(a: &FiniteQuantumGroup<S>, rng: &mut R) -> Element<S> {
    a.element(random_coords(rng, a.dim())).expect("dimension matches")
}

/// Deterministic per-(suite, fixture) stream.
fn stream_rng(seed: u64, suite: Suite, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((suite as u64) << 32) | index as u64);
    rng
}

fn samples<S: Scalar>(a: &FiniteQuantumGroup<S>, config: &SuiteConfig, suite: Suite, index: usize) -> Vec<Element<S>> {
    let mut rng = stream_rng(config.seed, suite, index);
    (0..config.samples).map(|_| random_element(a, &mut rng)).collect()
}

/// Runs the selected suites over `fixtures`, in the order given.
pub fn run_suites(suites: &[Suite], fixtures: &[Fixture], config: &SuiteConfig) -> CheckReport {
    let mut report = CheckReport::new();
    for &s in suites {
        report.extend(run_suite(s, fixtures, config));
    }
    report
}

pub fn run_suite(suite: Suite, fixtures: &[Fixture], config: &SuiteConfig) -> CheckReport {
    match suite {
        Suite::Padic => padic_suite(config),
        Suite::Oracle => oracle_suite(fixtures, config),
        _ => match config.backend {
            Backend::Exact => {
                let qgs: Vec<_> = fixtures.iter().map(|f| f.qg.clone()).collect();
                finite_suite(suite, fixtures, &qgs, config)
            }
            Backend::Float => {
                let tol = config.tolerance;
                let qgs: Vec<_> = fixtures
                    .iter()
                    .map(|f| f.qg.map_scalars(|c| c.numeric_value_with(tol)))
                    .collect();
                finite_suite::<ApproxComplex>(suite, fixtures, &qgs, config)
            }
        },
    }
}

fn finite_suite<S: Scalar>(
    suite: Suite,
    fixtures: &[Fixture],
    qgs: &[FiniteQuantumGroup<S>],
    config: &SuiteConfig,
) -> CheckReport {
    let parts: Vec<CheckReport> = (0..qgs.len())
        .into_par_iter()
        .map(|i| {
            let a = &qgs[i];
            match suite {
                Suite::Axioms => axioms_case(a),
                Suite::Inversion => {
                    let mut r = lemma_inversion_check(a);
                    r.extend(round_trip_check(a, &samples(a, config, suite, i)));
                    r
                }
                Suite::Convolution => convolution_check(a),
                Suite::Plancherel => plancherel_sweep(a, &samples(a, config, suite, i)),
                Suite::Types => types_case(a, fixtures[i].group.as_ref()),
                Suite::GroupLike => group_like_case(a, fixtures[i].group.as_ref()),
                Suite::Padic | Suite::Oracle => unreachable!("handled by run_suite"),
            }
        })
        .collect();
    let mut report = CheckReport::new();
    for p in parts {
        report.extend(p);
    }
    if suite == Suite::Types {
        report.extend(laurent_type_certificates::<S>());
    }
    report
}

fn axioms_case<S: Scalar>(a: &FiniteQuantumGroup<S>) -> CheckReport {
    let mut r = verify_axioms(a);
    if !r.all_passed() {
        return r;
    }
    match build_dual(a) {
        Ok(d) => r.extend(verify_axioms(&d.dual)),
        Err(e) => r.push(CheckRecord::fail("axioms", format!("{}/dual", a.id()), e.to_string())),
    }
    r
}

/// Plancherel on every sample, folded into one record per identity.
fn plancherel_sweep<S: Scalar>(a: &FiniteQuantumGroup<S>, xs: &[Element<S>]) -> CheckReport {
    let mut folded: Vec<CheckRecord> = Vec::new();
    for (n, x) in xs.iter().enumerate() {
        for rec in plancherel_check(a, x).records {
            match folded.iter_mut().find(|r| r.case == rec.case) {
                None => folded.push(tag_sample(rec, n)),
                Some(slot) => {
                    if slot.status == Status::Pass && rec.status == Status::Fail {
                        *slot = tag_sample(rec, n);
                    }
                }
            }
        }
    }
    CheckReport { records: folded }
}

fn tag_sample(mut rec: CheckRecord, n: usize) -> CheckRecord {
    if rec.status == Status::Fail {
        rec.witness = rec.witness.map(|w| format!("sample {n}: {w}"));
    }
    rec
}

fn types_case<S: Scalar>(a: &FiniteQuantumGroup<S>, group: Option<&(FiniteGroupTable, FixtureSide)>) -> CheckReport {
    let mut r = CheckReport::new();
    let t = classify_type(a);
    let w = (!(t.compact && t.discrete)).then(|| format!("classified as {t:?}"));
    r.push(CheckRecord::from_witness("types", format!("{}/finite-type", a.id()), w));
    match dual_type_check(a) {
        Ok(rep) => r.extend(rep),
        Err(e) => r.push(CheckRecord::fail("types", format!("{}/dual-type", a.id()), e.to_string())),
    }
    if let Some((g, side)) = group {
        let h = a.find_cointegral();
        let expected: Vec<S> = match side {
            FixtureSide::Functions => (0..g.order())
                .map(|i| if i == g.identity() { S::one() } else { S::zero() })
                .collect(),
            FixtureSide::GroupAlgebra => vec![S::one(); g.order()],
        };
        let w = match h.as_slice() {
            [h] => {
                // the solver may return any nonzero multiple
                let k = h.coords().iter().zip(&expected).find(|(_, e)| !e.is_zero());
                let scaled = k.and_then(|(c, e)| c.inverse().map(|inv| h.scaled(&e.times(&inv))));
                match scaled {
                    Some(s) if crate::scalar::vectors_equal(s.coords(), &expected) => None,
                    _ => Some(format!("cointegral {h}, expected a multiple of {}", crate::scalar::format_vector(&expected))),
                }
            }
            other => Some(format!("cointegral space has dimension {}", other.len())),
        };
        r.push(CheckRecord::from_witness("types", format!("{}/cointegral", a.id()), w));
    }
    r
}

fn indicator<S: Scalar>(a: &FiniteQuantumGroup<S>, set: &[usize]) -> Element<S> {
    a.element((0..a.dim()).map(|i| if set.contains(&i) { S::one() } else { S::zero() }).collect())
        .expect("dimension matches")
}

fn format_set(g: &FiniteGroupTable, set: &[usize]) -> String {
    let labels: Vec<&str> = set.iter().map(|&i| g.labels()[i].as_str()).collect();
    format!("{{{}}}", labels.join(","))
}

/// Subgroup indicators of `K(G)` are group-like and transform to group-like
/// projections; a coset of a proper nontrivial subgroup is not group-like.
fn group_like_case<S: Scalar>(a: &FiniteQuantumGroup<S>, group: Option<&(FiniteGroupTable, FixtureSide)>) -> CheckReport {
    let mut r = CheckReport::new();
    let Some((g, FixtureSide::Functions)) = group else {
        return r;
    };
    let mut coset = None;
    for sub in g.subgroups() {
        let h = indicator(a, &sub);
        let case = format!("{}/subgroup{}", a.id(), format_set(g, &sub));
        let w = match fourier_group_like(a, &h) {
            Ok(out) => out.dual_witness.map(|w| format!("dual: {w}")),
            Err(e) => Some(e.to_string()),
        };
        r.push(CheckRecord::from_witness("group-like", case, w));
        if coset.is_none() && sub.len() > 1 && sub.len() < g.order() {
            let x = (0..g.order()).find(|x| !sub.contains(x)).expect("proper subgroup");
            coset = Some(sub.iter().map(|&s| g.mul(x, s)).collect::<Vec<_>>());
        }
    }
    if let Some(c) = coset {
        let case = format!("{}/coset{}/not-group-like", a.id(), format_set(g, &c));
        let w = match a.is_group_like_projection(&indicator(a, &c)) {
            Ok(false) => None,
            Ok(true) => Some("coset indicator passed the group-like conditions".into()),
            Err(e) => Some(e.to_string()),
        };
        r.push(CheckRecord::from_witness("group-like", case, w));
    }
    r
}

fn padic_suite(config: &SuiteConfig) -> CheckReport {
    let mut r = CheckReport::new();
    for &p in &config.primes {
        r.extend(padic_group_like_suite(&config.padic_levels, p));
    }
    r.extend(padic_identity_suite(&config.primes, config.padic_samples, config.seed));
    r
}

fn oracle_suite(fixtures: &[Fixture], config: &SuiteConfig) -> CheckReport {
    let groups: Vec<&FiniteGroupTable> = fixtures
        .iter()
        .filter_map(|f| match &f.group {
            Some((g, FixtureSide::Functions)) if g.is_abelian() => Some(g),
            _ => None,
        })
        .collect();
    let parts: Vec<CheckReport> = groups
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut rng = stream_rng(config.seed, Suite::Oracle, i);
            let samples: Vec<Vec<Cyclotomic>> =
                (0..config.samples).map(|_| random_coords(&mut rng, g.order())).collect();
            dft_oracle_check(g, &samples)
        })
        .collect();
    let mut r = CheckReport::new();
    for p in parts {
        r.extend(p);
    }
    let tol = config.tolerance.max(1e-6);
    r.extend(padic_oracle_suite(&config.primes, config.padic_samples, config.seed, tol));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            samples: 5,
            padic_samples: 4,
            primes: vec![2, 3],
            padic_levels: vec![-1, 0, 1],
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn selector_parsing() {
        assert_eq!(Suite::parse_list("all").unwrap().len(), 8);
        assert_eq!(Suite::parse_list("padic,axioms").unwrap(), vec![Suite::Axioms, Suite::Padic]);
        assert!(Suite::parse_list("nope").is_err());
        assert_eq!("float".parse::<Backend>().unwrap(), Backend::Float);
    }

    #[test]
    fn every_suite_passes_on_standard_fixtures() {
        let fixtures = standard_fixtures();
        for s in Suite::ALL {
            let r = run_suite(s, &fixtures, &small());
            assert!(!r.records.is_empty(), "{s}");
            assert!(r.all_passed(), "{s}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn float_backend_passes() {
        let config = SuiteConfig {
            backend: Backend::Float,
            ..small()
        };
        let fixtures = standard_fixtures();
        let r = run_suites(&[Suite::Inversion, Suite::Convolution, Suite::Plancherel], &fixtures, &config);
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn reports_are_deterministic() {
        let fixtures = standard_fixtures();
        let a = run_suites(&[Suite::Inversion, Suite::Oracle], &fixtures, &small());
        let b = run_suites(&[Suite::Inversion, Suite::Oracle], &fixtures, &small());
        assert_eq!(a, b);
    }

    #[test]
    fn corrupted_fixture_fails_axioms() {
        let g = FiniteGroupTable::builtin("Z3").unwrap();
        let mut parts = function_algebra::<Cyclotomic>(&g).parts();
        parts.mult.push((0, 1, 2, Cyclotomic::one()));
        let bad = FiniteQuantumGroup::new(parts).unwrap();
        let r = run_suite(Suite::Axioms, &[Fixture::plain(bad)], &small());
        assert!(!r.all_passed());
        assert!(r.failures().all(|f| f.witness.is_some()));
    }
}
