use std::time::Instant;

use clap::Args;
use qfourier::suites::{run_suite, standard_fixtures, Backend, Fixture, Suite, SuiteConfig};
use serde::Serialize;

use crate::input::{load_quantum_group, print_json, read_text, CliError, CliResult};

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Comma-separated suites: axioms, inversion, convolution, plancherel,
    /// types, group-like, padic, oracle, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, env = "QFOURIER_BACKEND", default_value = "exact")]
    backend: String,
    /// Comparison tolerance for the float backend and the Riemann-sum oracle.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Primes for the p-adic suites, comma-separated.
    #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
    prime: Vec<u64>,
    /// Random elements per fixture.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Random Schwartz functions per p-adic suite.
    #[arg(long, default_value_t = 50)]
    padic_samples: usize,
    /// Check this quantum group file instead of the standard fixtures.
    #[arg(long)]
    input: Option<String>,
    /// Record wall-clock time per suite (reports are then not reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Serialize)]
struct SummaryLine {
    summary: Summary,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    seed: u64,
    backend: Backend,
}

pub fn run(args: CheckArgs) -> CliResult<u8> {
    let suites = Suite::parse_list(&args.suite)?;
    let backend: Backend = args.backend.parse()?;
    if let Some(p) = args.prime.iter().find(|&&p| !is_prime(p)) {
        return Err(CliError::Input(format!("{p} is not prime")));
    }
    if !(args.tolerance > 0.0) {
        return Err(CliError::Input("--tolerance must be positive".into()));
    }
    let fixtures = match &args.input {
        Some(path) => {
            let (name, text) = read_text(Some(path))?;
            vec![Fixture::plain(load_quantum_group(&name, &text)?)]
        }
        None => standard_fixtures(),
    };
    let config = SuiteConfig {
        seed: args.seed,
        backend,
        tolerance: args.tolerance,
        samples: args.samples,
        padic_samples: args.padic_samples,
        primes: args.prime.clone(),
        ..SuiteConfig::default()
    };
    let (mut total, mut passed, mut failed, mut skipped) = (0, 0, 0, 0);
    for s in suites {
        let start = Instant::now();
        let mut report = run_suite(s, &fixtures, &config);
        if args.timings {
            report = report.timed(start);
        }
        let sum = report.summary();
        total += sum.total;
        passed += sum.passed;
        failed += sum.failed;
        skipped += sum.skipped;
        for r in &report.records {
            print_json(r);
        }
    }
    print_json(&SummaryLine {
        summary: Summary {
            total,
            passed,
            failed,
            skipped,
            seed: args.seed,
            backend,
        },
    });
    Ok(if failed == 0 { 0 } else { 1 })
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}
