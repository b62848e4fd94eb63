use clap::Args;
use qfourier::quantum::{build_dual, verify_axioms, QuantumGroupFile};
use qfourier::Cyclotomic;
use serde::Serialize;

use crate::input::{load_quantum_group, print_json, read_text, CliResult, SourceArgs};

#[derive(Args, Debug)]
pub struct DualArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Quantum group file (`-` for standard input).
    #[arg(long)]
    input: Option<String>,
}

#[derive(Serialize)]
struct DualOutput {
    dual: QuantumGroupFile<Cyclotomic>,
    /// `pairing[i][j] = ⟨a_i, ω_j⟩`.
    pairing: Vec<Vec<Cyclotomic>>,
}

pub fn run(args: DualArgs) -> CliResult<u8> {
    let a = if args.source.is_set() {
        args.source.load()?
    } else {
        let (name, text) = read_text(args.input.as_deref())?;
        load_quantum_group(&name, &text)?
    };
    let report = verify_axioms(&a);
    if !report.all_passed() {
        for r in report.failures() {
            print_json(r);
        }
        eprintln!("error: {} fails the quantum group axioms", a.id());
        return Ok(3);
    }
    let d = build_dual(&a)?;
    print_json(&DualOutput {
        dual: QuantumGroupFile::from(&d.dual),
        pairing: d.pairing,
    });
    Ok(0)
}
