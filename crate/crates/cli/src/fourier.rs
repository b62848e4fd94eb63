use clap::{Args, ValueEnum};
use qfourier::fixtures::laurent::{pair_fourier, pair_inverse_fourier, SparseElement};
use qfourier::padic::{padic_fourier, padic_inverse_fourier, Ball, SchwartzFile, SchwartzFunction};
use qfourier::quantum::{ElementFile, VectorKind};
use qfourier::{Cyclotomic, FiniteQuantumGroup};
use serde_json::Value;

use crate::input::{builtin_for_owner, from_value, parse_json, print_json, read_text, CliError, CliResult, SourceArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pair {
    Laurent,
}

#[derive(Args, Debug)]
pub struct FourierArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Coordinates such as `[1, 0]`, or a Laurent element such as `e_3`.
    #[arg(long, allow_hyphen_values = true)]
    element: Option<String>,
    /// Apply the inverse transform.
    #[arg(long)]
    inverse: bool,
    /// Transform a Schwartz function on Q_p.
    #[arg(long)]
    padic: bool,
    #[arg(long)]
    prime: Option<u64>,
    /// Ball such as `5^1*Zp` or `1 + 3^2*Zp`.
    #[arg(long, allow_hyphen_values = true)]
    ball: Option<String>,
    /// Use the infinite pair ℂℤ / K(ℤ).
    #[arg(long, value_enum)]
    pair: Option<Pair>,
    /// Element, functional or Schwartz file (`-` for standard input). Read
    /// from standard input when no other input is given.
    #[arg(long)]
    input: Option<String>,
}

pub fn run(args: FourierArgs) -> CliResult<u8> {
    if args.pair.is_some() {
        return laurent(&args);
    }
    if args.padic || args.ball.is_some() {
        if let Some(ball) = &args.ball {
            let p = args
                .prime
                .ok_or_else(|| CliError::Input("--ball needs --prime".into()))?;
            let f = SchwartzFunction::indicator(&Ball::parse(ball, p)?);
            return schwartz(&f, args.inverse);
        }
    }
    if let (Some(text), true) = (&args.element, args.source.is_set()) {
        let a = args.source.load()?;
        let coords: Vec<Cyclotomic> = parse_json("--element", text)?;
        return finite(&a, coords, if args.inverse { VectorKind::Functional } else { VectorKind::Element });
    }
    if args.element.is_some() {
        return Err(CliError::Input("--element needs --builtin, --quantum-group or --pair".into()));
    }

    let (name, text) = read_text(args.input.as_deref())?;
    let v: Value = parse_json(&name, &text)?;
    if v.get("p").is_some() {
        let file: SchwartzFile = from_value(&name, v)?;
        if let Some(p) = args.prime {
            if p != file.p {
                return Err(CliError::Semantic(format!("--prime {p} but the file is over Q_{}", file.p)));
            }
        }
        return schwartz(&SchwartzFunction::from_file(&file)?, args.inverse);
    }
    let file: ElementFile = from_value(&name, v)?;
    let a = if args.source.is_set() {
        args.source.load()?
    } else {
        builtin_for_owner(&file.owner).ok_or_else(|| {
            CliError::Semantic(format!("unknown quantum group {:?}; pass --quantum-group", file.owner))
        })?
    };
    if file.owner != a.id() {
        return Err(qfourier::Error::OwnerMismatch {
            left: a.id().to_string(),
            right: file.owner,
        }
        .into());
    }
    let expected = if args.inverse { VectorKind::Functional } else { VectorKind::Element };
    if file.kind != expected {
        return Err(CliError::Semantic(format!(
            "{} expects a {expected:?}, the input is a {:?}",
            if args.inverse { "the inverse transform" } else { "the transform" },
            file.kind
        )));
    }
    finite(&a, file.coords, expected)
}

fn finite(a: &FiniteQuantumGroup<Cyclotomic>, coords: Vec<Cyclotomic>, kind: VectorKind) -> CliResult<u8> {
    match kind {
        VectorKind::Element => {
            let w = a.fourier(&a.element(coords)?)?;
            print_json(&ElementFile::from_functional(&w));
        }
        VectorKind::Functional => {
            let x = a.inverse_fourier(&a.functional(coords)?)?;
            print_json(&ElementFile::from_element(&x));
        }
    }
    Ok(0)
}

fn schwartz(f: &SchwartzFunction, inverse: bool) -> CliResult<u8> {
    let g = if inverse { padic_inverse_fourier(f)? } else { padic_fourier(f)? };
    print_json(&g.to_file());
    Ok(0)
}

fn laurent(args: &FourierArgs) -> CliResult<u8> {
    let text = match &args.element {
        Some(t) => t.clone(),
        None => read_text(args.input.as_deref())?.1,
    };
    let x: SparseElement<Cyclotomic> = SparseElement::parse(text.trim())?;
    let y = if args.inverse { pair_inverse_fourier(&x) } else { pair_fourier(&x) };
    println!("{y}");
    Ok(0)
}
