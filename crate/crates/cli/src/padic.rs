use clap::Subcommand;
use qfourier::padic::{Ball, PAdic, SchwartzFile, SchwartzFunction};

use crate::input::{parse_json, read_text, CliError, CliResult};

#[derive(Subcommand, Debug)]
pub enum PadicCommand {
    /// Canonical form and rational value of a literal.
    Eval {
        #[arg(long)]
        prime: u64,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// `|x|_p`.
    Norm {
        #[arg(long)]
        prime: u64,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// `χ(x, y) = exp(2πi xy)` as a root of unity.
    Char {
        #[arg(long)]
        prime: u64,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Haar integral with `μ(Z_p) = 1` of a ball or of a Schwartz file.
    Integrate {
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        ball: Option<String>,
        #[arg(long)]
        input: Option<String>,
    },
}

pub fn run(cmd: PadicCommand) -> CliResult<u8> {
    match cmd {
        PadicCommand::Eval { prime, x } => {
            let v = PAdic::parse(&x, prime)?;
            let val = match v.valuation() {
                Some(k) => k.to_string(),
                None => "inf".to_string(),
            };
            println!("{v} = {} (valuation {val})", v.to_rational());
        }
        PadicCommand::Norm { prime, x } => {
            println!("{}", PAdic::parse(&x, prime)?.norm());
        }
        PadicCommand::Char { prime, x, y } => {
            let x = PAdic::parse(&x, prime)?;
            let y = PAdic::parse(&y, prime)?;
            println!("{}", x.character(&y)?);
        }
        PadicCommand::Integrate { prime, ball, input } => {
            let f = match ball {
                Some(b) => {
                    let p = prime.ok_or_else(|| CliError::Input("--ball needs --prime".into()))?;
                    SchwartzFunction::indicator(&Ball::parse(&b, p)?)
                }
                None => {
                    let (name, text) = read_text(input.as_deref())?;
                    let file: SchwartzFile = parse_json(&name, &text)?;
                    SchwartzFunction::from_file(&file)?
                }
            };
            println!("{}", f.haar_integral());
        }
    }
    Ok(0)
}
