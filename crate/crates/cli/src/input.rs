//! Reading inputs and mapping failures to exit codes.

use std::fmt;
use std::io::{Read, Write};

use clap::{Args, ValueEnum};
use qfourier::fixtures::{function_algebra, group_algebra, sweedler_fixture, FiniteGroupTable};
use qfourier::quantum::QuantumGroupFile;
use qfourier::{Cyclotomic, Error, FiniteQuantumGroup};
use serde_json::Value;

/// Exit 2 for unreadable input, 3 for well-formed input that makes no sense.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Semantic(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Semantic(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Semantic(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::DigitOutOfRange { .. } | Error::Format(_) => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Reads `path`, or standard input for `-` or no path.
pub fn read_text(path: Option<&str>) -> CliResult<(String, String)> {
    match path {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(format!("<stdin>: {e}")))?;
            Ok(("<stdin>".to_string(), s))
        }
        Some(p) => std::fs::read_to_string(p)
            .map(|s| (p.to_string(), s))
            .map_err(|e| CliError::Input(format!("{p}: {e}"))),
    }
}

pub fn parse_json<T: serde::de::DeserializeOwned>(name: &str, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| {
        CliError::Input(format!("{name}:{}:{}: {e}", e.line(), e.column()))
    })
}

pub fn from_value<T: serde::de::DeserializeOwned>(name: &str, v: Value) -> CliResult<T> {
    serde_json::from_value(v).map_err(|e| CliError::Input(format!("{name}: {e}")))
}

/// Writes one JSON line; a closed pipe ends the process quietly.
pub fn print_json<T: serde::Serialize>(value: &T) {
    let line = serde_json::to_string(value).expect("serializable");
    if let Err(e) = writeln!(std::io::stdout().lock(), "{line}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    FunctionAlgebra,
    GroupAlgebra,
}

/// Where a finite quantum group comes from.
#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// Builtin group (trivial, Z2, Z3, Z4, Z2xZ2, S3, Zn) or `sweedler`.
    #[arg(long)]
    pub builtin: Option<String>,
    #[arg(long, value_enum, default_value = "function-algebra")]
    pub side: SideArg,
    /// Quantum group file; also accepts the output of `dual`.
    #[arg(long)]
    pub quantum_group: Option<String>,
}

impl SourceArgs {
    pub fn is_set(&self) -> bool {
        self.builtin.is_some() || self.quantum_group.is_some()
    }

    pub fn load(&self) -> CliResult<FiniteQuantumGroup<Cyclotomic>> {
        if let Some(path) = &self.quantum_group {
            let (name, text) = read_text(Some(path))?;
            return load_quantum_group(&name, &text);
        }
        match &self.builtin {
            Some(b) => builtin(b, self.side),
            None => Err(CliError::Input("no quantum group given (use --builtin or --quantum-group)".into())),
        }
    }
}

pub fn builtin(name: &str, side: SideArg) -> CliResult<FiniteQuantumGroup<Cyclotomic>> {
    if name == "sweedler" {
        return Ok(sweedler_fixture());
    }
    let g = FiniteGroupTable::builtin(name)?;
    Ok(match side {
        SideArg::FunctionAlgebra => function_algebra(&g),
        SideArg::GroupAlgebra => group_algebra(&g),
    })
}

/// Recovers a builtin from an id such as `group-algebra:S3`.
pub fn builtin_for_owner(owner: &str) -> Option<FiniteQuantumGroup<Cyclotomic>> {
    if owner == "sweedler" {
        return Some(sweedler_fixture());
    }
    let (side, name) = owner.split_once(':')?;
    let side = match side {
        "function-algebra" => SideArg::FunctionAlgebra,
        "group-algebra" => SideArg::GroupAlgebra,
        _ => return None,
    };
    builtin(name, side).ok()
}

/// Parses a quantum group file, or the `dual` field of a `dual` output.
pub fn load_quantum_group(name: &str, text: &str) -> CliResult<FiniteQuantumGroup<Cyclotomic>> {
    let mut v: Value = parse_json(name, text)?;
    if let Some(inner) = v.get_mut("dual") {
        v = inner.take();
    }
    let file: QuantumGroupFile = from_value(name, v)?;
    Ok(file.into_quantum_group(name)?)
}
