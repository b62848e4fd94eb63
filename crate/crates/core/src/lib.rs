pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod oracle;
pub mod padic;
pub mod quantum;
pub mod report;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};
pub use quantum::{DualResult, Element, FiniteQuantumGroup, Functional, QuantumGroupParts};
pub use report::{CheckRecord, CheckReport, Status};
pub use scalar::{ApproxComplex, Cyclotomic, RootOfUnity, Scalar};
