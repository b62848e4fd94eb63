//! Harmonic analysis on the p-adic numbers: finite expansions, balls,
//! locally constant functions, the Haar integral and the Fourier transform.

mod fourier;
mod number;
mod schwartz;
mod suite;

pub use fourier::{
    oracle_distance, padic_fourier, padic_inverse_fourier, riemann_fourier_value, transform_level,
    HaarMeasure,
};
pub use number::PAdic;
pub use schwartz::{Ball, CellEntry, SchwartzFile, SchwartzFunction};
pub use suite::{
    coproduct_witness, padic_group_like_suite, padic_identity_suite, padic_oracle_suite,
    random_schwartz,
};
