//! Concrete quantum groups: functions on and group algebras of finite
//! groups, the Sweedler algebra, and the pair `(ℂℤ, K(ℤ))`.

mod groups;
pub mod laurent;
mod sweedler;

pub use groups::{function_algebra, group_algebra, FiniteGroupTable, GroupTableFile, BUILTIN_GROUPS};
pub use laurent::{
    laurent_type_certificates, laurent_types, pair_fourier, pair_inverse_fourier, pairing, Side,
    SparseElement,
};
pub use sweedler::sweedler_fixture;
