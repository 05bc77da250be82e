//! Polycyclic 3-groups of coclass 1, their Artin transfers, and the
//! real quadratic fields whose 3-class field towers realize them.

pub mod error;
pub mod invariants;
pub mod pc;
pub mod quadfield;
pub mod transfer;
pub mod tree;

pub use error::{Error, Result};
pub use invariants::AbelianInvariants;
pub use pc::{GroupElement, GroupParams, PcGroup, Subgroup};
pub use quadfield::{FormClassGroup, QuadForm};
pub use transfer::{ArtinPattern, TransferMap};

/// Forms with 64-bit coefficients; enough for `d < 10^8`.
pub type Form = QuadForm<i64>;
/// Forms with 128-bit coefficients.
pub type WideForm = QuadForm<i128>;
pub type ClassGroup = FormClassGroup<i64>;
pub type WideClassGroup = FormClassGroup<i128>;
