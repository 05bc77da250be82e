//! Polycyclic presentations of the 3-groups `G_a^n(z,w)` and the subgroup
//! machinery built on top of them.

mod element;
mod group;
mod lemma;
mod params;
mod series;
mod subgroup;

pub use element::{GroupElement, MAX_PC_LEN};
pub use group::{PcGroup, DEFAULT_ENUM_BOUND};
pub use lemma::{verify_lemma1, LemmaCheck, RelationCheck};
pub use params::GroupParams;
pub use subgroup::Subgroup;
