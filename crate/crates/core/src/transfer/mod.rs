//! Artin transfers to the maximal subgroups and to the derived subgroup,
//! their kernel types, and the closed-form predictions they are checked
//! against.

mod identify;
mod map;
mod symbolic;
mod tkt;
mod verify;

pub use identify::{identify_tower_group, ComparisonMode, TOWER_PATTERNS};
pub use map::{artin_transfer, artin_transfer_with, TransferMap};
pub use symbolic::{symbolic_pattern, type_label, PredictedKernel, PredictedPattern, TypeLabel, Word};
pub use tkt::{
    analyze, artin_pattern, deep_kernels, deep_tkt, shallow_tkt, transfer_targets, ArtinPattern,
    DeepTkt, KernelReport, ShallowTkt, TransferAnalysis,
};
pub use verify::{verify_theorem1, Theorem1Entry, Theorem1Report};
