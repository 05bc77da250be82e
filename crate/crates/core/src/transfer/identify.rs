use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pc::GroupParams;

/// How two deep kernel types are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComparisonMode {
    /// Positionwise, in the order `H_1 .. H_4`.
    Ordered,
    /// Up to permutation.
    #[default]
    Multiset,
}

impl ComparisonMode {
    pub fn equal(self, a: &[u64; 4], b: &[u64; 4]) -> bool {
        match self {
            ComparisonMode::Ordered => a == b,
            ComparisonMode::Multiset => {
                let (mut a, mut b) = (*a, *b);
                a.sort_unstable();
                b.sort_unstable();
                a == b
            }
        }
    }
}

/// The three deep kernel types of `G_1^n(0,w)` and their `w`.
pub const TOWER_PATTERNS: [([u64; 4], i8); 3] =
    [([3, 9, 3, 3], 0), ([3, 3, 9, 9], -1), ([3, 3, 3, 3], 1)];

/// Parameters `(a, n, w, z) = (1, 2(e+1), w, 0)` of the group whose deep
/// kernel type is `kappa_d`.
pub fn identify_tower_group(e: u32, kappa_d: &[u64; 4], mode: ComparisonMode) -> Result<GroupParams> {
    let fail = || Error::Identification {
        e,
        kappa_d: *kappa_d,
    };
    if e < 2 {
        return Err(fail());
    }
    let w = TOWER_PATTERNS
        .iter()
        .find(|(pattern, _)| mode.equal(pattern, kappa_d))
        .map(|&(_, w)| w)
        .ok_or_else(fail)?;
    GroupParams::new(1, 2 * (e as usize + 1), w, 0)
}
