use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relational parameters selecting one group `G_a^n(z,w)` of the coclass-1 family.
///
/// `n` is the logarithmic order (so `|G| = 3^n`), `a` controls whether the
/// two-step centralizer is abelian, and `w`, `z` are the exponents of the
/// last lower central term in `x^3` and `y^3 s_2^3 s_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupParams {
    pub a: i8,
    pub n: usize,
    pub w: i8,
    pub z: i8,
}

impl GroupParams {
    /// Validates a tuple against the admissible set:
    ///
    /// * `n = 2`: `a = w = z = 0`
    /// * `n = 3`: `a = 0, z = 0, w in {0, 1}`
    /// * `n >= 4, a = 0`: `(z, w)` in `{(0,0), (0,1), (1,0)}`, plus `(-1,0)` for even `n`
    /// * `n >= 5, a = 1`: `z = 0`, any `w`
    pub fn new(a: i8, n: usize, w: i8, z: i8) -> Result<Self> {
        let fail = |reason: &str| Error::Domain {
            a,
            n,
            w,
            z,
            reason: reason.to_string(),
        };
        if !(0..=1).contains(&a) {
            return Err(fail("a must lie in {0,1}"));
        }
        if !(-1..=1).contains(&w) || !(-1..=1).contains(&z) {
            return Err(fail("w and z must lie in {-1,0,1}"));
        }
        if n < 2 {
            return Err(fail("n must be at least 2"));
        }
        match (a, n) {
            (0, 2) if w == 0 && z == 0 => {}
            (0, 2) => return Err(fail("row n=2 requires w=z=0 (abelian root)")),
            (0, 3) if z == 0 && (w == 0 || w == 1) => {}
            (0, 3) => return Err(fail("row n=3 requires z=0 and w in {0,1}")),
            (0, _) => match (z, w) {
                (0, 0) | (0, 1) | (1, 0) => {}
                (-1, 0) if n.is_multiple_of(2) => {}
                (-1, 0) => return Err(fail("row (z,w)=(-1,0) requires even n")),
                _ => {
                    return Err(fail(
                        "rows with a=0, n>=4 require (z,w) in {(0,0),(0,1),(1,0),(-1,0)}",
                    ))
                }
            },
            (1, n) if n < 5 => return Err(fail("rows with a=1 require n>=5")),
            (1, _) if z != 0 => return Err(fail("rows with a=1 require z=0")),
            _ => {}
        }
        Ok(Self { a, n, w, z })
    }

    /// All admissible tuples of logarithmic order `n`, in the fixed order
    /// `(z,w) = (0,0), (0,1), (1,0), (-1,0)` for `a = 0`, then
    /// `w = -1, 0, 1` for `a = 1`.
    pub fn admissible(n: usize) -> Vec<Self> {
        let candidates = [
            (0, 0, 0),
            (0, 1, 0),
            (0, 0, 1),
            (0, 0, -1),
            (1, -1, 0),
            (1, 0, 0),
            (1, 1, 0),
        ];
        candidates
            .iter()
            .filter_map(|&(a, w, z)| Self::new(a, n, w, z).ok())
            .collect()
    }

    /// All admissible tuples with `2 <= n <= n_max`, ordered by `n` first.
    pub fn admissible_up_to(n_max: usize) -> Vec<Self> {
        (2..=n_max).flat_map(Self::admissible).collect()
    }

    pub fn is_mainline(&self) -> bool {
        self.a == 0 && self.w == 0 && self.z == 0
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G_{}^{}({},{})", self.a, self.n, self.z, self.w)
    }
}
