use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Upper limit on the length of a pc-generator sequence.
pub const MAX_PC_LEN: usize = 16;

/// Normal form `x^e0 y^e1 s_2^e2 ... s_(n-1)^e(n-1)` of a group element,
/// stored as exponents in `{0,1,2}` in pc-generator order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    exps: [u8; MAX_PC_LEN],
    len: u8,
}

impl GroupElement {
    pub fn identity(len: usize) -> Self {
        assert!(len <= MAX_PC_LEN, "pc length {len} exceeds {MAX_PC_LEN}");
        Self {
            exps: [0; MAX_PC_LEN],
            len: len as u8,
        }
    }

    /// Builds an element from an exponent vector; entries are reduced mod 3.
    pub fn from_exponents(exps: &[u8]) -> Self {
        let mut g = Self::identity(exps.len());
        for (slot, &e) in g.exps.iter_mut().zip(exps) {
            *slot = e % 3;
        }
        g
    }

    pub(crate) fn generator(len: usize, i: usize) -> Self {
        let mut g = Self::identity(len);
        g.exps[i] = 1;
        g
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.len as usize]
    }

    pub(crate) fn raw(&self) -> &[u8; MAX_PC_LEN] {
        &self.exps
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [u8; MAX_PC_LEN] {
        &mut self.exps
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Index of the first nonzero exponent, `None` for the identity.
    pub fn depth(&self) -> Option<usize> {
        self.exponents().iter().position(|&e| e != 0)
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i]
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

impl fmt::Display for GroupElement {
    /// Word notation, e.g. `x*y^2*s3`; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = match i {
                0 => "x".to_string(),
                1 => "y".to_string(),
                k => format!("s{k}"),
            };
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.exponents().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<u8>::deserialize(deserializer)?;
        if v.len() > MAX_PC_LEN {
            return Err(serde::de::Error::custom("exponent vector too long"));
        }
        if v.iter().any(|&e| e > 2) {
            return Err(serde::de::Error::custom("exponents must lie in {0,1,2}"));
        }
        Ok(Self::from_exponents(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_display() {
        assert_eq!(GroupElement::identity(4).to_string(), "1");
        assert_eq!(GroupElement::from_exponents(&[1, 2, 0, 1]).to_string(), "x*y^2*s3");
    }

    #[test]
    fn depth_and_reduction() {
        let g = GroupElement::from_exponents(&[0, 0, 5, 1]);
        assert_eq!(g.exponents(), &[0, 0, 2, 1]);
        assert_eq!(g.depth(), Some(2));
        assert_eq!(GroupElement::identity(3).depth(), None);
    }

    #[test]
    fn serde_round_trip() {
        let g = GroupElement::from_exponents(&[1, 0, 2]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, "[1,0,2]");
        let back: GroupElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<GroupElement>("[3]").is_err());
    }
}
