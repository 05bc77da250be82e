//! Closed-form transfer kernel types of `G_a^n(z,w)`, by case lookup on the
//! parameters. No group arithmetic happens here.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::AbelianInvariants;
use crate::pc::{GroupElement, GroupParams, PcGroup};

/// Transfer kernel type label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLabel {
    #[serde(rename = "a.1*")]
    A1Star,
    #[serde(rename = "a.1")]
    A1,
    #[serde(rename = "a.2")]
    A2,
    #[serde(rename = "a.3")]
    A3,
    #[serde(rename = "a.3*")]
    A3Star,
    #[serde(rename = "A.1")]
    CapitalA1,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeLabel::A1Star => "a.1*",
            TypeLabel::A1 => "a.1",
            TypeLabel::A2 => "a.2",
            TypeLabel::A3 => "a.3",
            TypeLabel::A3Star => "a.3*",
            TypeLabel::CapitalA1 => "A.1",
        })
    }
}

/// Symbolic word naming a kernel generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Word {
    X,
    Y,
    XY,
    XY2,
    S(usize),
}

impl Word {
    pub fn evaluate(&self, g: &PcGroup) -> GroupElement {
        match *self {
            Word::X => g.x(),
            Word::Y => g.y(),
            Word::XY => g.multiply(&g.x(), &g.y()),
            Word::XY2 => g.product([&g.x(), &g.y(), &g.y()]),
            Word::S(k) => g.s(k),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::X => write!(f, "x"),
            Word::Y => write!(f, "y"),
            Word::XY => write!(f, "xy"),
            Word::XY2 => write!(f, "xy^2"),
            Word::S(k) => write!(f, "s{k}"),
        }
    }
}

/// Predicted deep kernel: generators modulo `H_i'` and the abelian
/// invariants of the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedKernel {
    pub generators: Vec<Word>,
    pub invariants: AbelianInvariants,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedPattern {
    pub type_label: TypeLabel,
    pub kappa_s: [u8; 4],
    pub kappa_d_orders: [u64; 4],
    pub deep_kernels: [PredictedKernel; 4],
}

impl PredictedPattern {
    pub fn kappa_d_structures(&self) -> [AbelianInvariants; 4] {
        self.deep_kernels.clone().map(|k| k.invariants)
    }
}

fn kernel(generators: Vec<Word>, factors: &[u64]) -> PredictedKernel {
    PredictedKernel {
        generators,
        invariants: AbelianInvariants::from_cyclic_factors(factors),
    }
}

/// Row of the kernel type table selected by the parameters.
pub fn type_label(p: &GroupParams) -> Result<(TypeLabel, [u8; 4])> {
    let row = match (p.a, p.z, p.w, p.n) {
        (0, 0, 0, _) => (TypeLabel::A1Star, [0, 0, 0, 0]),
        (1, 0, _, n) if n >= 5 => (TypeLabel::A1, [0, 0, 0, 0]),
        (0, 0, 1, 3) => (TypeLabel::CapitalA1, [1, 1, 1, 1]),
        (0, 0, 1, _) => (TypeLabel::A2, [1, 0, 0, 0]),
        (0, -1, 0, n) if n >= 4 && n % 2 == 0 => (TypeLabel::A3, [2, 0, 0, 0]),
        (0, 1, 0, 4) => (TypeLabel::A3Star, [2, 0, 0, 0]),
        (0, 1, 0, n) if n >= 5 => (TypeLabel::A3, [2, 0, 0, 0]),
        _ => {
            return Err(Error::Domain {
                a: p.a,
                n: p.n,
                w: p.w,
                z: p.z,
                reason: "no kernel type row covers these parameters".into(),
            })
        }
    };
    Ok(row)
}

/// Predicted Artin pattern (kernel part) for admissible parameters.
pub fn symbolic_pattern(p: &GroupParams) -> Result<PredictedPattern> {
    let (type_label, kappa_s) = type_label(p)?;
    let n = p.n;
    let deep_kernels = if n == 2 {
        [Word::Y, Word::X, Word::XY, Word::XY2].map(|w| kernel(vec![w], &[3]))
    } else {
        let t1 = match (n, p.a, p.z) {
            (3, _, _) => kernel(vec![Word::Y, Word::S(2)], &[3, 3]),
            (4, _, 1) => kernel(vec![Word::Y, Word::S(2), Word::S(3)], &[3, 3, 3]),
            (_, 1, _) => kernel(vec![Word::S(n - 2)], &[3]),
            _ => kernel(vec![Word::S(n - 2), Word::S(n - 1)], &[3, 3]),
        };
        let t2 = if p.w == 0 {
            kernel(vec![Word::X, Word::S(2)], &[3, 3])
        } else {
            kernel(vec![Word::S(2)], &[3])
        };
        let full = (p.a == 0 && p.w == 0 && p.z == 0) || (p.a == 1 && p.w == -1);
        let outer = |h: Word| {
            if full {
                kernel(vec![h, Word::S(2)], &[3, 3])
            } else {
                kernel(vec![Word::S(2)], &[3])
            }
        };
        [t1, t2, outer(Word::XY), outer(Word::XY2)]
    };
    let kappa_d_orders = deep_kernels.clone().map(|k| k.invariants.order());
    Ok(PredictedPattern {
        type_label,
        kappa_s,
        kappa_d_orders,
        deep_kernels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn predict(a: i8, n: usize, w: i8, z: i8) -> PredictedPattern {
        symbolic_pattern(&GroupParams { a, n, w, z }).unwrap()
    }

    #[test]
    fn table_rows() {
        let p = predict(0, 7, 0, 0);
        assert_eq!((p.type_label, p.kappa_d_orders), (TypeLabel::A1Star, [9, 9, 9, 9]));
        assert_eq!(predict(0, 2, 0, 0).kappa_d_orders, [3, 3, 3, 3]);
        assert_eq!(predict(1, 7, -1, 0).kappa_d_orders, [3, 3, 9, 9]);
        assert_eq!(predict(1, 6, 0, 0).kappa_d_orders, [3, 9, 3, 3]);
        assert_eq!(predict(1, 8, 1, 0).kappa_d_orders, [3, 3, 3, 3]);
        let p = predict(0, 4, 0, 1);
        assert_eq!((p.type_label, p.kappa_s), (TypeLabel::A3Star, [2, 0, 0, 0]));
        assert_eq!(p.kappa_d_orders, [27, 9, 3, 3]);
        assert_eq!(predict(0, 5, 0, 1).kappa_d_orders, [9, 9, 3, 3]);
        assert_eq!(predict(0, 6, 0, -1).kappa_d_orders, [9, 9, 3, 3]);
        assert_eq!(predict(0, 5, 1, 0).kappa_d_orders, [9, 3, 3, 3]);
        let p = predict(0, 3, 1, 0);
        assert_eq!((p.type_label, p.kappa_s), (TypeLabel::CapitalA1, [1, 1, 1, 1]));
        assert_eq!(p.kappa_d_orders, [9, 3, 3, 3]);
    }

    #[test]
    fn uncovered_parameters_fail() {
        let bad = GroupParams { a: 1, n: 4, w: 0, z: 0 };
        assert!(matches!(symbolic_pattern(&bad), Err(Error::Domain { .. })));
        let bad = GroupParams { a: 0, n: 5, w: 0, z: -1 };
        assert!(symbolic_pattern(&bad).is_err());
    }

    #[test]
    fn labels_display() {
        assert_eq!(TypeLabel::A3Star.to_string(), "a.3*");
        assert_eq!(serde_json::to_string(&TypeLabel::CapitalA1).unwrap(), "\"A.1\"");
    }
}
