//! The coclass-1 tree with root `C3 x C3`: vertices `G_a^n(z,w)`, edges to
//! the last lower central quotient, SmallGroups identifiers and minimal
//! discriminants of realizing real quadratic fields.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::pc::{GroupParams, PcGroup};
use crate::transfer::{artin_pattern, symbolic_pattern, TypeLabel};

/// SmallGroups identifier `<order, index>`.
///
/// `provisional` marks identifiers assigned by position in the tree diagram
/// rather than by an explicit statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SmallGroupId {
    pub order: u64,
    pub index: u32,
    pub provisional: bool,
}

impl std::fmt::Display for SmallGroupId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<{},{}>", self.order, self.index)
    }
}

// (a, n, z, w, index, provisional)
const LABELS: &[(i8, usize, i8, i8, u32, bool)] = &[
    (0, 2, 0, 0, 2, false),
    (0, 3, 0, 0, 3, false),
    (0, 3, 0, 1, 4, false),
    (0, 4, 0, 0, 9, true),
    (0, 4, 0, 1, 10, true),
    (0, 4, 1, 0, 7, false),
    (0, 4, -1, 0, 8, true),
    (0, 5, 0, 0, 26, false),
    (0, 5, 0, 1, 27, false),
    (0, 5, 1, 0, 25, true),
    (1, 5, 0, -1, 28, true),
    (1, 5, 0, 0, 30, true),
    (1, 5, 0, 1, 29, true),
    (0, 6, 0, 0, 95, true),
    (0, 6, 0, 1, 96, true),
    (0, 6, 1, 0, 97, true),
    (0, 6, -1, 0, 98, true),
    (1, 6, 0, -1, 100, false),
    (1, 6, 0, 0, 99, false),
    (1, 6, 0, 1, 101, false),
    (0, 7, 0, 0, 386, true),
    (0, 7, 0, 1, 387, true),
    (0, 7, 1, 0, 388, true),
    (1, 7, 0, -1, 390, true),
    (1, 7, 0, 0, 389, true),
    (1, 7, 0, 1, 391, true),
    (0, 8, 0, 0, 2221, true),
    (0, 8, 0, 1, 2222, true),
    (0, 8, 1, 0, 2223, true),
    (0, 8, -1, 0, 2224, true),
    (1, 8, 0, -1, 2226, false),
    (1, 8, 0, 0, 2225, false),
    (1, 8, 0, 1, 2227, false),
];

// (a, n, z, w, minimal discriminant); both signs of z share one entry for
// the a.3 vertices of order 3^6 and above.
const MINIMAL_DISCRIMINANTS: &[(i8, usize, i8, i8, u64)] = &[
    (0, 4, -1, 0, 32_009),
    (0, 4, 1, 0, 142_097),
    (0, 4, 0, 1, 72_329),
    (0, 6, 1, 0, 494_236),
    (0, 6, -1, 0, 494_236),
    (0, 6, 0, 1, 790_085),
    (1, 6, 0, -1, 152_949),
    (1, 6, 0, 0, 62_501),
    (1, 6, 0, 1, 252_977),
    (0, 8, 1, 0, 10_200_108),
    (0, 8, -1, 0, 10_200_108),
    (0, 8, 0, 1, 14_458_876),
    (1, 8, 0, -1, 27_780_297),
    (1, 8, 0, 0, 10_399_596),
    (1, 8, 0, 1, 2_905_160),
    (0, 10, 1, 0, 208_540_653),
    (0, 10, -1, 0, 208_540_653),
    (0, 10, 0, 1, 37_304_664),
    (1, 10, 0, -1, 62_565_429),
    (1, 10, 0, 0, 63_407_037),
    (1, 10, 0, 1, 40_980_808),
];

fn key(p: &GroupParams) -> (i8, usize, i8, i8) {
    (p.a, p.n, p.z, p.w)
}

pub fn smallgroups_label(p: &GroupParams) -> Option<SmallGroupId> {
    LABELS
        .iter()
        .find(|&&(a, n, z, w, _, _)| (a, n, z, w) == key(p))
        .map(|&(_, n, _, _, index, provisional)| SmallGroupId {
            order: 3u64.pow(n as u32),
            index,
            provisional,
        })
}

pub fn minimal_discriminant(p: &GroupParams) -> Option<u64> {
    MINIMAL_DISCRIMINANTS
        .iter()
        .find(|&&(a, n, z, w, _)| (a, n, z, w) == key(p))
        .map(|&(.., d)| d)
}

/// Parameters of the last lower central quotient `G/gamma_(n-1)(G)`.
pub fn parent(p: &GroupParams) -> Result<GroupParams> {
    if p.n < 3 {
        return Err(Error::Domain {
            a: p.a,
            n: p.n,
            w: p.w,
            z: p.z,
            reason: "the root has no parent".into(),
        });
    }
    GroupParams::new(0, p.n - 1, 0, 0)
}

/// Builds `G/<s_(n-1)>` by truncating the presentation and compares its
/// Artin pattern with that of the claimed parent.
pub fn check_parent(p: &GroupParams) -> Result<bool> {
    let q = PcGroup::build(*p)?.quotient_by_last()?;
    let claimed = PcGroup::build(parent(p)?)?;
    Ok(artin_pattern(&q)? == artin_pattern(&claimed)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct TreeVertex {
    pub params: GroupParams,
    pub order_log: usize,
    pub type_label: TypeLabel,
    pub kappa_d: [u64; 4],
    pub smallgroups_id: Option<SmallGroupId>,
    pub minimal_discriminant: Option<u64>,
    pub mainline: bool,
}

impl TreeVertex {
    fn new(params: GroupParams) -> Result<Self> {
        let predicted = symbolic_pattern(&params)?;
        Ok(Self {
            params,
            order_log: params.n,
            type_label: predicted.type_label,
            kappa_d: predicted.kappa_d_orders,
            smallgroups_id: smallgroups_label(&params),
            minimal_discriminant: minimal_discriminant(&params),
            mainline: params.is_mainline(),
        })
    }

    fn node_id(&self) -> String {
        let p = &self.params;
        format!("a{}_n{}_z{}_w{}", p.a, p.n, p.z, p.w).replace('-', "m")
    }

    fn kappa_d_string(&self) -> String {
        let k = self.kappa_d;
        format!("({},{},{},{})", k[0], k[1], k[2], k[3])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoclassTree {
    pub n_max: usize,
    pub vertices: Vec<TreeVertex>,
    /// `(child, parent)` pairs.
    pub edges: Vec<(GroupParams, GroupParams)>,
}

pub fn build_tree(n_max: usize) -> Result<CoclassTree> {
    if n_max < 2 {
        return Err(Error::Contract("n_max must be at least 2".into()));
    }
    let vertices = GroupParams::admissible_up_to(n_max)
        .into_iter()
        .map(TreeVertex::new)
        .collect::<Result<Vec<_>>>()?;
    let edges = vertices
        .iter()
        .filter(|v| v.order_log >= 3)
        .map(|v| Ok((v.params, parent(&v.params)?)))
        .collect::<Result<_>>()?;
    Ok(CoclassTree {
        n_max,
        vertices,
        edges,
    })
}

impl CoclassTree {
    pub fn root(&self) -> &TreeVertex {
        &self.vertices[0]
    }

    pub fn level(&self, n: usize) -> impl Iterator<Item = &TreeVertex> + '_ {
        self.vertices.iter().filter(move |v| v.order_log == n)
    }

    pub fn vertex(&self, p: &GroupParams) -> Option<&TreeVertex> {
        self.vertices.iter().find(|v| v.params == *p)
    }

    pub fn children(&self, p: &GroupParams) -> impl Iterator<Item = &GroupParams> + '_ {
        let p = *p;
        self.edges
            .iter()
            .filter(move |(_, parent)| *parent == p)
            .map(|(child, _)| child)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph coclass_tree {\n  rankdir=TB;\n");
        for v in &self.vertices {
            let mut label = format!("{}\\n{}\\n{}", v.params, v.type_label, v.kappa_d_string());
            if let Some(id) = v.smallgroups_id {
                let _ = write!(label, "\\n{id}{}", if id.provisional { "?" } else { "" });
            }
            if let Some(d) = v.minimal_discriminant {
                let _ = write!(label, "\\nMD {d}");
            }
            let shape = if v.order_log == 2 { "box" } else { "ellipse" };
            let _ = writeln!(out, "  {} [label=\"{}\", shape={}];", v.node_id(), label, shape);
        }
        for (child, parent) in &self.edges {
            let c = self.vertex(child).expect("edge endpoints are vertices");
            let p = self.vertex(parent).expect("edge endpoints are vertices");
            let _ = writeln!(out, "  {} -> {};", c.node_id(), p.node_id());
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .map(|v| {
                json!({
                    "params": {"a": v.params.a, "n": v.params.n, "w": v.params.w, "z": v.params.z},
                    "name": v.params.to_string(),
                    "type": v.type_label.to_string(),
                    "kappa_d": v.kappa_d,
                    "smallgroups_id": v.smallgroups_id,
                    "minimal_discriminant": v.minimal_discriminant,
                    "mainline": v.mainline,
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|(c, p)| json!({"child": c.to_string(), "parent": p.to_string()}))
            .collect();
        json!({"n_max": self.n_max, "vertices": vertices, "edges": edges})
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: i8, n: usize, w: i8, z: i8) -> GroupParams {
        GroupParams::new(a, n, w, z).unwrap()
    }

    #[test]
    fn labels() {
        let id = smallgroups_label(&params(1, 8, -1, 0)).unwrap();
        assert_eq!((id.order, id.index, id.provisional), (6561, 2226, false));
        assert_eq!(smallgroups_label(&params(0, 2, 0, 0)).unwrap().index, 2);
        assert!(smallgroups_label(&params(0, 9, 1, 0)).is_none());
        for p in GroupParams::admissible_up_to(8) {
            assert!(smallgroups_label(&p).is_some(), "{p}");
        }
    }

    #[test]
    fn parents() {
        assert_eq!(parent(&params(1, 6, 0, 0)).unwrap(), params(0, 5, 0, 0));
        assert!(parent(&params(0, 2, 0, 0)).is_err());
        assert!(check_parent(&params(1, 6, 0, 0)).unwrap());
        assert!(check_parent(&params(0, 3, 1, 0)).unwrap());
    }

    #[test]
    fn shape() {
        let t = build_tree(10).unwrap();
        assert!(t.root().mainline);
        for n in 5..=10 {
            assert_eq!(t.level(n).count(), if n % 2 == 0 { 7 } else { 6 });
        }
        for v in t.vertices.iter().filter(|v| !v.mainline) {
            assert_eq!(t.children(&v.params).count(), 0, "{}", v.params);
        }
        let syl = t.vertex(&params(0, 4, 0, 1)).unwrap();
        assert_eq!(syl.type_label, TypeLabel::A3Star);
        let mds: Vec<u64> = t.level(6).filter_map(|v| v.minimal_discriminant).collect();
        assert!(mds.contains(&62_501) && mds.contains(&152_949) && mds.contains(&252_977));
    }

    #[test]
    fn dot_is_stable() {
        let t = build_tree(4).unwrap();
        let dot = t.to_dot();
        assert_eq!(dot, build_tree(4).unwrap().to_dot());
        assert!(dot.contains("a0_n4_zm1_w0"));
        assert!(dot.contains("G_0^4(1,0)\\na.3*\\n(27,9,3,3)"));
        assert_eq!(dot.matches(" -> ").count(), 2 + 4);
    }
}
