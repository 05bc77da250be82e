use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::invariants::AbelianInvariants;
use crate::pc::{GroupElement, PcGroup, Subgroup};

/// The Artin transfer `S/S' -> T/T'` for a subgroup `T` of index 3 in `S`,
/// tabulated on canonical coset representatives.
#[derive(Debug, Clone)]
pub struct TransferMap {
    source: Subgroup,
    target: Subgroup,
    transversal: [GroupElement; 3],
    source_derived: Subgroup,
    target_derived: Subgroup,
    mapping: BTreeMap<GroupElement, GroupElement>,
}

impl TransferMap {
    pub fn source(&self) -> &Subgroup {
        &self.source
    }

    pub fn target(&self) -> &Subgroup {
        &self.target
    }

    pub fn transversal(&self) -> &[GroupElement; 3] {
        &self.transversal
    }

    pub fn source_derived(&self) -> &Subgroup {
        &self.source_derived
    }

    pub fn target_derived(&self) -> &Subgroup {
        &self.target_derived
    }

    /// Coset representative of `S'` in `S` to coset representative of `T'` in `T`.
    pub fn mapping(&self) -> &BTreeMap<GroupElement, GroupElement> {
        &self.mapping
    }

    /// Image of an arbitrary element of `S`.
    pub fn apply(&self, g: &PcGroup, u: &GroupElement) -> GroupElement {
        self.mapping[&g.coset_rep(&self.source_derived, u)]
    }

    /// Preimage in `S` of the kernel, i.e. the subgroup `K` with
    /// `ker = K/S'`.
    pub fn kernel(&self, g: &PcGroup) -> Subgroup {
        let mut gens: Vec<GroupElement> = self.source_derived.pcgs().copied().collect();
        gens.extend(
            self.mapping
                .iter()
                .filter(|(_, v)| v.is_identity())
                .map(|(u, _)| *u),
        );
        g.subgroup(&gens)
    }

    pub fn kernel_order(&self) -> u64 {
        self.mapping.values().filter(|v| v.is_identity()).count() as u64
    }

    pub fn kernel_invariants(&self, g: &PcGroup) -> Result<AbelianInvariants> {
        g.abelian_quotient_invariants(&self.kernel(g), &self.source_derived)
    }

    /// Checks `V(uv) = V(u) V(v)` for every pair of cosets of `S'`.
    pub fn check_homomorphism(&self, g: &PcGroup) -> bool {
        self.mapping.iter().all(|(u, vu)| {
            self.mapping.iter().all(|(v, vv)| {
                let lhs = self.apply(g, &g.multiply(u, v));
                lhs == g.coset_rep(&self.target_derived, &g.multiply(vu, vv))
            })
        })
    }
}

fn default_transversal(g: &PcGroup, s: &Subgroup, t: &Subgroup) -> [GroupElement; 3] {
    let r = *s
        .pcgs()
        .find(|u| !t.contains(u))
        .expect("proper subgroup misses some generator");
    [g.identity(), r, g.multiply(&r, &r)]
}

/// Transfer from `S` to `T` with the transversal `{1, r, r^2}`, `r` the
/// first pc-generator of `S` outside `T`.
pub fn artin_transfer(g: &PcGroup, s: &Subgroup, t: &Subgroup) -> Result<TransferMap> {
    check_index_three(s, t)?;
    artin_transfer_with(g, s, t, default_transversal(g, s, t))
}

fn check_index_three(s: &Subgroup, t: &Subgroup) -> Result<()> {
    if !t.is_subgroup_of(s) {
        return Err(Error::Contract("T is not contained in S".into()));
    }
    if s.order() != 3 * t.order() {
        return Err(Error::Contract(format!(
            "index (S:T) = {} but must be 3",
            s.order() / t.order()
        )));
    }
    Ok(())
}

/// Transfer with an explicit right transversal `r_0, r_1, r_2` of `T` in `S`:
/// `V(u) = prod_i r_i u r_sigma(i)^-1 mod T'`, where `T r_i u = T r_sigma(i)`.
pub fn artin_transfer_with(
    g: &PcGroup,
    s: &Subgroup,
    t: &Subgroup,
    transversal: [GroupElement; 3],
) -> Result<TransferMap> {
    check_index_three(s, t)?;
    let inv: Vec<GroupElement> = transversal.iter().map(|r| g.inverse(r)).collect();
    for (i, r) in transversal.iter().enumerate() {
        if !s.contains(r) {
            return Err(Error::Contract(format!("transversal element {r} is not in S")));
        }
        for q in &inv[..i] {
            if t.contains(&g.multiply(r, q)) {
                return Err(Error::Contract("transversal repeats a coset of T".into()));
            }
        }
    }
    let source_derived = g.derived_of(s);
    let target_derived = g.derived_of(t);
    let mut mapping = BTreeMap::new();
    for u in g.coset_reps(s, &source_derived) {
        let mut value = g.identity();
        for r in &transversal {
            let ru = g.multiply(r, &u);
            let factor = inv
                .iter()
                .map(|q| g.multiply(&ru, q))
                .find(|f| t.contains(f))
                .expect("transversal covers every coset");
            value = g.multiply(&value, &factor);
        }
        mapping.insert(u, g.coset_rep(&target_derived, &value));
    }
    Ok(TransferMap {
        source: s.clone(),
        target: t.clone(),
        transversal,
        source_derived,
        target_derived,
        mapping,
    })
}
