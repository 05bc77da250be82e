//! Subgroups as induced pc-sequences plus an enumerated element list.

use std::collections::{HashSet, VecDeque};

use super::element::GroupElement;
use super::group::PcGroup;
use crate::error::{Error, Result};
use crate::invariants::AbelianInvariants;

/// A subgroup of a [`PcGroup`].
///
/// `pcgs` is an induced sequence: one element per occupied depth, leading
/// exponent 1, sorted by depth. Every element of the subgroup is uniquely
/// `t_1^a_1 ... t_k^a_k`, so the order is `3^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    generators: Vec<GroupElement>,
    pcgs: Vec<(usize, GroupElement)>,
    elements: Vec<GroupElement>,
    parent_order: u64,
}

impl Subgroup {
    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Induced pc-sequence elements, by increasing depth.
    pub fn pcgs(&self) -> impl Iterator<Item = &GroupElement> + '_ {
        self.pcgs.iter().map(|(_, t)| t)
    }

    /// Depths occupied by the induced sequence.
    pub fn depths(&self) -> impl Iterator<Item = usize> + '_ {
        self.pcgs.iter().map(|&(d, _)| d)
    }

    /// Sorted list of all elements.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn parent_order(&self) -> u64 {
        self.parent_order
    }

    pub fn index(&self) -> u64 {
        self.parent_order / self.order()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.pcgs().all(|t| other.contains(t))
    }

    pub fn is_trivial(&self) -> bool {
        self.pcgs.is_empty()
    }
}

impl PcGroup {
    /// Clears the exponents of `u` at the depths of `table`, from the top
    /// down. Stops at the first nonzero depth with no table entry and
    /// returns that depth.
    fn sift_table(
        &self,
        table: &[Option<GroupElement>],
        mut u: GroupElement,
    ) -> (GroupElement, Option<usize>) {
        for d in 0..self.pc_len() {
            let e = u.exponent(d);
            if e == 0 {
                continue;
            }
            match &table[d] {
                Some(t) => u = self.multiply(&u, &self.power(t, (3 - e) as i64)),
                None => return (u, Some(d)),
            }
        }
        (u, None)
    }

    /// Induced pc-sequence of the subgroup generated by `gens` and closed
    /// under conjugation by `normalizers`.
    fn induced_sequence(
        &self,
        gens: &[GroupElement],
        normalizers: &[GroupElement],
    ) -> Vec<(usize, GroupElement)> {
        let mut table: Vec<Option<GroupElement>> = vec![None; self.pc_len()];
        let mut queue: Vec<GroupElement> = gens.to_vec();
        while let Some(u) = queue.pop() {
            let (u, depth) = self.sift_table(&table, u);
            let Some(d) = depth else { continue };
            let u = if u.exponent(d) == 2 { self.multiply(&u, &u) } else { u };
            for t in table.iter().flatten() {
                queue.push(self.commutator(&u, t));
            }
            for g in normalizers {
                queue.push(self.commutator(&u, g));
            }
            queue.push(self.power(&u, 3));
            table[d] = Some(u);
        }
        table
            .into_iter()
            .enumerate()
            .filter_map(|(d, t)| t.map(|t| (d, t)))
            .collect()
    }

    fn subgroup_from_sequence(
        &self,
        generators: Vec<GroupElement>,
        pcgs: Vec<(usize, GroupElement)>,
    ) -> Subgroup {
        let mut elements = vec![self.identity()];
        for (_, t) in pcgs.iter().rev() {
            let t2 = self.multiply(t, t);
            let mut next = Vec::with_capacity(elements.len() * 3);
            for e in &elements {
                next.push(*e);
                next.push(self.multiply(t, e));
                next.push(self.multiply(&t2, e));
            }
            elements = next;
        }
        elements.sort_unstable();
        debug_assert!(elements.windows(2).all(|w| w[0] != w[1]));
        Subgroup {
            generators,
            pcgs,
            elements,
            parent_order: self.order(),
        }
    }

    /// Subgroup generated by `gens`, via an induced pc-sequence.
    pub fn subgroup(&self, gens: &[GroupElement]) -> Subgroup {
        let pcgs = self.induced_sequence(gens, &[]);
        self.subgroup_from_sequence(gens.to_vec(), pcgs)
    }

    /// Normal closure of `gens` in the subgroup generated by `within`
    /// (which must contain `gens`).
    pub fn normal_closure(&self, gens: &[GroupElement], within: &[GroupElement]) -> Subgroup {
        let pcgs = self.induced_sequence(gens, within);
        self.subgroup_from_sequence(gens.to_vec(), pcgs)
    }

    /// Smallest subgroup containing `gens`, by orbit closure: starting from
    /// the identity, right-multiply by generators until no new element
    /// appears.
    pub fn subgroup_closure(&self, gens: &[GroupElement]) -> Result<Subgroup> {
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(u) = queue.pop_front() {
            for g in gens {
                let v = self.multiply(&u, g);
                if seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        let mut elements: Vec<GroupElement> = seen.into_iter().collect();
        elements.sort_unstable();
        let pcgs = self.induced_sequence(gens, &[]);
        if 3usize.pow(pcgs.len() as u32) != elements.len() {
            return Err(Error::Consistency(format!(
                "orbit closure found {} elements but the induced sequence has length {}",
                elements.len(),
                pcgs.len()
            )));
        }
        Ok(Subgroup {
            generators: gens.to_vec(),
            pcgs,
            elements,
            parent_order: self.order(),
        })
    }

    /// The whole group as a subgroup.
    pub fn whole(&self) -> Subgroup {
        let gens: Vec<GroupElement> = (0..self.pc_len()).map(|i| self.generator(i)).collect();
        let pcgs = gens.iter().enumerate().map(|(d, g)| (d, *g)).collect();
        self.subgroup_from_sequence(gens, pcgs)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup_from_sequence(Vec::new(), Vec::new())
    }

    /// Canonical representative of the coset `u N`: the unique element of the
    /// coset whose exponents vanish at every depth of `N`'s induced sequence.
    /// Right multiplication by an element of depth `d` leaves exponents above
    /// `d` untouched, so clearing depths in increasing order is well defined.
    pub fn coset_rep(&self, n: &Subgroup, u: &GroupElement) -> GroupElement {
        let mut u = *u;
        for (d, t) in &n.pcgs {
            let e = u.exponent(*d);
            if e != 0 {
                u = self.multiply(&u, &self.power(t, (3 - e) as i64));
            }
        }
        u
    }

    pub fn is_normal_in(&self, n: &Subgroup, s: &Subgroup) -> bool {
        n.pcgs()
            .all(|t| s.pcgs().all(|g| n.contains(&self.conjugate(t, g))))
    }

    fn check_abelian_section(&self, s: &Subgroup, n: &Subgroup) -> Result<()> {
        if !n.is_subgroup_of(s) {
            return Err(Error::Contract("N is not contained in S".into()));
        }
        if !self.is_normal_in(n, s) {
            return Err(Error::Contract("N is not normal in S".into()));
        }
        let gens: Vec<&GroupElement> = s.pcgs().collect();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if !n.contains(&self.commutator(a, b)) {
                    return Err(Error::Contract("S/N is not abelian".into()));
                }
            }
        }
        Ok(())
    }

    /// Canonical representatives of the cosets of `n` in `s`, sorted.
    /// `n` must be normal in `s`.
    pub fn coset_reps(&self, s: &Subgroup, n: &Subgroup) -> Vec<GroupElement> {
        let start = self.coset_rep(n, &self.identity());
        let mut seen: HashSet<GroupElement> = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        let gens: Vec<GroupElement> = s.pcgs().copied().collect();
        while let Some(u) = queue.pop_front() {
            for g in &gens {
                let v = self.coset_rep(n, &self.multiply(&u, g));
                if seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        let mut reps: Vec<GroupElement> = seen.into_iter().collect();
        reps.sort_unstable();
        reps
    }

    /// Order of the coset `u N` in `G/N`.
    pub fn coset_order(&self, n: &Subgroup, u: &GroupElement) -> u64 {
        let mut order = 1;
        let mut cur = self.coset_rep(n, u);
        while !cur.is_identity() {
            cur = self.coset_rep(n, &self.power(&cur, 3));
            order *= 3;
        }
        order
    }

    /// Abelian invariants of the section `S/N`.
    pub fn abelian_quotient_invariants(&self, s: &Subgroup, n: &Subgroup) -> Result<AbelianInvariants> {
        self.check_abelian_section(s, n)?;
        let reps = self.coset_reps(s, n);
        Ok(AbelianInvariants::from_element_orders(
            reps.iter().map(|u| self.coset_order(n, u)),
        ))
    }

    /// Abelian invariants of an abelian subgroup.
    pub fn abelian_invariants(&self, s: &Subgroup) -> Result<AbelianInvariants> {
        self.abelian_quotient_invariants(s, &self.trivial_subgroup())
    }
}
