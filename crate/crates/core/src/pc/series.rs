//! Structural subgroups: derived subgroup, lower central series, centre,
//! two-step centralizer and the four maximal subgroups.

use super::element::GroupElement;
use super::group::PcGroup;
use super::subgroup::Subgroup;
use crate::error::Result;

impl PcGroup {
    fn pc_generators(&self) -> Vec<GroupElement> {
        (0..self.pc_len()).map(|i| self.generator(i)).collect()
    }

    /// `G' = [G, G]`.
    pub fn derived_subgroup(&self) -> Subgroup {
        self.derived_of(&self.whole())
    }

    /// `S' = [S, S]` for a subgroup `S`.
    pub fn derived_of(&self, s: &Subgroup) -> Subgroup {
        let gens: Vec<GroupElement> = s.pcgs().copied().collect();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        self.normal_closure(&comms, &gens)
    }

    /// `[N, G]` for a normal subgroup `N`.
    pub fn commutator_with_group(&self, n: &Subgroup) -> Subgroup {
        let gens = self.pc_generators();
        let mut comms = Vec::new();
        for t in n.pcgs() {
            for g in &gens {
                comms.push(self.commutator(t, g));
            }
        }
        self.normal_closure(&comms, &gens)
    }

    /// `gamma_1 = G, gamma_(i+1) = [gamma_i, G]`, ending with the first
    /// trivial term. The list has length `cl(G) + 1`.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        while !series.last().is_some_and(Subgroup::is_trivial) {
            let next = self.commutator_with_group(series.last().unwrap());
            series.push(next);
        }
        series
    }

    /// `gamma_i(G)` with 1-based index; trivial past the end of the series.
    pub fn gamma(&self, series: &[Subgroup], i: usize) -> Subgroup {
        series
            .get(i - 1)
            .cloned()
            .unwrap_or_else(|| self.trivial_subgroup())
    }

    pub fn nilpotency_class(&self) -> usize {
        self.lower_central_series().len() - 1
    }

    pub fn coclass(&self) -> usize {
        self.pc_len() - self.nilpotency_class()
    }

    /// `Z(G)` by testing every element against the pc-generators.
    pub fn center(&self) -> Result<Subgroup> {
        let gens = self.pc_generators();
        let central: Vec<GroupElement> = self
            .enumerate()?
            .into_iter()
            .filter(|z| gens.iter().all(|g| self.commutator(z, g).is_identity()))
            .collect();
        Ok(self.subgroup(&central))
    }

    /// `chi_2(G) = { g in G : [g,h] in gamma_4(G) for all h in G' }`.
    ///
    /// The condition only depends on the coset `gG'` (G' is abelian and
    /// `gamma_4` is normal), so it is tested on one representative per coset
    /// of `G'` against every element of `G'`.
    pub fn two_step_centralizer(&self) -> Subgroup {
        let series = self.lower_central_series();
        let derived = self.gamma(&series, 2);
        let gamma4 = self.gamma(&series, 4);
        let mut gens: Vec<GroupElement> = derived.pcgs().copied().collect();
        for r in self.coset_reps(&self.whole(), &derived) {
            let ok = derived
                .elements()
                .iter()
                .all(|h| gamma4.contains(&self.commutator(&r, h)));
            if ok {
                gens.push(r);
            }
        }
        self.subgroup(&gens)
    }

    /// The maximal subgroups in the fixed order
    /// `H_1 = <y,G'>, H_2 = <x,G'>, H_3 = <xy,G'>, H_4 = <xy^2,G'>`.
    pub fn maximal_subgroups(&self) -> [Subgroup; 4] {
        let derived = self.derived_subgroup();
        let (x, y) = (self.x(), self.y());
        let xy = self.multiply(&x, &y);
        let xy2 = self.multiply(&xy, &y);
        [y, x, xy, xy2].map(|h| {
            let mut gens = vec![h];
            gens.extend(derived.pcgs().copied());
            self.subgroup(&gens)
        })
    }

    /// The element `h_i` with `H_i = <h_i, G'>`: `y, x, xy, xy^2`.
    pub fn maximal_subgroup_generator(&self, i: usize) -> GroupElement {
        let (x, y) = (self.x(), self.y());
        match i {
            0 => y,
            1 => x,
            2 => self.multiply(&x, &y),
            3 => self.multiply(&self.multiply(&x, &y), &y),
            _ => panic!("maximal subgroup index {i} out of range 0..4"),
        }
    }

    pub fn has_abelian_maximal_subgroup(&self) -> bool {
        self.maximal_subgroups()
            .iter()
            .any(|h| self.derived_of(h).is_trivial())
    }
}
