use rayon::prelude::*;
use serde::Serialize;

use super::symbolic::{symbolic_pattern, PredictedPattern};
use super::tkt::{analyze, TransferAnalysis};
use crate::error::Result;
use crate::invariants::AbelianInvariants;
use crate::pc::{GroupElement, GroupParams, PcGroup};

/// Generic versus predicted kernel types for one group.
#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Entry {
    pub params: GroupParams,
    pub kappa_s: [u8; 4],
    pub kappa_d_orders: [u64; 4],
    pub kappa_d_structures: [AbelianInvariants; 4],
    pub predicted: PredictedPattern,
    /// Predicted generators together with `H_i'` span the computed kernel.
    pub generators_match: [bool; 4],
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Report {
    pub n_max: usize,
    pub entries: Vec<Theorem1Entry>,
    pub mismatches: Vec<String>,
}

impl Theorem1Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn generators_match(g: &PcGroup, analysis: &TransferAnalysis, predicted: &PredictedPattern) -> [bool; 4] {
    std::array::from_fn(|i| {
        let h = &analysis.maximal[i];
        let mut gens: Vec<GroupElement> = predicted.deep_kernels[i]
            .generators
            .iter()
            .map(|w| w.evaluate(g))
            .collect();
        gens.extend(g.derived_of(h).pcgs().copied());
        g.subgroup(&gens).elements() == analysis.deep_kernels[i].elements()
    })
}

fn check(p: GroupParams) -> Result<(Theorem1Entry, Vec<String>)> {
    let g = PcGroup::build(p)?;
    let analysis = analyze(&g)?;
    let predicted = symbolic_pattern(&p)?;
    let pattern = &analysis.pattern;
    let gens_ok = generators_match(&g, &analysis, &predicted);

    let mut problems = Vec::new();
    if pattern.kappa_s != predicted.kappa_s {
        problems.push(format!(
            "{p}: kappa_s {:?}, predicted {:?}",
            pattern.kappa_s, predicted.kappa_s
        ));
    }
    if pattern.kappa_d_orders != predicted.kappa_d_orders {
        problems.push(format!(
            "{p}: kappa_d {:?}, predicted {:?}",
            pattern.kappa_d_orders, predicted.kappa_d_orders
        ));
    }
    for (i, (got, want)) in pattern
        .kappa_d_structures
        .iter()
        .zip(predicted.kappa_d_structures().iter())
        .enumerate()
    {
        if got != want {
            problems.push(format!("{p}: ker T_{} is {got}, predicted {want}", i + 1));
        }
        if !gens_ok[i] {
            problems.push(format!(
                "{p}: ker T_{} is not generated by the predicted elements",
                i + 1
            ));
        }
    }
    let entry = Theorem1Entry {
        params: p,
        kappa_s: pattern.kappa_s,
        kappa_d_orders: pattern.kappa_d_orders,
        kappa_d_structures: pattern.kappa_d_structures.clone(),
        predicted,
        generators_match: gens_ok,
        matches: problems.is_empty(),
    };
    Ok((entry, problems))
}

/// Compares generic and predicted kernel types for every admissible tuple
/// with `n <= n_max`. Results are in parameter order.
pub fn verify_theorem1(n_max: usize) -> Result<Theorem1Report> {
    let results: Vec<(Theorem1Entry, Vec<String>)> = GroupParams::admissible_up_to(n_max)
        .into_par_iter()
        .map(check)
        .collect::<Result<_>>()?;
    let mut entries = Vec::with_capacity(results.len());
    let mut mismatches = Vec::new();
    for (entry, problems) in results {
        entries.push(entry);
        mismatches.extend(problems);
    }
    Ok(Theorem1Report {
        n_max,
        entries,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_abelian_row() {
        let r = verify_theorem1(2).unwrap();
        assert_eq!(r.entries.len(), 1);
        assert!(r.passed(), "{:?}", r.mismatches);
    }

    #[test]
    fn up_to_six() {
        let r = verify_theorem1(6).unwrap();
        assert_eq!(r.entries.len(), 1 + 2 + 4 + 6 + 7);
        assert!(r.passed(), "{:#?}", r.mismatches);
    }
}
