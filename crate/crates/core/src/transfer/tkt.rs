use serde::{Deserialize, Serialize};

use super::map::artin_transfer;
use crate::error::{Error, Result};
use crate::invariants::AbelianInvariants;
use crate::pc::{PcGroup, Subgroup};

/// One transfer kernel, as a subquotient of the source abelianization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub order: u64,
    pub invariants: AbelianInvariants,
    /// `0` if the kernel is `G/G'`, `j` if it is `H_j/G'`; shallow only.
    pub shallow_label: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShallowTkt {
    pub kappa: [u8; 4],
    pub kernels: [KernelReport; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeepTkt {
    pub orders: [u64; 4],
    pub structures: [AbelianInvariants; 4],
}

/// Transfer targets and kernels of the four maximal subgroups, in the
/// order `H_1 .. H_4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtinPattern {
    pub tau: [AbelianInvariants; 4],
    pub kappa_s: [u8; 4],
    pub kappa_d_orders: [u64; 4],
    pub kappa_d_structures: [AbelianInvariants; 4],
}

fn shallow_with(g: &PcGroup, maximal: &[Subgroup; 4]) -> Result<ShallowTkt> {
    let whole = g.whole();
    let mut kappa = [0u8; 4];
    let mut kernels = Vec::with_capacity(4);
    for (i, h) in maximal.iter().enumerate() {
        let v = artin_transfer(g, &whole, h)?;
        let k = v.kernel(g);
        let label = if k.elements() == whole.elements() {
            0
        } else {
            let j = maximal
                .iter()
                .position(|m| m.elements() == k.elements())
                .ok_or_else(|| {
                    Error::Consistency(format!(
                        "kernel of the shallow transfer to H_{} matches no candidate",
                        i + 1
                    ))
                })?;
            j as u8 + 1
        };
        kappa[i] = label;
        kernels.push(KernelReport {
            order: v.kernel_order(),
            invariants: v.kernel_invariants(g)?,
            shallow_label: Some(label),
        });
    }
    Ok(ShallowTkt {
        kappa,
        kernels: kernels.try_into().expect("four kernels"),
    })
}

fn deep_with(g: &PcGroup, maximal: &[Subgroup; 4]) -> Result<(DeepTkt, [Subgroup; 4])> {
    let derived = g.derived_subgroup();
    let mut orders = [0u64; 4];
    let mut structures = Vec::with_capacity(4);
    let mut kernels = Vec::with_capacity(4);
    for (i, h) in maximal.iter().enumerate() {
        let v = artin_transfer(g, h, &derived)?;
        orders[i] = v.kernel_order();
        structures.push(v.kernel_invariants(g)?);
        kernels.push(v.kernel(g));
    }
    Ok((
        DeepTkt {
            orders,
            structures: structures.try_into().expect("four kernels"),
        },
        kernels.try_into().expect("four kernels"),
    ))
}

/// Shallow transfer kernel type `kappa_s` with kernel reports.
pub fn shallow_tkt(g: &PcGroup) -> Result<ShallowTkt> {
    shallow_with(g, &g.maximal_subgroups())
}

/// Deep transfer kernel type: kernels of `T_(H_i,G')` for `i = 1..4`.
pub fn deep_tkt(g: &PcGroup) -> Result<DeepTkt> {
    Ok(deep_with(g, &g.maximal_subgroups())?.0)
}

/// Preimages in `H_i` of the four deep transfer kernels.
pub fn deep_kernels(g: &PcGroup) -> Result<[Subgroup; 4]> {
    Ok(deep_with(g, &g.maximal_subgroups())?.1)
}

/// `tau_i = H_i / H_i'`.
pub fn transfer_targets(g: &PcGroup) -> Result<[AbelianInvariants; 4]> {
    targets_with(g, &g.maximal_subgroups())
}

fn targets_with(g: &PcGroup, maximal: &[Subgroup; 4]) -> Result<[AbelianInvariants; 4]> {
    let tau: Vec<AbelianInvariants> = maximal
        .iter()
        .map(|h| g.abelian_quotient_invariants(h, &g.derived_of(h)))
        .collect::<Result<_>>()?;
    Ok(tau.try_into().expect("four targets"))
}

pub fn artin_pattern(g: &PcGroup) -> Result<ArtinPattern> {
    Ok(analyze(g)?.pattern)
}

/// Artin pattern together with the subgroups it was computed from.
#[derive(Debug, Clone)]
pub struct TransferAnalysis {
    pub pattern: ArtinPattern,
    pub maximal: [Subgroup; 4],
    /// Preimages in `H_i` of the deep transfer kernels.
    pub deep_kernels: [Subgroup; 4],
}

pub fn analyze(g: &PcGroup) -> Result<TransferAnalysis> {
    let maximal = g.maximal_subgroups();
    let shallow = shallow_with(g, &maximal)?;
    let (deep, deep_kernels) = deep_with(g, &maximal)?;
    Ok(TransferAnalysis {
        pattern: ArtinPattern {
            tau: targets_with(g, &maximal)?,
            kappa_s: shallow.kappa,
            kappa_d_orders: deep.orders,
            kappa_d_structures: deep.structures,
        },
        maximal,
        deep_kernels,
    })
}
