//! Checks shared by the property suite and the acceptance runner.

#![allow(dead_code)]

use pctkt::pc::{GroupParams, PcGroup};
use pctkt::quadfield::{is_fundamental, FormClassGroup};
use pctkt::transfer::{artin_pattern, artin_transfer, artin_transfer_with};
use pctkt::tree::check_parent;
use pctkt::Subgroup;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type Check = Result<(), String>;

pub fn groups(n_lo: usize, n_hi: usize) -> Vec<(GroupParams, PcGroup)> {
    (n_lo..=n_hi)
        .flat_map(GroupParams::admissible)
        .map(|p| (p, PcGroup::build(p).expect("admissible")))
        .collect()
}

/// The eight index-3 pairs `(S, T)`: `(G, H_i)` and `(H_i, G')`.
pub fn transfer_pairs(g: &PcGroup) -> Vec<(Subgroup, Subgroup)> {
    let whole = g.whole();
    let derived = g.derived_subgroup();
    let maximal = g.maximal_subgroups();
    let mut pairs: Vec<_> = maximal.iter().map(|h| (whole.clone(), h.clone())).collect();
    pairs.extend(maximal.iter().map(|h| (h.clone(), derived.clone())));
    pairs
}

/// Random transversals `h_i r^i`, `h_i in T`, give the same map as `{1, r, r^2}`.
pub fn transversal_independence(n_max: usize, trials: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    for (p, g) in groups(2, n_max) {
        for (i, (s, t)) in transfer_pairs(&g).into_iter().enumerate() {
            let reference = artin_transfer(&g, &s, &t).map_err(|e| format!("{p}: {e}"))?;
            let r = reference.transversal()[1];
            let members = t.elements();
            for _ in 0..trials {
                let mut transversal = [g.identity(), r, g.multiply(&r, &r)];
                for item in &mut transversal {
                    let h = members[rng.gen_range(0..members.len())];
                    *item = g.multiply(&h, item);
                }
                let v = artin_transfer_with(&g, &s, &t, transversal).map_err(|e| format!("{p}: {e}"))?;
                if v.mapping() != reference.mapping() {
                    return Err(format!("{p}, pair {i}: transfer depends on the transversal"));
                }
            }
        }
    }
    Ok(())
}

/// `V(uv) = V(u)V(v)` over all of `S/S'` for all eight transfers.
pub fn homomorphism(n_max: usize) -> Check {
    for (p, g) in groups(2, n_max) {
        for (i, (s, t)) in transfer_pairs(&g).into_iter().enumerate() {
            let v = artin_transfer(&g, &s, &t).map_err(|e| format!("{p}: {e}"))?;
            if !v.check_homomorphism(&g) {
                return Err(format!("{p}, pair {i}: not a homomorphism"));
            }
        }
    }
    Ok(())
}

/// `kappa_s`, `kappa_d` and `tau_2..tau_4` are unchanged under `n -> n+2`.
pub fn periodicity(n_lo: usize, n_hi: usize) -> Check {
    for n in n_lo..=n_hi {
        for p in GroupParams::admissible(n) {
            let q = GroupParams::new(p.a, n + 2, p.w, p.z).map_err(|e| e.to_string())?;
            let build = |p| PcGroup::build(p).and_then(|g| artin_pattern(&g)).map_err(|e| e.to_string());
            let (a, b) = (build(p)?, build(q)?);
            let same = a.kappa_s == b.kappa_s
                && a.kappa_d_orders == b.kappa_d_orders
                && a.kappa_d_structures == b.kappa_d_structures
                && a.tau[1..] == b.tau[1..];
            if !same {
                return Err(format!("{p} and {q} differ"));
            }
        }
    }
    Ok(())
}

/// The quotient by the last generator has the Artin pattern of the parent.
pub fn parenthood(n_max: usize) -> Check {
    for n in 3..=n_max {
        for p in GroupParams::admissible(n) {
            if !check_parent(&p).map_err(|e| format!("{p}: {e}"))? {
                return Err(format!("{p}: quotient pattern differs from the parent's"));
            }
        }
    }
    Ok(())
}

/// Identity, inverses, commutativity and associativity on a sample of
/// classes (all classes when `h <= 12`).
pub fn composition_axioms(d: i64) -> Check {
    let cl = FormClassGroup::<i64>::new(d).map_err(|e| e.to_string())?;
    let h = cl.class_number();
    let e = cl.identity();
    let op = |i, j| cl.compose(i, j).map_err(|err| format!("d = {d}: {err}"));
    let classes: Vec<usize> = (0..h).step_by((h / 12).max(1)).collect();
    for &i in &classes {
        let inv = cl.inverse(i).map_err(|err| err.to_string())?;
        if op(i, e)? != i || op(e, i)? != i || op(i, inv)? != e {
            return Err(format!("d = {d}: identity or inverse fails for class {i}"));
        }
        for &j in &classes {
            let ij = op(i, j)?;
            if ij != op(j, i)? {
                return Err(format!("d = {d}: classes {i}, {j} do not commute"));
            }
            for &k in &classes {
                if op(ij, k)? != op(i, op(j, k)?)? {
                    return Err(format!("d = {d}: associativity fails at {i}, {j}, {k}"));
                }
            }
        }
    }
    Ok(())
}

/// `count` distinct fundamental discriminants in `[5, limit)`.
pub fn random_fundamental(count: usize, limit: i64, seed: u64) -> Vec<i64> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = rng.gen_range(5..limit);
        if is_fundamental(d) && !out.contains(&d) {
            out.push(d);
        }
    }
    out
}
