//! Narrow class group of a real quadratic order, as the set of cycles of
//! reduced indefinite forms under the reduction operator.
//!
//! The narrow class group surjects onto the ideal class group with kernel of
//! order 1 or 2, so both have the same odd part; in particular the 3-Sylow
//! subgroup computed here is that of `Cl(F)`.

use std::collections::HashMap;

use num_integer::Roots;

use super::disc::is_fundamental;
use super::form::QuadForm;
use super::int::{lift, FormInt};
use crate::error::{Error, Result};
use crate::invariants::AbelianInvariants;

/// Divisors of `n > 0`, unsorted.
fn divisors(mut n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..k {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let len = divs.len();
        for i in 0..len {
            divs.push(divs[i] * n);
        }
    }
    divs
}

/// All reduced forms of discriminant `d`, sorted.
pub fn reduced_forms<T: FormInt>(d: i64) -> Result<Vec<QuadForm<T>>> {
    let s = d.sqrt();
    if s * s == d {
        return Err(Error::NotFundamental(d));
    }
    let mut forms = Vec::new();
    let mut b = if d % 2 == 0 { 2 } else { 1 };
    while b <= s {
        let n = ((d - b * b) / 4) as u64;
        for a in divisors(n) {
            let a = a as i64;
            if 2 * a + b > s && 2 * a - b <= s {
                let c = n as i64 / a;
                let (a, bb, c) = (lift::<T>(a)?, lift::<T>(b)?, lift::<T>(c)?);
                forms.push(QuadForm::new(a, bb, -c));
                forms.push(QuadForm::new(-a, bb, c));
            }
        }
        b += 2;
    }
    forms.sort();
    Ok(forms)
}

#[derive(Debug, Clone)]
pub struct FormClassGroup<T> {
    d: T,
    sqrt_d: T,
    cycles: Vec<Vec<QuadForm<T>>>,
    index: HashMap<QuadForm<T>, usize>,
    reps: Vec<QuadForm<T>>,
    identity: usize,
}

impl<T: FormInt> FormClassGroup<T> {
    /// Cycle decomposition only; the group structure is derived lazily.
    pub fn new(d: i64) -> Result<Self> {
        if !is_fundamental(d) {
            return Err(Error::NotFundamental(d));
        }
        let forms = reduced_forms::<T>(d)?;
        let dt: T = lift(d)?;
        let s: T = lift(d.sqrt())?;
        let mut index = HashMap::with_capacity(forms.len());
        let mut cycles = Vec::new();
        for f in &forms {
            if index.contains_key(f) {
                continue;
            }
            let id = cycles.len();
            let mut cycle = Vec::new();
            let mut g = *f;
            loop {
                if index.insert(g, id).is_some() {
                    return Err(Error::Consistency(format!("rho is not a permutation at {g}")));
                }
                cycle.push(g);
                g = g.rho(dt, s)?;
                if g == *f {
                    break;
                }
            }
            cycles.push(cycle);
        }
        let reps = cycles
            .iter()
            .map(|c| *c.iter().find(|f| f.a > T::zero()).expect("cycles alternate in sign"))
            .collect();
        let mut group = Self {
            d: dt,
            sqrt_d: s,
            cycles,
            index,
            reps,
            identity: 0,
        };
        group.identity = group.class_of(&QuadForm::principal(dt))?;
        Ok(group)
    }

    pub fn discriminant(&self) -> T {
        self.d
    }

    /// Narrow class number.
    pub fn class_number(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycles(&self) -> &[Vec<QuadForm<T>>] {
        &self.cycles
    }

    /// Representative with positive leading coefficient.
    pub fn representative(&self, class: usize) -> QuadForm<T> {
        self.reps[class]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Class of an arbitrary form of discriminant `d`.
    pub fn class_of(&self, f: &QuadForm<T>) -> Result<usize> {
        if f.discriminant() != Some(self.d) {
            return Err(Error::Contract(format!("form {f} has the wrong discriminant")));
        }
        let r = f.reduce(self.d, self.sqrt_d)?;
        self.index
            .get(&r)
            .copied()
            .ok_or_else(|| Error::Consistency(format!("reduced form {r} lies on no cycle")))
    }

    pub fn compose(&self, i: usize, j: usize) -> Result<usize> {
        let f = self.reps[i].compose(&self.reps[j], self.d)?;
        self.class_of(&f)
    }

    /// Composes two arbitrary forms and returns the class of the result.
    pub fn compose_forms(&self, f: &QuadForm<T>, g: &QuadForm<T>) -> Result<usize> {
        self.compose(self.class_of(f)?, self.class_of(g)?)
    }

    pub fn inverse(&self, i: usize) -> Result<usize> {
        self.class_of(&self.reps[i].inverse())
    }

    pub fn class_order(&self, i: usize) -> Result<u64> {
        let mut order = 1;
        let mut cur = i;
        while cur != self.identity {
            cur = self.compose(cur, i)?;
            order += 1;
            if order > self.class_number() as u64 {
                return Err(Error::Consistency(format!("class {i} has no finite order")));
            }
        }
        Ok(order)
    }

    /// Invariant factors of the narrow class group, from the element orders.
    pub fn invariants(&self) -> Result<AbelianInvariants> {
        let orders = (0..self.class_number())
            .map(|i| self.class_order(i))
            .collect::<Result<Vec<_>>>()?;
        let inv = AbelianInvariants::from_element_orders(orders);
        if inv.order() != self.class_number() as u64 {
            return Err(Error::Consistency(format!(
                "element orders give a group of order {} but there are {} classes",
                inv.order(),
                self.class_number()
            )));
        }
        Ok(inv)
    }

    pub fn sylow3(&self) -> Result<AbelianInvariants> {
        Ok(self.invariants()?.sylow(3))
    }
}

/// Summary of a class group computation.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ClassGroupInfo {
    pub d: i64,
    pub class_number: u64,
    pub invariants: AbelianInvariants,
    pub sylow3: AbelianInvariants,
}

pub fn class_group(d: i64) -> Result<ClassGroupInfo> {
    let g = FormClassGroup::<i128>::new(d)?;
    let invariants = g.invariants()?;
    Ok(ClassGroupInfo {
        d,
        class_number: g.class_number() as u64,
        sylow3: invariants.sylow(3),
        invariants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Components of the graph on all forms of discriminant `d` with
    /// coefficients bounded by `bound`, joined by the generators
    /// `(a,b,c) -> (c,-b,a)` and `(a,b,c) -> (a, b+2a, a+b+c)` of SL2(Z).
    /// Returns the partition induced on reduced forms.
    fn sl2_partition(d: i64, bound: i64) -> Vec<Vec<QuadForm<i64>>> {
        let mut forms = Vec::new();
        for a in -bound..=bound {
            if a == 0 {
                continue;
            }
            for b in -bound..=bound {
                let num = b * b - d;
                if num % (4 * a) == 0 && (num / (4 * a)).abs() <= bound {
                    forms.push(QuadForm::new(a, b, num / (4 * a)));
                }
            }
        }
        let pos: HashMap<QuadForm<i64>, usize> =
            forms.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut parent: Vec<usize> = (0..forms.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for (i, f) in forms.iter().enumerate() {
            let s = QuadForm::new(f.c, -f.b, f.a);
            let t = QuadForm::new(f.a, f.b + 2 * f.a, f.a + f.b + f.c);
            for g in [s, t] {
                if let Some(&j) = pos.get(&g) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let s = d.sqrt();
        let mut groups: HashMap<usize, Vec<QuadForm<i64>>> = HashMap::new();
        for (i, f) in forms.iter().enumerate() {
            if f.is_reduced(s) {
                let r = find(&mut parent, i);
                groups.entry(r).or_default().push(*f);
            }
        }
        let mut out: Vec<Vec<QuadForm<i64>>> = groups.into_values().collect();
        for c in &mut out {
            c.sort();
        }
        out.sort();
        out
    }

    #[test]
    fn cycles_match_sl2_orbits() {
        for d in (5..400).filter(|&d| is_fundamental(d)) {
            let g = FormClassGroup::<i64>::new(d).unwrap();
            let mut cycles: Vec<Vec<QuadForm<i64>>> = g.cycles().to_vec();
            for c in &mut cycles {
                c.sort();
            }
            cycles.sort();
            assert_eq!(cycles, sl2_partition(d, 2 * d), "d = {d}");
        }
    }

    #[test]
    fn reduced_forms_match_direct_search() {
        for d in (5..300).filter(|&d| is_fundamental(d)) {
            let s = d.sqrt();
            let mut direct = Vec::new();
            for a in -d..=d {
                for b in 1..=s {
                    if a != 0 && (b * b - d) % (4 * a) == 0 {
                        let f = QuadForm::new(a, b, (b * b - d) / (4 * a));
                        if f.is_reduced(s) {
                            direct.push(f);
                        }
                    }
                }
            }
            direct.sort();
            assert_eq!(reduced_forms::<i64>(d).unwrap(), direct, "d = {d}");
        }
    }

    #[test]
    fn small_class_groups() {
        assert_eq!(class_group(5).unwrap().class_number, 1);
        assert!(class_group(5).unwrap().invariants.is_trivial());
        // Q(sqrt 79): h = 3 and the fundamental unit has norm +1, so h+ = 6.
        assert_eq!(class_group(316).unwrap().invariants.factors(), &[6]);
        assert_eq!(class_group(229).unwrap().invariants.factors(), &[3]);
        assert!(matches!(class_group(16), Err(Error::NotFundamental(16))));
    }

    #[test]
    fn elementary_3_class_groups() {
        for d in [32_009, 62_501, 152_949, 252_977, 358_285] {
            let s3 = class_group(d).unwrap().sylow3;
            assert_eq!(s3.factors(), &[3, 3], "d = {d}");
        }
    }

    #[test]
    fn widths_agree() {
        for d in [62_501, 4_965_009] {
            let a = FormClassGroup::<i64>::new(d).unwrap().invariants().unwrap();
            let b = FormClassGroup::<i128>::new(d).unwrap().invariants().unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn group_axioms() {
        let g = FormClassGroup::<i64>::new(62_501).unwrap();
        let h = g.class_number();
        for i in 0..h {
            assert_eq!(g.compose(i, g.identity()).unwrap(), i);
            assert_eq!(g.compose(i, g.inverse(i).unwrap()).unwrap(), g.identity());
            for j in 0..h {
                assert_eq!(g.compose(i, j).unwrap(), g.compose(j, i).unwrap());
            }
        }
        for i in 0..h {
            for j in 0..h {
                let k = (i * 7 + j * 3) % h;
                let l = g.compose(g.compose(i, j).unwrap(), k).unwrap();
                let r = g.compose(i, g.compose(j, k).unwrap()).unwrap();
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn composition_is_independent_of_cycle_member() {
        let g = FormClassGroup::<i64>::new(62_501).unwrap();
        for i in 0..g.class_number() {
            for j in 0..g.class_number() {
                let expected = g.compose(i, j).unwrap();
                for f in g.cycles()[i].iter().filter(|f| f.a > 0) {
                    for k in g.cycles()[j].iter().filter(|f| f.a > 0).take(3) {
                        let c = f.compose(k, 62_501).unwrap();
                        assert_eq!(g.class_of(&c).unwrap(), expected);
                    }
                }
            }
        }
    }
}
