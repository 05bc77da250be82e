//! Finite abelian group structure in invariant-factor form.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Invariant factors of a finite abelian group, largest first, each one
/// divisible by the next. The trivial group has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianInvariants(Vec<u64>);

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self(Vec::new())
    }

    /// Builds invariants from a list of cyclic factor orders in any order
    /// (e.g. `[3, 9]` or `[2, 3]`), normalizing to invariant factors.
    pub fn from_cyclic_factors(factors: &[u64]) -> Self {
        let mut parts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &f in factors {
            for (p, e) in factorize(f) {
                parts.entry(p).or_default().push(e);
            }
        }
        Self::from_prime_parts(parts)
    }

    fn from_prime_parts(mut parts: BTreeMap<u64, Vec<u32>>) -> Self {
        let len = parts.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (p, exps) in parts.iter_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (i, &e) in exps.iter().enumerate() {
                factors[i] *= p.pow(e);
            }
        }
        Self(factors)
    }

    /// Recovers the structure of a finite abelian group from the multiset of
    /// its element orders. For each prime p, the number of elements with
    /// `g^(p^k) = 1` equals `p^(sum_i min(a_i, k))`, which pins down the
    /// exponents `a_i` of the p-primary part.
    pub fn from_element_orders<I: IntoIterator<Item = u64>>(orders: I) -> Self {
        let orders: Vec<u64> = orders.into_iter().collect();
        let group_order = orders.len() as u64;
        let mut parts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for (p, e_max) in factorize(group_order) {
            // counts[k] = #{g : ord(g) divides p^k}
            let mut counts = Vec::with_capacity(e_max as usize + 1);
            for k in 0..=e_max {
                let pk = p.pow(k);
                counts.push(orders.iter().filter(|&&o| pk % o == 0).count() as u64);
            }
            // ranks[k] = number of cyclic factors of order >= p^k
            let mut ranks = vec![0u32; e_max as usize + 2];
            for k in 1..=e_max as usize {
                ranks[k] = ilog(counts[k] / counts[k - 1], p);
            }
            let mut exps = Vec::new();
            for k in 1..=e_max as usize {
                for _ in 0..ranks[k].saturating_sub(ranks[k + 1]) {
                    exps.push(k as u32);
                }
            }
            if !exps.is_empty() {
                parts.insert(p, exps);
            }
        }
        Self::from_prime_parts(parts)
    }

    pub fn factors(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> u64 {
        self.0.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    /// The p-primary component.
    pub fn sylow(&self, p: u64) -> Self {
        let mut out = Vec::new();
        for &f in &self.0 {
            let mut q = 1;
            let mut m = f;
            while m % p == 0 {
                m /= p;
                q *= p;
            }
            if q > 1 {
                out.push(q);
            }
        }
        Self(out)
    }

    /// p-rank: the number of cyclic factors with order divisible by p.
    pub fn p_rank(&self, p: u64) -> usize {
        self.0.iter().filter(|&&f| f % p == 0).count()
    }

    /// Logarithmic notation for a p-group, e.g. `(9,3)` becomes `(2,1)` for p = 3.
    pub fn log_notation(&self, p: u64) -> String {
        let parts: Vec<String> = self.0.iter().map(|&f| ilog(f, p).to_string()).collect();
        format!("({})", parts.join(","))
    }
}

fn ilog(mut m: u64, p: u64) -> u32 {
    let mut e = 0;
    while m > 1 && m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    e
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_orders(n: u64) -> Vec<u64> {
        (0..n).map(|k| n / num_integer::gcd(n, k)).collect()
    }

    fn product_orders(a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = Vec::new();
        for &x in a {
            for &y in b {
                out.push(num_integer::lcm(x, y));
            }
        }
        out
    }

    #[test]
    fn normalizes_cyclic_factors() {
        assert_eq!(AbelianInvariants::from_cyclic_factors(&[3, 9]).factors(), &[9, 3]);
        assert_eq!(AbelianInvariants::from_cyclic_factors(&[2, 3]).factors(), &[6]);
        assert_eq!(AbelianInvariants::from_cyclic_factors(&[1]).factors(), &[] as &[u64]);
        assert_eq!(AbelianInvariants::from_cyclic_factors(&[4, 6]).factors(), &[12, 2]);
    }

    #[test]
    fn structure_from_orders() {
        let c9xc3 = product_orders(&cyclic_orders(9), &cyclic_orders(3));
        assert_eq!(AbelianInvariants::from_element_orders(c9xc3).factors(), &[9, 3]);
        let c27 = cyclic_orders(27);
        assert_eq!(AbelianInvariants::from_element_orders(c27).factors(), &[27]);
        let c6xc2 = product_orders(&cyclic_orders(6), &cyclic_orders(2));
        assert_eq!(AbelianInvariants::from_element_orders(c6xc2).factors(), &[6, 2]);
        let c4xc2x2 = product_orders(&product_orders(&cyclic_orders(4), &cyclic_orders(2)), &cyclic_orders(2));
        assert_eq!(AbelianInvariants::from_element_orders(c4xc2x2).factors(), &[4, 2, 2]);
        assert!(AbelianInvariants::from_element_orders([1]).is_trivial());
    }

    #[test]
    fn sylow_and_log() {
        let inv = AbelianInvariants::from_cyclic_factors(&[18, 6, 4]);
        assert_eq!(inv.sylow(3).factors(), &[9, 3]);
        assert_eq!(inv.sylow(2).factors(), &[4, 2, 2]);
        assert_eq!(inv.p_rank(3), 2);
        assert_eq!(inv.sylow(3).log_notation(3), "(2,1)");
        assert_eq!(inv.to_string(), "(36,6,2)");
    }
}
