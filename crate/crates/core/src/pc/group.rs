//! Power-commutator presentations with relative orders 3 and collection to
//! normal form.
//!
//! A presentation on generators `g_0, ..., g_(m-1)` is given by
//!
//! * power rules `g_i^3 = w_i`, where `w_i` only involves `g_(i+1), ...`
//! * conjugation rules `g_j^(g_i) = c_ij` for `j > i`, where `c_ij` only
//!   involves `g_(i+1), ...`
//!
//! Both right-hand sides are stored as normal forms. Multiplication uses
//! collection from the left: the letters of the right factor are fed one at a
//! time into the accumulated normal form of the left factor.

use smallvec::SmallVec;

use super::element::{GroupElement, MAX_PC_LEN};
use super::params::GroupParams;
use crate::error::{Error, Result};

/// Default cap on `n` for operations that list every element (3^9 = 19683).
pub const DEFAULT_ENUM_BOUND: usize = 9;

type LetterStack = SmallVec<[u8; 96]>;

/// A finite 3-group given by a consistent pc-presentation.
///
/// Immutable after construction; all element operations take `&self`.
#[derive(Debug, Clone)]
pub struct PcGroup {
    params: Option<GroupParams>,
    len: usize,
    power: Vec<GroupElement>,
    conj: Vec<Vec<GroupElement>>,
    /// Bit j of `commutes[i]` is set when `g_j^(g_i) = g_j`.
    commutes: Vec<u32>,
    enum_bound: usize,
}

impl PcGroup {
    /// Builds `G_a^n(z,w)` from its parametrized presentation
    ///
    /// ```text
    /// s_2 = [y,x], s_i = [s_(i-1), x] (3 <= i <= n), s_n = 1, [y, s_2] = s_(n-1)^a,
    /// [y, s_i] = 1 (i >= 3), x^3 = s_(n-1)^w, y^3 s_2^3 s_3 = s_(n-1)^z,
    /// s_i^3 s_(i+1)^3 s_(i+2) = 1 (2 <= i <= n-3), s_(n-2)^3 = s_(n-1)^3 = 1
    /// ```
    ///
    /// with pc-generators `(x, y, s_2, ..., s_(n-1))` at indices `0, 1, 2, ..., n-1`.
    pub fn build(params: GroupParams) -> Result<Self> {
        let params = GroupParams::new(params.a, params.n, params.w, params.z)?;
        let n = params.n;
        if n > MAX_PC_LEN {
            return Err(Error::Structural(format!(
                "n = {n} exceeds the supported pc length {MAX_PC_LEN}"
            )));
        }
        let mut group = Self::trivial_rules(n);
        group.params = Some(params);
        let exp = |e: i8| e.rem_euclid(3) as u8;

        match n {
            2 => {
                // C3 x C3: every rule is trivial.
            }
            3 => {
                group.conj[0][1] = GroupElement::from_exponents(&[0, 1, 1]);
                group.power[0] = GroupElement::from_exponents(&[0, 0, exp(params.w)]);
                group.power[1] = GroupElement::from_exponents(&[0, 0, exp(params.z)]);
            }
            _ => {
                let last = n - 1;
                // y^x = y s_2, s_i^x = s_i s_(i+1), s_(n-1)^x = s_(n-1)
                let mut v = vec![0u8; n];
                v[1] = 1;
                v[2] = 1;
                group.conj[0][1] = GroupElement::from_exponents(&v);
                for k in 2..last {
                    let mut v = vec![0u8; n];
                    v[k] = 1;
                    v[k + 1] = 1;
                    group.conj[0][k] = GroupElement::from_exponents(&v);
                }
                // s_2^y = s_2 s_(n-1)^(-a)
                let mut v = vec![0u8; n];
                v[2] = 1;
                v[last] = (v[last] + exp(-params.a)) % 3;
                group.conj[1][2] = GroupElement::from_exponents(&v);
                group.refresh_commutes();

                // s_(n-2)^3 = s_(n-1)^3 = 1; s_i^3 = s_(i+1)^(-3) s_(i+2)^(-1),
                // expanded innermost-first.
                for i in (2..=n.saturating_sub(3)).rev() {
                    let a = group.inverse(&group.power[i + 1]);
                    let b = group.inverse(&group.generator(i + 2));
                    group.power[i] = group.multiply(&a, &b);
                }
                // y^3 = s_2^(-3) s_3^(-1) s_(n-1)^z
                let a = group.inverse(&group.power[2]);
                let b = group.inverse(&group.generator(3));
                let c = group.pow_generator(last, params.z as i64);
                group.power[1] = group.multiply(&group.multiply(&a, &b), &c);
                // x^3 = s_(n-1)^w
                group.power[0] = group.pow_generator(last, params.w as i64);
            }
        }
        group.refresh_commutes();
        Ok(group)
    }

    /// Assembles a group from raw rule tables. `power[i]` is the normal form of
    /// `g_i^3` and `conj[i][j]` that of `g_j^(g_i)` for `j > i`; entries with
    /// `j <= i` are ignored. Right-hand sides must only involve generators of
    /// index greater than `i`. Consistency is not checked here; see
    /// [`PcGroup::check_consistency`].
    pub fn from_rules(power: Vec<GroupElement>, conj: Vec<Vec<GroupElement>>) -> Result<Self> {
        let len = power.len();
        if len > MAX_PC_LEN {
            return Err(Error::Structural(format!("pc length {len} exceeds {MAX_PC_LEN}")));
        }
        if conj.len() != len || conj.iter().any(|row| row.len() != len) {
            return Err(Error::Structural("conjugation table must be len x len".into()));
        }
        let mut group = Self::trivial_rules(len);
        for i in 0..len {
            let check = |w: &GroupElement, what: &str| -> Result<()> {
                if w.len() != len {
                    return Err(Error::Structural(format!("{what}: wrong exponent length")));
                }
                if w.exponents()[..=i].iter().any(|&e| e != 0) {
                    return Err(Error::Structural(format!(
                        "{what}: right-hand side must lie in generators of index > {i}"
                    )));
                }
                Ok(())
            };
            check(&power[i], &format!("power rule {i}"))?;
            group.power[i] = power[i];
            for j in i + 1..len {
                check(&conj[i][j], &format!("conjugation rule ({i},{j})"))?;
                group.conj[i][j] = conj[i][j];
            }
        }
        group.refresh_commutes();
        Ok(group)
    }

    fn trivial_rules(len: usize) -> Self {
        let power = vec![GroupElement::identity(len); len];
        let conj = (0..len)
            .map(|_| (0..len).map(|j| GroupElement::generator(len, j)).collect())
            .collect();
        Self {
            params: None,
            len,
            power,
            conj,
            commutes: vec![u32::MAX; len],
            enum_bound: DEFAULT_ENUM_BOUND,
        }
    }

    fn refresh_commutes(&mut self) {
        for i in 0..self.len {
            let mut mask = 0u32;
            for j in 0..self.len {
                if j <= i || self.conj[i][j] == GroupElement::generator(self.len, j) {
                    mask |= 1 << j;
                }
            }
            self.commutes[i] = mask;
        }
    }

    /// Sets the cap on `n` for whole-group enumeration.
    pub fn with_enum_bound(mut self, bound: usize) -> Self {
        self.enum_bound = bound;
        self
    }

    pub fn enum_bound(&self) -> usize {
        self.enum_bound
    }

    pub fn params(&self) -> Option<GroupParams> {
        self.params
    }

    /// Number of pc-generators, i.e. the logarithmic order.
    pub fn pc_len(&self) -> usize {
        self.len
    }

    pub fn order(&self) -> u64 {
        3u64.pow(self.len as u32)
    }

    pub fn power_rule(&self, i: usize) -> &GroupElement {
        &self.power[i]
    }

    pub fn conjugation_rule(&self, i: usize, j: usize) -> &GroupElement {
        &self.conj[i][j]
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.len)
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        GroupElement::generator(self.len, i)
    }

    pub fn x(&self) -> GroupElement {
        self.generator(0)
    }

    pub fn y(&self) -> GroupElement {
        self.generator(1)
    }

    /// `s_k` for `2 <= k <= n-1`; the identity outside that range, matching
    /// the convention `s_n = 1`.
    pub fn s(&self, k: usize) -> GroupElement {
        if (2..self.len).contains(&k) {
            self.generator(k)
        } else {
            self.identity()
        }
    }

    pub fn element(&self, exps: &[u8]) -> Result<GroupElement> {
        if exps.len() != self.len {
            return Err(Error::Structural(format!(
                "exponent vector has length {}, expected {}",
                exps.len(),
                self.len
            )));
        }
        Ok(GroupElement::from_exponents(exps))
    }

    fn check_len(&self, g: &GroupElement) -> Result<()> {
        if g.len() != self.len {
            return Err(Error::Structural(format!(
                "element {:?} has length {}, expected {}",
                g,
                g.len(),
                self.len
            )));
        }
        Ok(())
    }

    fn push_word_rev(&self, stack: &mut LetterStack, w: &GroupElement) {
        let raw = w.raw();
        for j in (0..self.len).rev() {
            for _ in 0..raw[j] {
                stack.push(j as u8);
            }
        }
    }

    /// Collects the letters on `stack` (top = next letter) into `acc`.
    fn collect(&self, acc: &mut GroupElement, stack: &mut LetterStack) {
        let len = self.len;
        while let Some(i) = stack.pop() {
            let i = i as usize;
            let exps = acc.raw_mut();
            let mut tail_mask = 0u32;
            for (j, &e) in exps.iter().enumerate().take(len).skip(i + 1) {
                if e != 0 {
                    tail_mask |= 1 << j;
                }
            }
            if tail_mask & !self.commutes[i] == 0 && exps[i] < 2 {
                exps[i] += 1;
                continue;
            }
            let mut tail = [0u8; MAX_PC_LEN];
            for j in i + 1..len {
                tail[j] = exps[j];
                exps[j] = 0;
            }
            exps[i] += 1;
            let overflow = exps[i] == 3;
            if overflow {
                exps[i] = 0;
            }
            // prefix * g_i^e * [w_i] * tail^(g_i): push tail^(g_i) first, then w_i on top.
            for j in (i + 1..len).rev() {
                for _ in 0..tail[j] {
                    self.push_word_rev(stack, &self.conj[i][j]);
                }
            }
            if overflow {
                self.push_word_rev(stack, &self.power[i]);
            }
        }
    }

    /// Collected product `g * h`.
    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let mut acc = *g;
        let mut stack = LetterStack::new();
        self.push_word_rev(&mut stack, h);
        self.collect(&mut acc, &mut stack);
        acc
    }

    pub fn try_multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check_len(g)?;
        self.check_len(h)?;
        Ok(self.multiply(g, h))
    }

    /// `g * g_i^k` for `k` in `0..3`.
    fn mul_gen_pow(&self, g: &GroupElement, i: usize, k: u8) -> GroupElement {
        let mut acc = *g;
        let mut stack = LetterStack::new();
        for _ in 0..k {
            stack.push(i as u8);
        }
        self.collect(&mut acc, &mut stack);
        acc
    }

    fn pow_generator(&self, i: usize, k: i64) -> GroupElement {
        self.power(&self.generator(i), k)
    }

    /// Inverse, built one generator at a time: if `g` has leading exponent `e`
    /// at depth `i`, right-multiplying by `g_i^(3-e)` clears depth `i`, and the
    /// accumulated factors form the normal form of `g^(-1)`.
    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        let mut cur = *g;
        let mut inv = self.identity();
        for i in 0..self.len {
            let e = cur.exponent(i);
            if e != 0 {
                let k = 3 - e;
                cur = self.mul_gen_pow(&cur, i, k);
                inv.raw_mut()[i] = k;
            }
        }
        debug_assert!(cur.is_identity());
        inv
    }

    /// `g^k` by square-and-multiply; negative `k` uses the inverse.
    pub fn power(&self, g: &GroupElement, k: i64) -> GroupElement {
        let mut base = if k < 0 { self.inverse(g) } else { *g };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// `[g,h] = g^(-1) h^(-1) g h`.
    pub fn commutator(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let gh = self.multiply(g, h);
        let hg = self.multiply(h, g);
        // [g,h] = (hg)^(-1) (gh)
        self.multiply(&self.inverse(&hg), &gh)
    }

    /// `g^h = h^(-1) g h`.
    pub fn conjugate(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.multiply(&self.inverse(h), &self.multiply(g, h))
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a, I>(&self, items: I) -> GroupElement
    where
        I: IntoIterator<Item = &'a GroupElement>,
    {
        items
            .into_iter()
            .fold(self.identity(), |acc, g| self.multiply(&acc, g))
    }

    /// Order of an element (a power of 3).
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        let mut order = 1;
        let mut cur = *g;
        while !cur.is_identity() {
            cur = self.power(&cur, 3);
            order *= 3;
        }
        order
    }

    /// Every normal form, in lexicographic exponent order.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        if self.len > self.enum_bound {
            return Err(Error::Capacity {
                n: self.len,
                bound: self.enum_bound,
            });
        }
        let total = self.order() as usize;
        let mut out = Vec::with_capacity(total);
        let mut cur = self.identity();
        for _ in 0..total {
            out.push(cur);
            let raw = cur.raw_mut();
            for j in (0..self.len).rev() {
                raw[j] += 1;
                if raw[j] < 3 {
                    break;
                }
                raw[j] = 0;
            }
        }
        Ok(out)
    }

    /// Overlap tests for a pc-presentation with prime relative orders: the
    /// words `g_k g_j g_i` (k > j > i), `g_j^3 g_i`, `g_j g_i^3` (j > i) and
    /// `g_i^4` must collect to the same normal form under either
    /// association. Passing all of them means the presentation defines a
    /// group of order `3^len`.
    pub fn check_consistency(&self) -> Result<()> {
        let len = self.len;
        let g: Vec<GroupElement> = (0..len).map(|i| self.generator(i)).collect();
        let cube = |u: &GroupElement| self.power(u, 3);
        let sq = |u: &GroupElement| self.multiply(u, u);
        let fail = |what: String| Err(Error::Consistency(what));
        for k in 0..len {
            for j in 0..k {
                for i in 0..j {
                    let lhs = self.multiply(&self.multiply(&g[k], &g[j]), &g[i]);
                    let rhs = self.multiply(&g[k], &self.multiply(&g[j], &g[i]));
                    if lhs != rhs {
                        return fail(format!("overlap g{k} g{j} g{i}"));
                    }
                }
            }
        }
        for j in 0..len {
            for i in 0..j {
                let lhs = self.multiply(&self.power[j], &g[i]);
                let rhs = self.multiply(&sq(&g[j]), &self.multiply(&g[j], &g[i]));
                if lhs != rhs {
                    return fail(format!("overlap g{j}^3 g{i}"));
                }
                let lhs = self.multiply(&self.multiply(&g[j], &g[i]), &sq(&g[i]));
                let rhs = self.multiply(&g[j], &self.power[i]);
                if lhs != rhs {
                    return fail(format!("overlap g{j} g{i}^3"));
                }
            }
            let lhs = self.multiply(&self.power[j], &g[j]);
            let rhs = self.multiply(&g[j], &self.power[j]);
            if lhs != rhs || cube(&g[j]) != self.power[j] {
                return fail(format!("overlap g{j}^4"));
            }
        }
        Ok(())
    }

    /// Presentation of the quotient by `<g_(m-1)>`, obtained by deleting the
    /// last coordinate from every rule. Requires the last generator to span a
    /// normal subgroup.
    pub fn quotient_by_last(&self) -> Result<PcGroup> {
        let len = self.len;
        if len == 0 {
            return Err(Error::Contract("cannot quotient the trivial group".into()));
        }
        let last = len - 1;
        for i in 0..last {
            let c = &self.conj[i][last];
            if c.exponents()[..last].iter().any(|&e| e != 0) {
                return Err(Error::Contract(format!(
                    "<g{last}> is not normal: g{last}^g{i} = {c}"
                )));
            }
        }
        let truncate = |w: &GroupElement| GroupElement::from_exponents(&w.exponents()[..last]);
        let power = (0..last).map(|i| truncate(&self.power[i])).collect();
        let conj = (0..last)
            .map(|i| (0..last).map(|j| truncate(&self.conj[i][j])).collect())
            .collect();
        Ok(PcGroup::from_rules(power, conj)?.with_enum_bound(self.enum_bound))
    }
}
