//! Defining relations of the family and the power-commutator identities for
//! `(xy)^2`, `(xy)^3`, `(xy^2)^2`, `(xy^2)^3`.

use serde::Serialize;

use super::element::GroupElement;
use super::group::PcGroup;
use super::params::GroupParams;
use crate::error::Result;

/// One evaluated relation: `lhs * rhs^-1` should be the identity.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

impl PcGroup {
    fn s_pow(&self, k: usize, e: i64) -> GroupElement {
        self.power(&self.s(k), e)
    }

    fn relation(&self, name: String, lhs: GroupElement, rhs: GroupElement) -> RelationCheck {
        RelationCheck {
            relation: name,
            holds: lhs == rhs,
        }
    }

    /// Evaluates every defining relation of `G_a^n(z,w)` in this group.
    /// Empty for groups built from raw rules.
    pub fn check_presentation(&self) -> Vec<RelationCheck> {
        let Some(p) = self.params() else { return Vec::new() };
        let n = p.n;
        let (x, y) = (self.x(), self.y());
        let top = |e: i64| self.s_pow(n - 1, e);
        let mut out = vec![self.relation("s2 = [y,x]".into(), self.s(2), self.commutator(&y, &x))];
        for i in 3..=n {
            out.push(self.relation(
                format!("s{i} = [s{},x]", i - 1),
                self.s(i),
                self.commutator(&self.s(i - 1), &x),
            ));
        }
        out.push(self.relation(
            "[y,s2] = s_(n-1)^a".into(),
            self.commutator(&y, &self.s(2)),
            top(p.a as i64),
        ));
        for i in 3..n {
            out.push(self.relation(
                format!("[y,s{i}] = 1"),
                self.commutator(&y, &self.s(i)),
                self.identity(),
            ));
        }
        out.push(self.relation("x^3 = s_(n-1)^w".into(), self.power(&x, 3), top(p.w as i64)));
        out.push(self.relation(
            "y^3 s2^3 s3 = s_(n-1)^z".into(),
            self.product([&self.power(&y, 3), &self.s_pow(2, 3), &self.s(3)]),
            top(p.z as i64),
        ));
        for i in 2..n.saturating_sub(2) {
            out.push(self.relation(
                format!("s{i}^3 s{}^3 s{} = 1", i + 1, i + 2),
                self.product([&self.s_pow(i, 3), &self.s_pow(i + 1, 3), &self.s(i + 2)]),
                self.identity(),
            ));
        }
        if n >= 4 {
            out.push(self.relation("s_(n-2)^3 = 1".into(), self.s_pow(n - 2, 3), self.identity()));
        }
        if n >= 3 {
            out.push(self.relation("s_(n-1)^3 = 1".into(), top(3), self.identity()));
        }
        out
    }

    /// `(xy)^2 = x^2 y^2 s2 t3` and
    /// `(xy)^3 = x^3 y^3 (s2 t3^2 t4)^2 s3 u4^2 u5 s2 t3`, with
    /// `t3 = [s2,y], t4 = [t3,y], s3 = [s2,x], u4 = [s3,y], u5 = [u4,y]`.
    /// Valid in any group; here evaluated with commutators computed in `self`.
    pub fn general_power_identities(&self) -> (bool, bool) {
        let (x, y) = (self.x(), self.y());
        let s2 = self.commutator(&y, &x);
        let t3 = self.commutator(&s2, &y);
        let t4 = self.commutator(&t3, &y);
        let s3 = self.commutator(&s2, &x);
        let u4 = self.commutator(&s3, &y);
        let u5 = self.commutator(&u4, &y);
        let xy = self.multiply(&x, &y);

        let sq = self.product([&self.power(&x, 2), &self.power(&y, 2), &s2, &t3]);
        let inner = self.product([&s2, &self.power(&t3, 2), &t4]);
        let cube = self.product([
            &self.power(&x, 3),
            &self.power(&y, 3),
            &self.power(&inner, 2),
            &s3,
            &self.power(&u4, 2),
            &u5,
            &s2,
            &t3,
        ]);
        (self.power(&xy, 2) == sq, self.power(&xy, 3) == cube)
    }

    /// The four identities specialized to the family:
    /// `(xy)^2 = x^2 y^2 s2 s_(n-1)^-a`, `(xy)^3 = x^3 y^3 s2^3 s3 s_(n-1)^-2a`,
    /// `(xy^2)^2 = x^2 y^4 s2^2 s_(n-1)^-2a`, `(xy^2)^3 = x^3 y^6 s2^6 s3^2 s_(n-1)^-2a`.
    pub fn specialized_power_identities(&self) -> Option<[bool; 4]> {
        let p = self.params()?;
        let a = p.a as i64;
        let (x, y) = (self.x(), self.y());
        let top = |e: i64| self.s_pow(p.n - 1, e);
        let xy = self.multiply(&x, &y);
        let xy2 = self.multiply(&xy, &y);
        let xp = |e| self.power(&x, e);
        let yp = |e| self.power(&y, e);
        let s2p = |e| self.s_pow(2, e);
        Some([
            self.power(&xy, 2) == self.product([&xp(2), &yp(2), &self.s(2), &top(-a)]),
            self.power(&xy, 3) == self.product([&xp(3), &yp(3), &s2p(3), &self.s(3), &top(-2 * a)]),
            self.power(&xy2, 2) == self.product([&xp(2), &yp(4), &s2p(2), &top(-2 * a)]),
            self.power(&xy2, 3)
                == self.product([&xp(3), &yp(6), &s2p(6), &self.s_pow(3, 2), &top(-2 * a)]),
        ])
    }
}

/// Outcome of the power-commutator identity checks for one group.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheck {
    pub group: GroupParams,
    pub general: [bool; 2],
    pub specialized: [bool; 4],
    pub presentation: bool,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.presentation && self.general.iter().chain(&self.specialized).all(|&b| b)
    }
}

/// Runs the identity checks for every admissible tuple with `n <= n_max`.
pub fn verify_lemma1(n_max: usize) -> Result<Vec<LemmaCheck>> {
    GroupParams::admissible_up_to(n_max)
        .into_iter()
        .map(|p| {
            let g = PcGroup::build(p)?;
            let (sq, cube) = g.general_power_identities();
            Ok(LemmaCheck {
                group: p,
                general: [sq, cube],
                specialized: g.specialized_power_identities().unwrap_or([false; 4]),
                presentation: g.check_presentation().iter().all(|r| r.holds),
            })
        })
        .collect()
}
