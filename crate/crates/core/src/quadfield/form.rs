use std::fmt;

use serde::Serialize;

use super::int::{cast, xgcd, FormInt, Ops};
use crate::error::{Error, Result};

/// Binary quadratic form `a X^2 + b XY + c Y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuadForm<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: fmt::Display> fmt::Display for QuadForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl<T: FormInt> QuadForm<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        Self { a, b, c }
    }

    /// `b^2 - 4ac`, or `None` on overflow.
    pub fn discriminant(&self) -> Option<T> {
        let b2 = self.b.checked_mul(&self.b)?;
        let ac4 = self.a.checked_mul(&self.c)?.checked_mul(&cast(4))?;
        b2.checked_sub(&ac4)
    }

    /// `(1, 0, -d/4)` or `(1, 1, (1-d)/4)`.
    pub fn principal(d: T) -> Self {
        let four: T = cast(4);
        if d.mod_floor(&four).is_zero() {
            Self::new(T::one(), T::zero(), -(d / four))
        } else {
            Self::new(T::one(), T::one(), (T::one() - d) / four)
        }
    }

    /// Class inverse `(a, -b, c)`.
    pub fn inverse(&self) -> Self {
        Self::new(self.a, -self.b, self.c)
    }

    /// Reduction condition for indefinite forms, with `s = floor(sqrt d)`
    /// and `d` not a square: `0 < b < sqrt d` and
    /// `sqrt d - b < 2|a| < sqrt d + b`.
    pub fn is_reduced(&self, s: T) -> bool {
        let two_a = self.a.abs() + self.a.abs();
        self.b > T::zero() && self.b <= s && two_a + self.b > s && two_a - self.b <= s
    }

    /// One step of the reduction operator:
    /// `(a,b,c) -> (c, r, (r^2 - d) / 4c)` with `r = -b mod 2|c|`, taken in
    /// `(sqrt d - 2|c|, sqrt d)` when `|c| < sqrt d` and in `(-|c|, |c|]`
    /// otherwise. Properly equivalent to the input.
    pub fn rho(&self, d: T, s: T) -> Result<Self> {
        let ops = Ops { d };
        if self.c.is_zero() {
            return Err(Error::Consistency(format!("form {self} has c = 0")));
        }
        let m = ops.add(self.c.abs(), self.c.abs())?;
        let r = if self.c.abs() <= s {
            s - ops.add(s, self.b)?.mod_floor(&m)
        } else {
            let r = (-self.b).mod_floor(&m);
            if r > self.c.abs() {
                r - m
            } else {
                r
            }
        };
        let num = ops.sub(ops.mul(r, r)?, d)?;
        let c = ops.div_exact(num, ops.mul(cast(4), self.c)?)?;
        Ok(Self::new(self.c, r, c))
    }

    /// Applies [`rho`](Self::rho) until the form is reduced.
    pub fn reduce(&self, d: T, s: T) -> Result<Self> {
        let mut f = *self;
        for _ in 0..10_000 {
            if f.is_reduced(s) {
                return Ok(f);
            }
            f = f.rho(d, s)?;
        }
        Err(Error::Consistency(format!("reduction of {self} did not terminate")))
    }

    /// Gauss composition (unreduced). Both forms must have `a > 0` and
    /// discriminant `d`.
    pub fn compose(&self, other: &Self, d: T) -> Result<Self> {
        let ops = Ops { d };
        let two: T = cast(2);
        let (a1, b1) = (self.a, self.b);
        let (a2, b2) = (other.a, other.b);
        if a1 <= T::zero() || a2 <= T::zero() {
            return Err(Error::Contract("composition needs positive leading coefficients".into()));
        }
        let half_sum = ops.div_exact(ops.add(b1, b2)?, two)?;
        let (g0, u0, v0) = xgcd(a1, a2);
        let (g, w1, w) = xgcd(g0, half_sum);
        let (u, v) = (ops.mul(w1, u0)?, ops.mul(w1, v0)?);
        let a3 = ops.div_exact(ops.mul(ops.div_exact(a1, g)?, a2)?, g)?;
        let t1 = ops.mul(ops.mul(u, a1)?, b2)?;
        let t2 = ops.mul(ops.mul(v, a2)?, b1)?;
        let t3 = ops.mul(w, ops.div_exact(ops.add(ops.mul(b1, b2)?, d)?, two)?)?;
        let b3 = ops.div_exact(ops.add(ops.add(t1, t2)?, t3)?, g)?;
        let b3 = b3.mod_floor(&ops.mul(two, a3)?);
        let c3 = ops.div_exact(ops.sub(ops.mul(b3, b3)?, d)?, ops.mul(cast(4), a3)?)?;
        Ok(Self::new(a3, b3, c3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_forms() {
        assert_eq!(QuadForm::principal(5i64), QuadForm::new(1, 1, -1));
        assert_eq!(QuadForm::principal(12i64), QuadForm::new(1, 0, -3));
        assert_eq!(QuadForm::principal(62_501i64).discriminant(), Some(62_501));
    }

    #[test]
    fn rho_preserves_discriminant_and_reducedness() {
        let d = 229i64;
        let s = 15;
        let f = QuadForm::principal(d).reduce(d, s).unwrap();
        let mut g = f;
        for _ in 0..20 {
            g = g.rho(d, s).unwrap();
            assert!(g.is_reduced(s));
            assert_eq!(g.discriminant(), Some(d));
        }
    }

    #[test]
    fn composition_keeps_discriminant() {
        let d = 316i64;
        let f = QuadForm::new(3, 16, -5);
        assert_eq!(f.discriminant(), Some(d));
        let g = f.compose(&f, d).unwrap();
        assert_eq!(g.discriminant(), Some(d));
        assert!(f.compose(&f.inverse(), d).is_ok());
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX / 2;
        let f = QuadForm::new(big, 1, -big);
        assert!(matches!(f.rho(5, 2), Err(Error::Overflow(_))));
    }
}
