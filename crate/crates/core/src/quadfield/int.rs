use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_traits::{PrimInt, Signed};

use crate::error::{Error, Result};

/// Signed machine integers usable as form coefficients. All arithmetic on
/// coefficients is checked; overflow surfaces as [`Error::Overflow`].
pub trait FormInt:
    PrimInt + Signed + Integer + Roots + Hash + Debug + Display + Send + Sync + 'static
{
}

impl<T> FormInt for T where
    T: PrimInt + Signed + Integer + Roots + Hash + Debug + Display + Send + Sync + 'static
{
}

pub(crate) fn overflow<T: FormInt>(d: T) -> Error {
    Error::Overflow(d.to_i64().unwrap_or(i64::MAX))
}

pub(crate) fn lift<T: FormInt>(v: i64) -> Result<T> {
    T::from(v).ok_or(Error::Overflow(v))
}

pub(crate) fn cast<T: FormInt>(v: u64) -> T {
    T::from(v).expect("small constant fits")
}

/// Checked arithmetic with the discriminant attached for error reporting.
pub(crate) struct Ops<T> {
    pub d: T,
}

impl<T: FormInt> Ops<T> {
    pub fn add(&self, x: T, y: T) -> Result<T> {
        x.checked_add(&y).ok_or_else(|| overflow(self.d))
    }

    pub fn sub(&self, x: T, y: T) -> Result<T> {
        x.checked_sub(&y).ok_or_else(|| overflow(self.d))
    }

    pub fn mul(&self, x: T, y: T) -> Result<T> {
        x.checked_mul(&y).ok_or_else(|| overflow(self.d))
    }

    /// Exact division; a nonzero remainder is a bug upstream.
    pub fn div_exact(&self, x: T, y: T) -> Result<T> {
        let (q, r) = x.div_rem(&y);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Consistency(format!("{x} is not divisible by {y}")))
        }
    }
}

/// Extended gcd: `(g, u, v)` with `u x + v y = g >= 0`.
pub(crate) fn xgcd<T: FormInt>(x: T, y: T) -> (T, T, T) {
    let e = x.extended_gcd(&y);
    if e.gcd < T::zero() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}
