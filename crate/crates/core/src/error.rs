use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parameter tuple outside the admissible family.
    #[error("inadmissible parameters a={a}, n={n}, w={w}, z={z}: {reason}")]
    Domain {
        a: i8,
        n: usize,
        w: i8,
        z: i8,
        reason: String,
    },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("enumeration of 3^{n} elements exceeds the configured bound 3^{bound}")]
    Capacity { n: usize, bound: usize },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("kappa_d {kappa_d:?} matches no tower group pattern for e = {e}")]
    Identification { e: u32, kappa_d: [u64; 4] },

    #[error("discriminant {0} is not a fundamental discriminant > 1")]
    NotFundamental(i64),

    #[error("integer overflow in form arithmetic for discriminant {0}")]
    Overflow(i64),

    #[error("data error: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
