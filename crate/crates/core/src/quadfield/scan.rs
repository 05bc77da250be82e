use rayon::prelude::*;
use serde::Serialize;

use super::classgroup::FormClassGroup;
use super::disc::is_fundamental;
use crate::error::Result;
use crate::invariants::AbelianInvariants;

/// A fundamental discriminant with its 3-class group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub d: i64,
    /// Narrow class number.
    pub class_number: u64,
    pub sylow3: AbelianInvariants,
}

pub const DEFAULT_CHUNK: i64 = 4096;

fn scan_one(d: i64, min_rank: usize) -> Result<Option<ScanEntry>> {
    if !is_fundamental(d) {
        return Ok(None);
    }
    let g = FormClassGroup::<i64>::new(d)?;
    let h = g.class_number() as u64;
    if !h.is_multiple_of(3u64.pow(min_rank as u32)) {
        return Ok(None);
    }
    let sylow3 = g.sylow3()?;
    if sylow3.p_rank(3) < min_rank {
        return Ok(None);
    }
    Ok(Some(ScanEntry {
        d,
        class_number: h,
        sylow3,
    }))
}

/// Fundamental `d` in `[d_min, d_max]` with 3-rank at least 2, ascending.
pub fn scan(d_min: i64, d_max: i64) -> Result<Vec<ScanEntry>> {
    scan_chunked(d_min, d_max, 2, DEFAULT_CHUNK)
}

/// Fundamental `d` in `[d_min, d_max]` with 3-rank at least `min_rank`,
/// ascending. The range is split into chunks of `chunk` discriminants that
/// are processed in parallel and merged in order.
pub fn scan_chunked(d_min: i64, d_max: i64, min_rank: usize, chunk: i64) -> Result<Vec<ScanEntry>> {
    let d_min = d_min.max(2);
    if d_max < d_min {
        return Ok(Vec::new());
    }
    let chunk = chunk.max(1);
    let starts: Vec<i64> = (d_min..=d_max).step_by(chunk as usize).collect();
    let parts: Vec<Vec<ScanEntry>> = starts
        .into_par_iter()
        .map(|lo| {
            let hi = (lo + chunk - 1).min(d_max);
            (lo..=hi).filter_map(|d| scan_one(d, min_rank).transpose()).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}
