//! Discriminant tables shipped as JSON and their verification.
//!
//! A table file is `{name, version, checksum, rows}` where `checksum` is the
//! SHA-256 of the compact JSON serialization of `rows`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::classgroup::class_group;
use super::disc::is_fundamental;
use crate::error::{Error, Result};
use crate::invariants::AbelianInvariants;
use crate::transfer::{identify_tower_group, ComparisonMode};
use crate::tree::smallgroups_label;

pub const TABLE_NAMES: [&str; 3] = ["table2", "table3", "table4"];

/// Stated shares, in percent, of `<729,99>`, `<729,100>`, `<729,101>`.
pub const STATED_SHARES: [(u32, f64); 3] = [(99, 40.0), (100, 30.0), (101, 30.0)];

/// Allowed deviation of a recomputed share from the stated one, in points.
pub const SHARE_TOLERANCE: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRef {
    pub order: u64,
    pub index: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRow {
    pub d: i64,
    pub group: GroupRef,
    pub kappa_d: Option<[u64; 4]>,
    pub e: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub name: String,
    pub version: u32,
    pub checksum: String,
    pub rows: Vec<TableRow>,
}

pub fn rows_checksum(rows: &[TableRow]) -> String {
    let canonical = serde_json::to_vec(rows).expect("rows serialize");
    Sha256::digest(&canonical)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Reads a table and checks its checksum.
pub fn load_table(path: &Path) -> Result<TableFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
    let table: TableFile = serde_json::from_str(&text)
        .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
    let sum = rows_checksum(&table.rows);
    if sum != table.checksum {
        return Err(Error::Data(format!(
            "{}: checksum {} does not match contents ({sum})",
            path.display(),
            table.checksum
        )));
    }
    Ok(table)
}

#[derive(Debug, Clone, Serialize)]
pub struct RowCheck {
    pub d: i64,
    pub group: GroupRef,
    pub fundamental: bool,
    pub sylow3: Option<AbelianInvariants>,
    /// `None` when the row has no recorded deep kernel type.
    pub identified: Option<GroupRef>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Tally {
    pub counts: BTreeMap<u32, usize>,
    pub determined: usize,
    pub undetermined: usize,
    pub shares: BTreeMap<u32, f64>,
    pub within_tolerance: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub name: String,
    pub rows: Vec<RowCheck>,
    pub tally: Option<Tally>,
    pub problems: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TablesReport {
    pub tables: Vec<TableReport>,
    pub problems: Vec<String>,
}

impl TablesReport {
    pub fn passed(&self) -> bool {
        self.problems.is_empty() && self.tables.iter().all(|t| t.problems.is_empty())
    }
}

fn check_row(row: &TableRow) -> (RowCheck, Vec<String>) {
    let mut problems = Vec::new();
    let fundamental = is_fundamental(row.d);
    if !fundamental {
        problems.push(format!("d = {} is not a fundamental discriminant", row.d));
    }
    let sylow3 = match class_group(row.d) {
        Ok(info) => Some(info.sylow3),
        Err(e) => {
            problems.push(format!("d = {}: {e}", row.d));
            None
        }
    };
    if let Some(s) = &sylow3 {
        if s.factors() != [3, 3] {
            problems.push(format!("d = {}: 3-class group {s}, expected (3,3)", row.d));
        }
    }
    let identified = row.kappa_d.map(|k| {
        let found = identify_tower_group(row.e, &k, ComparisonMode::Multiset)
            .ok()
            .and_then(|p| smallgroups_label(&p));
        let found = GroupRef {
            order: found.map_or(0, |id| id.order),
            index: found.map(|id| id.index),
        };
        if found != row.group {
            problems.push(format!(
                "d = {}: kappa_d {k:?} identifies <{},{:?}>, table records <{},{:?}>",
                row.d, found.order, found.index, row.group.order, row.group.index
            ));
        }
        found
    });
    let check = RowCheck {
        d: row.d,
        group: row.group.clone(),
        fundamental,
        sylow3,
        identified,
        passed: problems.is_empty(),
    };
    (check, problems)
}

/// Frequencies of the recorded group indices among rows with a known group.
pub fn tally(rows: &[TableRow]) -> Tally {
    let mut counts = BTreeMap::new();
    let mut undetermined = 0;
    for r in rows {
        match r.group.index {
            Some(i) => *counts.entry(i).or_insert(0) += 1,
            None => undetermined += 1,
        }
    }
    let determined: usize = counts.values().sum();
    let shares: BTreeMap<u32, f64> = counts
        .iter()
        .map(|(&i, &c)| (i, 100.0 * c as f64 / determined as f64))
        .collect();
    let within_tolerance = STATED_SHARES.iter().all(|(i, stated)| {
        shares
            .get(i)
            .is_some_and(|s| (s - stated).abs() <= SHARE_TOLERANCE)
    });
    Tally {
        counts,
        determined,
        undetermined,
        shares,
        within_tolerance,
    }
}

pub fn verify_table(table: &TableFile) -> TableReport {
    let results: Vec<(RowCheck, Vec<String>)> = table.rows.par_iter().map(check_row).collect();
    let mut rows = Vec::with_capacity(results.len());
    let mut problems = Vec::new();
    for (check, p) in results {
        rows.push(check);
        problems.extend(p);
    }
    let tally = (table.name == "table4").then(|| tally(&table.rows));
    if let Some(t) = &tally {
        if !t.within_tolerance {
            problems.push(format!("group shares {:?} deviate from 40:30:30", t.shares));
        }
    }
    TableReport {
        name: table.name.clone(),
        rows,
        tally,
        problems,
    }
}

/// Loads and verifies `table2.json`, `table3.json`, `table4.json` from `dir`.
/// Missing or malformed files are reported, not raised.
pub fn verify_tables(dir: &Path) -> TablesReport {
    let mut tables = Vec::new();
    let mut problems = Vec::new();
    for name in TABLE_NAMES {
        match load_table(&dir.join(format!("{name}.json"))) {
            Ok(t) => tables.push(verify_table(&t)),
            Err(e) => problems.push(e.to_string()),
        }
    }
    TablesReport { tables, problems }
}
