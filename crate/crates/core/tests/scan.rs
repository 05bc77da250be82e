use std::collections::BTreeSet;
use std::path::PathBuf;

use pctkt::quadfield::{load_table, scan};

#[test]
fn smallest_rank_two_discriminant() {
    let hits = scan(2, 32_009).unwrap();
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0].d, 32_009);
    assert_eq!(hits[0].sylow3.factors(), [3, 3]);
}

#[test]
#[ignore = "scans five million discriminants"]
fn table4_discriminants_found_by_scan() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../tables");
    let table = load_table(&dir.join("table4.json")).unwrap();
    let max = table.rows.iter().map(|r| r.d).max().unwrap();
    let found: BTreeSet<i64> = scan(2, max)
        .unwrap()
        .into_iter()
        .filter(|e| e.sylow3.factors() == [3, 3])
        .map(|e| e.d)
        .collect();
    for r in &table.rows {
        assert!(found.contains(&r.d), "d = {} missing", r.d);
    }
}
