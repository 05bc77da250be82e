//! Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on
//! any failure.

mod common;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use pctkt::pc::{verify_lemma1, PcGroup};
use pctkt::quadfield::{class_group, load_table, verify_tables};
use pctkt::transfer::{deep_tkt, identify_tower_group, verify_theorem1, ComparisonMode};
use pctkt::tree::smallgroups_label;

type Criterion = (&'static str, fn() -> Check);

fn tables_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../tables")
}

fn within(start: Instant, limit: Duration, what: &str) -> Check {
    let took = start.elapsed();
    if took > limit {
        return Err(format!("{what} took {took:.2?}, limit {limit:?}"));
    }
    Ok(())
}

fn theorem1() -> Check {
    let start = Instant::now();
    let report = verify_theorem1(9).map_err(|e| e.to_string())?;
    let expected: usize = [1, 2, 4, 6, 7, 6, 7, 6].iter().sum();
    if report.entries.len() != expected {
        return Err(format!("{} groups checked, expected {expected}", report.entries.len()));
    }
    if let Some(first) = report.mismatches.first() {
        return Err(format!("{} mismatches, first {first}", report.mismatches.len()));
    }
    within(start, Duration::from_secs(60), "n <= 9")
}

fn lemma1() -> Check {
    for c in verify_lemma1(9).map_err(|e| e.to_string())? {
        if !c.passed() {
            return Err(format!("{} fails", c.group));
        }
    }
    Ok(())
}

fn tower_groups() -> Check {
    let cases: [(u32, [u64; 4], u64, u32); 6] = [
        (2, [3, 9, 3, 3], 729, 99),
        (2, [3, 3, 9, 9], 729, 100),
        (2, [3, 3, 3, 3], 729, 101),
        (3, [3, 9, 3, 3], 6561, 2225),
        (3, [3, 3, 9, 9], 6561, 2226),
        (3, [3, 3, 3, 3], 6561, 2227),
    ];
    for (e, kappa, order, index) in cases {
        let mut shuffled = kappa;
        shuffled.rotate_left(1);
        let p = identify_tower_group(e, &shuffled, ComparisonMode::Multiset).map_err(|err| err.to_string())?;
        let id = smallgroups_label(&p).ok_or_else(|| format!("{p} has no label"))?;
        if (id.order, id.index) != (order, index) || id.provisional {
            return Err(format!("e = {e}, {kappa:?} gives {id}, expected <{order},{index}>"));
        }
        let g = PcGroup::build(p).map_err(|err| err.to_string())?;
        let orders = deep_tkt(&g).map_err(|err| err.to_string())?.orders;
        let back = identify_tower_group(e, &orders, ComparisonMode::Ordered).map_err(|err| err.to_string())?;
        if back != p {
            return Err(format!("{p} -> {orders:?} -> {back}"));
        }
    }
    Ok(())
}

fn minimal_discriminants() -> Check {
    let mut ds: Vec<i64> = vec![62501, 152949, 252977, 358285, 2905160, 10399596, 27780297];
    let table3 = load_table(&tables_dir().join("table3.json")).map_err(|e| e.to_string())?;
    ds.extend(table3.rows.iter().map(|r| r.d).filter(|&d| d <= 64_000_000));
    ds.sort_unstable();
    ds.dedup();
    for d in ds {
        let start = Instant::now();
        let info = class_group(d).map_err(|e| format!("d = {d}: {e}"))?;
        if info.sylow3.factors() != [3, 3] {
            return Err(format!("d = {d}: 3-class group {}", info.sylow3));
        }
        within(start, Duration::from_secs(2), &format!("d = {d}"))?;
    }
    Ok(())
}

fn table4() -> Check {
    let start = Instant::now();
    let report = verify_tables(&tables_dir());
    let t4 = report
        .tables
        .iter()
        .find(|t| t.name == "table4")
        .ok_or_else(|| format!("table4 not loaded: {:?}", report.problems))?;
    if t4.rows.len() != 68 {
        return Err(format!("{} rows, expected 68", t4.rows.len()));
    }
    if let Some(p) = t4.problems.first() {
        return Err(p.clone());
    }
    let tally = t4.tally.as_ref().ok_or("no tally")?;
    if tally.determined != 67 || !tally.within_tolerance {
        return Err(format!("shares {:?} over {} rows", tally.shares, tally.determined));
    }
    within(start, Duration::from_secs(120), "table 4")
}

fn properties() -> Check {
    transversal_independence(7, 50, 0x3c0c1a55)?;
    homomorphism(7)?;
    periodicity(5, 7)?;
    parenthood(8)?;
    for d in random_fundamental(20, 100_000, 0x5eed) {
        composition_axioms(d)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 transfer kernel types agree with the closed form, n <= 9", theorem1),
        ("2 power-commutator identities, n <= 9", lemma1),
        ("3 tower group identification and round trip", tower_groups),
        ("4 minimal discriminants have 3-class group (3,3)", minimal_discriminants),
        ("5 table 4 discriminants and 40:30:30 shares", table4),
        ("6 property suites", properties),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS  {name}  ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
