mod common;

use common::*;
use pctkt::pc::{verify_lemma1, GroupParams, PcGroup};
use pctkt::quadfield::is_fundamental;
use pctkt::transfer::{artin_pattern, deep_tkt, shallow_tkt};
use proptest::prelude::*;

#[test]
fn transversal_independence_to_n7() {
    transversal_independence(7, 50, 0x3c0c1a55).unwrap();
}

#[test]
fn transfers_are_homomorphisms_to_n7() {
    homomorphism(7).unwrap();
}

#[test]
fn branch_periodicity_from_n5() {
    periodicity(5, 7).unwrap();
}

#[test]
fn parenthood_to_n8() {
    parenthood(8).unwrap();
}

#[test]
fn capable_siblings_differ_only_in_deep_kernels() {
    let mut seen = 0;
    for n in 4..=8 {
        let sibs: Vec<PcGroup> = GroupParams::admissible(n)
            .into_iter()
            .filter(|p| p.a == 1)
            .map(|p| PcGroup::build(p).unwrap())
            .collect();
        let patterns: Vec<_> = sibs.iter().map(|g| artin_pattern(g).unwrap()).collect();
        for w in patterns.windows(2) {
            assert_eq!(w[0].kappa_s, w[1].kappa_s, "n = {n}");
            assert_eq!(w[0].tau, w[1].tau, "n = {n}");
        }
        let mut deep: Vec<_> = sibs.iter().map(|g| deep_tkt(g).unwrap().orders).collect();
        let before = deep.len();
        deep.sort();
        deep.dedup();
        assert_eq!(deep.len(), before, "n = {n}");
        seen += before;
    }
    assert!(seen > 0);
}

#[test]
fn shallow_kernel_orders_follow_labels() {
    for (p, g) in groups(3, 7) {
        for k in &shallow_tkt(&g).unwrap().kernels {
            let expected = if k.shallow_label == Some(0) { 9 } else { 3 };
            assert_eq!(k.order, expected, "{p}");
        }
    }
}

#[test]
fn lemma_identities_to_n9() {
    let checks = verify_lemma1(9).unwrap();
    assert_eq!(checks.len(), [1, 2, 4, 6, 7, 6, 7, 6].iter().sum::<usize>());
    for c in &checks {
        assert!(c.passed(), "{}", c.group);
    }
}

#[test]
fn two_step_centralizer_literal() {
    for (p, g) in groups(4, 6) {
        let series = g.lower_central_series();
        let derived = g.gamma(&series, 2);
        let gamma4 = g.gamma(&series, 4);
        let literal: Vec<_> = g
            .enumerate()
            .unwrap()
            .into_iter()
            .filter(|u| derived.elements().iter().all(|h| gamma4.contains(&g.commutator(u, h))))
            .collect();
        let chi2 = g.two_step_centralizer();
        assert_eq!(literal.len() as u64, chi2.order(), "{p}");
        assert!(literal.iter().all(|u| chi2.contains(u)), "{p}");
    }
}

fn fundamental_below(limit: i64) -> impl Strategy<Value = i64> {
    (5i64..limit).prop_filter("fundamental", |&d| is_fundamental(d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, ..ProptestConfig::default() })]

    #[test]
    fn form_composition_axioms(d in fundamental_below(100_000)) {
        prop_assert_eq!(composition_axioms(d), Ok(()));
    }
}
