use std::collections::{BTreeMap, BTreeSet};

use ldc_core::canon::canonical_form;
use ldc_core::generators::{cycle, path, spider};
use ldc_core::lab::census::*;
use ldc_core::lab::cubic::find_cubic_sharpness_witness;
use ldc_core::lab::lemmas::*;
use ldc_core::lab::tables::*;
use ldc_core::lab::{gap_configuration, reconstruct_from_gaps};
use ldc_core::ld::gamma_l;
use ldc_core::partition::{partner_count, Partition};
use ldc_core::solver::{c_l_at_least, c_l_exact, SolveOptions};
use ldc_core::{Graph, VertexSet};

// Rows of the published cycle and path tables, `^1` / `^{1,2}` as printed.
const CYCLE_ROWS: &[(usize, usize, &str)] = &[
    (7, 3, "(2,1,1,1,1,1)^{1,2}"),
    (8, 4, "(3,1,1,1,1,1)^{1,2} (2,2,1,1,1,1)^1"),
    (9, 4, "(4,1,1,1,1,1)^{1,2} (3,2,1,1,1,1)^{1,2} (2,2,2,1,1,1)^1"),
    (10, 4, "(5,1,1,1,1,1)^{1,2} (4,2,1,1,1,1)^{1,2} (3,2,2,1,1,1) (2,2,2,2,1,1)^1"),
    (
        11,
        5,
        "(6,1,1,1,1,1)^{1,2} (5,2,1,1,1,1)^{1,2} (4,3,1,1,1,1)^{1,2} (4,2,2,1,1,1)^{1,2} \
         (3,3,2,1,1,1)^1 (3,2,2,2,1,1)^1 (2,2,2,2,2,1)^1",
    ),
    (
        13,
        6,
        "(8,1,1,1,1,1)^{1,2} (7,2,1,1,1,1)^{1,2} (6,3,1,1,1,1)^{1,2} (6,2,2,1,1,1)^{1,2} \
         (5,4,1,1,1,1)^{1,2} (5,3,2,1,1,1)^{1,2} (5,2,2,2,1,1)^{1,2} (4,4,2,1,1,1)^1 \
         (4,3,2,2,1,1)^1 (4,2,2,2,2,1)^1 (3,3,3,2,1,1)^1 (3,3,2,2,2,1)^1 (3,2,2,2,2,2)^1",
    ),
    (
        15,
        6,
        "(10,1,1,1,1,1)^{1,2} (9,2,1,1,1,1)^{1,2} (8,3,1,1,1,1)^{1,2} (8,2,2,1,1,1)^{1,2} \
         (7,4,1,1,1,1)^{1,2} (7,3,2,1,1,1)^{1,2} (7,2,2,2,1,1)^{1,2} (6,5,1,1,1,1) \
         (6,4,2,1,1,1) (6,3,2,2,1,1)^{1,2} (6,2,2,2,2,1)^{1,2} (5,5,2,1,1,1) (5,4,2,2,1,1) \
         (5,3,2,2,2,1)^{1,2} (5,2,2,2,2,2)^{1,2} (4,4,4,1,1,1)^1 (4,4,3,2,1,1)^1 \
         (4,3,3,2,2,1)^1 (4,3,2,2,2,2)^{1,2} (3,3,3,3,2,1)^1 (3,3,3,2,2,2)^1",
    ),
];

const PATH_ROWS: &[(usize, usize, &str)] = &[
    (
        12,
        5,
        "(7,1,1,1,1,1)^{1,2} (6,2,1,1,1,1)^{1,2} (5,3,1,1,1,1)^{1,2} (5,2,2,1,1,1)^{1,2} \
         (4,4,1,1,1,1) (4,3,2,1,1,1) (4,2,2,2,1,1)^{1,2} (3,3,3,1,1,1)^1 (3,3,2,2,1,1)^1 \
         (3,2,2,2,2,1)^1 (2,2,2,2,2,2)^1",
    ),
    (
        14,
        6,
        "(9,1,1,1,1,1)^{1,2} (8,2,1,1,1,1)^{1,2} (7,3,1,1,1,1)^{1,2} (6,4,1,1,1,1)^{1,2} \
         (5,5,1,1,1,1) (7,2,2,1,1,1)^{1,2} (6,3,2,1,1,1)^{1,2} (5,4,2,1,1,1) (5,3,3,1,1,1) \
         (4,4,3,1,1,1)^1 (6,2,2,2,1,1)^{1,2} (5,3,2,2,1,1)^{1,2} (4,4,2,2,1,1)^1 \
         (4,3,3,2,1,1)^1 (3,3,3,3,1,1)^1 (4,2,2,2,2,1)^1 (4,3,2,2,2,1)^1 \
         (3,3,3,2,2,1)^{1,2} (4,2,2,2,2,2)^{1,2} (3,3,2,2,2,2)^1",
    ),
];

/// Maps each printed type to its printed label set.
fn parse_row(row: &str) -> BTreeMap<Vec<usize>, BTreeSet<u8>> {
    row.split_whitespace()
        .map(|tok| {
            let (sizes, labels) = tok.split_once('^').unwrap_or((tok, ""));
            let sizes = sizes.trim_matches(['(', ')']).split(',').map(|s| s.parse().unwrap()).collect();
            let labels = labels
                .trim_matches(['{', '}'])
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().unwrap())
                .collect();
            (sizes, labels)
        })
        .collect()
}

struct Comparison {
    omitted: Vec<Vec<usize>>,
    differ: Vec<Vec<usize>>,
    not_partitions: Vec<Vec<usize>>,
}

/// Compares computed labels with a printed row.
fn compare(n: usize, family: LabFamily, gamma: usize, row: &str) -> Comparison {
    let (g, table) = labeled_types(n, family, 6).unwrap();
    assert_eq!(g, gamma, "{family} {n}");
    let printed = parse_row(row);
    let computed: BTreeSet<Vec<usize>> = table.iter().map(|t| t.sizes.clone()).collect();
    let not_partitions = printed.keys().filter(|k| !computed.contains(*k)).cloned().collect();
    let mut omitted = Vec::new();
    let mut differ = Vec::new();
    for t in &table {
        match printed.get(&t.sizes) {
            None => omitted.push(t.sizes.clone()),
            Some(l) if *l != t.labels => differ.push(t.sizes.clone()),
            Some(_) => {}
        }
    }
    Comparison { omitted, differ, not_partitions }
}

#[test]
fn cycle_table_labels() {
    let mut all_omitted = BTreeMap::new();
    for &(n, gamma, row) in CYCLE_ROWS {
        let c = compare(n, LabFamily::Cycle, gamma, row);
        assert!(c.differ.is_empty(), "C_{n}: labels differ on {:?}", c.differ);
        assert!(c.not_partitions.is_empty());
        all_omitted.insert(n, c.omitted);
    }
    assert_eq!(all_omitted[&10], vec![vec![3, 3, 1, 1, 1, 1]]);
    assert_eq!(all_omitted[&13], vec![vec![4, 3, 3, 1, 1, 1]]);
    assert_eq!(
        all_omitted[&15],
        vec![
            vec![6, 3, 3, 1, 1, 1],
            vec![5, 4, 3, 1, 1, 1],
            vec![5, 3, 3, 2, 1, 1],
            vec![4, 4, 2, 2, 2, 1],
            vec![4, 3, 3, 3, 1, 1]
        ]
    );
    for n in [7, 8, 9, 11] {
        assert!(all_omitted[&n].is_empty());
    }
}

#[test]
fn path_table_labels() {
    let c = compare(12, LabFamily::Path, 5, PATH_ROWS[0].2);
    assert!(c.omitted.is_empty() && c.differ.is_empty() && c.not_partitions.is_empty());
    // the printed row lists (4,2,2,2,2,1), which sums to 13, in place of
    // (5,2,2,2,2,1); and it marks (3,3,3,2,2,1) with both labels although only
    // the first rule applies (the singleton cannot reach γ_L = 6)
    let c = compare(14, LabFamily::Path, 6, PATH_ROWS[1].2);
    assert_eq!(c.not_partitions, vec![vec![4, 2, 2, 2, 2, 1]]);
    assert_eq!(c.omitted, vec![vec![5, 2, 2, 2, 2, 1]]);
    assert_eq!(c.differ, vec![vec![3, 3, 3, 2, 2, 1]]);
    let t = type_table(14, LabFamily::Path, 6).unwrap();
    let odd = t.iter().find(|t| t.sizes == [3, 3, 3, 2, 2, 1]).unwrap();
    assert_eq!(odd.labels, BTreeSet::from([1]));
}

fn survivors(n: usize, family: LabFamily) -> Vec<Vec<usize>> {
    type_table(n, family, 6).unwrap().into_iter().filter(|t| t.survives()).map(|t| t.sizes).collect()
}

#[test]
fn surviving_types() {
    assert_eq!(survivors(10, LabFamily::Cycle), vec![vec![3, 3, 1, 1, 1, 1], vec![3, 2, 2, 1, 1, 1]]);
    let c15 = survivors(15, LabFamily::Cycle);
    for t in [[6, 5, 1, 1, 1, 1], [6, 4, 2, 1, 1, 1], [5, 5, 2, 1, 1, 1], [5, 4, 2, 2, 1, 1]] {
        assert!(c15.contains(&t.to_vec()));
    }
    assert_eq!(c15.len(), 7);
    assert_eq!(survivors(12, LabFamily::Path), vec![vec![4, 4, 1, 1, 1, 1], vec![4, 3, 2, 1, 1, 1]]);
    assert_eq!(
        survivors(14, LabFamily::Path),
        vec![vec![5, 5, 1, 1, 1, 1], vec![5, 4, 2, 1, 1, 1], vec![5, 3, 3, 1, 1, 1]]
    );
    for n in [7, 8, 9, 11, 13] {
        assert!(survivors(n, LabFamily::Cycle).is_empty());
    }
}

#[test]
fn surviving_types_are_refuted() {
    let opts = SolveOptions::default();
    for (n, family) in [
        (10, LabFamily::Cycle),
        (15, LabFamily::Cycle),
        (12, LabFamily::Path),
        (14, LabFamily::Path),
        (13, LabFamily::Path),
        (15, LabFamily::Path),
    ] {
        let r = refute_surviving_types(n, family, &opts).unwrap();
        assert!(r.all_refuted(), "{family} {n}");
    }
}

#[test]
fn formulas_agree_with_exhaustive_search() {
    for n in 3..=12 {
        assert_eq!(c_l_exact(&cycle(n).unwrap()).unwrap().c_l, Some(c_l_cycle_formula(n).unwrap()));
        assert_eq!(c_l_exact(&path(n).unwrap()).unwrap().c_l, Some(c_l_path_formula(n).unwrap()));
    }
}

#[test]
fn family_checks_beyond_twelve() {
    for family in [LabFamily::Cycle, LabFamily::Path] {
        for n in 13..=17 {
            let c = family_check(n, family, &SolveOptions::default()).unwrap();
            assert!(matches!(c.verdict, Verdict::Pass), "{family} {n}");
            assert_eq!(c.certificate_from_fixture, n >= 16);
        }
    }
}

#[test]
fn decision_examples() {
    assert!(c_l_at_least(&cycle(16).unwrap(), 6).unwrap().is_some());
    assert!(c_l_at_least(&cycle(15).unwrap(), 6).unwrap().is_none());
    assert!(c_l_at_least(&path(16).unwrap(), 6).unwrap().is_some());
}

#[test]
fn worked_gap_example() {
    let a = VertexSet::from_vertices(15, [0, 3, 6, 7, 9, 10, 12]).unwrap();
    let g = gap_configuration(15, &a).unwrap();
    assert_eq!(g.gaps, vec![2, 2, 0, 1, 0, 1, 2]);
    assert_eq!(reconstruct_from_gaps(15, &g.gaps, 0).unwrap(), a);
}

#[test]
fn lemma_ld5_1() {
    let r = verify_lemma_ld5_1();
    assert_eq!(r.subsets_scanned, 3003);
    assert!(r.passed(), "{:?}", r.violations);
    // frozen: 30 five-subsets have exactly one completer (each LD 6-set in 5
    // rotations, minus any one of its 6 members)
    assert_eq!(r.completer_histogram, vec![2973, 30]);
}

#[test]
fn lemma_ld5_2_fails_only_on_dominating_sets() {
    let r = verify_lemma_ld5_2();
    assert_eq!(r.base.subsets_scanned, 5005);
    assert_eq!(r.base.non_ld_subsets, 5000);
    // frozen: histogram of completer counts 0..=4
    assert_eq!(r.base.completer_histogram, vec![4025, 360, 495, 90, 30]);
    assert_eq!(r.dominating_violations.len(), 30);
    assert!(!r.base.passed());
    assert!(r.holds_for_non_dominating());
    assert!(r.dominating_violations.contains(&"{0,2,4,7,9,12} has 4 completers".to_string()));
}

#[test]
fn c15_six_sets() {
    let (ld, mismatches) = c15_ld6_sets();
    assert_eq!(ld.len(), 5);
    assert_eq!(mismatches, 0);
}

#[test]
fn p12_five_sets() {
    let sets: BTreeSet<Vec<usize>> = p12_ld5_sets().into_iter().map(|(s, _)| s).collect();
    let expected = BTreeSet::from([
        vec![2, 4, 7, 9, 11],
        vec![2, 4, 6, 9, 11],
        vec![1, 4, 6, 9, 11],
        vec![2, 4, 7, 9, 12],
    ]);
    assert_eq!(sets, expected);
    // no LD-set configuration starts or ends with a 2-gap
    assert!(p12_ld5_sets().iter().all(|(_, g)| g[0] < 2 && g[g.len() - 1] < 2));
}

fn same_classes(a: &[Graph], b: &[Graph]) -> bool {
    let mut x: Vec<_> = a.iter().map(|g| canonical_form(g).unwrap()).collect();
    let mut y: Vec<_> = b.iter().map(|g| canonical_form(g).unwrap()).collect();
    x.sort();
    y.sort();
    x == y
}

#[test]
fn c_l_equals_n_census() {
    let found = census_c_l_equals_n().unwrap();
    assert_eq!(found.len(), 8);
    assert!(same_classes(&found, &named_c_l_equals_n()));
    assert_eq!(count_with_gamma_l(5, 2).unwrap(), 10);
    assert_eq!(ldc_core::enumerate::enumerate_graphs(5, true).unwrap().len(), 21);
}

#[test]
fn tree_census() {
    let found = census_trees_c_l_n_minus_1().unwrap();
    assert!(same_classes(&found, &named_trees_c_l_n_minus_1()));
    assert_eq!(gamma_l(&path(8).unwrap()).unwrap().0, 4);
    let facts = order8_spiders().unwrap();
    assert!(spider_facts_hold(&facts));
    let odd: Vec<_> = facts.iter().filter(|f| f.gamma_l != 4).collect();
    assert_eq!(odd.len(), 1);
    assert_eq!(odd[0].legs, vec![3, 3, 1]);
    assert_eq!(gamma_l(&spider(&[3, 3, 1]).unwrap()).unwrap().0, 3);
}

#[test]
fn cubic_sharpness() {
    let w = find_cubic_sharpness_witness(12).unwrap().expect("witness");
    assert_eq!(w.completers.len(), 6);
    let g = Graph::from_edges(w.order, w.graph_edges.iter().copied()).unwrap();
    assert!(g.degree_sequence().iter().all(|&d| d == 3));
    let a = VertexSet::from_vertices(w.order, w.set.iter().copied()).unwrap();
    assert!(ldc_core::ld::is_dominating(&g, &a));
    assert!(!ldc_core::ld::is_ld_set(&g, &a).is_ld());
    let parts = w.partition.expect("partition");
    let lists: Vec<&[usize]> = parts.iter().map(Vec::as_slice).collect();
    let p = Partition::from_lists(w.order, &lists).unwrap();
    assert_eq!(partner_count(&g, &p, 0).unwrap(), 6);
}
