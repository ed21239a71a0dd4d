//! Solver results against unpruned enumeration of every set partition.

use std::collections::BTreeSet;

use ldc_core::enumerate::enumerate_graphs;
use ldc_core::generators::{complete, cycle, path, star};
use ldc_core::solver::{c_l_exact, plain_coalition_number};
use ldc_core::Graph;

fn neighbors(g: &Graph, v: usize) -> BTreeSet<usize> {
    (0..g.order()).filter(|&u| g.has_edge(u, v)).collect()
}

fn dominates(g: &Graph, s: &BTreeSet<usize>) -> bool {
    (0..g.order()).all(|v| s.contains(&v) || neighbors(g, v).iter().any(|u| s.contains(u)))
}

fn ld(g: &Graph, s: &BTreeSet<usize>) -> bool {
    let outside: Vec<usize> = (0..g.order()).filter(|v| !s.contains(v)).collect();
    let traces: Vec<BTreeSet<usize>> =
        outside.iter().map(|&v| neighbors(g, v).intersection(s).copied().collect()).collect();
    let distinct: BTreeSet<&BTreeSet<usize>> = traces.iter().collect();
    dominates(g, s) && distinct.len() == traces.len()
}

/// Every set partition of `0..n`, as restricted growth strings.
fn set_partitions(n: usize) -> Vec<Vec<BTreeSet<usize>>> {
    fn go(v: usize, n: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<BTreeSet<usize>>>) {
        if v == n {
            let k = labels.iter().max().map_or(0, |m| m + 1);
            let mut parts = vec![BTreeSet::new(); k];
            for (u, &l) in labels.iter().enumerate() {
                parts[l].insert(u);
            }
            out.push(parts);
            return;
        }
        let next = labels.iter().max().map_or(0, |m| m + 1);
        for l in 0..=next {
            labels.push(l);
            go(v + 1, n, labels, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

fn union(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
    a.union(b).copied().collect()
}

fn oracle_c_l(g: &Graph) -> Option<usize> {
    set_partitions(g.order())
        .into_iter()
        .filter(|parts| {
            parts.iter().enumerate().all(|(i, p)| {
                !ld(g, p)
                    && parts.iter().enumerate().any(|(j, q)| j != i && !ld(g, q) && ld(g, &union(p, q)))
            })
        })
        .map(|parts| parts.len())
        .max()
}

fn oracle_plain(g: &Graph) -> usize {
    set_partitions(g.order())
        .into_iter()
        .filter(|parts| {
            parts.iter().enumerate().all(|(i, p)| {
                (p.len() == 1 && dominates(g, p))
                    || (!dominates(g, p)
                        && parts
                            .iter()
                            .enumerate()
                            .any(|(j, q)| j != i && !dominates(g, q) && dominates(g, &union(p, q))))
            })
        })
        .map(|parts| parts.len())
        .max()
        .unwrap_or(0)
}

#[test]
fn bell_numbers() {
    let counts: Vec<usize> = (1..=6).map(|n| set_partitions(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 15, 52, 203]);
}

#[test]
fn c_l_matches_oracle_on_all_small_connected_graphs() {
    let mut checked = 0;
    for n in 1..=6 {
        for g in enumerate_graphs(n, true).unwrap() {
            let r = c_l_exact(&g).unwrap();
            assert_eq!(r.c_l, oracle_c_l(&g), "{}", ldc_core::format::to_graph6(&g));
            if let Some(c) = &r.certificate {
                assert!(c.verify(&g));
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 143);
}

#[test]
fn plain_matches_oracle() {
    assert_eq!(oracle_plain(&complete(3).unwrap()), 3);
    for n in 1..=6 {
        for g in enumerate_graphs(n, true).unwrap() {
            assert_eq!(plain_coalition_number(&g).unwrap(), oracle_plain(&g));
        }
    }
    for g in [cycle(7).unwrap(), path(7).unwrap(), star(7).unwrap()] {
        assert_eq!(plain_coalition_number(&g).unwrap(), oracle_plain(&g));
    }
}
