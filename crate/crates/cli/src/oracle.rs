//! Unpruned reference computation of C_L for the oracle-equivalence claim.
//! Uses its own trace-based LD test rather than the library's bitmask one.

use std::collections::BTreeSet;

use ldc_core::Graph;

type Set = BTreeSet<usize>;

fn neighbors(g: &Graph, v: usize) -> Set {
    (0..g.order()).filter(|&u| g.has_edge(u, v)).collect()
}

fn is_ld(g: &Graph, s: &Set) -> bool {
    let mut traces = BTreeSet::new();
    for v in (0..g.order()).filter(|v| !s.contains(v)) {
        let t: Set = neighbors(g, v).intersection(s).copied().collect();
        if t.is_empty() || !traces.insert(t) {
            return false;
        }
    }
    true
}

fn for_each_partition(n: usize, f: &mut impl FnMut(&[Set])) {
    fn go(v: usize, n: usize, parts: &mut Vec<Set>, f: &mut impl FnMut(&[Set])) {
        if v == n {
            f(parts);
            return;
        }
        for i in 0..=parts.len() {
            if i == parts.len() {
                parts.push(Set::new());
            }
            parts[i].insert(v);
            go(v + 1, n, parts, f);
            parts[i].remove(&v);
            if parts[i].is_empty() {
                parts.pop();
            }
        }
    }
    go(0, n, &mut Vec::new(), f);
}

/// Largest LDC-partition found by checking every set partition, or `None`.
pub fn naive_c_l(g: &Graph) -> Option<usize> {
    let mut best = None;
    for_each_partition(g.order(), &mut |parts| {
        let ld: Vec<bool> = parts.iter().map(|p| is_ld(g, p)).collect();
        let ok = (0..parts.len()).all(|i| {
            !ld[i]
                && (0..parts.len()).any(|j| {
                    j != i && !ld[j] && is_ld(g, &parts[i].union(&parts[j]).copied().collect())
                })
        });
        if ok && best.is_none_or(|b| parts.len() > b) {
            best = Some(parts.len());
        }
    });
    best
}
