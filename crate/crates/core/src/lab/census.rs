//! Small-graph and tree censuses for the extremal values of C_L.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::enumerate::{enumerate_graphs, enumerate_trees};
use crate::error::Result;
use crate::generators::{c5_plus_e, cycle, h_graph, k4_minus_e, path, spider, star};
use crate::graph::Graph;
use crate::ld::gamma_l;
use crate::solver::c_l_exact;

/// The graphs with `C_L = n`: `P_3, C_3, P_4, C_4, K_4 − e, H, C_5, C_5 + e`.
pub fn named_c_l_equals_n() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 3..=5 {
        if n < 5 {
            out.push(path(n).expect("path"));
        }
        out.push(cycle(n).expect("cycle"));
    }
    out.extend([k4_minus_e(), h_graph(), c5_plus_e()]);
    out
}

/// The trees with `C_L = n − 1`: `P_5` and `K_{1,3}`.
pub fn named_trees_c_l_n_minus_1() -> Vec<Graph> {
    vec![path(5).expect("path"), star(4).expect("star")]
}

pub fn canonical_set(graphs: &[Graph]) -> Result<BTreeSet<CanonicalForm>> {
    graphs.iter().map(canonical_form).collect()
}

/// Whether two lists hold the same isomorphism classes, each exactly once.
pub fn same_isomorphism_classes(a: &[Graph], b: &[Graph]) -> Result<bool> {
    let (x, y) = (canonical_set(a)?, canonical_set(b)?);
    Ok(x.len() == a.len() && y.len() == b.len() && x == y)
}

fn c_l_is(g: &Graph, target: usize) -> Result<bool> {
    Ok(c_l_exact(g)?.c_l == Some(target))
}

/// Connected graphs of order 3 to 5 with `C_L = n`, one per isomorphism class.
pub fn census_c_l_equals_n() -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 3..=5 {
        for g in enumerate_graphs(n, true)? {
            if c_l_is(&g, n)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// Number of connected graphs of order `n` with γ_L equal to `gamma`.
pub fn count_with_gamma_l(n: usize, gamma: usize) -> Result<usize> {
    let mut count = 0;
    for g in enumerate_graphs(n, true)? {
        if gamma_l(&g)?.0 == gamma {
            count += 1;
        }
    }
    Ok(count)
}

/// Trees of order 3 to 8 with `C_L = n − 1`.
pub fn census_trees_c_l_n_minus_1() -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 3..=8 {
        for t in enumerate_trees(n)? {
            if c_l_is(&t, n - 1)? {
                out.push(t);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpiderFact {
    pub legs: Vec<usize>,
    pub gamma_l: usize,
    pub c_l: Option<usize>,
}

/// γ_L and C_L of the four three-leg spiders of order 8.
pub fn order8_spiders() -> Result<Vec<SpiderFact>> {
    [[5, 1, 1], [4, 2, 1], [3, 3, 1], [3, 2, 2]]
        .iter()
        .map(|legs| {
            let g = spider(legs)?;
            Ok(SpiderFact { legs: legs.to_vec(), gamma_l: gamma_l(&g)?.0, c_l: c_l_exact(&g)?.c_l })
        })
        .collect()
}

/// Three of the four spiders have γ_L = 4 and the fourth has C_L < 7.
pub fn spider_facts_hold(facts: &[SpiderFact]) -> bool {
    let big: Vec<&SpiderFact> = facts.iter().filter(|f| f.gamma_l == 4).collect();
    let rest: Vec<&SpiderFact> = facts.iter().filter(|f| f.gamma_l != 4).collect();
    facts.len() == 4 && big.len() == 3 && rest.iter().all(|f| f.c_l.is_none_or(|c| c < 7))
}
