//! Coalition number for plain domination.
//!
//! A coalition partition is one in which every part is either a dominating
//! singleton or a non-dominating set whose union with some other
//! non-dominating part dominates.

use std::sync::atomic::Ordering;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::engine::{search_type, DomRule, Outcome};
use super::report::Status;
use super::{SolveOptions, TypeRules, TypeVector};
use crate::error::Result;
use crate::graph::Graph;
use crate::ld::is_dominating_mask;
use crate::vertex_set::combinations;

/// Domination number by increasing-size subset search.
pub fn domination_number(g: &Graph) -> usize {
    let n = g.order();
    (1..=n).find(|&k| combinations(n, k).any(|m| is_dominating_mask(g, m))).unwrap_or(0)
}

#[derive(Clone, Debug, Serialize)]
pub struct PlainReport {
    pub value: Option<usize>,
    pub parts: Option<Vec<Vec<usize>>>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub status: Status,
}

pub fn plain_coalition_number(g: &Graph) -> Result<usize> {
    let r = plain_coalition_number_with(g, &SolveOptions::default())?;
    Ok(r.value.unwrap_or(0))
}

/// Exact C(G) by descending `k`, with the same type-first search used for
/// LD-coalitions. The partner cap is Δ + 1.
pub fn plain_coalition_number_with(g: &Graph, opts: &SolveOptions) -> Result<PlainReport> {
    g.require_connected()?;
    let start = Instant::now();
    let n = g.order();
    let rules = TypeRules {
        min_good: domination_number(g),
        partner_cap: g.max_degree() + 1,
        singleton_self_sufficient: true,
    };
    let ctl = opts.control(start);
    for k in (1..=n).rev() {
        for t in rules.table(n, k).into_iter().filter(TypeVector::survives) {
            match search_type(g, &DomRule, &t.sizes, &ctl) {
                Outcome::Found(parts) => {
                    let parts = parts
                        .iter()
                        .map(|&m| (0..n).filter(|v| m >> v & 1 == 1).collect())
                        .collect();
                    return Ok(PlainReport {
                        value: Some(k),
                        parts: Some(parts),
                        nodes_explored: ctl.nodes.load(Ordering::Relaxed),
                        elapsed: start.elapsed(),
                        status: Status::Exact,
                    });
                }
                Outcome::Exhausted => {}
                Outcome::Aborted => {
                    return Ok(PlainReport {
                        value: None,
                        parts: None,
                        nodes_explored: ctl.nodes.load(Ordering::Relaxed),
                        elapsed: start.elapsed(),
                        status: Status::Inconclusive,
                    })
                }
            }
        }
    }
    Ok(PlainReport {
        value: None,
        parts: None,
        nodes_explored: ctl.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
        status: Status::None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn domination_numbers() {
        assert_eq!(domination_number(&complete(5).unwrap()), 1);
        assert_eq!(domination_number(&cycle(9).unwrap()), 3);
        assert_eq!(domination_number(&path(7).unwrap()), 3);
    }

    #[test]
    fn plain_values() {
        assert_eq!(plain_coalition_number(&complete(3).unwrap()).unwrap(), 3);
        assert_eq!(plain_coalition_number(&complete(1).unwrap()).unwrap(), 1);
        assert_eq!(plain_coalition_number(&star(5).unwrap()).unwrap(), 3);
    }
}
