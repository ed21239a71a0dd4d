//! Exact search for the maximum size of an LDC-partition, the decision
//! version "is there an LDC-partition with exactly `k` parts", and the plain
//! (domination) coalition number.
//!
//! Every search is type-first: for a target number of parts `k` the
//! non-increasing part-size types are enumerated largest-first, the types
//! ruled out by [`types::TypeRules`] are skipped, and each surviving type is
//! handed to the assignment search.

mod engine;
mod plain;
mod report;
pub mod types;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ld::gamma_l;
use crate::partition::{certificate_from_masks, LdcCertificate};
use crate::vertex_set::Mask;

use engine::{Control, LdRule, Outcome, Rule};
pub use plain::{domination_number, plain_coalition_number, plain_coalition_number_with, PlainReport};
pub use report::{Bound, SolveReport, Status, SCHEMA_VERSION};
pub use types::{integer_partitions, TypeRules, TypeVector};

/// Node and wall-clock caps. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn seconds(s: f64) -> Budget {
        Budget { max_nodes: None, max_time: Some(Duration::from_secs_f64(s)) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: Budget,
    pub workers: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: Budget::unlimited(), workers: 1 }
    }
}

impl SolveOptions {
    fn control(&self, start: Instant) -> Control {
        Control::new(self.budget.max_time.map(|t| start + t), self.budget.max_nodes)
    }
}

/// Result of a single-`k` or single-type search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Found(LdcCertificate),
    /// The search finished without finding a partition.
    None,
    /// A budget ran out first.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct DecisionReport {
    pub decision: Decision,
    /// Types that survived the type-level rules and were searched.
    pub types_searched: Vec<Vec<usize>>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

pub(crate) fn ld_type_rules(g: &Graph, gamma: usize) -> TypeRules {
    TypeRules { min_good: gamma, partner_cap: 2 * g.max_degree(), singleton_self_sufficient: false }
}

/// Searches the given types in order, possibly on several workers, and
/// returns the first partition found.
fn search_types<R: Rule>(g: &Graph, rule: &R, types: &[Vec<usize>], workers: usize, ctl: &Control) -> Outcome {
    if workers <= 1 || types.len() <= 1 {
        for t in types {
            match engine::search_type(g, rule, t, ctl) {
                Outcome::Exhausted => continue,
                other => return other,
            }
        }
        return Outcome::Exhausted;
    }
    let next = AtomicUsize::new(0);
    let found: Mutex<Option<(usize, Vec<Mask>)>> = Mutex::new(None);
    std::thread::scope(|s| {
        for _ in 0..workers.min(types.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= types.len() || ctl.found.load(Ordering::Relaxed) || ctl.exhausted.load(Ordering::Relaxed) {
                    break;
                }
                if let Outcome::Found(parts) = engine::search_type(g, rule, &types[i], ctl) {
                    let mut slot = found.lock().unwrap();
                    if slot.as_ref().is_none_or(|(j, _)| i < *j) {
                        *slot = Some((i, parts));
                    }
                    ctl.found.store(true, Ordering::Relaxed);
                }
            });
        }
    });
    match found.into_inner().unwrap() {
        Some((_, parts)) => Outcome::Found(parts),
        None if ctl.exhausted.load(Ordering::Relaxed) => Outcome::Aborted,
        None => Outcome::Exhausted,
    }
}

fn to_certificate(g: &Graph, parts: &[Mask]) -> Result<LdcCertificate> {
    certificate_from_masks(g, parts)
        .ok_or_else(|| Error::Internal("search produced a partition that does not verify".into()))
}

fn decide(g: &Graph, types: Vec<Vec<usize>>, opts: &SolveOptions) -> Result<DecisionReport> {
    let start = Instant::now();
    let ctl = opts.control(start);
    let decision = match search_types(g, &LdRule, &types, opts.workers, &ctl) {
        Outcome::Found(parts) => Decision::Found(to_certificate(g, &parts)?),
        Outcome::Exhausted => Decision::None,
        Outcome::Aborted => Decision::Inconclusive,
    };
    Ok(DecisionReport {
        decision,
        types_searched: types,
        nodes_explored: ctl.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}

/// Looks for an LDC-partition with exactly `k` parts.
pub fn c_l_at_least_with(g: &Graph, k: usize, opts: &SolveOptions) -> Result<DecisionReport> {
    g.require_connected()?;
    if k == 0 {
        return Err(Error::Precondition("the number of parts must be at least 1".into()));
    }
    let n = g.order();
    let (gamma, _) = gamma_l(g)?;
    let rules = ld_type_rules(g, gamma);
    // a partition with more than n - γ_L + 2 parts cannot exist
    let types = if n <= 2 || k > n || k + gamma > n + 2 {
        Vec::new()
    } else {
        rules.table(n, k).into_iter().filter(TypeVector::survives).map(|t| t.sizes).collect()
    };
    decide(g, types, opts)
}

/// Unbudgeted form of [`c_l_at_least_with`]: `Some` with a certificate of
/// exactly `k` parts, or `None` after exhausting the search.
pub fn c_l_at_least(g: &Graph, k: usize) -> Result<Option<LdcCertificate>> {
    match c_l_at_least_with(g, k, &SolveOptions::default())?.decision {
        Decision::Found(c) => Ok(Some(c)),
        _ => Ok(None),
    }
}

/// Assignment search restricted to one part-size type. The type-level rules
/// are not applied; every assignment of the type is considered.
pub fn search_type(g: &Graph, sizes: &[usize], opts: &SolveOptions) -> Result<DecisionReport> {
    g.require_connected()?;
    let mut sorted = sizes.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.iter().sum::<usize>() != g.order() || sorted.last() == Some(&0) {
        return Err(Error::Precondition(format!("type {sizes:?} is not a partition of {}", g.order())));
    }
    decide(g, vec![sorted], opts)
}

/// Exact C_L with an unlimited budget.
pub fn c_l_exact(g: &Graph) -> Result<SolveReport> {
    c_l_exact_with(g, &SolveOptions::default())
}

pub fn c_l_exact_with(g: &Graph, opts: &SolveOptions) -> Result<SolveReport> {
    g.require_connected()?;
    let start = Instant::now();
    let n = g.order();
    let mut bounds = Vec::new();
    if n <= 2 {
        return Ok(SolveReport::none(bounds, 0, start.elapsed()));
    }
    let (gamma, _) = gamma_l(g)?;
    let upper = n.min(n + 2 - gamma);
    bounds.push(Bound::new("gamma_l", gamma));
    bounds.push(Bound::new("max_degree", g.max_degree()));
    bounds.push(Bound::new("partner_cap", 2 * g.max_degree()));
    bounds.push(Bound::new("upper_n_minus_gamma_plus_2", upper));
    let rules = ld_type_rules(g, gamma);
    let ctl = opts.control(start);
    for k in (2..=upper).rev() {
        let types: Vec<Vec<usize>> =
            rules.table(n, k).into_iter().filter(TypeVector::survives).map(|t| t.sizes).collect();
        match search_types(g, &LdRule, &types, opts.workers, &ctl) {
            Outcome::Found(parts) => {
                let cert = to_certificate(g, &parts)?;
                let nodes = ctl.nodes.load(Ordering::Relaxed);
                return Ok(SolveReport::exact(k, cert, bounds, nodes, start.elapsed()));
            }
            Outcome::Exhausted => continue,
            Outcome::Aborted => {
                bounds.push(Bound::new("unresolved_k", k));
                let nodes = ctl.nodes.load(Ordering::Relaxed);
                return Ok(SolveReport::inconclusive(bounds, nodes, start.elapsed()));
            }
        }
    }
    Ok(SolveReport::none(bounds, ctl.nodes.load(Ordering::Relaxed), start.elapsed()))
}
