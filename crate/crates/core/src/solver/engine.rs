//! Assignment search inside a single part-size type.
//!
//! Vertices are placed in ascending order. Parts are ordered by size
//! (largest first) and an empty part may only be opened when the previous
//! part of the same size is already open, which removes the permutations of
//! equal-size parts. After each placement the branch is cut when
//!
//! - the touched part became good (good sets are closed under supersets),
//!   unless the rule allows good singletons and the part is a singleton;
//! - some open part can no longer reach a good union with any other part,
//!   even if every unplaced vertex were added to the pair.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use crate::graph::Graph;
use crate::ld::{is_dominating_mask, is_ld_mask};
use crate::vertex_set::{full_mask, Mask};

pub(crate) trait Rule: Sync {
    fn good(&self, g: &Graph, m: Mask) -> bool;
    /// Whether a good singleton is an acceptable part on its own.
    fn singleton_ok(&self) -> bool;
}

pub(crate) struct LdRule;

impl Rule for LdRule {
    #[inline]
    fn good(&self, g: &Graph, m: Mask) -> bool {
        is_ld_mask(g, m)
    }

    fn singleton_ok(&self) -> bool {
        false
    }
}

pub(crate) struct DomRule;

impl Rule for DomRule {
    #[inline]
    fn good(&self, g: &Graph, m: Mask) -> bool {
        is_dominating_mask(g, m)
    }

    fn singleton_ok(&self) -> bool {
        true
    }
}

/// Shared limits and flags for one search, possibly split across workers.
pub(crate) struct Control {
    pub deadline: Option<Instant>,
    pub max_nodes: Option<u64>,
    pub nodes: AtomicU64,
    /// Set when a worker found a partition and the others may stop.
    pub found: AtomicBool,
    /// Set when a budget ran out.
    pub exhausted: AtomicBool,
}

impl Control {
    pub fn new(deadline: Option<Instant>, max_nodes: Option<u64>) -> Control {
        Control {
            deadline,
            max_nodes,
            nodes: AtomicU64::new(0),
            found: AtomicBool::new(false),
            exhausted: AtomicBool::new(false),
        }
    }

    fn stop(&self) -> bool {
        self.found.load(Ordering::Relaxed) || self.exhausted.load(Ordering::Relaxed)
    }

    fn charge(&self, batch: u64) -> bool {
        let total = self.nodes.fetch_add(batch, Ordering::Relaxed) + batch;
        let over_nodes = self.max_nodes.is_some_and(|m| total > m);
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        !self.stop()
    }
}

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found(Vec<Mask>),
    Exhausted,
    Aborted,
}

const BATCH: u64 = 1024;

struct Engine<'a, R: Rule> {
    g: &'a Graph,
    rule: &'a R,
    ctl: &'a Control,
    n: usize,
    sizes: Vec<usize>,
    open_after: Vec<Option<usize>>,
    parts: Vec<Mask>,
    counts: Vec<usize>,
    pending: u64,
    aborted: bool,
}

impl<R: Rule> Engine<'_, R> {
    fn self_sufficient(&self, i: usize) -> bool {
        self.rule.singleton_ok()
            && self.sizes[i] == 1
            && self.counts[i] == 1
            && self.rule.good(self.g, self.parts[i])
    }

    fn feasible(&self, touched: usize, rest: Mask) -> bool {
        let t = self.parts[touched];
        if self.rule.good(self.g, t) && !(self.rule.singleton_ok() && self.sizes[touched] == 1) {
            return false;
        }
        let k = self.parts.len();
        let sufficient: Vec<bool> = (0..k).map(|i| self.self_sufficient(i)).collect();
        (0..k).filter(|&i| self.counts[i] > 0 && !sufficient[i]).all(|i| {
            (0..k).any(|j| {
                j != i && !sufficient[j] && self.rule.good(self.g, self.parts[i] | self.parts[j] | rest)
            })
        })
    }

    fn leaf_ok(&self) -> bool {
        let k = self.parts.len();
        let good: Vec<bool> = self.parts.iter().map(|&p| self.rule.good(self.g, p)).collect();
        (0..k).all(|i| {
            if good[i] {
                return self.rule.singleton_ok() && self.parts[i].count_ones() == 1;
            }
            (0..k).any(|j| j != i && !good[j] && self.rule.good(self.g, self.parts[i] | self.parts[j]))
        })
    }

    fn dfs(&mut self, v: usize, rest: Mask) -> bool {
        if v == self.n {
            return self.leaf_ok();
        }
        self.pending += 1;
        let over_nodes =
            self.ctl.max_nodes.is_some_and(|m| self.ctl.nodes.load(Ordering::Relaxed) + self.pending > m);
        if self.pending >= BATCH || over_nodes {
            let go_on = self.ctl.charge(self.pending);
            self.pending = 0;
            if !go_on {
                self.aborted = true;
                return false;
            }
        }
        let bit: Mask = 1 << v;
        let rest = rest & !bit;
        for p in 0..self.parts.len() {
            if self.counts[p] == self.sizes[p] {
                continue;
            }
            if self.counts[p] == 0 {
                if let Some(prev) = self.open_after[p] {
                    if self.counts[prev] == 0 {
                        continue;
                    }
                }
            }
            self.parts[p] |= bit;
            self.counts[p] += 1;
            let hit = self.feasible(p, rest) && self.dfs(v + 1, rest);
            if hit {
                return true;
            }
            self.parts[p] &= !bit;
            self.counts[p] -= 1;
            if self.aborted {
                return false;
            }
        }
        false
    }
}

/// Searches for a partition of the given non-increasing type.
pub(crate) fn search_type<R: Rule>(g: &Graph, rule: &R, sizes: &[usize], ctl: &Control) -> Outcome {
    let n = g.order();
    debug_assert_eq!(sizes.iter().sum::<usize>(), n);
    let open_after = (0..sizes.len())
        .map(|p| (p > 0 && sizes[p - 1] == sizes[p]).then(|| p - 1))
        .collect();
    let mut e = Engine {
        g,
        rule,
        ctl,
        n,
        sizes: sizes.to_vec(),
        open_after,
        parts: vec![0; sizes.len()],
        counts: vec![0; sizes.len()],
        pending: 0,
        aborted: false,
    };
    let hit = e.dfs(0, full_mask(n));
    ctl.charge(e.pending);
    if hit {
        Outcome::Found(e.parts)
    } else if e.aborted {
        Outcome::Aborted
    } else {
        Outcome::Exhausted
    }
}
