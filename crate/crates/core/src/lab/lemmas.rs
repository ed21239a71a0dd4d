//! Exhaustive subset scans on `C_15` and `P_12`.

use serde::Serialize;

use super::gaps::{gap_configuration, path_gap_configuration};
use crate::generators::{cycle, path};
use crate::graph::Graph;
use crate::ld::is_ld_mask;
use crate::partition::singleton_completers;
use crate::vertex_set::{combinations, Mask, VertexSet};

/// Gap configuration shared by every LD-set of size 6 in `C_15`.
pub const C15_LD6_GAPS: [usize; 6] = [2, 1, 2, 1, 2, 1];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub subsets_scanned: usize,
    pub non_ld_subsets: usize,
    /// Histogram of singleton-completer counts over the non-LD subsets.
    pub completer_histogram: Vec<usize>,
    pub violations: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, count: usize) {
        if self.completer_histogram.len() <= count {
            self.completer_histogram.resize(count + 1, 0);
        }
        self.completer_histogram[count] += 1;
    }
}

fn c15() -> Graph {
    cycle(15).expect("C_15")
}

fn show(m: Mask) -> String {
    VertexSet::from_mask_unchecked(15, m).to_string()
}

fn is_c15_ld6_shape(m: Mask) -> bool {
    let gaps = gap_configuration(15, &VertexSet::from_mask_unchecked(15, m)).expect("non-empty");
    gaps.is_rotation_of(&C15_LD6_GAPS)
}

/// Every non-LD 5-subset of `C_15` has at most one singleton completer, and
/// each completed 6-set has the `[2,1,2,1,2,1]` shape.
pub fn verify_lemma_ld5_1() -> LemmaReport {
    let g = c15();
    let mut r = LemmaReport::default();
    for a in combinations(15, 5) {
        r.subsets_scanned += 1;
        if is_ld_mask(&g, a) {
            r.violations.push(format!("{} is an LD-set", show(a)));
            continue;
        }
        r.non_ld_subsets += 1;
        let ws = singleton_completers(&g, a);
        r.record(ws.len());
        if ws.len() > 1 {
            r.violations.push(format!("{} has completers {ws:?}", show(a)));
        }
        for w in ws {
            let full = a | 1 << w;
            if !is_c15_ld6_shape(full) {
                r.violations.push(format!("{} completes to {} of another shape", show(a), show(full)));
            }
        }
    }
    r
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Lemma2Report {
    pub base: LemmaReport,
    /// Non-LD sets whose closed neighborhood induces a disconnected subgraph.
    pub disconnected_closure: usize,
    /// Non-LD sets leaving at least four vertices undominated.
    pub four_undominated: usize,
    /// Violations among sets that already dominate `C_15`. The three-completer
    /// bound fails only for these: a dominating set with a single pair of
    /// equal traces can have four completers.
    pub dominating_violations: Vec<String>,
}

impl Lemma2Report {
    /// The statement restricted to sets that do not dominate.
    pub fn holds_for_non_dominating(&self) -> bool {
        self.base.violations.len() == self.dominating_violations.len()
    }
}

/// Every non-LD 6-subset of `C_15` has at most three singleton completers;
/// with exactly three, one vertex is undominated and `N[A]` is connected.
pub fn verify_lemma_ld5_2() -> Lemma2Report {
    let g = c15();
    let mut r = Lemma2Report::default();
    for a in combinations(15, 6) {
        r.base.subsets_scanned += 1;
        if is_ld_mask(&g, a) {
            continue;
        }
        r.base.non_ld_subsets += 1;
        let count = singleton_completers(&g, a).len();
        r.base.record(count);
        let closure = g.closed_mask_of(a);
        let undominated = (g.all_mask() & !closure).count_ones();
        let connected = g.induces_connected(closure);
        if count > 3 {
            let msg = format!("{} has {count} completers", show(a));
            if undominated == 0 {
                r.dominating_violations.push(msg.clone());
            }
            r.base.violations.push(msg);
        }
        if count == 3 && (undominated != 1 || !connected) {
            r.base.violations.push(format!(
                "{} has 3 completers with {undominated} undominated vertices, N[A] connected: {connected}",
                show(a)
            ));
        }
        if !connected {
            r.disconnected_closure += 1;
            if count > 0 {
                r.base.violations.push(format!("{} has disconnected N[A] but {count} completers", show(a)));
            }
        }
        if undominated >= 4 {
            r.four_undominated += 1;
            if count > 0 {
                r.base.violations.push(format!("{} leaves {undominated} undominated but has completers", show(a)));
            }
        }
    }
    r
}

/// The 6-subsets of `C_15` that are LD-sets, each checked against the
/// `[2,1,2,1,2,1]` shape; returns `(ld_sets, mismatches)`.
pub fn c15_ld6_sets() -> (Vec<Mask>, usize) {
    let g = c15();
    let mut ld = Vec::new();
    let mut mismatches = 0;
    for a in combinations(15, 6) {
        let is_ld = is_ld_mask(&g, a);
        if is_ld != is_c15_ld6_shape(a) {
            mismatches += 1;
        }
        if is_ld {
            ld.push(a);
        }
    }
    (ld, mismatches)
}

/// All 5-element LD-sets of `P_12`, as 1-indexed vertex lists with their
/// linear gap configurations.
pub fn p12_ld5_sets() -> Vec<(Vec<usize>, Vec<usize>)> {
    let g = path(12).expect("P_12");
    combinations(12, 5)
        .filter(|&a| is_ld_mask(&g, a))
        .map(|a| {
            let s = VertexSet::from_mask_unchecked(12, a);
            let gaps = path_gap_configuration(12, &s).expect("non-empty").gaps;
            (s.iter().map(|v| v + 1).collect(), gaps)
        })
        .collect()
}
