//! The reproduction suite: every acceptance claim, run end to end, with one
//! record per claim.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use ldc_core::enumerate::enumerate_graphs;
use ldc_core::generators::{cycle, path};
use ldc_core::lab::census::{
    census_c_l_equals_n, census_trees_c_l_n_minus_1, count_with_gamma_l, named_c_l_equals_n,
    named_trees_c_l_n_minus_1, order8_spiders, same_isomorphism_classes, spider_facts_hold,
};
use ldc_core::lab::cubic::find_cubic_sharpness_witness;
use ldc_core::lab::lemmas::{verify_lemma_ld5_1, verify_lemma_ld5_2};
use ldc_core::lab::properties::{check_corpus, plain_coalition_values};
use ldc_core::lab::tables::{family_check, refute_surviving_types, Verdict};
use ldc_core::lab::{c_l_cycle_formula, c_l_path_formula, LabFamily};
use ldc_core::ld::{gamma_l, log_lower_bound};
use ldc_core::solver::{c_l_exact, c_l_exact_with, SolveOptions, Status};
use ldc_core::Result;
use serde::Serialize;

use crate::oracle::naive_c_l;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl ClaimStatus {
    pub fn label(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Inconclusive => "INCONCLUSIVE",
        }
    }
}

pub struct Claim {
    pub id: &'static str,
    pub groups: &'static [&'static str],
    pub location: &'static str,
    pub expected: &'static str,
    pub time_limit: Duration,
    run: fn(&SolveOptions) -> Result<(ClaimStatus, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub location: String,
    pub expected: String,
    pub computed: String,
    pub status: ClaimStatus,
    pub elapsed_ms: f64,
    pub time_limit_s: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproReport {
    pub schema_version: u32,
    pub overall: ClaimStatus,
    pub claims: Vec<ClaimRecord>,
}

impl ReproReport {
    pub fn passed(&self) -> bool {
        self.overall == ClaimStatus::Pass
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let _ = writeln!(
                out,
                "{:<12} {:<18} {:>10.1} ms  {}",
                c.status.label(),
                c.id,
                c.elapsed_ms,
                c.computed
            );
        }
        let _ = writeln!(out, "overall: {}", self.overall.label());
        out
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "gamma-closed-form",
            groups: &["gamma", "cycles", "paths"],
            location: "locating-domination number of cycles and paths",
            expected: "gamma_l(C_n) = gamma_l(P_n) = ceil(2n/5) for 7 <= n <= 30",
            time_limit: secs(60),
            run: gamma_closed_form,
        },
        Claim {
            id: "gamma-bounds",
            groups: &["gamma", "census"],
            location: "logarithmic lower bound and n-1 upper bound",
            expected: "ceil(log2(n+1)-1) <= gamma_l <= n-1 on all connected graphs with n <= 6, right equality exactly for stars and complete graphs",
            time_limit: secs(60),
            run: gamma_bounds,
        },
        Claim {
            id: "paths",
            groups: &["paths", "tables"],
            location: "C_L of paths",
            expected: "C_L(P_n) = 3, 4 (n=4..6), 5 (n=7..15), 6 (n>=16)",
            time_limit: secs(1200),
            run: paths,
        },
        Claim {
            id: "cycles",
            groups: &["cycles", "tables"],
            location: "C_L of cycles",
            expected: "C_L(C_n) = n (n<=5), 5 (6..11, 13, 15), 6 (12, 14, n>=16)",
            time_limit: secs(1800),
            run: cycles,
        },
        Claim {
            id: "c15-five-sets",
            groups: &["lemmas"],
            location: "singleton completers of 5-sets of C_15",
            expected: "every non-LD 5-subset has at most one completer; completed sets have gaps [2,1,2,1,2,1]",
            time_limit: secs(10),
            run: c15_five_sets,
        },
        Claim {
            id: "c15-six-sets",
            groups: &["lemmas"],
            location: "singleton completers of 6-sets of C_15",
            expected: "every non-LD 6-subset has at most three completers; with three, one undominated vertex and N[A] connected",
            time_limit: secs(30),
            run: c15_six_sets,
        },
        Claim {
            id: "c-l-equals-n",
            groups: &["census"],
            location: "graphs with C_L = n",
            expected: "exactly P3, C3, P4, C4, K4-e, H, C5, C5+e; 10 of 21 connected order-5 graphs have gamma_l = 2",
            time_limit: secs(300),
            run: c_l_equals_n,
        },
        Claim {
            id: "trees",
            groups: &["census", "trees"],
            location: "trees with C_L = n-1",
            expected: "exactly P5 and K_{1,3} among trees of order 3..8; gamma_l(P8) = 4; order-8 spider facts",
            time_limit: secs(600),
            run: trees,
        },
        Claim {
            id: "properties",
            groups: &["properties"],
            location: "structural bounds on C_L and constructive partitions",
            expected: "zero violations over the corpus; plain coalition number of C_n, P_n at most 6 for n <= 10",
            time_limit: secs(1800),
            run: properties,
        },
        Claim {
            id: "oracle",
            groups: &["oracle"],
            location: "exact solver against unpruned enumeration",
            expected: "c_l_exact equals the all-partitions oracle on every connected graph with n <= 6",
            time_limit: secs(600),
            run: oracle,
        },
        Claim {
            id: "cubic-sharpness",
            groups: &["sharpness"],
            location: "partner bound 2 Delta is attained",
            expected: "a connected cubic graph on <= 12 vertices with a dominating non-LD set having 6 singleton completers",
            time_limit: secs(600),
            run: cubic_sharpness,
        },
    ]
}

fn verdict(ok: bool) -> ClaimStatus {
    if ok {
        ClaimStatus::Pass
    } else {
        ClaimStatus::Fail
    }
}

fn gamma_closed_form(_: &SolveOptions) -> Result<(ClaimStatus, String)> {
    let mut bad = Vec::new();
    for n in 7usize..=30 {
        let want = (2 * n).div_ceil(5);
        for (name, g) in [("C", cycle(n)?), ("P", path(n)?)] {
            let got = gamma_l(&g)?.0;
            if got != want {
                bad.push(format!("{name}_{n}: {got} != {want}"));
            }
        }
    }
    Ok(if bad.is_empty() {
        (ClaimStatus::Pass, "48 values match".into())
    } else {
        (ClaimStatus::Fail, bad.join("; "))
    })
}

fn gamma_bounds(_: &SolveOptions) -> Result<(ClaimStatus, String)> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 2..=6 {
        for g in enumerate_graphs(n, true)? {
            checked += 1;
            let gamma = gamma_l(&g)?.0;
            let tight = gamma == n - 1;
            if gamma < log_lower_bound(n) || gamma > n - 1 || tight != (g.is_star() || g.is_complete()) {
                bad.push(ldc_core::format::to_graph6(&g));
            }
        }
    }
    Ok((verdict(bad.is_empty()), format!("{checked} graphs, {} violations {bad:?}", bad.len())))
}

/// Full search up to order 12, refutation where the closed form is 5, and
/// certificates above 12.
fn family_claim(
    family: LabFamily,
    formula: fn(usize) -> Result<usize>,
    refute: &[usize],
    opts: &SolveOptions,
) -> Result<(ClaimStatus, String)> {
    let mut bad = Vec::new();
    let mut inconclusive = Vec::new();
    for n in 3..=12 {
        let r = c_l_exact_with(&family.graph(n)?, opts)?;
        match r.status {
            Status::Inconclusive => inconclusive.push(format!("n={n} search")),
            _ if r.c_l != Some(formula(n)?) => bad.push(format!("n={n}: {:?}", r.c_l)),
            _ => {}
        }
    }
    for &n in refute {
        let r = refute_surviving_types(n, family, opts)?;
        if r.inconclusive() {
            inconclusive.push(format!("n={n} refutation"));
        } else if !r.all_refuted() {
            bad.push(format!("n={n}: a surviving type is realized"));
        }
    }
    for n in 13..=17 {
        let c = family_check(n, family, opts)?;
        match c.verdict {
            Verdict::Pass => {}
            Verdict::Fail => bad.push(format!("n={n}: check failed")),
            Verdict::Inconclusive => inconclusive.push(format!("n={n} check")),
        }
    }
    let status = if !bad.is_empty() {
        ClaimStatus::Fail
    } else if !inconclusive.is_empty() {
        ClaimStatus::Inconclusive
    } else {
        ClaimStatus::Pass
    };
    let mut text = String::from("n=3..12 exhaustive, n=13..17 by certificate and refutation");
    if !bad.is_empty() {
        text = format!("{text}; mismatches: {}", bad.join(", "));
    }
    if !inconclusive.is_empty() {
        text = format!("{text}; budget exhausted: {}", inconclusive.join(", "));
    }
    Ok((status, text))
}

fn paths(opts: &SolveOptions) -> Result<(ClaimStatus, String)> {
    family_claim(LabFamily::Path, c_l_path_formula, &[12], opts)
}

fn cycles(opts: &SolveOptions) -> Result<(ClaimStatus, String)> {
    family_claim(LabFamily::Cycle, c_l_cycle_formula, &[], opts)
}

fn c15_five_sets(_: &SolveOptions) -> Result<(ClaimStatus, String)> {
    let r = verify_lemma_ld5_1();
    let with_one = r.completer_histogram.get(1).copied().unwrap_or(0);
    Ok((
        verdict(r.passed() && r.subsets_scanned == 3003),
        format!("{} subsets, {with_one} with one completer, {} violations", r.subsets_scanned, r.violations.len()),
    ))
}

fn c15_six_sets(_: &SolveOptions) -> Result<(ClaimStatus, String)> {
    let r = verify_lemma_ld5_2();
    let mut text = format!(
        "{} subsets, completer histogram {:?}, {} violations",
        r.base.subsets_scanned,
        r.base.completer_histogram,
        r.base.violations.len()
    );
    if !r.base.passed() {
        let example = r.dominating_violations.first().cloned().unwrap_or_default();
        let _ = write!(
            text,
            " ({} of them dominating sets with 4 completers, e.g. {example}); holds for non-dominating sets: {}",
            r.dominating_violations.len(),
            r.holds_for_non_dominating()
        );
    }
    Ok((verdict(r.base.passed() && r.base.subsets_scanned == 5005), text))
}

fn c_l_equals_n(_: &SolveOptions) -> Result<(ClaimStatus, String)> {
    let found = census_c_l_equals_n()?;
    let same = same_isomorphism_classes(&found, &named_c_l_equals_n())?;
    let order5 = enumerate_graphs(5, true)?.len();
    let gamma2 = count_with_gamma_l(5, 2)?;
    Ok((
        verdict(same && order5 == 21 && gamma2 == 10),
        format!("{} graphs, matches list: {same}; {gamma2} of {order5} order-5 graphs have gamma_l = 2", found.len()),
    ))
}

fn trees(_: &SolveOptions) -> Result<(ClaimStatus, String)> {
    let found = census_trees_c_l_n_minus_1()?;
    let same = same_isomorphism_classes(&found, &named_trees_c_l_n_minus_1())?;
    let p8 = gamma_l(&path(8)?)?.0;
    let spiders = order8_spiders()?;
    let spiders_ok = spider_facts_hold(&spiders);
    let desc: Vec<String> = spiders
        .iter()
        .map(|s| format!("{:?}: gamma_l={} C_L={:?}", s.legs, s.gamma_l, s.c_l))
        .collect();
    Ok((
        verdict(same && p8 == 4 && spiders_ok),
        format!("{} trees, matches list: {same}; gamma_l(P8)={p8}; spiders {}", found.len(), desc.join(", ")),
    ))
}

fn properties(_: &SolveOptions) -> Result<(ClaimStatus, String)> {
    let r = check_corpus()?;
    let plain = plain_coalition_values(10)?;
    let plain_bad: Vec<String> =
        plain.iter().filter(|(_, _, c)| *c > 6).map(|(f, n, c)| format!("{f} {n}: {c}")).collect();
    let ok = r.violations.is_empty() && plain_bad.is_empty();
    let mut text = format!("{} graphs, {} violations; plain coalition max {}", r.graphs_checked, r.violations.len(),
        plain.iter().map(|p| p.2).max().unwrap_or(0));
    if !ok {
        let _ = write!(text, "; {:?} {:?}", r.violations, plain_bad);
    }
    Ok((verdict(ok), text))
}

fn oracle(_: &SolveOptions) -> Result<(ClaimStatus, String)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=6 {
        for g in enumerate_graphs(n, true)? {
            checked += 1;
            let got = c_l_exact(&g)?.c_l;
            if got != naive_c_l(&g) {
                bad.push(ldc_core::format::to_graph6(&g));
            }
        }
    }
    Ok((verdict(bad.is_empty()), format!("{checked} graphs, {} disagreements {bad:?}", bad.len())))
}

fn cubic_sharpness(_: &SolveOptions) -> Result<(ClaimStatus, String)> {
    Ok(match find_cubic_sharpness_witness(12)? {
        Some(w) => (
            verdict(w.completers.len() == 6),
            format!(
                "order {} (graph {} examined), set {:?}, completers {:?}, six-partner partition: {}",
                w.order,
                w.graphs_examined,
                w.set,
                w.completers,
                w.partition.is_some()
            ),
        ),
        None => (ClaimStatus::Fail, "no witness on at most 12 vertices".into()),
    })
}

/// Whether `claim` is selected by `only`: a claim id or a group name.
pub fn selected(claim: &Claim, only: &[String]) -> bool {
    only.is_empty() || only.iter().any(|o| o == claim.id || claim.groups.contains(&o.as_str()))
}

pub fn run_claim(claim: &Claim, opts: &SolveOptions) -> ClaimRecord {
    let start = Instant::now();
    let (mut status, mut computed) = match (claim.run)(opts) {
        Ok(r) => r,
        Err(e) => (ClaimStatus::Fail, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    if status == ClaimStatus::Pass && elapsed > claim.time_limit {
        status = ClaimStatus::Fail;
        computed = format!("{computed}; exceeded the {} s limit", claim.time_limit.as_secs());
    }
    ClaimRecord {
        id: claim.id.to_string(),
        location: claim.location.to_string(),
        expected: claim.expected.to_string(),
        computed,
        status,
        elapsed_ms: elapsed.as_secs_f64() * 1000.0,
        time_limit_s: claim.time_limit.as_secs(),
    }
}

pub fn reproduce(only: &[String], opts: &SolveOptions) -> ReproReport {
    let claims: Vec<ClaimRecord> =
        claims().iter().filter(|c| selected(c, only)).map(|c| run_claim(c, opts)).collect();
    let overall = if claims.iter().all(|c| c.status == ClaimStatus::Pass) {
        ClaimStatus::Pass
    } else if claims.iter().any(|c| c.status == ClaimStatus::Fail) {
        ClaimStatus::Fail
    } else {
        ClaimStatus::Inconclusive
    };
    ReproReport { schema_version: SCHEMA_VERSION, overall, claims }
}
