//! Structural properties of C_L checked over a fixed corpus of graphs.

use serde::Serialize;

use crate::builders::{build_diam3_partition, build_from_domatic, build_halves_partition, build_twin_partition};
use crate::enumerate::enumerate_graphs;
use crate::error::Result;
use crate::generators::{complete, cycle, path, spider, star};
use crate::graph::Graph;
use crate::ld::{d_loc, gamma_l};
use crate::partition::{partner_count, LdcCertificate};
use crate::solver::{c_l_exact, plain_coalition_number};

/// All connected graphs of order at most 6, paths and cycles up to order 17,
/// stars and complete graphs up to order 8, and three-leg spiders up to
/// order 8.
pub fn property_corpus() -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.extend(enumerate_graphs(n, true)?);
    }
    for n in 1..=17 {
        out.push(path(n)?);
    }
    for n in 3..=17 {
        out.push(cycle(n)?);
    }
    for n in 2..=8 {
        out.push(star(n)?);
    }
    for n in 1..=8 {
        out.push(complete(n)?);
    }
    for a in 1..=5 {
        for b in 1..=a {
            for c in 1..=b {
                if a + b + c < 8 {
                    out.push(spider(&[a, b, c])?);
                }
            }
        }
    }
    Ok(out)
}

fn label(g: &Graph) -> String {
    match g.name() {
        Some(name) => name.to_string(),
        None => crate::format::to_graph6(g),
    }
}

fn check_builder(g: &Graph, what: &str, r: Result<LdcCertificate>, v: &mut Vec<String>) -> Option<usize> {
    match r {
        Ok(c) if c.verify(g) => Some(c.len()),
        Ok(_) => {
            v.push(format!("{}: {what} returned a certificate that does not verify", label(g)));
            None
        }
        Err(e) => {
            v.push(format!("{}: {what} failed: {e}", label(g)));
            None
        }
    }
}

/// Checks one graph and returns every violation found.
pub fn check_graph_properties(g: &Graph) -> Result<Vec<String>> {
    let mut v = Vec::new();
    let n = g.order();
    let name = label(g);
    let report = c_l_exact(g)?;
    let (gamma, _) = gamma_l(g)?;
    let delta = g.max_degree();

    if let Some(c) = report.c_l {
        if c + gamma > n + 2 {
            v.push(format!("{name}: C_L = {c} exceeds n - γ_L + 2 = {}", n + 2 - gamma));
        }
        if c == n && (gamma != 2 || n > 5) {
            v.push(format!("{name}: C_L = n with γ_L = {gamma}"));
        }
    }
    if let Some(cert) = &report.certificate {
        if !cert.verify(g) {
            v.push(format!("{name}: certificate does not verify"));
        }
        for i in 0..cert.len() {
            let d = partner_count(g, &cert.partition, i)?;
            if d == 0 || d > 2 * delta {
                v.push(format!("{name}: part {i} has {d} partners, outside [1, {}]", 2 * delta));
            }
        }
    }

    let diameter = g.diameter()?;
    let dom = d_loc(g)?;
    let twins = g.first_twin_pair().is_some();
    if diameter >= 3 {
        check_builder(g, "diameter builder", build_diam3_partition(g), &mut v);
    }
    if twins && n >= 4 {
        check_builder(g, "twin builder", build_twin_partition(g), &mut v);
    }
    if n == 3 || (n >= 4 && gamma > n.div_ceil(2)) {
        check_builder(g, "halves builder", build_halves_partition(g), &mut v);
    }
    if n >= 3 && (diameter >= 3 || dom.k >= 2) {
        if let Some(size) = check_builder(g, "domatic builder", build_from_domatic(g), &mut v) {
            if size < 2 * dom.k {
                v.push(format!("{name}: domatic builder gave {size} parts, d_loc = {}", dom.k));
            }
        }
    }

    let exists = (g.is_star() && n >= 3)
        || (g.is_complete() && n >= 3)
        || diameter >= 3
        || (dom.k >= 2 && n >= 3)
        || (twins && n >= 4);
    if exists && report.c_l.is_none_or(|c| c < 2) {
        v.push(format!("{name}: expected an LDC-partition, solver found {:?}", report.c_l));
    }
    Ok(v)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyReport {
    pub graphs_checked: usize,
    pub violations: Vec<String>,
}

pub fn check_corpus() -> Result<PropertyReport> {
    let mut r = PropertyReport::default();
    for g in property_corpus()? {
        r.graphs_checked += 1;
        r.violations.extend(check_graph_properties(&g)?);
    }
    Ok(r)
}

/// `(family, n, C)` for the plain coalition number of `C_n` and `P_n`,
/// `3 ≤ n ≤ max_n`.
pub fn plain_coalition_values(max_n: usize) -> Result<Vec<(&'static str, usize, usize)>> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        out.push(("cycle", n, plain_coalition_number(&cycle(n)?)?));
        out.push(("path", n, plain_coalition_number(&path(n)?)?));
    }
    Ok(out)
}
