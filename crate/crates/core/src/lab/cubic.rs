//! Search for a cubic graph in which a dominating non-LD set has the
//! maximum possible number `2Δ = 6` of singleton completers.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::canon::canonical_form;
use crate::error::Result;
use crate::graph::Graph;
use crate::ld::{is_dominating_mask, is_ld_mask};
use crate::partition::{partner_count, singleton_completers, verify_ldc_partition, Partition};
use crate::vertex_set::{full_mask, Mask, VertexSet};

/// Connected cubic graphs of order `n`, one per isomorphism class, in
/// generation order. Vertex 0 is adjacent to 1, 2, 3 and new vertices are
/// introduced in increasing order, which removes most relabelings before the
/// canonical-form check.
pub fn connected_cubic_graphs(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    if n < 4 || n % 2 == 1 {
        return Ok(out);
    }
    let mut seen = BTreeSet::new();
    let mut adj = vec![0 as Mask; n];
    for u in 1..=3 {
        adj[0] |= 1 << u;
        adj[u] |= 1;
    }
    fill(n, 1, 4, &mut adj, &mut |adj| {
        let g = Graph::from_adjacency(adj.to_vec());
        if g.is_connected() {
            let code = canonical_form(&g)?;
            if seen.insert(code) {
                out.push(g);
            }
        }
        Ok(())
    })?;
    Ok(out)
}

// Completes vertex `v` to degree 3 by choosing neighbors above it; `fresh` is
// the least label not yet touched by any edge.
fn fill(
    n: usize,
    v: usize,
    fresh: usize,
    adj: &mut [Mask],
    emit: &mut impl FnMut(&[Mask]) -> Result<()>,
) -> Result<()> {
    if v == n {
        return emit(adj);
    }
    let deg = adj[v].count_ones();
    if deg == 3 {
        return fill(n, v + 1, fresh.max(v + 1), adj, emit);
    }
    // neighbors of v above v are added in increasing order
    let floor = (adj[v] & !full_mask(v + 1)).checked_ilog2().map_or(v + 1, |h| h as usize + 1);
    for u in floor..n.min(fresh + 1) {
        if adj[u].count_ones() < 3 {
            adj[v] |= 1 << u;
            adj[u] |= 1 << v;
            fill(n, v, fresh.max(u + 1), adj, emit)?;
            adj[v] &= !(1 << u);
            adj[u] &= !(1 << v);
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct CubicWitness {
    pub graph_edges: Vec<(usize, usize)>,
    pub order: usize,
    pub set: Vec<usize>,
    pub completers: Vec<usize>,
    /// A partition in which the set is a part with exactly six partners, when
    /// the leftover vertices allow one.
    pub partition: Option<Vec<Vec<usize>>>,
    pub graphs_examined: usize,
}

fn witness_partition(g: &Graph, a: Mask, completers: &[usize]) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let singles: Mask = completers.iter().fold(0, |m, &x| m | 1 << x);
    let rest = g.all_mask() & !a & !singles;
    let mut candidates = Vec::new();
    let base: Vec<Mask> = std::iter::once(a).chain(completers.iter().map(|&x| 1 << x)).collect();
    if rest == 0 {
        candidates.push(base.clone());
    } else {
        let mut own = base.clone();
        own.push(rest);
        candidates.push(own);
        let mut merged = base.clone();
        merged[0] |= rest;
        candidates.push(merged);
    }
    candidates.into_iter().find_map(|masks| {
        let p = Partition::from_masks(n, &masks).ok()?;
        verify_ldc_partition(g, &p).ok()?.ok()?;
        (partner_count(g, &p, 0).ok()? == 6).then(|| p.parts().iter().map(VertexSet::to_vec).collect())
    })
}

/// First connected cubic graph on at most `max_order` vertices with a
/// dominating non-LD set that has six singleton completers. Prefers a
/// witness that also extends to a partition with six partners.
pub fn find_cubic_sharpness_witness(max_order: usize) -> Result<Option<CubicWitness>> {
    let mut examined = 0;
    let mut fallback = None;
    for n in (4..=max_order).step_by(2) {
        for g in connected_cubic_graphs(n)? {
            examined += 1;
            for a in 1..g.all_mask() {
                if !is_dominating_mask(&g, a) || is_ld_mask(&g, a) {
                    continue;
                }
                let completers = singleton_completers(&g, a);
                if completers.len() != 6 {
                    continue;
                }
                let partition = witness_partition(&g, a, &completers);
                let w = CubicWitness {
                    graph_edges: g.edges().collect(),
                    order: n,
                    set: VertexSet::from_mask_unchecked(n, a).to_vec(),
                    completers,
                    partition,
                    graphs_examined: examined,
                };
                if w.partition.is_some() {
                    return Ok(Some(w));
                }
                fallback.get_or_insert(w);
            }
        }
        if fallback.is_some() {
            return Ok(fallback);
        }
    }
    Ok(fallback)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_counts() {
        let counts: Vec<usize> =
            [4, 6, 8, 10].iter().map(|&n| connected_cubic_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19]);
    }
}
