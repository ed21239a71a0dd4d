//! Isomorphism-free enumeration of small graphs and trees.
//!
//! Both enumerators grow representatives one vertex at a time and deduplicate
//! by canonical form: graphs of order `n` are all one-vertex extensions of
//! graphs of order `n - 1`, trees of order `n` are leaf extensions of trees
//! of order `n - 1`. Output is sorted by canonical code.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{full_mask, Mask};

pub const MAX_GRAPH_ORDER: usize = 7;
pub const MAX_TREE_ORDER: usize = 10;

fn extend_all(level: &[Graph], mut neighborhoods: impl FnMut(&Graph) -> Vec<Mask>) -> Result<Vec<Graph>> {
    let mut seen: BTreeMap<u128, Graph> = BTreeMap::new();
    for g in level {
        let m = g.order();
        for nb in neighborhoods(g) {
            let mut adj: Vec<Mask> = g.adjacency().to_vec();
            for (u, a) in adj.iter_mut().enumerate() {
                if nb >> u & 1 == 1 {
                    *a |= 1 << m;
                }
            }
            adj.push(nb);
            let h = Graph::from_adjacency(adj);
            let code = canonical_form(&h)?.code;
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(code) {
                e.insert(canonical_graph(&h)?);
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// One representative per isomorphism class of graphs of order `n`.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n > MAX_GRAPH_ORDER {
        return Err(Error::EnumerationRange { what: "graph enumeration", order: n, max: MAX_GRAPH_ORDER });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)?]);
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 1..n {
        level = extend_all(&level, |_| (0..1 << m).collect())?;
    }
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}

/// One representative per isomorphism class of trees of order `n`.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::EnumerationRange { what: "tree enumeration", order: n, max: MAX_TREE_ORDER });
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        level = extend_all(&level, |g| (0..g.order()).map(|v| 1 << v).collect())?;
    }
    Ok(level)
}

/// Decodes a Prüfer sequence of length `n - 2` into a labeled tree on `n`
/// vertices.
pub fn tree_from_prufer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, order: n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: Mask = degree
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 1)
        .fold(0, |acc, (v, _)| acc | 1 << v);
    for &x in seq {
        let leaf = leaves.trailing_zeros() as usize;
        leaves &= !(1 << leaf);
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves |= 1 << x;
        }
    }
    let u = leaves.trailing_zeros() as usize;
    let v = (leaves & !(1 << u)).trailing_zeros() as usize;
    edges.push((u, v));
    debug_assert_eq!(leaves & !full_mask(n), 0);
    Graph::from_edges(n, edges)
}
