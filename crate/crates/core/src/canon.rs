//! Canonical labeling for small graphs.
//!
//! The canonical code is the minimum upper-triangle adjacency bit string over
//! all vertex orderings that respect an equitable color refinement. Refinement
//! is isomorphism-invariant, so the minimum over the restricted set of
//! orderings is still a canonical form; it only shrinks the search. Swapping
//! two twins inside a cell is an automorphism, so only one twin per cell is
//! individualized at each level.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::Bits;

/// Largest order accepted by [`canonical_form`]; the code must fit in 128 bits.
pub const CANON_MAX_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub order: u8,
    pub code: u128,
}

/// Returns the canonical code and a relabeling `perm` (old vertex -> new
/// position) that realizes it.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::EnumerationRange { what: "canonical form", order: n, max: CANON_MAX_ORDER });
    }
    let colors = refine(g, vec![0; n]);
    let mut best: Option<(u128, Vec<usize>)> = None;
    search(g, colors, &mut best);
    let (code, perm) = best.unwrap_or((0, Vec::new()));
    Ok((CanonicalForm { order: n as u8, code }, perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// The graph relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonical_labeling(g)?;
    let mut h = g.permuted(&perm);
    if let Some(name) = g.name() {
        h = h.with_name(name);
    }
    Ok(h)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.order() == b.order() && a.size() == b.size() && canonical_form(a)? == canonical_form(b)?)
}

/// Iterated color refinement. Colors are dense ranks `0..k`, ordered by
/// (previous color, sorted neighbor colors), so the result is invariant.
fn refine(g: &Graph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.order();
    let mut classes = count_classes(&colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = Bits(g.adj_mask(v)).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0u32; n];
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        colors = next;
        let c = count_classes(&colors);
        if c == classes {
            return colors;
        }
        classes = c;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<(u128, Vec<usize>)>) {
    let n = g.order();
    if count_classes(&colors) == n {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let code = code_of(g, &perm);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, perm));
        }
        return;
    }
    // first non-singleton cell
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = sizes.iter().position(|&s| s > 1).expect("non-discrete coloring") as u32;
    let mut tried: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| colors[v] == target) {
        let twin_of_tried = tried.iter().any(|&u| {
            let (au, av) = (g.adj_mask(u), g.adj_mask(v));
            au & !(1 << v) == av & !(1 << u)
        });
        if twin_of_tried {
            continue;
        }
        tried.push(v);
        let split: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| if c > target || (c == target && w != v) { c + 1 } else { c })
            .collect();
        search(g, refine(g, split), best);
    }
}

/// Upper-triangle bits in row-major order, first pair most significant.
fn code_of(g: &Graph, perm: &[usize]) -> u128 {
    let n = g.order();
    let mut at = vec![0usize; n];
    for (v, &p) in perm.iter().enumerate() {
        at[p] = v;
    }
    let mut code = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(at[i], at[j]) as u128;
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, spider, star};

    fn brute_force_min(g: &Graph) -> u128 {
        // every permutation, by Heap's algorithm
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut c = vec![0usize; n];
        let mut best = code_of(g, &perm);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                best = best.min(code_of(g, &perm));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }

    #[test]
    fn relabelings_agree() {
        let g = spider(&[3, 2, 1]).unwrap();
        let perm = [5, 3, 0, 6, 1, 2, 4];
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permuted(&perm)).unwrap());
        assert!(!is_isomorphic(&path(7).unwrap(), &g).unwrap());
    }

    #[test]
    fn canonical_graph_has_canonical_code() {
        for g in [cycle(6).unwrap(), star(9).unwrap(), complete(5).unwrap(), spider(&[2, 2, 1]).unwrap()] {
            let c = canonical_form(&g).unwrap();
            let h = canonical_graph(&g).unwrap();
            let ident: Vec<usize> = (0..h.order()).collect();
            assert_eq!(code_of(&h, &ident), c.code);
        }
    }

    #[test]
    fn classes_match_unrestricted_minimum() {
        // every labeled graph on 5 vertices; the restricted minimum must induce
        // the same isomorphism classes as the minimum over all 120 orderings
        use std::collections::HashMap;
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let mut forward: HashMap<u128, u128> = HashMap::new();
        let mut backward: HashMap<u128, u128> = HashMap::new();
        for bits in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(5, edges).unwrap();
            let ours = canonical_form(&g).unwrap().code;
            let brute = brute_force_min(&g);
            assert_eq!(*forward.entry(brute).or_insert(ours), ours);
            assert_eq!(*backward.entry(ours).or_insert(brute), brute);
        }
        // 34 graphs on five vertices
        assert_eq!(forward.len(), 34);
    }

    #[test]
    fn rejects_large_orders() {
        assert!(canonical_form(&path(17).unwrap()).is_err());
    }
}
