//! Locating-dominating sets.
//!
//! A set `S` is dominating when every vertex outside `S` has a neighbor in
//! `S`, and locating when the traces `N(u) ∩ S` of the vertices outside `S`
//! are pairwise distinct (two empty traces count as equal).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{full_mask, Bits, Mask, VertexSet};

#[inline]
pub fn is_dominating_mask(g: &Graph, s: Mask) -> bool {
    Bits(g.all_mask() & !s).all(|v| g.adj_mask(v) & s != 0)
}

#[inline]
pub fn is_locating_mask(g: &Graph, s: Mask) -> bool {
    let mut buf = [0 as Mask; crate::MAX_ORDER];
    let mut len = 0;
    for v in Bits(g.all_mask() & !s) {
        buf[len] = g.adj_mask(v) & s;
        len += 1;
    }
    all_distinct(&mut buf[..len])
}

/// Dominating and locating, checked in one pass.
#[inline]
pub fn is_ld_mask(g: &Graph, s: Mask) -> bool {
    let mut buf = [0 as Mask; crate::MAX_ORDER];
    let mut len = 0;
    for v in Bits(g.all_mask() & !s) {
        let t = g.adj_mask(v) & s;
        if t == 0 {
            return false;
        }
        buf[len] = t;
        len += 1;
    }
    all_distinct(&mut buf[..len])
}

#[inline]
fn all_distinct(xs: &mut [Mask]) -> bool {
    if xs.len() <= 12 {
        for i in 1..xs.len() {
            if xs[..i].contains(&xs[i]) {
                return false;
            }
        }
        true
    } else {
        xs.sort_unstable();
        xs.windows(2).all(|w| w[0] != w[1])
    }
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_dominating_mask(g, s.bits())
}

pub fn is_locating(g: &Graph, s: &VertexSet) -> bool {
    is_locating_mask(g, s.bits())
}

/// Outcome of checking a candidate set, with a concrete witness for each
/// failed condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LdVerdict {
    pub dominating: bool,
    pub locating: bool,
    /// Least vertex outside the set with an empty trace.
    pub undominated: Option<usize>,
    /// Lexicographically least pair of outside vertices with equal traces.
    pub same_trace: Option<(usize, usize)>,
}

impl LdVerdict {
    pub fn is_ld(&self) -> bool {
        self.dominating && self.locating
    }
}

pub fn is_ld_set(g: &Graph, s: &VertexSet) -> LdVerdict {
    let s = s.bits();
    let outside: Vec<usize> = Bits(g.all_mask() & !s).collect();
    let undominated = outside.iter().copied().find(|&v| g.adj_mask(v) & s == 0);
    let mut keyed: Vec<(Mask, usize)> = outside.iter().map(|&v| (g.adj_mask(v) & s, v)).collect();
    keyed.sort_unstable();
    let same_trace = keyed
        .windows(2)
        .filter(|w| w[0].0 == w[1].0)
        .map(|w| (w[0].1, w[1].1))
        .min();
    LdVerdict {
        dominating: undominated.is_none(),
        locating: same_trace.is_none(),
        undominated,
        same_trace,
    }
}

/// ⌈log₂(n+1) − 1⌉, the smallest `k` with `2^(k+1) ≥ n + 1`.
pub fn log_lower_bound(n: usize) -> usize {
    let mut k = 0;
    while (1usize << (k + 1)) < n + 1 {
        k += 1;
    }
    k
}

/// Largest order a graph can have when it has an LD-set of size `k`.
pub fn max_order_for_ld_size(k: usize) -> usize {
    if k >= usize::BITS as usize - 1 {
        usize::MAX
    } else {
        (1usize << k) + k - 1
    }
}

/// The locating-domination number together with the colex-least witness of
/// minimum size.
pub fn gamma_l(g: &Graph) -> Result<(usize, VertexSet)> {
    g.require_connected()?;
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    for k in log_lower_bound(n)..=n {
        if let Some(s) = first_ld_set_of_size(g, k) {
            return Ok((k, VertexSet::from_mask_unchecked(n, s)));
        }
    }
    unreachable!("V is always an LD-set")
}

/// Colex-least LD-set of exactly `k` vertices, if any.
pub fn first_ld_set_of_size(g: &Graph, k: usize) -> Option<Mask> {
    let n = g.order();
    if k > n {
        return None;
    }
    colex_dfs(g, k, n, 0)
}

// Members are chosen largest-first in ascending order, which walks k-subsets
// in colex order. Vertices at or above `top` are decided; those not chosen
// are final outsiders whose traces can only grow through vertices below `top`.
fn colex_dfs(g: &Graph, left: usize, top: usize, chosen: Mask) -> Option<Mask> {
    if left == 0 {
        return is_ld_mask(g, chosen).then_some(chosen);
    }
    for m in left - 1..top {
        let next = chosen | 1 << m;
        if decided_region_feasible(g, next, m) {
            if let Some(s) = colex_dfs(g, left - 1, m, next) {
                return Some(s);
            }
        }
    }
    None
}

fn decided_region_feasible(g: &Graph, chosen: Mask, top: usize) -> bool {
    let low = full_mask(top);
    let mut buf = [(0 as Mask, 0 as Mask); crate::MAX_ORDER];
    for (len, u) in Bits(g.all_mask() & !low & !chosen).enumerate() {
        let key = (g.adj_mask(u) & chosen, g.adj_mask(u) & low);
        if key == (0, 0) || buf[..len].contains(&key) {
            return false;
        }
        buf[len] = key;
    }
    true
}

/// Greedily drops vertices in ascending order while the set stays an LD-set.
/// The result is minimal: removing any single vertex breaks the property.
pub fn minimalize_ld_set(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    if !is_ld_mask(g, s.bits()) {
        return Err(Error::NotLdSet);
    }
    let mut cur = s.bits();
    for v in s.iter() {
        let without = cur & !(1 << v);
        if is_ld_mask(g, without) {
            cur = without;
        }
    }
    Ok(VertexSet::from_mask_unchecked(g.order(), cur))
}

pub fn is_minimal_ld_set(g: &Graph, s: &VertexSet) -> bool {
    is_ld_mask(g, s.bits()) && s.iter().all(|v| !is_ld_mask(g, s.bits() & !(1 << v)))
}

/// A partition of `V` into the maximum number of LD-sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DomaticResult {
    pub k: usize,
    pub partition: Vec<VertexSet>,
}

/// Location-domatic number by branch and bound over class assignments.
pub fn d_loc(g: &Graph) -> Result<DomaticResult> {
    let (gamma, _) = gamma_l(g)?;
    let n = g.order();
    for k in (2..=n / gamma).rev() {
        let mut classes = vec![0 as Mask; k];
        if assign_classes(g, 0, &mut classes) {
            let partition = classes
                .into_iter()
                .map(|c| VertexSet::from_mask_unchecked(n, c))
                .collect();
            return Ok(DomaticResult { k, partition });
        }
    }
    Ok(DomaticResult { k: 1, partition: vec![VertexSet::full(n)] })
}

// Vertex `v` goes into an existing class or opens the next empty one, so
// class c+1 is only ever opened after class c.
fn assign_classes(g: &Graph, v: usize, classes: &mut [Mask]) -> bool {
    let n = g.order();
    if v == n {
        return classes.iter().all(|&c| is_ld_mask(g, c));
    }
    let rest = g.all_mask() & !full_mask(v + 1);
    let open = classes.iter().take_while(|&&c| c != 0).count();
    // every unopened class still needs members
    if classes.len() - open > n - v {
        return false;
    }
    for c in 0..classes.len().min(open + 1) {
        classes[c] |= 1 << v;
        let feasible = classes.iter().all(|&m| is_ld_mask(g, m | rest));
        if feasible && assign_classes(g, v + 1, classes) {
            return true;
        }
        classes[c] &= !(1 << v);
    }
    false
}

/// Checks that `γ_L(g) = n − 1` holds exactly when `g` is a star or complete.
pub fn slater_upper_check(g: &Graph) -> Result<bool> {
    if g.order() < 2 {
        return Err(Error::Precondition("order must be at least 2".into()));
    }
    let (gamma, _) = gamma_l(g)?;
    Ok((gamma == g.order() - 1) == (g.is_star() || g.is_complete()))
}
