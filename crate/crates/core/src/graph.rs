//! Immutable simple graphs with per-vertex adjacency bitmasks.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{full_mask, Bits, Mask, VertexSet};
use crate::MAX_ORDER;

/// A finite simple graph on vertices `0..n`.
///
/// Adjacency is stored as one bitmask per vertex. Construction goes through
/// [`GraphBuilder`] or [`Graph::from_edges`], which reject loops and
/// out-of-range endpoints and silently ignore repeated edges.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Mask>,
    name: Option<String>,
}

#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<Mask>,
    name: Option<String>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(GraphBuilder { adj: vec![0; n], name: None })
    }

    pub fn name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.adj.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, order: n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(self)
    }

    pub fn build(self) -> Graph {
        Graph { adj: self.adj, name: self.name }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        Ok(GraphBuilder::new(n)?.build())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Builds a graph directly from adjacency masks. The masks must already
    /// be symmetric and loop-free.
    pub(crate) fn from_adjacency(adj: Vec<Mask>) -> Graph {
        debug_assert!(adj.len() <= MAX_ORDER);
        debug_assert!(adj.iter().enumerate().all(|(v, &m)| m >> v & 1 == 0
            && Bits(m).all(|u| adj[u] >> v & 1 == 1)));
        Graph { adj, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacency(&self) -> &[Mask] {
        &self.adj
    }

    #[inline]
    pub fn adj_mask(&self, v: usize) -> Mask {
        self.adj[v]
    }

    #[inline]
    pub fn all_mask(&self) -> Mask {
        full_mask(self.order())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &m)| Bits(m & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        } else {
            Ok(())
        }
    }

    /// N(v).
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_mask_unchecked(self.order(), self.adj[v]))
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_mask_unchecked(self.order(), self.adj[v] | 1 << v))
    }

    #[inline]
    pub fn closed_mask(&self, v: usize) -> Mask {
        self.adj[v] | 1 << v
    }

    /// Union of closed neighborhoods of the members of `a` as a raw mask.
    #[inline]
    pub fn closed_mask_of(&self, a: Mask) -> Mask {
        Bits(a).fold(a, |acc, v| acc | self.adj[v])
    }

    /// N[A].
    pub fn closed_neighborhood_of_set(&self, a: &VertexSet) -> Result<VertexSet> {
        if a.order() != self.order() {
            return Err(Error::Precondition(format!(
                "set of width {} used with graph of order {}",
                a.order(),
                self.order()
            )));
        }
        Ok(VertexSet::from_mask_unchecked(self.order(), self.closed_mask_of(a.bits())))
    }

    /// N_2(v): vertices at distance one or two from `v`.
    pub fn two_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let first = self.adj[v];
        let second = Bits(first).fold(first, |acc, u| acc | self.adj[u]);
        Ok(VertexSet::from_mask_unchecked(self.order(), second & !(1 << v)))
    }

    pub fn are_twins(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::EqualVertices(u));
        }
        Ok(self.adj[u] == self.adj[v])
    }

    /// Lexicographically least pair of distinct twins, if any.
    pub fn first_twin_pair(&self) -> Option<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| self.adj[u] == self.adj[v])
    }

    /// BFS distances from `src`; unreachable vertices get `None`.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[src] = Some(0);
        let mut seen: Mask = 1 << src;
        let mut frontier: Mask = 1 << src;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let next = Bits(frontier).fold(0, |acc, u| acc | self.adj[u]) & !seen;
            for v in Bits(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.component_mask(0, self.all_mask()) == self.all_mask()
    }

    /// Vertices reachable from `start` inside the induced subgraph on `within`.
    pub fn component_mask(&self, start: usize, within: Mask) -> Mask {
        if within >> start & 1 == 0 {
            return 0;
        }
        let mut seen: Mask = 1 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let next = Bits(frontier).fold(0, |acc, u| acc | self.adj[u]) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `within` is connected (true when empty).
    pub fn induces_connected(&self, within: Mask) -> bool {
        within == 0 || self.component_mask(within.trailing_zeros() as usize, within) == within
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Diameter plus the lexicographically least pair realizing it.
    pub fn diameter_and_diametral_pair(&self) -> Result<(usize, usize, usize)> {
        self.require_connected()?;
        let n = self.order();
        if n == 0 {
            return Err(Error::Precondition("empty graph has no diameter".into()));
        }
        let mut best = (0, 0, 0);
        for u in 0..n {
            let dist = self.distances_from(u);
            for (v, d) in dist.iter().enumerate().skip(u + 1) {
                let d = d.expect("connected");
                if d > best.0 {
                    best = (d, u, v);
                }
            }
        }
        if n == 1 {
            return Ok((0, 0, 0));
        }
        if best.0 == 0 {
            unreachable!("connected graph of order >= 2 has an edge");
        }
        Ok(best)
    }

    pub fn diameter(&self) -> Result<usize> {
        self.diameter_and_diametral_pair().map(|(d, _, _)| d)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![0; self.order()];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { adj, name: self.name.clone() }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        (0..n).all(|v| self.degree(v) + 1 == n)
    }

    /// Star K_{1,n-1} with n >= 2 (K_2 counts as a star).
    pub fn is_star(&self) -> bool {
        let n = self.order();
        n >= 2
            && self.size() == n - 1
            && (0..n).any(|v| self.degree(v) == n - 1)
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }
}

// Equality is labeled-graph equality; the name is ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        if let Some(name) = &self.name {
            d.field("name", name);
        }
        d.field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
