//! Vertex partitions, LD-coalitions and their certificates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ld::is_ld_mask;
use crate::vertex_set::{full_mask, Mask, VertexSet};

/// An ordered list of non-empty, pairwise disjoint vertex sets covering
/// `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    order: usize,
    parts: Vec<VertexSet>,
}

impl Partition {
    pub fn new(order: usize, parts: Vec<VertexSet>) -> Result<Partition> {
        let mut seen: Mask = 0;
        for (i, p) in parts.iter().enumerate() {
            if p.order() != order {
                return Err(Error::MalformedPartition(format!(
                    "part {i} has width {} but the graph has order {order}",
                    p.order()
                )));
            }
            if p.is_empty() {
                return Err(Error::MalformedPartition(format!("part {i} is empty")));
            }
            if p.bits() & seen != 0 {
                let v = (p.bits() & seen).trailing_zeros();
                return Err(Error::MalformedPartition(format!("vertex {v} appears in more than one part")));
            }
            seen |= p.bits();
        }
        let missing = full_mask(order) & !seen;
        if missing != 0 {
            return Err(Error::MalformedPartition(format!(
                "vertex {} is not covered",
                missing.trailing_zeros()
            )));
        }
        Ok(Partition { order, parts })
    }

    pub fn from_masks(order: usize, masks: &[Mask]) -> Result<Partition> {
        let parts = masks
            .iter()
            .map(|&m| VertexSet::from_mask(order, m))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(order, parts)
    }

    pub fn from_lists(order: usize, lists: &[&[usize]]) -> Result<Partition> {
        let parts = lists
            .iter()
            .map(|l| VertexSet::from_vertices(order, l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(order, parts)
    }

    /// Parses one part per line, vertices separated by whitespace. Blank lines
    /// and `#` comments are skipped.
    pub fn parse(order: usize, text: &str) -> Result<Partition> {
        let mut parts = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut part = VertexSet::empty(order);
            for tok in line.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    message: format!("bad vertex `{tok}`"),
                })?;
                if part.contains(v) {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} repeated on line {}",
                        idx + 1
                    )));
                }
                part.insert(v)?;
            }
            parts.push(part);
        }
        Partition::new(order, parts)
    }

    pub fn to_text(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ") + "\n")
            .collect()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part sizes sorted non-increasingly.
    pub fn type_vector(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.parts.iter().map(VertexSet::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

fn check_width(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.order() != g.order() {
        return Err(Error::Precondition(format!(
            "set of width {} used with graph of order {}",
            s.order(),
            g.order()
        )));
    }
    Ok(())
}

/// Neither set is an LD-set but their union is.
pub fn is_ld_coalition(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<bool> {
    check_width(g, x)?;
    check_width(g, y)?;
    if x.is_empty() || y.is_empty() || !x.is_disjoint(y) {
        return Err(Error::InvalidCoalitionPair);
    }
    Ok(ld_coalition_masks(g, x.bits(), y.bits()))
}

#[inline]
pub(crate) fn ld_coalition_masks(g: &Graph, x: Mask, y: Mask) -> bool {
    !is_ld_mask(g, x) && !is_ld_mask(g, y) && is_ld_mask(g, x | y)
}

/// A partition in which every part is a non-LD-set with a recorded
/// LD-coalition partner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LdcCertificate {
    pub partition: Partition,
    /// `partner[i]` is the least index `j != i` such that parts `i` and `j`
    /// form an LD-coalition.
    pub partner: Vec<usize>,
}

impl LdcCertificate {
    pub fn len(&self) -> usize {
        self.partition.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partition.is_empty()
    }

    /// Re-checks every claim from scratch with the LD predicate alone.
    pub fn verify(&self, g: &Graph) -> bool {
        let parts = self.partition.parts();
        self.partition.order() == g.order()
            && self.partner.len() == parts.len()
            && parts.iter().enumerate().all(|(i, p)| {
                let j = self.partner[i];
                j != i
                    && j < parts.len()
                    && !is_ld_mask(g, p.bits())
                    && !is_ld_mask(g, parts[j].bits())
                    && is_ld_mask(g, p.bits() | parts[j].bits())
            })
    }
}

/// Why a partition is not an LDC-partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Refusal {
    PartIsLdSet(usize),
    NoPartner(usize),
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refusal::PartIsLdSet(i) => write!(f, "part {i} is an LD-set"),
            Refusal::NoPartner(i) => write!(f, "part {i} forms an LD-coalition with no other part"),
        }
    }
}

/// Checks the LDC-partition conditions. Parts are examined in order and the
/// first failure is reported.
pub fn verify_ldc_partition(
    g: &Graph,
    p: &Partition,
) -> Result<std::result::Result<LdcCertificate, Refusal>> {
    if p.order() != g.order() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} vertices but the graph has order {}",
            p.order(),
            g.order()
        )));
    }
    let masks: Vec<Mask> = p.parts().iter().map(VertexSet::bits).collect();
    let ld: Vec<bool> = masks.iter().map(|&m| is_ld_mask(g, m)).collect();
    let mut partner = Vec::with_capacity(masks.len());
    for i in 0..masks.len() {
        if ld[i] {
            return Ok(Err(Refusal::PartIsLdSet(i)));
        }
        let found = (0..masks.len()).find(|&j| j != i && !ld[j] && is_ld_mask(g, masks[i] | masks[j]));
        match found {
            Some(j) => partner.push(j),
            None => return Ok(Err(Refusal::NoPartner(i))),
        }
    }
    Ok(Ok(LdcCertificate { partition: p.clone(), partner }))
}

/// Builds a certificate from raw part masks, panicking-free: returns `None`
/// when the masks do not form an LDC-partition.
pub(crate) fn certificate_from_masks(g: &Graph, masks: &[Mask]) -> Option<LdcCertificate> {
    let p = Partition::from_masks(g.order(), masks).ok()?;
    verify_ldc_partition(g, &p).ok()?.ok()
}

/// Graph on the parts of a partition, with an edge whenever two parts form an
/// LD-coalition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoalitionGraph {
    pub parts: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl CoalitionGraph {
    pub fn node_count(&self) -> usize {
        self.parts.len()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == i || b == i).count()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| if a == i { Some(b) } else if b == i { Some(a) } else { None })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.node_count()).map(|i| self.degree(i)).min().unwrap_or(0)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph coalition {\n");
        for (i, p) in self.parts.iter().enumerate() {
            out.push_str(&format!("  p{i} [label=\"{p}\"];\n"));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  p{a} -- p{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub fn coalition_graph(g: &Graph, p: &Partition) -> Result<CoalitionGraph> {
    if let Err(r) = verify_ldc_partition(g, p)? {
        return Err(Error::MalformedPartition(format!("not an LDC-partition: {r}")));
    }
    let parts = p.parts().to_vec();
    let mut edges = Vec::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if ld_coalition_masks(g, parts[i].bits(), parts[j].bits()) {
                edges.push((i, j));
            }
        }
    }
    Ok(CoalitionGraph { parts, edges })
}

/// Number of LD-coalition partners of part `i`.
pub fn partner_count(g: &Graph, p: &Partition, i: usize) -> Result<usize> {
    if i >= p.len() {
        return Err(Error::PartOutOfRange { index: i, parts: p.len() });
    }
    let cg = coalition_graph(g, p)?;
    let d = cg.degree(i);
    debug_assert!(d <= 2 * g.max_degree());
    Ok(d)
}

/// All vertices `w` outside `a` for which `a ∪ {w}` is an LD-set.
pub fn max_singleton_completers(g: &Graph, a: &VertexSet) -> Result<(usize, Vec<usize>)> {
    check_width(g, a)?;
    if is_ld_mask(g, a.bits()) {
        return Err(Error::IsLdSet);
    }
    let list = singleton_completers(g, a.bits());
    Ok((list.len(), list))
}

pub(crate) fn singleton_completers(g: &Graph, a: Mask) -> Vec<usize> {
    (0..g.order())
        .filter(|&w| a >> w & 1 == 0 && is_ld_mask(g, a | 1 << w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::from_lists(3, &[&[0, 1], &[2]]).is_ok());
        assert!(matches!(Partition::from_lists(3, &[&[0, 1], &[1, 2]]), Err(Error::MalformedPartition(_))));
        assert!(matches!(Partition::from_lists(3, &[&[0, 1]]), Err(Error::MalformedPartition(_))));
        assert!(matches!(Partition::parse(3, "0 1\n\n1 2\n"), Err(Error::MalformedPartition(_))));
        let p = Partition::parse(4, "# parts\n0 2\n1\n3\n").unwrap();
        assert_eq!(p.type_vector(), vec![2, 1, 1]);
        assert_eq!(Partition::parse(4, &p.to_text()).unwrap(), p);
    }

    #[test]
    fn coalition_pair_examples() {
        let k3 = complete(3).unwrap();
        assert!(is_ld_coalition(&k3, &set(3, &[0]), &set(3, &[1])).unwrap());
        assert_eq!(
            is_ld_coalition(&k3, &set(3, &[0]), &set(3, &[0, 1])).unwrap_err(),
            Error::InvalidCoalitionPair
        );
        // closed neighborhood of a diametral endpoint versus the rest
        let p6 = path(6).unwrap();
        let x = p6.closed_neighborhood(0).unwrap();
        assert!(is_ld_coalition(&p6, &x, &x.complement()).unwrap());
        // a twin pair versus the rest
        let k23 = complete_bipartite(2, 3).unwrap();
        let x = set(5, &[2, 3]);
        assert!(is_ld_coalition(&k23, &x, &x.complement()).unwrap());
    }

    #[test]
    fn verify_examples() {
        let p6 = path(6).unwrap();
        let p = Partition::from_lists(6, &[&[1, 3], &[0, 2], &[4], &[5]]).unwrap();
        let cert = verify_ldc_partition(&p6, &p).unwrap().unwrap();
        assert_eq!(cert.len(), 4);
        assert!(cert.verify(&p6));

        let k3 = complete(3).unwrap();
        let singles = Partition::from_lists(3, &[&[0], &[1], &[2]]).unwrap();
        assert_eq!(verify_ldc_partition(&k3, &singles).unwrap().unwrap().len(), 3);
        let bad = Partition::from_lists(3, &[&[0, 1], &[2]]).unwrap();
        let refusal = verify_ldc_partition(&k3, &bad).unwrap().unwrap_err();
        assert_eq!(refusal, Refusal::PartIsLdSet(0));
        assert_eq!(refusal.to_string(), "part 0 is an LD-set");
    }

    #[test]
    fn coalition_graph_examples() {
        let k3 = complete(3).unwrap();
        let singles = Partition::from_lists(3, &[&[0], &[1], &[2]]).unwrap();
        let cg = coalition_graph(&k3, &singles).unwrap();
        assert_eq!(cg.edges, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(partner_count(&k3, &singles, 0).unwrap(), 2);
        assert!(partner_count(&k3, &singles, 3).is_err());
        assert!(cg.to_dot().contains("p0 -- p1;"));

        let p6 = path(6).unwrap();
        let p = Partition::from_lists(6, &[&[1, 3], &[0, 2], &[4], &[5]]).unwrap();
        let cg = coalition_graph(&p6, &p).unwrap();
        assert_eq!(cg.neighbors(2), vec![0, 1]);
        assert_eq!(cg.neighbors(3), vec![0, 1]);
        assert!(cg.min_degree() >= 1);
    }

    #[test]
    fn completer_examples() {
        // V minus one vertex that is not dominated: the only candidate is that vertex
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let (count, list) = max_singleton_completers(&g, &set(3, &[0, 1])).unwrap();
        assert_eq!((count, list), (1, vec![2]));

        let c6 = cycle(6).unwrap();
        let b = set(6, &[0, 3]);
        let (count, list) = max_singleton_completers(&c6, &b).unwrap();
        assert_eq!(count, list.len());
        assert_eq!(max_singleton_completers(&c6, &set(6, &[0, 1, 3])).unwrap_err(), Error::IsLdSet);
    }
}
