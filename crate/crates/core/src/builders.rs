//! Constructive LDC-partitions for graphs with a large diameter, twins,
//! a large locating-domination number, or several disjoint LD-sets.
//!
//! Every builder verifies its output with [`verify_ldc_partition`] and
//! reports [`Error::Internal`] if the construction did not produce a valid
//! partition.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ld::{d_loc, gamma_l, is_ld_mask, minimalize_ld_set};
use crate::partition::{verify_ldc_partition, LdcCertificate, Partition};
use crate::vertex_set::{full_mask, Mask, VertexSet};

fn certify(g: &Graph, masks: &[Mask], what: &str) -> Result<LdcCertificate> {
    let p = Partition::from_masks(g.order(), masks)?;
    match verify_ldc_partition(g, &p)? {
        Ok(c) => Ok(c),
        Err(refusal) => Err(Error::Internal(format!("{what}: {refusal}"))),
    }
}

/// `{N[x], V − N[x]}` for the first endpoint `x` of the least diametral pair.
pub fn build_diam3_partition(g: &Graph) -> Result<LdcCertificate> {
    let (d, x, _) = g.diameter_and_diametral_pair()?;
    if d < 3 {
        return Err(Error::Precondition(format!("diameter is {d}, at least 3 is required")));
    }
    let nx = g.closed_mask(x);
    certify(g, &[nx, g.all_mask() & !nx], "diameter partition")
}

/// `{{u, v}, V − {u, v}}` for the lexicographically least twin pair.
pub fn build_twin_partition(g: &Graph) -> Result<LdcCertificate> {
    g.require_connected()?;
    if g.order() < 4 {
        return Err(Error::Precondition("twin partition needs order at least 4".into()));
    }
    let (u, v) = g
        .first_twin_pair()
        .ok_or_else(|| Error::Precondition("graph has no twins".into()))?;
    let pair: Mask = 1 << u | 1 << v;
    certify(g, &[pair, g.all_mask() & !pair], "twin partition")
}

/// All singletons for `n = 3`; otherwise, when `γ_L > ⌈n/2⌉`, the first
/// `⌊n/2⌋` vertices against the rest.
pub fn build_halves_partition(g: &Graph) -> Result<LdcCertificate> {
    g.require_connected()?;
    let n = g.order();
    if n == 3 {
        let singles: Vec<Mask> = (0..3).map(|v| 1 << v).collect();
        return certify(g, &singles, "singleton partition");
    }
    if n < 4 {
        return Err(Error::Precondition("halves partition needs order 3 or at least 4".into()));
    }
    let (gamma, _) = gamma_l(g)?;
    if gamma <= n.div_ceil(2) {
        return Err(Error::Precondition(format!(
            "locating-domination number {gamma} does not exceed {}",
            n.div_ceil(2)
        )));
    }
    let first = full_mask(n / 2);
    certify(g, &[first, g.all_mask() & !first], "halves partition")
}

/// Splits a minimal LD-set into two non-LD halves: first element against the
/// rest, or else the first 2-partition in subset order that works.
fn split_minimal(g: &Graph, m: Mask) -> Option<(Mask, Mask)> {
    let ok = |a: Mask| a != 0 && a != m && !is_ld_mask(g, a) && !is_ld_mask(g, m & !a);
    let first = 1 << m.trailing_zeros();
    if ok(first) {
        return Some((first, m & !first));
    }
    // enumerate subsets of m that contain its least element
    let rest = m & !first;
    let mut sub: Mask = 0;
    loop {
        sub = sub.wrapping_sub(rest) & rest;
        if sub == rest {
            return None;
        }
        if ok(first | sub) {
            return Some((first | sub, m & !(first | sub)));
        }
    }
}

/// LDC-partition with at least `2 d_loc(g)` parts, built from a maximum
/// partition into LD-sets; falls back to [`build_diam3_partition`] when
/// `d_loc(g) = 1`.
pub fn build_from_domatic(g: &Graph) -> Result<LdcCertificate> {
    g.require_connected()?;
    let n = g.order();
    let dom = d_loc(g)?;
    if dom.k < 2 {
        if g.diameter()? >= 3 {
            return build_diam3_partition(g);
        }
        return Err(Error::Precondition("needs diameter at least 3 or two disjoint LD-sets".into()));
    }
    if n <= 2 {
        return Err(Error::Precondition("graphs of order at most 2 have no LDC-partition".into()));
    }
    let k = dom.k;
    let mut classes: Vec<Mask> = dom.partition.iter().map(VertexSet::bits).collect();
    let mut parts: Vec<Mask> = Vec::with_capacity(2 * k + 1);
    let split_err = || Error::Internal("minimal LD-set could not be split".into());

    for i in 0..k - 1 {
        let min = minimalize_ld_set(g, &VertexSet::from_mask_unchecked(n, classes[i]))?.bits();
        classes[k - 1] |= classes[i] & !min;
        classes[i] = min;
        let (a, b) = split_minimal(g, min).ok_or_else(split_err)?;
        parts.push(a);
        parts.push(b);
    }

    let last = classes[k - 1];
    let min = minimalize_ld_set(g, &VertexSet::from_mask_unchecked(n, last))?.bits();
    let residue = last & !min;
    if residue == 0 {
        let (a, b) = split_minimal(g, min).ok_or_else(split_err)?;
        parts.push(a);
        parts.push(b);
        return certify(g, &parts, "domatic construction");
    }

    // try every split of the minimal subset: keep the residue as its own part
    // when it finds a partner, otherwise absorb it into one half
    let mut candidates: Vec<Vec<Mask>> = Vec::new();
    let first = 1 << min.trailing_zeros();
    let rest = min & !first;
    let mut sub: Mask = 0;
    loop {
        let a = first | sub;
        let b = min & !a;
        if b != 0 && !is_ld_mask(g, a) && !is_ld_mask(g, b) {
            let mut with_residue = parts.clone();
            with_residue.extend([a, b, residue]);
            candidates.push(with_residue);
            for (x, y) in [(a, b), (b, a)] {
                if !is_ld_mask(g, x | residue) {
                    let mut merged = parts.clone();
                    merged.extend([x | residue, y]);
                    candidates.push(merged);
                }
            }
        }
        sub = sub.wrapping_sub(rest) & rest;
        if sub == 0 {
            break;
        }
    }
    for c in &candidates {
        if let Ok(cert) = certify(g, c, "domatic construction") {
            return Ok(cert);
        }
    }
    Err(Error::Internal("domatic construction found no valid placement for the residue".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn diam3() {
        let c = build_diam3_partition(&path(5).unwrap()).unwrap();
        assert_eq!(c.partition.to_string(), "{{0,1}, {2,3,4}}");
        assert_eq!(build_diam3_partition(&cycle(8).unwrap()).unwrap().len(), 2);
        assert!(build_diam3_partition(&complete(4).unwrap()).is_err());
    }

    #[test]
    fn twins() {
        let c = build_twin_partition(&cycle(4).unwrap()).unwrap();
        assert_eq!(c.partition.parts()[0].to_vec(), vec![0, 2]);
        assert_eq!(c.partition.parts()[1].to_vec(), vec![1, 3]);
        assert!(build_twin_partition(&complete_bipartite(2, 3).unwrap()).is_ok());
        assert!(build_twin_partition(&path(5).unwrap()).is_err());
    }

    #[test]
    fn halves() {
        assert_eq!(build_halves_partition(&star(7).unwrap()).unwrap().len(), 2);
        assert_eq!(build_halves_partition(&path(3).unwrap()).unwrap().len(), 3);
        assert!(build_halves_partition(&cycle(10).unwrap()).is_err());
    }

    #[test]
    fn domatic() {
        let c10 = cycle(10).unwrap();
        assert_eq!(d_loc(&c10).unwrap().k, 2);
        assert!(build_from_domatic(&c10).unwrap().len() >= 4);
        assert!(build_from_domatic(&path(7).unwrap()).unwrap().len() >= 2);
        assert!(build_from_domatic(&complete(3).unwrap()).is_err());
    }
}
