//! Stored six-part certificates for `C_16`, `C_17`, `P_16` and `P_17`.
//!
//! Each fixture is an edge list plus a partition file. Loading re-derives the
//! graph from the family generator, checks it against the stored edge list,
//! and verifies the partition from scratch.

use super::tables::LabFamily;
use crate::error::{Error, Result};
use crate::format::from_edge_list;
use crate::partition::{verify_ldc_partition, LdcCertificate, Partition};

struct Fixture {
    family: LabFamily,
    n: usize,
    edges: &'static str,
    partition: &'static str,
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        family: LabFamily::Cycle,
        n: 16,
        edges: include_str!("../../fixtures/cycle16.edges"),
        partition: include_str!("../../fixtures/cycle16.partition"),
    },
    Fixture {
        family: LabFamily::Cycle,
        n: 17,
        edges: include_str!("../../fixtures/cycle17.edges"),
        partition: include_str!("../../fixtures/cycle17.partition"),
    },
    Fixture {
        family: LabFamily::Path,
        n: 16,
        edges: include_str!("../../fixtures/path16.edges"),
        partition: include_str!("../../fixtures/path16.partition"),
    },
    Fixture {
        family: LabFamily::Path,
        n: 17,
        edges: include_str!("../../fixtures/path17.edges"),
        partition: include_str!("../../fixtures/path17.partition"),
    },
];

/// The verified stored certificate for `(family, n)`, if one exists.
pub fn certificate(family: LabFamily, n: usize) -> Result<Option<LdcCertificate>> {
    let Some(f) = FIXTURES.iter().find(|f| f.family == family && f.n == n) else {
        return Ok(None);
    };
    let g = family.graph(n)?;
    if from_edge_list(f.edges)? != g {
        return Err(Error::Internal(format!("fixture graph for {family} {n} does not match the generator")));
    }
    let p = Partition::parse(n, f.partition)?;
    match verify_ldc_partition(&g, &p)? {
        Ok(c) => Ok(Some(c)),
        Err(refusal) => Err(Error::Internal(format!("fixture for {family} {n}: {refusal}"))),
    }
}

/// `(family, n)` pairs with stored certificates.
pub fn available() -> Vec<(LabFamily, usize)> {
    FIXTURES.iter().map(|f| (f.family, f.n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_verify() {
        for (family, n) in available() {
            let c = certificate(family, n).unwrap().unwrap();
            assert_eq!(c.len(), 6);
        }
        assert!(certificate(LabFamily::Cycle, 12).unwrap().is_none());
    }
}
