//! Gap configurations of vertex subsets of cycles and paths.
//!
//! On `C_n` with members `w_1 < … < w_m`, the gap `g_j` is the number of
//! non-members strictly between `w_j` and `w_{j+1}` going in increasing index
//! order (cyclically), so `Σ (g_j + 1) = n`. On `P_n` the configuration has
//! `m + 1` entries: the run before `w_1`, the `m − 1` inner gaps, and the run
//! after `w_m`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GapConfiguration {
    pub gaps: Vec<usize>,
}

impl GapConfiguration {
    /// Whether `other` equals this configuration after a cyclic shift.
    pub fn is_rotation_of(&self, other: &[usize]) -> bool {
        let m = self.gaps.len();
        m == other.len() && (m == 0 || (0..m).any(|s| (0..m).all(|j| self.gaps[(j + s) % m] == other[j])))
    }

    pub fn count(&self, value: usize) -> usize {
        self.gaps.iter().filter(|&&g| g == value).count()
    }
}

fn check(n: usize, a: &VertexSet) -> Result<Vec<usize>> {
    if a.order() != n {
        return Err(Error::Precondition(format!("set of width {} on a graph of order {n}", a.order())));
    }
    if a.is_empty() {
        return Err(Error::Precondition("gap configuration of the empty set".into()));
    }
    Ok(a.to_vec())
}

/// Cyclic gaps of `a ⊆ V(C_n)`, starting at the least member.
pub fn gap_configuration(n: usize, a: &VertexSet) -> Result<GapConfiguration> {
    let w = check(n, a)?;
    let m = w.len();
    let gaps = (0..m)
        .map(|j| {
            let next = if j + 1 < m { w[j + 1] } else { w[0] + n };
            next - w[j] - 1
        })
        .collect();
    Ok(GapConfiguration { gaps })
}

/// Linear gaps of `a ⊆ V(P_n)`: leading run, inner gaps, trailing run.
pub fn path_gap_configuration(n: usize, a: &VertexSet) -> Result<GapConfiguration> {
    let w = check(n, a)?;
    let mut gaps = vec![w[0]];
    gaps.extend(w.windows(2).map(|p| p[1] - p[0] - 1));
    gaps.push(n - 1 - w[w.len() - 1]);
    Ok(GapConfiguration { gaps })
}

/// Inverse of [`gap_configuration`]: places the first member at `anchor` and
/// walks the gaps in increasing index order.
pub fn reconstruct_from_gaps(n: usize, gaps: &[usize], anchor: usize) -> Result<VertexSet> {
    let total: usize = gaps.iter().map(|g| g + 1).sum();
    if gaps.is_empty() || total != n || anchor >= n {
        return Err(Error::Precondition(format!("gaps {gaps:?} do not describe a subset of C_{n}")));
    }
    let mut pos = anchor;
    let mut members = Vec::with_capacity(gaps.len());
    for g in gaps {
        members.push(pos);
        pos = (pos + g + 1) % n;
    }
    VertexSet::from_vertices(n, members)
}

/// Inverse of [`path_gap_configuration`].
pub fn reconstruct_path_from_gaps(n: usize, gaps: &[usize]) -> Result<VertexSet> {
    let total = gaps.iter().sum::<usize>() + gaps.len().saturating_sub(1);
    if gaps.len() < 2 || total != n {
        return Err(Error::Precondition(format!("gaps {gaps:?} do not describe a subset of P_{n}")));
    }
    let mut pos = gaps[0];
    let mut members = vec![pos];
    for g in &gaps[1..gaps.len() - 1] {
        pos += g + 1;
        members.push(pos);
    }
    VertexSet::from_vertices(n, members)
}
