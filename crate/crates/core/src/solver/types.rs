//! Part-size types and the two type-level elimination rules.
//!
//! A type is the non-increasing list of part sizes of a partition. Two rules
//! can rule a type out before any assignment is tried:
//!
//! 1. some part needing a partner has no part large enough to reach the
//!    minimum size of a good union (`max_j |V_i| + |V_j| < γ`);
//! 2. some part is the only size-compatible partner of more parts than the
//!    partner cap allows.

use std::collections::BTreeSet;

use serde::Serialize;

/// All partitions of `n` into exactly `k` positive parts, non-increasing,
/// in lexicographically decreasing order.
pub fn integer_partitions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts_left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts_left == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // each remaining part needs at least one element
        if rest < parts_left {
            return;
        }
        let hi = max.min(rest - (parts_left - 1));
        let lo = rest.div_ceil(parts_left);
        for s in (lo..=hi).rev() {
            cur.push(s);
            go(rest - s, parts_left - 1, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 && k <= n {
        go(n, k, n, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// A type vector with the elimination labels that apply to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeVector {
    pub sizes: Vec<usize>,
    pub labels: BTreeSet<u8>,
}

impl TypeVector {
    pub fn survives(&self) -> bool {
        self.labels.is_empty()
    }

    /// `(2,1,1,1,1,1)^{1,2}` style rendering.
    pub fn render(&self) -> String {
        let sizes = self.sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
        if self.labels.is_empty() {
            format!("({sizes})")
        } else {
            let l = self.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",");
            format!("({sizes})^{{{l}}}")
        }
    }
}

/// Parameters of the type-level rules.
#[derive(Clone, Copy, Debug)]
pub struct TypeRules {
    /// Minimum size of a good set (γ_L for LD-coalitions, γ for plain ones).
    pub min_good: usize,
    /// Maximum number of partners any part can have.
    pub partner_cap: usize,
    /// Whether a singleton part may be good on its own and need no partner.
    pub singleton_self_sufficient: bool,
}

impl TypeRules {
    fn needs_partner(&self, size: usize) -> bool {
        !(self.singleton_self_sufficient && size == 1 && self.min_good <= 1)
    }

    pub fn label(&self, sizes: &[usize]) -> TypeVector {
        let k = sizes.len();
        let mut labels = BTreeSet::new();
        let no_partner = (0..k).any(|i| {
            self.needs_partner(sizes[i])
                && (0..k).filter(|&j| j != i).map(|j| sizes[i] + sizes[j]).max().unwrap_or(0) < self.min_good
        });
        if no_partner {
            labels.insert(1);
        } else {
            let mut forced = vec![0usize; k];
            for i in (0..k).filter(|&i| self.needs_partner(sizes[i])) {
                let mut candidates = (0..k).filter(|&j| j != i && sizes[i] + sizes[j] >= self.min_good);
                if let (Some(j), None) = (candidates.next(), candidates.next()) {
                    forced[j] += 1;
                }
            }
            if forced.iter().any(|&f| f > self.partner_cap) {
                labels.insert(1);
                labels.insert(2);
            }
        }
        TypeVector { sizes: sizes.to_vec(), labels }
    }

    pub fn table(&self, n: usize, k: usize) -> Vec<TypeVector> {
        integer_partitions(n, k).iter().map(|t| self.label(t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(integer_partitions(7, 6), vec![vec![2, 1, 1, 1, 1, 1]]);
        assert_eq!(integer_partitions(10, 6).len(), 5);
        assert_eq!(integer_partitions(15, 6).len(), 26);
        assert_eq!(integer_partitions(3, 4).len(), 0);
        assert_eq!(integer_partitions(5, 1), vec![vec![5]]);
        let all: usize = (1..=10).map(|k| integer_partitions(10, k).len()).sum();
        assert_eq!(all, 42);
    }

    #[test]
    fn order_is_lexicographically_decreasing() {
        let ts = integer_partitions(9, 6);
        assert_eq!(ts, vec![vec![4, 1, 1, 1, 1, 1], vec![3, 2, 1, 1, 1, 1], vec![2, 2, 2, 1, 1, 1]]);
    }

    #[test]
    fn labels_on_cycle_rows() {
        let rules = |g| TypeRules { min_good: g, partner_cap: 4, singleton_self_sufficient: false };
        assert_eq!(rules(3).label(&[2, 1, 1, 1, 1, 1]).render(), "(2,1,1,1,1,1)^{1,2}");
        assert_eq!(rules(4).label(&[2, 2, 1, 1, 1, 1]).render(), "(2,2,1,1,1,1)^{1}");
        assert!(rules(4).label(&[3, 2, 2, 1, 1, 1]).survives());
    }
}
