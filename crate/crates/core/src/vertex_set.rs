//! Fixed-width vertex subsets backed by a single 128-bit mask.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::MAX_ORDER;

/// Raw bitmask type used for all vertex subsets.
pub type Mask = u128;

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> Mask {
    debug_assert!(n <= MAX_ORDER);
    if n >= MAX_ORDER {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub Mask);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// All `k`-subsets of `0..n` as masks, in increasing numeric (colex) order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    let next = (k <= n && n < MAX_ORDER).then(|| full_mask(k));
    Combinations { next, limit: 1 << n }
}

#[derive(Clone, Debug)]
pub struct Combinations {
    next: Option<Mask>,
    limit: Mask,
}

impl Iterator for Combinations {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        let cur = self.next?;
        // Gosper's hack; the empty set is the single 0-subset
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < self.limit).then_some(succ)
        };
        Some(cur)
    }
}

/// A subset of the vertices `0..order` of some graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSet {
    bits: Mask,
    order: u8,
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        VertexSet { bits: 0, order: order as u8 }
    }

    pub fn full(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        VertexSet { bits: full_mask(order), order: order as u8 }
    }

    /// Builds a set from a raw mask; bits at or above `order` are rejected.
    pub fn from_mask(order: usize, bits: Mask) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let stray = bits & !full_mask(order);
        if stray != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: stray.trailing_zeros() as usize,
                order,
            });
        }
        Ok(VertexSet { bits, order: order as u8 })
    }

    pub(crate) fn from_mask_unchecked(order: usize, bits: Mask) -> Self {
        debug_assert_eq!(bits & !full_mask(order), 0);
        VertexSet { bits, order: order as u8 }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(order: usize, vertices: I) -> Result<Self> {
        let mut s = Self::empty(order);
        for v in vertices {
            s.insert(v)?;
        }
        Ok(s)
    }

    #[inline]
    pub fn bits(&self) -> Mask {
        self.bits
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.order() && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order() });
        }
        self.bits |= 1 << v;
        Ok(())
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.order() {
            self.bits &= !(1 << v);
        }
    }

    pub fn with(mut self, v: usize) -> Self {
        assert!(v < self.order(), "vertex {v} out of range");
        self.bits |= 1 << v;
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.order, other.order);
        VertexSet { bits: self.bits | other.bits, order: self.order }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.order, other.order);
        VertexSet { bits: self.bits & other.bits, order: self.order }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.order, other.order);
        VertexSet { bits: self.bits & !other.bits, order: self.order }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet { bits: !self.bits & full_mask(self.order()), order: self.order }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn iter(&self) -> Bits {
        Bits(self.bits)
    }

    pub fn min(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}
