use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::MAX_ORDER;

/// A subset of the vertex labels `0..n`, packed into one machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    mask: u64,
}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn bits(mask: u64) -> Bits {
    Bits(mask)
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        VertexSet { n, mask: 0 }
    }

    pub fn full(n: usize) -> Self {
        VertexSet { n, mask: full_mask(n) }
    }

    /// Builds a set from a raw mask; bits at or above `n` are rejected.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::CapacityExceeded { order: n });
        }
        if mask & !full_mask(n) != 0 {
            return Err(Error::invalid(format!("vertex set mask {mask:#x} exceeds order {n}")));
        }
        Ok(VertexSet { n, mask })
    }

    pub(crate) fn from_mask_unchecked(n: usize, mask: u64) -> Self {
        debug_assert_eq!(mask & !full_mask(n), 0);
        VertexSet { n, mask }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::CapacityExceeded { order: n });
        }
        let mut mask = 0u64;
        for v in vertices {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} out of range for order {n}")));
            }
            mask |= 1 << v;
        }
        Ok(VertexSet { n, mask })
    }

    /// Parses `{1,3,7}`, `1,3,7` or `{}`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let body = text.trim();
        let body = body.strip_prefix('{').unwrap_or(body);
        let body = body.strip_suffix('}').unwrap_or(body);
        let mut labels = Vec::new();
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let v: usize = tok.parse().map_err(|_| Error::invalid(format!("bad vertex label `{tok}`")))?;
            labels.push(v);
        }
        Self::from_vertices(n, labels)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.mask >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        self.mask |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.mask &= !(1 << v);
        }
    }

    pub fn iter(&self) -> Bits {
        bits(self.mask)
    }

    pub fn complement(&self) -> Self {
        VertexSet { n: self.n, mask: !self.mask & full_mask(self.n) }
    }

    pub fn union(&self, other: &Self) -> Self {
        VertexSet { n: self.n.max(other.n), mask: self.mask | other.mask }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        VertexSet { n: self.n.min(other.n), mask: self.mask & other.mask }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Sets compare as sorted label sequences, so `{0,5} < {1,2}` and `{1} < {1,2}`.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({}; n={})", self, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order_is_on_sorted_labels() {
        let a = VertexSet::from_vertices(8, [0, 5]).unwrap();
        let b = VertexSet::from_vertices(8, [1, 2]).unwrap();
        let c = VertexSet::from_vertices(8, [1]).unwrap();
        assert!(a < b);
        assert!(c < b);
    }

    #[test]
    fn parse_and_display() {
        let s = VertexSet::parse(9, "{1, 3,7}").unwrap();
        assert_eq!(s.to_string(), "{1,3,7}");
        assert_eq!(VertexSet::parse(4, "{}").unwrap().len(), 0);
        assert!(VertexSet::parse(4, "{4}").is_err());
        assert!(VertexSet::parse(4, "{a}").is_err());
    }

    #[test]
    fn full_set_of_64() {
        let s = VertexSet::full(64);
        assert_eq!(s.len(), 64);
        assert_eq!(s.complement().len(), 0);
    }
}
