use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Maximal runs of consecutive non-members around the cycle `0, 1, ..., n-1, 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapProfile {
    /// `counts[k]` is the number of gaps of length `k`; `counts[0]` is unused.
    pub counts: Vec<usize>,
    pub max_gap: usize,
}

impl GapProfile {
    pub fn count(&self, len: usize) -> usize {
        self.counts.get(len).copied().unwrap_or(0)
    }

    pub fn ones(&self) -> usize {
        self.count(1)
    }

    pub fn twos(&self) -> usize {
        self.count(2)
    }

    pub fn threes(&self) -> usize {
        self.count(3)
    }
}

/// Gap lengths of `set` read on the vertex circle of `C_n`.
pub fn gap_profile(n: usize, set: &VertexSet) -> Result<GapProfile> {
    if set.order() != n {
        return Err(Error::invalid(format!("vertex set over {} vertices, cycle has {n}", set.order())));
    }
    if set.is_empty() || set.len() == n {
        return Err(Error::invalid("gap profile needs a nonempty proper subset"));
    }
    let members = set.to_vec();
    let mut counts = vec![0usize; n];
    let mut max_gap = 0;
    for (i, &a) in members.iter().enumerate() {
        let b = members[(i + 1) % members.len()];
        let gap = (b + n - a - 1) % n;
        if gap > 0 {
            counts[gap] += 1;
            max_gap = max_gap.max(gap);
        }
    }
    Ok(GapProfile { counts, max_gap })
}
