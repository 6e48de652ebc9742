//! Partition refinement over distance levels.
//!
//! For every member graph and every vertex `s`, the vertices are grouped by
//! their distance to `s`. Adding `s` to a candidate set splits each class of
//! still-indistinguishable vertices along those groups. A set generates the
//! family exactly when no class with two or more vertices survives.

use crate::error::{Error, Result};
use crate::graph::GraphFamily;
use crate::metric::{metric_table, MetricSelector};
use crate::vset::{bits, full_mask};

/// Unresolved classes, tagged with the member graph they belong to.
pub(crate) type Classes = Vec<(u32, u64)>;

pub(crate) struct Resolver {
    n: usize,
    /// `levels[g * n + s]`: nonempty masks of vertices at each distinct distance from `s` in member `g`.
    levels: Vec<Vec<u64>>,
    members: usize,
}

impl Resolver {
    pub(crate) fn new(family: &GraphFamily, metric: MetricSelector) -> Result<Self> {
        if metric == MetricSelector::Full {
            if let Some(g) = family.iter().find(|g| !g.is_connected()) {
                return Err(Error::UnsupportedMetric(format!("full metric on disconnected graph `{}`", g.name())));
            }
        }
        if let MetricSelector::Truncated(0) = metric {
            return Err(Error::invalid("truncation threshold must be at least 1"));
        }
        let n = family.order();
        let mut levels = Vec::with_capacity(family.len() * n);
        for g in family {
            let table = metric_table(g, metric);
            for s in 0..n {
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for (v, &d) in table.row(s).iter().enumerate() {
                    match groups.iter_mut().find(|(dd, _)| *dd == d) {
                        Some((_, m)) => *m |= 1 << v,
                        None => groups.push((d, 1 << v)),
                    }
                }
                levels.push(groups.into_iter().map(|(_, m)| m).collect());
            }
        }
        Ok(Resolver { n, levels, members: family.len() })
    }

    #[inline]
    pub(crate) fn order(&self) -> usize {
        self.n
    }

    pub(crate) fn initial(&self) -> Classes {
        if self.n < 2 {
            return Vec::new();
        }
        (0..self.members as u32).map(|g| (g, full_mask(self.n))).collect()
    }

    pub(crate) fn refine(&self, classes: &Classes, s: usize) -> Classes {
        let mut out = Vec::with_capacity(classes.len() + 2);
        for &(g, c) in classes {
            for &level in &self.levels[g as usize * self.n + s] {
                let part = c & level;
                if part.count_ones() >= 2 {
                    out.push((g, part));
                }
            }
        }
        out
    }

    pub(crate) fn resolves(&self, set: u64) -> bool {
        let mut classes = self.initial();
        for s in bits(set) {
            if classes.is_empty() {
                break;
            }
            classes = self.refine(&classes, s);
        }
        classes.is_empty()
    }
}
