//! Breadth-first distances under the full and truncated metrics.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::bits;

/// Entry of a [`MetricTable`] for a pair in different components under [`MetricSelector::Full`].
pub const UNREACHABLE: u32 = u32::MAX;

/// Which distance a generator must separate vertices by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MetricSelector {
    /// Geodesic distance `d_G`.
    Full,
    /// `min(d_G, t)`, with unreachable pairs mapped to `t`.
    Truncated(u32),
}

impl MetricSelector {
    /// The adjacency metric `min(d_G, 2)`.
    pub const ADJACENCY: MetricSelector = MetricSelector::Truncated(2);

    pub fn truncated(t: u32) -> Result<Self> {
        if t == 0 {
            Err(Error::invalid("truncation threshold must be at least 1"))
        } else {
            Ok(MetricSelector::Truncated(t))
        }
    }
}

impl FromStr for MetricSelector {
    type Err = Error;

    /// Accepts `full`, `adj` (same as `t=2`) and `t=<k>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "full" => Ok(MetricSelector::Full),
            "adj" => Ok(MetricSelector::ADJACENCY),
            other => {
                let t = other
                    .strip_prefix("t=")
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| Error::invalid(format!("unknown metric `{other}`")))?;
                MetricSelector::truncated(t)
            }
        }
    }
}

impl fmt::Display for MetricSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricSelector::Full => f.write_str("full"),
            MetricSelector::Truncated(t) => write!(f, "t={t}"),
        }
    }
}

/// A distance or length that may be infinite. `Finite(_) < Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    Finite(u32),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<u32> {
        match self {
            Extent::Finite(v) => Some(v),
            Extent::Infinite => None,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(v) => write!(f, "{v}"),
            Extent::Infinite => f.write_str("inf"),
        }
    }
}

/// All-pairs distances of one graph under one metric.
#[derive(Clone, PartialEq, Eq)]
pub struct MetricTable {
    n: usize,
    dist: Vec<u32>,
}

impl MetricTable {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn has_unreachable(&self) -> bool {
        self.dist.contains(&UNREACHABLE)
    }
}

impl fmt::Debug for MetricTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MetricTable(n={})", self.n)?;
        for u in 0..self.n {
            let row: Vec<String> =
                self.row(u).iter().map(|&d| if d == UNREACHABLE { "-".into() } else { d.to_string() }).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Distances from `source` by BFS; unreachable vertices get [`UNREACHABLE`].
pub fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.order()];
    dist[source] = 0;
    let mut seen = 1u64 << source;
    let mut frontier = seen;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let next = bits(frontier).fold(0u64, |acc, v| acc | g.neighbours(v)) & !seen;
        for v in bits(next) {
            dist[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

pub fn metric_table(g: &Graph, metric: MetricSelector) -> MetricTable {
    let n = g.order();
    let mut dist = Vec::with_capacity(n * n);
    for u in 0..n {
        let row = bfs(g, u);
        match metric {
            MetricSelector::Full => dist.extend(row),
            MetricSelector::Truncated(t) => dist.extend(row.into_iter().map(|d| d.min(t))),
        }
    }
    MetricTable { n, dist }
}

/// Largest finite eccentricity; `Infinite` stands for UNREACHABLE on disconnected graphs.
pub fn diameter(g: &Graph) -> Extent {
    let mut best = 0;
    for u in 0..g.order() {
        for d in bfs(g, u) {
            if d == UNREACHABLE {
                return Extent::Infinite;
            }
            best = best.max(d);
        }
    }
    Extent::Finite(best)
}

/// Length of a shortest cycle; `Infinite` for forests.
pub fn girth(g: &Graph) -> Extent {
    let n = g.order();
    let mut best = u32::MAX;
    for root in 0..n {
        let mut dist = vec![UNREACHABLE; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([root]);
        dist[root] = 0;
        while let Some(u) = queue.pop_front() {
            for w in bits(g.neighbours(u)) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == u32::MAX {
        Extent::Infinite
    } else {
        Extent::Finite(best)
    }
}

pub fn is_connected(g: &Graph) -> bool {
    g.is_connected()
}
