//! Brute-force oracles, independent of the library's search code.
#![allow(dead_code)]

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simdim::{Graph, GraphFamily, MetricSelector, VertexSet};

pub const INF: u32 = u32::MAX;

/// All-pairs distances by Floyd-Warshall, clamped per `metric`; unreachable pairs get `t` or `INF`.
pub fn distances(g: &Graph, metric: MetricSelector) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for (v, x) in row.iter_mut().enumerate() {
            if g.has_edge(u, v) {
                *x = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    if let MetricSelector::Truncated(t) = metric {
        for row in &mut d {
            for x in row.iter_mut() {
                *x = (*x).min(t);
            }
        }
    }
    d
}

pub struct Oracle {
    tables: Vec<Vec<Vec<u32>>>,
    n: usize,
}

impl Oracle {
    pub fn new(family: &GraphFamily, metric: MetricSelector) -> Self {
        Oracle { tables: family.iter().map(|g| distances(g, metric)).collect(), n: family.order() }
    }

    pub fn generates(&self, set: &[usize]) -> bool {
        self.tables
            .iter()
            .all(|d| (0..self.n).tuple_combinations().all(|(u, v)| set.iter().any(|&s| d[u][s] != d[v][s])))
    }

    /// Smallest generator size and the lexicographically first witness.
    pub fn min_generator(&self) -> (usize, Vec<usize>) {
        (0..=self.n)
            .find_map(|k| (0..self.n).combinations(k).find(|c| self.generates(c)).map(|c| (k, c)))
            .expect("the whole vertex set generates")
    }

    pub fn all_bases(&self) -> Vec<Vec<usize>> {
        let (k, _) = self.min_generator();
        (0..self.n).combinations(k).filter(|c| self.generates(c)).collect()
    }
}

pub fn naive_min_generator(family: &GraphFamily, metric: MetricSelector) -> (usize, Vec<usize>) {
    Oracle::new(family, metric).min_generator()
}

pub fn dominates(g: &Graph, set: &[usize]) -> bool {
    (0..g.order()).all(|v| set.contains(&v) || set.iter().any(|&s| g.has_edge(v, s)))
}

pub fn naive_gamma(g: &Graph) -> usize {
    (0..=g.order()).find(|&k| (0..g.order()).combinations(k).any(|c| dominates(g, &c))).unwrap()
}

/// Maximal runs of non-members around the cycle `0..n`, as lengths.
pub fn cycle_gaps(n: usize, set: &[usize]) -> Vec<usize> {
    let mut gaps = Vec::new();
    let start = set[0];
    let mut run = 0;
    for i in 1..=n {
        let v = (start + i) % n;
        if set.contains(&v) {
            if run > 0 {
                gaps.push(run);
            }
            run = 0;
        } else {
            run += 1;
        }
    }
    gaps
}

/// First stabilizer element (lexicographic on the images of the free vertices)
/// with `N_{G'}(x) = f(N_G(x))` for all `x ∈ B`.
pub fn naive_member_b(gp: &Graph, g: &Graph, b: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let free: Vec<usize> = (0..n).filter(|v| !b.contains(v)).collect();
    free.iter().copied().permutations(free.len()).find_map(|images| {
        let mut f: Vec<usize> = (0..n).collect();
        for (&u, &w) in free.iter().zip(&images) {
            f[u] = w;
        }
        let ok = b.iter().all(|&x| (0..n).all(|y| gp.has_edge(x, f[y]) == g.has_edge(x, y)));
        ok.then_some(f)
    })
}

pub fn naive_iso(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    n == b.order()
        && (0..n)
            .permutations(n)
            .any(|p| (0..n).tuple_combinations().all(|(u, v)| a.has_edge(u, v) == b.has_edge(p[u], p[v])))
}

pub fn set(n: usize, vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` random graphs of order `n` with edge probability drawn per graph.
pub fn random_family(rng: &mut ChaCha8Rng, n: usize, count: usize, connected: bool) -> GraphFamily {
    let members = (0..count)
        .map(|i| {
            let p = rng.random_range(0.25..0.75);
            let g = if connected { Graph::random_connected_with(n, p, rng) } else { Graph::random_with(n, p, rng) };
            g.unwrap().with_name(format!("R{n}.{i}"))
        })
        .collect();
    GraphFamily::new(members).unwrap()
}

pub fn three_graph_family() -> GraphFamily {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/suites/three_graphs.graphs")).unwrap();
    simdim::format::parse_family(&text).unwrap()
}

pub fn c8_members() -> Vec<Graph> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/suites/c8_members.graphs")).unwrap();
    simdim::format::parse_graphs(&text).unwrap()
}
