//! Immutable simple graphs on at most 64 vertices and families of them.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::vset::{bits, full_mask, VertexSet};
use crate::MAX_ORDER;

/// A labeled simple graph on vertices `0..n`.
///
/// Row `i` of the adjacency is the open neighbourhood `N(i)` as a bit mask.
/// Graphs are never mutated after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    name: String,
    adj: Vec<u64>,
}

/// Standard graph families with canonical labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
}

/// Vertices with label greater than `u`.
#[inline]
fn above(u: usize) -> u64 {
    if u >= 63 {
        0
    } else {
        u64::MAX << (u + 1)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::CapacityExceeded { order: n })
    } else {
        Ok(())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, out-of-range endpoints
    /// and repeated edges are rejected.
    pub fn from_edges<I>(name: impl Into<String>, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge {u}-{v} out of range for order {n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::invalid(format!("repeated edge {u}-{v}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { name: name.into(), adj })
    }

    /// Builds a graph from neighbourhood masks, validating symmetry and irreflexivity.
    pub fn from_adjacency(name: impl Into<String>, adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let full = full_mask(n);
        for (i, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::invalid(format!("row {i} references vertices beyond {n}")));
            }
            if row >> i & 1 == 1 {
                return Err(Error::invalid(format!("self-loop at vertex {i}")));
            }
            for j in bits(row) {
                if adj[j] >> i & 1 == 0 {
                    return Err(Error::invalid(format!("asymmetric adjacency {i}-{j}")));
                }
            }
        }
        Ok(Graph { name: name.into(), adj })
    }

    pub(crate) fn from_adjacency_unchecked(name: String, adj: Vec<u64>) -> Self {
        Graph { name, adj }
    }

    pub fn standard(kind: StandardKind) -> Result<Self> {
        match kind {
            StandardKind::Path(n) => {
                if n == 0 {
                    return Err(Error::invalid("path order must be at least 1"));
                }
                Graph::from_edges(format!("P{n}"), n, (1..n).map(|i| (i - 1, i)))
            }
            StandardKind::Cycle(n) => {
                if n < 3 {
                    return Err(Error::invalid(format!("cycle order must be at least 3, got {n}")));
                }
                let edges = (1..n).map(|i| (i - 1, i)).chain(std::iter::once((n - 1, 0)));
                Graph::from_edges(format!("C{n}"), n, edges)
            }
            StandardKind::Complete(n) => {
                if n == 0 {
                    return Err(Error::invalid("complete graph order must be at least 1"));
                }
                check_order(n)?;
                let full = full_mask(n);
                let adj = (0..n).map(|i| full & !(1 << i)).collect();
                Ok(Graph { name: format!("K{n}"), adj })
            }
            StandardKind::Empty(n) => {
                if n == 0 {
                    return Err(Error::invalid("empty graph order must be at least 1"));
                }
                check_order(n)?;
                Ok(Graph { name: format!("N{n}"), adj: vec![0; n] })
            }
            StandardKind::CompleteBipartite(r, s) => {
                if r == 0 || s == 0 {
                    return Err(Error::invalid("complete bipartite parts must be nonempty"));
                }
                let n = r + s;
                check_order(n)?;
                let left = full_mask(r);
                let right = full_mask(n) & !left;
                let adj = (0..n).map(|i| if i < r { right } else { left }).collect();
                Ok(Graph { name: format!("K{r}_{s}"), adj })
            }
        }
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::standard(StandardKind::Path(n))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::standard(StandardKind::Cycle(n))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::standard(StandardKind::Complete(n))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::standard(StandardKind::Empty(n))
    }

    pub fn complete_bipartite(r: usize, s: usize) -> Result<Self> {
        Self::standard(StandardKind::CompleteBipartite(r, s))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    /// Open neighbourhood `N(v)` as a mask.
    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]` as a mask.
    #[inline]
    pub fn closed_neighbours(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    pub fn neighbourhood(&self, v: usize) -> VertexSet {
        VertexSet::from_mask_unchecked(self.order(), self.adj[v])
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, &row)| bits(row & above(u)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let adj = self.adj.iter().enumerate().map(|(i, &r)| !r & full & !(1 << i)).collect();
        Graph { name: format!("~{}", self.name), adj }
    }

    /// `G ∪ H`: vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        check_order(n + other.order())?;
        let adj = self.adj.iter().copied().chain(other.adj.iter().map(|&r| r << n)).collect();
        Ok(Graph { name: format!("{}∪{}", self.name, other.name), adj })
    }

    /// `G - v`: vertex `v` and its incident edges removed, later labels shifted down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.order() {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        let keep = self.vertex_mask() & !(1 << v);
        Ok(self.induced(keep).with_name(format!("{}-{v}", self.name)))
    }

    /// Subgraph induced by `mask`, relabeled to `0..|mask|` preserving label order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let adj = verts
            .iter()
            .map(|&u| {
                verts.iter().enumerate().filter(|&(_, &w)| self.has_edge(u, w)).fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Graph {
            name: format!("{}[{}]", self.name, VertexSet::from_mask_unchecked(self.order(), mask & self.vertex_mask())),
            adj,
        }
    }

    /// Graph with edge set `{f(u)f(v) : uv ∈ E}` where `image[u] = f(u)`.
    pub fn relabel(&self, image: &[usize]) -> Result<Graph> {
        let n = self.order();
        if image.len() != n {
            return Err(Error::invalid("relabeling has the wrong length"));
        }
        let mut seen = 0u64;
        for &w in image {
            if w >= n || seen >> w & 1 == 1 {
                return Err(Error::invalid("relabeling is not a bijection"));
            }
            seen |= 1 << w;
        }
        let mut adj = vec![0u64; n];
        for (u, &row) in self.adj.iter().enumerate() {
            adj[image[u]] = bits(row).fold(0u64, |acc, v| acc | 1 << image[v]);
        }
        Ok(Graph { name: self.name.clone(), adj })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = bits(frontier).fold(0u64, |acc, v| acc | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == self.vertex_mask()
    }

    /// Erdős–Rényi graph `G(n, p)` from a seeded generator.
    pub fn random(n: usize, p: f64, seed: u64) -> Result<Graph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(n, p, &mut rng).map(|g| g.with_name(format!("R{n}s{seed}")))
    }

    pub fn random_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
        check_order(n)?;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(format!("R{n}"), n, edges)
    }

    /// Connected random graph: a random spanning tree plus `G(n, p)` extra edges.
    pub fn random_connected_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
        check_order(n)?;
        if n == 0 {
            return Err(Error::invalid("order must be at least 1"));
        }
        let mut adj = vec![0u64; n];
        for v in 1..n {
            let u = rng.random_range(0..v);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
        }
        Ok(Graph { name: format!("R{n}c"), adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; n={}; ", self.name, self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Graphs on a common vertex set `0..n`. Duplicates are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFamily {
    n: usize,
    members: Vec<Graph>,
}

impl GraphFamily {
    pub fn new(members: Vec<Graph>) -> Result<Self> {
        let first = members.first().ok_or_else(|| Error::invalid("a graph family needs at least one member"))?;
        let n = first.order();
        if let Some(g) = members.iter().find(|g| g.order() != n) {
            return Err(Error::invalid(format!(
                "family members must share one order: `{}` has {} vertices, expected {n}",
                g.name(),
                g.order()
            )));
        }
        Ok(GraphFamily { n, members })
    }

    pub fn singleton(g: Graph) -> Self {
        GraphFamily { n: g.order(), members: vec![g] }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.members.iter()
    }

    pub fn complement(&self) -> GraphFamily {
        GraphFamily { n: self.n, members: self.members.iter().map(Graph::complement).collect() }
    }

    /// Concatenation of two families on the same vertex set.
    pub fn extend(&self, other: &GraphFamily) -> Result<GraphFamily> {
        let mut members = self.members.clone();
        members.extend(other.members.iter().cloned());
        GraphFamily::new(members)
    }

    pub fn all_connected(&self) -> bool {
        self.members.iter().all(Graph::is_connected)
    }

    pub fn into_members(self) -> Vec<Graph> {
        self.members
    }
}

impl From<Graph> for GraphFamily {
    fn from(g: Graph) -> Self {
        GraphFamily::singleton(g)
    }
}

impl<'a> IntoIterator for &'a GraphFamily {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn standard_constructors() {
        assert_eq!(edge_list(&Graph::path(4).unwrap()), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(edge_list(&Graph::complete(3).unwrap()), vec![(0, 1), (0, 2), (1, 2)]);
        let c8 = Graph::cycle(8).unwrap();
        assert_eq!(c8.edge_count(), 8);
        assert!(c8.has_edge(7, 0));
        assert!((0..7).all(|i| c8.has_edge(i, i + 1)));
        let k12 = Graph::complete_bipartite(1, 2).unwrap();
        assert_eq!(edge_list(&k12), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn cycle_needs_three_vertices() {
        assert!(matches!(Graph::cycle(2), Err(Error::InvalidParameter(_))));
        assert!(Graph::path(0).is_err());
    }

    #[test]
    fn disjoint_unions() {
        let g = Graph::empty(1).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(edge_list(&g), vec![(1, 2)]);
        let n4 = Graph::empty(2).unwrap().disjoint_union(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(n4.rows(), Graph::empty(4).unwrap().rows());
        let kk = Graph::complete(2).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(edge_list(&kk), vec![(0, 1), (2, 3)]);
        let big = Graph::empty(40).unwrap();
        assert!(matches!(big.disjoint_union(&big), Err(Error::CapacityExceeded { order: 80 })));
    }

    #[test]
    fn complements() {
        assert_eq!(Graph::complete(3).unwrap().complement().rows(), Graph::empty(3).unwrap().rows());
        assert_eq!(Graph::empty(5).unwrap().complement().rows(), Graph::complete(5).unwrap().rows());
        // P4 = 0-1-2-3; its complement has edges 02, 03, 13, i.e. the path 2-0-3-1.
        let c = Graph::path(4).unwrap().complement();
        assert_eq!(edge_list(&c), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn vertex_removal_relabels() {
        let p = Graph::path(4).unwrap();
        let g = p.remove_vertex(1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(edge_list(&g), vec![(1, 2)]);
    }

    #[test]
    fn relabel_rejects_non_bijections() {
        let p = Graph::path(3).unwrap();
        assert!(p.relabel(&[0, 0, 1]).is_err());
        let q = p.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(edge_list(&q), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn adjacency_validation() {
        assert!(Graph::from_adjacency("x", vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency("x", vec![0b1]).is_err());
        assert!(Graph::from_edges("x", 3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn family_rejects_mixed_orders() {
        let err = GraphFamily::new(vec![Graph::path(3).unwrap(), Graph::path(4).unwrap()]);
        assert!(err.is_err());
        assert!(GraphFamily::new(vec![]).is_err());
    }
}
