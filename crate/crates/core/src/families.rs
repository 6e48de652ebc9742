//! Stabilizer permutations and the graph families `G_{B,f}(G)` and `G_B(G)`.
//!
//! `G'` belongs to `G_{B,f}(G)` when `N_{G'}(x) = f(N_G(x))` for every
//! `x ∈ B`, where `f` fixes `B` pointwise. Edges with both endpoints outside
//! `B` are unconstrained.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::vset::{bits, VertexSet};

/// Seed used when stabilizer enumeration falls back to sampling.
pub const DEFAULT_SAMPLE_SEED: u64 = 0x5eed;

/// Largest order accepted by [`small_iso`].
pub const SMALL_ISO_MAX_ORDER: usize = 10;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &w in &image {
            if w >= n || std::mem::replace(&mut seen[w], true) {
                return Err(Error::invalid(format!("{image:?} is not a permutation")));
            }
        }
        Ok(Permutation { image })
    }

    pub fn order(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn apply_mask(&self, mask: u64) -> u64 {
        bits(mask).fold(0u64, |acc, v| acc | 1 << self.image[v])
    }

    pub fn apply_set(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_mask_unchecked(set.order(), self.apply_mask(set.mask()))
    }

    pub fn fixes(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.image[v] == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    /// `f(G)`: the graph with edges `f(u)f(v)`.
    pub fn apply_graph(&self, g: &Graph) -> Result<Graph> {
        g.relabel(&self.image)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (v, w) in self.image.iter().enumerate() {
            if v > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}->{w}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The stabilizer `S(B)`: permutations of `0..n` fixing `B` pointwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizerSpec {
    pub fixed: VertexSet,
}

impl StabilizerSpec {
    pub fn new(fixed: VertexSet) -> Self {
        StabilizerSpec { fixed }
    }

    pub fn order(&self) -> usize {
        self.fixed.order()
    }

    pub fn free(&self) -> Vec<usize> {
        self.fixed.complement().to_vec()
    }

    /// `(n - |B|)!`, saturating.
    pub fn size(&self) -> u128 {
        (1..=self.free().len() as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).unwrap_or(u128::MAX)
    }

    fn with_free_images(&self, free: &[usize], images: &[usize]) -> Permutation {
        let mut image: Vec<usize> = (0..self.order()).collect();
        for (&u, &w) in free.iter().zip(images) {
            image[u] = w;
        }
        Permutation { image }
    }
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).expect("successor exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// Every stabilizer element in lexicographic order of the images of `V - B`
/// when `(n - |B|)! <= limit`; otherwise `limit` distinct seeded samples.
pub fn stabilizer_enumerate(spec: &StabilizerSpec, limit: usize) -> Vec<Permutation> {
    if spec.size() <= limit as u128 {
        let free = spec.free();
        let mut images = free.clone();
        let mut out = vec![spec.with_free_images(&free, &images)];
        while next_permutation(&mut images) {
            out.push(spec.with_free_images(&free, &images));
        }
        out
    } else {
        stabilizer_sample(spec, limit, DEFAULT_SAMPLE_SEED)
    }
}

/// Up to `count` distinct stabilizer elements drawn uniformly with a seeded generator.
pub fn stabilizer_sample(spec: &StabilizerSpec, count: usize, seed: u64) -> Vec<Permutation> {
    if spec.size() <= count as u128 {
        return stabilizer_enumerate(spec, count);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let free = spec.free();
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut images = free.clone();
        images.shuffle(&mut rng);
        if seen.insert(images.clone()) {
            out.push(spec.with_free_images(&free, &images));
        }
    }
    out
}

fn same_order(a: &Graph, b: &Graph, set: &VertexSet) -> Result<()> {
    if a.order() != b.order() || set.order() != a.order() {
        return Err(Error::invalid(format!(
            "order mismatch: {} vs {} with a set over {}",
            a.order(),
            b.order(),
            set.order()
        )));
    }
    Ok(())
}

/// `G' ∈ G_{B,f}(G)`.
pub fn is_member_bf(g_prime: &Graph, g: &Graph, b: &VertexSet, f: &Permutation) -> Result<bool> {
    same_order(g_prime, g, b)?;
    if f.order() != g.order() {
        return Err(Error::invalid("permutation order differs from graph order"));
    }
    if !f.fixes(b) {
        return Err(Error::invalid(format!("{f} does not fix {b}")));
    }
    Ok(b.iter().all(|x| g_prime.neighbours(x) == f.apply_mask(g.neighbours(x))))
}

/// `G' ∈ G_B(G)`, with the first witnessing `f` in stabilizer enumeration order.
///
/// A valid `f` must preserve adjacency inside `B` and send each free vertex
/// `u` to a free vertex `w` with `N_{G'}(w) ∩ B = N_G(u) ∩ B`. Assigning each
/// free vertex, in increasing order, the smallest unused such `w` yields the
/// lexicographically first witness without scanning `(n - |B|)!` candidates.
pub fn is_member_b(g_prime: &Graph, g: &Graph, b: &VertexSet) -> Result<Option<Permutation>> {
    same_order(g_prime, g, b)?;
    let bm = b.mask();
    if b.iter().any(|x| g_prime.neighbours(x) & bm != g.neighbours(x) & bm) {
        return Ok(None);
    }
    let free = b.complement().to_vec();
    let mut used = 0u64;
    let mut image: Vec<usize> = (0..g.order()).collect();
    for &u in &free {
        let sig = g.neighbours(u) & bm;
        let w = free.iter().copied().find(|&w| used >> w & 1 == 0 && g_prime.neighbours(w) & bm == sig);
        match w {
            Some(w) => {
                used |= 1 << w;
                image[u] = w;
            }
            None => return Ok(None),
        }
    }
    Ok(Some(Permutation { image }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleMode {
    /// Emit `f(G)` for sampled `f ∈ S(B)`.
    Relabel,
    /// Like `Relabel`, then redraw every edge with both endpoints outside `B`.
    FreeOutside,
}

impl FromStr for SampleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relabel" => Ok(SampleMode::Relabel),
            "free-outside" | "free" => Ok(SampleMode::FreeOutside),
            other => Err(Error::invalid(format!("unknown sampling mode `{other}`"))),
        }
    }
}

impl fmt::Display for SampleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SampleMode::Relabel => "relabel",
            SampleMode::FreeOutside => "free-outside",
        })
    }
}

/// `count` members of `G_B(G)`, starting with `G` itself. Depends only on the arguments.
pub fn sample_members(g: &Graph, b: &VertexSet, mode: SampleMode, seed: u64, count: usize) -> Result<GraphFamily> {
    if count == 0 {
        return Err(Error::invalid("sample count must be at least 1"));
    }
    if b.order() != g.order() {
        return Err(Error::invalid("basis order differs from graph order"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let free = b.complement().to_vec();
    let mut members = vec![g.clone()];
    for i in 1..count {
        let mut images = free.clone();
        images.shuffle(&mut rng);
        let f = StabilizerSpec::new(*b).with_free_images(&free, &images);
        let mut adj = f.apply_graph(g)?.rows().to_vec();
        if mode == SampleMode::FreeOutside {
            for (k, &u) in free.iter().enumerate() {
                for &v in &free[k + 1..] {
                    let on = rng.random_bool(0.5);
                    if on {
                        adj[u] |= 1 << v;
                        adj[v] |= 1 << u;
                    } else {
                        adj[u] &= !(1 << v);
                        adj[v] &= !(1 << u);
                    }
                }
            }
        }
        members.push(Graph::from_adjacency(format!("{}.s{i}", g.name()), adj)?);
    }
    GraphFamily::new(members)
}

/// `<B_G>_w` with the vertex set `N_G[B]` it lives on (in `G`'s labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeaklyInduced {
    pub vertices: VertexSet,
    /// Compacted onto `0..|N_G[B]|` in increasing label order.
    pub graph: Graph,
}

/// Vertices `N_G[B]` and every edge of `G` with at least one endpoint in `B`.
pub fn weakly_induced(g: &Graph, b: &VertexSet) -> Result<WeaklyInduced> {
    if b.is_empty() {
        return Err(Error::invalid("weakly induced subgraph needs a nonempty set"));
    }
    if b.order() != g.order() {
        return Err(Error::invalid("set order differs from graph order"));
    }
    let bm = b.mask();
    let closed = b.iter().fold(0u64, |acc, x| acc | g.closed_neighbours(x));
    let verts: Vec<usize> = bits(closed).collect();
    let idx = |v: usize| verts.binary_search(&v).expect("vertex of N[B]");
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if (bm >> u | bm >> v) & 1 == 1 {
            edges.push((idx(u), idx(v)));
        }
    }
    let graph = Graph::from_edges(format!("<{b}_{}>w", g.name()), verts.len(), edges)?;
    Ok(WeaklyInduced { vertices: VertexSet::from_mask_unchecked(g.order(), closed), graph })
}

/// Exact isomorphism test by degree-pruned backtracking, for orders up to 10.
pub fn small_iso(a: &Graph, b: &Graph) -> Result<bool> {
    let n = a.order().max(b.order());
    if n > SMALL_ISO_MAX_ORDER {
        return Err(Error::BudgetExceeded { needed: n as u128, budget: SMALL_ISO_MAX_ORDER as u64 });
    }
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let order = {
        let mut o: Vec<usize> = (0..n).collect();
        o.sort_by_key(|&v| std::cmp::Reverse(da[v]));
        o
    };
    let degrees_a = (0..n).map(|v| a.degree(v)).collect::<Vec<_>>();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    let mut map = vec![usize::MAX; n];
    Ok(extend_iso(a, b, &order, &degrees_a, 0, &mut map, 0))
}

fn extend_iso(
    a: &Graph,
    b: &Graph,
    order: &[usize],
    deg: &[usize],
    depth: usize,
    map: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for w in 0..b.order() {
        if used >> w & 1 == 1 || b.degree(w) != deg[u] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| a.has_edge(u, p) == b.has_edge(w, map[p]));
        if consistent {
            map[u] = w;
            if extend_iso(a, b, order, deg, depth + 1, map, used | 1 << w) {
                return true;
            }
            map[u] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn stabilizer_sizes() {
        assert_eq!(stabilizer_enumerate(&StabilizerSpec::new(set(4, &[0, 1, 2])), 1000).len(), 1);
        assert_eq!(stabilizer_enumerate(&StabilizerSpec::new(set(4, &[0, 1])), 1000).len(), 2);
        let perms = stabilizer_enumerate(&StabilizerSpec::new(set(8, &[0, 2, 6])), 1000);
        assert_eq!(perms.len(), 120);
        assert!(perms.iter().all(|p| p.fixes(&set(8, &[0, 2, 6]))));
        let distinct: HashSet<_> = perms.iter().collect();
        assert_eq!(distinct.len(), 120);
        assert!(perms.windows(2).all(|w| w[0].image() < w[1].image()));
    }

    #[test]
    fn stabilizer_sampling_above_limit() {
        let spec = StabilizerSpec::new(set(9, &[0]));
        let perms = stabilizer_enumerate(&spec, 50);
        assert_eq!(perms.len(), 50);
        assert!(perms.iter().all(|p| p.fixes(&spec.fixed)));
        assert_eq!(perms, stabilizer_enumerate(&spec, 50));
    }

    #[test]
    fn membership_basics() {
        let c8 = Graph::cycle(8).unwrap();
        let b = set(8, &[0, 2, 6]);
        let id = Permutation::identity(8);
        assert!(is_member_bf(&c8, &c8, &b, &id).unwrap());
        assert_eq!(is_member_b(&c8, &c8, &b).unwrap(), Some(id.clone()));
        // Toggle edge 0-1, which touches B.
        let mut adj = c8.rows().to_vec();
        adj[0] &= !0b10;
        adj[1] &= !0b1;
        let broken = Graph::from_adjacency("x", adj).unwrap();
        assert!(!is_member_bf(&broken, &c8, &b, &id).unwrap());
        assert!(is_member_bf(&c8, &Graph::path(7).unwrap(), &set(8, &[0]), &id).is_err());
    }

    #[test]
    fn complete_is_not_in_family_of_cycle() {
        let k4 = Graph::complete(4).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        for pair in [[0, 1], [0, 2], [1, 3]] {
            assert_eq!(is_member_b(&k4, &c4, &set(4, &pair)).unwrap(), None);
        }
    }

    #[test]
    fn weakly_induced_examples() {
        let p4 = Graph::path(4).unwrap();
        let w = weakly_induced(&p4, &set(4, &[1])).unwrap();
        assert_eq!(w.vertices.to_vec(), vec![0, 1, 2]);
        assert_eq!(w.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let all = weakly_induced(&p4, &VertexSet::full(4)).unwrap();
        assert_eq!(all.graph.rows(), p4.rows());
        assert!(weakly_induced(&p4, &VertexSet::empty(4)).is_err());
    }

    #[test]
    fn isomorphism_checks() {
        let p4 = Graph::path(4).unwrap();
        assert!(small_iso(&p4, &p4).unwrap());
        assert!(small_iso(&p4, &p4.complement()).unwrap());
        assert!(!small_iso(&Graph::complete(3).unwrap(), &Graph::path(3).unwrap()).unwrap());
        assert!(!small_iso(
            &Graph::cycle(6).unwrap(),
            &Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap()).unwrap()
        )
        .unwrap());
        assert!(matches!(
            small_iso(&Graph::path(11).unwrap(), &Graph::path(11).unwrap()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn samples_are_members() {
        let c8 = Graph::cycle(8).unwrap();
        let b = set(8, &[0, 2, 6]);
        for mode in [SampleMode::Relabel, SampleMode::FreeOutside] {
            let fam = sample_members(&c8, &b, mode, 7, 12).unwrap();
            assert_eq!(fam.members()[0], c8);
            for g in fam.iter() {
                assert!(is_member_b(g, &c8, &b).unwrap().is_some());
            }
            assert_eq!(fam, sample_members(&c8, &b, mode, 7, 12).unwrap());
        }
        let one = sample_members(&c8, &b, SampleMode::Relabel, 1, 1).unwrap();
        assert_eq!(one.len(), 1);
    }
}
