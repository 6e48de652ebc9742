//! Corona and join products, lifted to families.
//!
//! Corona labeling: the roots `0..n` come first, then copy `i` of `H`
//! occupies the contiguous block `n + i*n' .. n + (i+1)*n'`.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::vset::{full_mask, VertexSet};
use crate::MAX_ORDER;

/// Product names use `⊙` and `+`, or `_odot_` / `_plus_` in ASCII mode.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Naming {
    #[default]
    Unicode,
    Ascii,
}

impl Naming {
    fn corona(self, g: &str, h: &str) -> String {
        match self {
            Naming::Unicode => format!("{g}⊙{h}"),
            Naming::Ascii => format!("{g}_odot_{h}"),
        }
    }

    fn join(self, g: &str, h: &str) -> String {
        match self {
            Naming::Unicode => format!("{g}+{h}"),
            Naming::Ascii => format!("{g}_plus_{h}"),
        }
    }
}

/// Where a vertex of `G ⊙ H` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoronaVertex {
    Root(usize),
    /// Vertex `a` of the copy of `H` attached to root `i`.
    Copy(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoronaLayout {
    /// Order of the first factor.
    pub n: usize,
    /// Order of the second factor.
    pub n_h: usize,
}

impl CoronaLayout {
    pub fn order(&self) -> usize {
        self.n * (1 + self.n_h)
    }

    #[inline]
    pub fn root(&self, i: usize) -> usize {
        debug_assert!(i < self.n);
        i
    }

    #[inline]
    pub fn copy(&self, i: usize, a: usize) -> usize {
        debug_assert!(i < self.n && a < self.n_h);
        self.n + i * self.n_h + a
    }

    pub fn locate(&self, v: usize) -> CoronaVertex {
        assert!(v < self.order(), "vertex {v} outside corona of order {}", self.order());
        if v < self.n {
            CoronaVertex::Root(v)
        } else {
            let off = v - self.n;
            CoronaVertex::Copy(off / self.n_h, off % self.n_h)
        }
    }

    pub fn roots(&self) -> VertexSet {
        VertexSet::from_mask_unchecked(self.order(), full_mask(self.n))
    }

    /// All vertices of copy `i`.
    pub fn copy_block(&self, i: usize) -> VertexSet {
        VertexSet::from_mask_unchecked(self.order(), full_mask(self.n_h) << self.copy(i, 0))
    }

    /// `W_i`: the image of `w ⊆ V(H)` inside copy `i`.
    pub fn lift_into(&self, i: usize, w: &VertexSet) -> VertexSet {
        VertexSet::from_mask_unchecked(self.order(), w.mask() << self.copy(i, 0))
    }

    /// `⋃_i W_i`.
    pub fn lift(&self, w: &VertexSet) -> VertexSet {
        (0..self.n).fold(VertexSet::empty(self.order()), |acc, i| acc.union(&self.lift_into(i, w)))
    }

    /// `W ∩ V'_i` read back as a subset of `V(H)`.
    pub fn project(&self, i: usize, set: &VertexSet) -> VertexSet {
        let block = set.mask() >> self.copy(i, 0);
        VertexSet::from_mask_unchecked(self.n_h, block & full_mask(self.n_h))
    }

    /// `W ∩ V` as a subset of `V(G)`.
    pub fn project_roots(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_mask_unchecked(self.n, set.mask() & full_mask(self.n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaProduct {
    pub graph: Graph,
    pub layout: CoronaLayout,
}

pub fn corona(g: &Graph, h: &Graph) -> Result<CoronaProduct> {
    corona_named(g, h, Naming::Unicode)
}

pub fn corona_named(g: &Graph, h: &Graph, naming: Naming) -> Result<CoronaProduct> {
    let layout = CoronaLayout { n: g.order(), n_h: h.order() };
    let order = layout.order();
    if order > MAX_ORDER {
        return Err(Error::CapacityExceeded { order });
    }
    let mut adj = vec![0u64; order];
    for i in 0..layout.n {
        let block = layout.copy_block(i).mask();
        adj[i] = g.neighbours(i) | block;
        for a in 0..layout.n_h {
            let shift = layout.copy(i, 0);
            adj[layout.copy(i, a)] = h.neighbours(a) << shift | 1 << i;
        }
    }
    let graph = Graph::from_adjacency_unchecked(naming.corona(g.name(), h.name()), adj);
    Ok(CoronaProduct { graph, layout })
}

pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    join_named(g, h, Naming::Unicode)
}

/// `G + H`: `H` shifted by `|G|`, every cross edge present.
pub fn join_named(g: &Graph, h: &Graph, naming: Naming) -> Result<Graph> {
    let n = g.order();
    let order = n + h.order();
    if order > MAX_ORDER {
        return Err(Error::CapacityExceeded { order });
    }
    let left = full_mask(n);
    let right = full_mask(order) & !left;
    let adj = g.rows().iter().map(|&r| r | right).chain(h.rows().iter().map(|&r| r << n | left)).collect();
    Ok(Graph::from_adjacency_unchecked(naming.join(g.name(), h.name()), adj))
}

/// `{G ⊙ H}` over all pairs, `G`-major; all members share one layout.
pub fn family_corona(gs: &GraphFamily, hs: &GraphFamily) -> Result<(GraphFamily, CoronaLayout)> {
    family_corona_named(gs, hs, Naming::Unicode)
}

pub fn family_corona_named(gs: &GraphFamily, hs: &GraphFamily, naming: Naming) -> Result<(GraphFamily, CoronaLayout)> {
    let layout = CoronaLayout { n: gs.order(), n_h: hs.order() };
    let mut members = Vec::with_capacity(gs.len() * hs.len());
    for g in gs {
        for h in hs {
            members.push(corona_named(g, h, naming)?.graph);
        }
    }
    Ok((GraphFamily::new(members)?, layout))
}

/// `{G + H}` over all pairs, `G`-major.
pub fn family_join(gs: &GraphFamily, hs: &GraphFamily) -> Result<GraphFamily> {
    family_join_named(gs, hs, Naming::Unicode)
}

pub fn family_join_named(gs: &GraphFamily, hs: &GraphFamily, naming: Naming) -> Result<GraphFamily> {
    let mut members = Vec::with_capacity(gs.len() * hs.len());
    for g in gs {
        for h in hs {
            members.push(join_named(g, h, naming)?);
        }
    }
    GraphFamily::new(members)
}
