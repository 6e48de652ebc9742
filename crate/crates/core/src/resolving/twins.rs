use crate::graph::{Graph, GraphFamily};
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinKind {
    /// Equal closed neighbourhoods.
    True,
    /// Equal open neighbourhoods.
    False,
    Singleton,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClass {
    pub kind: TwinKind,
    pub members: VertexSet,
}

/// Partition of the vertices into maximal twin classes, ordered by smallest member.
///
/// A class of two or more vertices never mixes true and false twins.
pub fn twin_classes(g: &Graph) -> Vec<TwinClass> {
    let n = g.order();
    let mut classes: Vec<(usize, TwinKind, u64)> = Vec::new();
    for v in 0..n {
        let found = classes.iter_mut().find(|(rep, _, _)| {
            g.closed_neighbours(*rep) == g.closed_neighbours(v) || g.neighbours(*rep) == g.neighbours(v)
        });
        match found {
            Some((rep, kind, mask)) => {
                *kind = if g.has_edge(*rep, v) { TwinKind::True } else { TwinKind::False };
                *mask |= 1 << v;
            }
            None => classes.push((v, TwinKind::Singleton, 1 << v)),
        }
    }
    classes
        .into_iter()
        .map(|(_, kind, mask)| TwinClass { kind, members: VertexSet::from_mask_unchecked(n, mask) })
        .collect()
}

/// Masks of all twin classes of size at least two, over every member, deduplicated.
pub(crate) fn forcing_masks(family: &GraphFamily) -> Vec<u64> {
    let mut masks: Vec<u64> =
        family.iter().flat_map(twin_classes).filter(|c| c.members.len() >= 2).map(|c| c.members.mask()).collect();
    masks.sort_unstable();
    masks.dedup();
    masks
}

/// Any generator misses at most one vertex per twin class, so each member
/// needs at least `sum(|class| - 1)` vertices.
pub(crate) fn twin_lower_bound(family: &GraphFamily) -> usize {
    family.iter().map(|g| twin_classes(g).iter().map(|c| c.members.len() - 1).sum::<usize>()).max().unwrap_or(0)
}
