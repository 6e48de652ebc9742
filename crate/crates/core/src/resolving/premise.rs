//! Hypothesis flags of the corona case theorems, computed from the full
//! catalog of simultaneous adjacency bases.

use crate::error::Result;
use crate::graph::GraphFamily;
use crate::metric::MetricSelector;
use crate::resolving::domination::undominated;
use crate::resolving::search::{enumerate_bases_with, BasisCatalog, SearchConfig};
use crate::vset::VertexSet;

/// `B ⊆ N_H(v)` for member `member` and vertex `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Trap {
    pub basis: VertexSet,
    pub member: usize,
    pub vertex: usize,
}

/// A basis missing `vertex` in the closed neighbourhoods of member `member`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Undominated {
    pub basis: VertexSet,
    pub member: usize,
    pub vertex: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PremiseWitnesses {
    /// First basis dominating every member.
    pub dominating: Option<VertexSet>,
    /// First basis not contained in any neighbourhood of any member.
    pub untrapped: Option<VertexSet>,
    /// First basis with both properties.
    pub dominating_untrapped: Option<VertexSet>,
    /// First basis failing to dominate some member.
    pub non_dominating: Option<Undominated>,
    /// Trap of the first dominating basis that is trapped.
    pub dominating_trap: Option<Trap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PremiseProfile {
    pub sd_a: usize,
    pub catalog: BasisCatalog,
    pub exists_dominating_basis: bool,
    pub exists_non_dominating_basis: bool,
    /// Some basis `B` with `B ⊄ N_H(v)` for every member `H` and vertex `v`.
    pub exists_basis_never_inside_neighbourhood: bool,
    /// Some basis that is simultaneously dominating and never inside a neighbourhood.
    pub exists_dominating_untrapped_basis: bool,
    /// Every dominating basis has some `H`, `v ∉ B` with `B ⊆ N_H(v)`.
    pub all_dominating_bases_trapped: bool,
    /// Every basis has some `H`, `v ∉ B` with `B ⊆ N_H(v)`.
    pub all_bases_trapped: bool,
    pub witnesses: PremiseWitnesses,
}

/// First `(member, v)` with `v ∉ B` and `B ⊆ N_H(v)`.
pub fn find_trap(family: &GraphFamily, basis: &VertexSet) -> Option<Trap> {
    family.iter().enumerate().find_map(|(i, g)| {
        (0..g.order()).find(|&v| !basis.contains(v) && basis.mask() & !g.neighbours(v) == 0).map(|v| Trap {
            basis: *basis,
            member: i,
            vertex: v,
        })
    })
}

pub fn premise_profile(family: &GraphFamily) -> Result<PremiseProfile> {
    premise_profile_with(family, &SearchConfig::default())
}

pub fn premise_profile_with(family: &GraphFamily, config: &SearchConfig) -> Result<PremiseProfile> {
    let catalog = enumerate_bases_with(family, MetricSelector::ADJACENCY, config)?;
    Ok(profile_from_catalog(family, catalog))
}

pub fn profile_from_catalog(family: &GraphFamily, catalog: BasisCatalog) -> PremiseProfile {
    let mut w = PremiseWitnesses::default();
    let mut all_dominating_trapped = true;
    let mut all_trapped = true;
    for b in &catalog.bases {
        let missed = undominated(family, b);
        let trap = find_trap(family, b);
        match missed {
            None => {
                w.dominating.get_or_insert(*b);
                match trap {
                    Some(t) => {
                        w.dominating_trap.get_or_insert(t);
                    }
                    None => {
                        all_dominating_trapped = false;
                        w.dominating_untrapped.get_or_insert(*b);
                    }
                }
            }
            Some((member, vertex)) => {
                w.non_dominating.get_or_insert(Undominated { basis: *b, member, vertex });
            }
        }
        if trap.is_none() {
            all_trapped = false;
            w.untrapped.get_or_insert(*b);
        }
    }
    PremiseProfile {
        sd_a: catalog.dimension,
        exists_dominating_basis: w.dominating.is_some(),
        exists_non_dominating_basis: w.non_dominating.is_some(),
        exists_basis_never_inside_neighbourhood: w.untrapped.is_some(),
        exists_dominating_untrapped_basis: w.dominating_untrapped.is_some(),
        all_dominating_bases_trapped: all_dominating_trapped,
        all_bases_trapped: all_trapped,
        witnesses: w,
        catalog,
    }
}
