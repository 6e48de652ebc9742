//! Exact domination numbers: `γ`, the simultaneous `Sγ` and `γ'(G) = min_v γ(G - v)`.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::vset::{bits, VertexSet};

pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    let covered = set.iter().fold(0u64, |acc, v| acc | g.closed_neighbours(v));
    covered == g.vertex_mask()
}

/// Dominating in every member.
pub fn is_simultaneous_dominating(family: &GraphFamily, set: &VertexSet) -> bool {
    family.iter().all(|g| is_dominating(g, set))
}

/// First vertex of some member left undominated by `set`, as `(member, vertex)`.
pub fn undominated(family: &GraphFamily, set: &VertexSet) -> Option<(usize, usize)> {
    family.iter().enumerate().find_map(|(i, g)| {
        let covered = set.iter().fold(0u64, |acc, v| acc | g.closed_neighbours(v));
        bits(g.vertex_mask() & !covered).next().map(|v| (i, v))
    })
}

struct Dominator<'a> {
    rows: Vec<&'a [u64]>,
    full: u64,
}

impl Dominator<'_> {
    fn search(&self, covered: &mut [u64], chosen: u64, budget: usize) -> Option<u64> {
        let target = self
            .rows
            .iter()
            .zip(covered.iter())
            .enumerate()
            .find_map(|(g, (_, &c))| bits(self.full & !c).next().map(|v| (g, v)));
        let Some((g, v)) = target else {
            return Some(chosen);
        };
        if budget == 0 {
            return None;
        }
        // Some vertex of N_g[v] must be chosen.
        let closed = self.rows[g][v] | 1 << v;
        for w in bits(closed) {
            let saved: Vec<u64> = covered.to_vec();
            for (c, rows) in covered.iter_mut().zip(&self.rows) {
                *c |= rows[w] | 1 << w;
            }
            let found = self.search(covered, chosen | 1 << w, budget - 1);
            covered.copy_from_slice(&saved);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// A minimum simultaneous dominating set of the family.
pub fn min_simultaneous_dominating_set(family: &GraphFamily) -> VertexSet {
    let n = family.order();
    let dom = Dominator { rows: family.iter().map(Graph::rows).collect(), full: crate::vset::full_mask(n) };
    for k in 0..=n {
        let mut covered = vec![0u64; family.len()];
        if let Some(mask) = dom.search(&mut covered, 0, k) {
            return VertexSet::from_mask_unchecked(n, mask);
        }
    }
    unreachable!("the full vertex set dominates")
}

pub fn min_dominating_set(g: &Graph) -> VertexSet {
    min_simultaneous_dominating_set(&GraphFamily::singleton(g.clone()))
}

/// `γ(G)`.
pub fn gamma(g: &Graph) -> usize {
    min_dominating_set(g).len()
}

/// `Sγ(F)`.
pub fn simultaneous_gamma(family: &GraphFamily) -> usize {
    min_simultaneous_dominating_set(family).len()
}

/// `γ'(G)` with the deleted vertex that attains it (the smallest such label).
pub fn gamma_prime_witness(g: &Graph) -> Result<(usize, usize)> {
    if g.order() < 2 {
        return Err(Error::invalid("gamma' needs at least two vertices"));
    }
    let mut best: Option<(usize, usize)> = None;
    for v in 0..g.order() {
        let value = gamma(&g.remove_vertex(v)?);
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, v));
        }
    }
    Ok(best.expect("at least two vertices"))
}

pub fn gamma_prime(g: &Graph) -> Result<usize> {
    gamma_prime_witness(g).map(|(value, _)| value)
}
