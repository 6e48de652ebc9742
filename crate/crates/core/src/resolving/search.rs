//! Exact minimum (simultaneous) generators by cardinality-increasing search.
//!
//! Sizes are tried from the twin lower bound upwards. At each size the
//! candidate sets are visited in lexicographic order by a depth-first walk
//! that refines the partition of unresolved vertex pairs incrementally and
//! never leaves two vertices of one twin class out. The walk is split across
//! workers by leading vertex; the first hit in leading-vertex order is the
//! lexicographically smallest generator of that size.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::metric::MetricSelector;
use crate::par;
use crate::resolving::refine::{Classes, Resolver};
use crate::resolving::twins::{forcing_masks, twin_lower_bound};
use crate::vset::VertexSet;

/// Limits and execution mode for exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Upper bound on the number of candidate sets an exact search may need
    /// to consider, counted as `C(n, k)` for every size `k` attempted.
    pub budget: u64,
    /// Run on the rayon pool when the `parallel` feature is enabled.
    pub parallel: bool,
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: DEFAULT_BUDGET, parallel: par::available() }
    }
}

impl SearchConfig {
    pub fn sequential() -> Self {
        SearchConfig { parallel: false, ..Self::default() }
    }

    pub fn with_budget(budget: u64) -> Self {
        SearchConfig { budget, ..Self::default() }
    }
}

/// All minimum generators of a family, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCatalog {
    pub dimension: usize,
    pub bases: Vec<VertexSet>,
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

struct Meter {
    used: u128,
    budget: u64,
}

impl Meter {
    fn charge(&mut self, n: usize, k: usize) -> Result<()> {
        self.used += binomial(n, k);
        if self.used > self.budget as u128 {
            return Err(Error::BudgetExceeded { needed: self.used, budget: self.budget });
        }
        Ok(())
    }
}

struct Walk<'a> {
    resolver: &'a Resolver,
    twins: &'a [u64],
}

impl Walk<'_> {
    #[inline]
    fn twin_violation(&self, excluded: u64) -> bool {
        self.twins.iter().any(|&t| (t & excluded).count_ones() >= 2)
    }

    /// Lexicographically first completion of `chosen` with `remaining` vertices from `start..`.
    fn first(&self, classes: &Classes, chosen: u64, excluded: u64, start: usize, remaining: usize) -> Option<u64> {
        let n = self.resolver.order();
        if classes.is_empty() {
            // Already a generator; every superset is too.
            return (remaining <= n - start).then(|| chosen | pad(start, remaining));
        }
        if remaining == 0 {
            return None;
        }
        let mut excluded = excluded;
        for v in start..=n - remaining {
            if self.twin_violation(excluded) {
                break;
            }
            let next = self.resolver.refine(classes, v);
            if let Some(found) = self.first(&next, chosen | 1 << v, excluded, v + 1, remaining - 1) {
                return Some(found);
            }
            excluded |= 1 << v;
        }
        None
    }

    fn all(&self, classes: &Classes, chosen: u64, excluded: u64, start: usize, remaining: usize, out: &mut Vec<u64>) {
        let n = self.resolver.order();
        if classes.is_empty() {
            push_completions(chosen, start, n, remaining, out);
            return;
        }
        if remaining == 0 {
            return;
        }
        let mut excluded = excluded;
        for v in start..=n - remaining {
            if self.twin_violation(excluded) {
                break;
            }
            let next = self.resolver.refine(classes, v);
            self.all(&next, chosen | 1 << v, excluded, v + 1, remaining - 1, out);
            excluded |= 1 << v;
        }
    }
}

fn pad(start: usize, count: usize) -> u64 {
    (start..start + count).fold(0u64, |acc, v| acc | 1 << v)
}

fn push_completions(chosen: u64, start: usize, n: usize, remaining: usize, out: &mut Vec<u64>) {
    if remaining == 0 {
        out.push(chosen);
        return;
    }
    for v in start..n {
        if n - v < remaining {
            break;
        }
        push_completions(chosen | 1 << v, v + 1, n, remaining - 1, out);
    }
}

/// The lexicographically first generator of size exactly `k`, if any.
fn first_of_size(resolver: &Resolver, twins: &[u64], k: usize, parallel: bool) -> Option<u64> {
    let n = resolver.order();
    let walk = Walk { resolver, twins };
    let init = resolver.initial();
    if k == 0 {
        return init.is_empty().then_some(0);
    }
    if k > n {
        return None;
    }
    let leads: Vec<usize> = (0..=n - k).collect();
    par::find_map_first(&leads, parallel, |&v| {
        let excluded = (1u64 << v) - 1;
        if walk.twin_violation(excluded) {
            return None;
        }
        let classes = resolver.refine(&init, v);
        walk.first(&classes, 1 << v, excluded, v + 1, k - 1)
    })
}

fn all_of_size(resolver: &Resolver, twins: &[u64], k: usize, parallel: bool) -> Vec<u64> {
    let n = resolver.order();
    let walk = Walk { resolver, twins };
    let init = resolver.initial();
    if k == 0 {
        return if init.is_empty() { vec![0] } else { Vec::new() };
    }
    if k > n {
        return Vec::new();
    }
    let leads: Vec<usize> = (0..=n - k).collect();
    par::map(&leads, parallel, |&v| {
        let excluded = (1u64 << v) - 1;
        let mut out = Vec::new();
        if !walk.twin_violation(excluded) {
            let classes = resolver.refine(&init, v);
            walk.all(&classes, 1 << v, excluded, v + 1, k - 1, &mut out);
        }
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

fn check_set(family: &GraphFamily, set: &VertexSet) -> Result<()> {
    if set.order() != family.order() {
        return Err(Error::invalid(format!(
            "vertex set over {} vertices used with a family of order {}",
            set.order(),
            family.order()
        )));
    }
    Ok(())
}

/// True iff for every member and every pair of distinct vertices some `s ∈ set`
/// is at different distances from them.
pub fn is_generator(family: &GraphFamily, metric: MetricSelector, set: &VertexSet) -> Result<bool> {
    check_set(family, set)?;
    Ok(Resolver::new(family, metric)?.resolves(set.mask()))
}

/// Minimum generator size and the lexicographically smallest witness.
pub fn min_generator(family: &GraphFamily, metric: MetricSelector) -> Result<(usize, VertexSet)> {
    min_generator_with(family, metric, &SearchConfig::default())
}

pub fn min_generator_with(
    family: &GraphFamily,
    metric: MetricSelector,
    config: &SearchConfig,
) -> Result<(usize, VertexSet)> {
    let resolver = Resolver::new(family, metric)?;
    let (k, mask) = search_min(&resolver, family, config)?;
    Ok((k, VertexSet::from_mask_unchecked(family.order(), mask)))
}

fn search_min(resolver: &Resolver, family: &GraphFamily, config: &SearchConfig) -> Result<(usize, u64)> {
    let n = family.order();
    let twins = forcing_masks(family);
    let lower = twin_lower_bound(family).max(usize::from(n >= 2));
    let mut meter = Meter { used: 0, budget: config.budget };
    for k in lower..=n {
        meter.charge(n, k)?;
        if let Some(mask) = first_of_size(resolver, &twins, k, config.parallel) {
            return Ok((k, mask));
        }
    }
    unreachable!("the full vertex set always generates")
}

/// Every minimum generator, lexicographically ordered.
pub fn enumerate_bases(family: &GraphFamily, metric: MetricSelector) -> Result<BasisCatalog> {
    enumerate_bases_with(family, metric, &SearchConfig::default())
}

pub fn enumerate_bases_with(
    family: &GraphFamily,
    metric: MetricSelector,
    config: &SearchConfig,
) -> Result<BasisCatalog> {
    let resolver = Resolver::new(family, metric)?;
    let (k, _) = search_min(&resolver, family, config)?;
    let n = family.order();
    let needed = binomial(n, k);
    if needed > config.budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget: config.budget });
    }
    let twins = forcing_masks(family);
    let bases = all_of_size(&resolver, &twins, k, config.parallel)
        .into_iter()
        .map(|m| VertexSet::from_mask_unchecked(n, m))
        .collect();
    Ok(BasisCatalog { dimension: k, bases })
}

/// `dim_A(G)`: minimum generator under `min(d_G, 2)`.
pub fn adjacency_dimension(g: &Graph) -> Result<usize> {
    Ok(min_generator(&GraphFamily::singleton(g.clone()), MetricSelector::ADJACENCY)?.0)
}

/// `dim(G)`; requires `g` connected.
pub fn metric_dimension(g: &Graph) -> Result<usize> {
    Ok(min_generator(&GraphFamily::singleton(g.clone()), MetricSelector::Full)?.0)
}

/// Minimum generators for many families, in input order.
pub fn min_generator_batch(
    families: &[GraphFamily],
    metric: MetricSelector,
    config: &SearchConfig,
) -> Vec<Result<(usize, VertexSet)>> {
    // Parallelism goes to the batch; each search runs sequentially.
    let inner = SearchConfig { parallel: false, ..*config };
    par::map(families, config.parallel, |f| min_generator_with(f, metric, &inner))
}
