//! Generators, bases and domination for single graphs and families.

mod domination;
mod gaps;
mod premise;
pub(crate) mod refine;
mod search;
mod twins;

pub use domination::{
    gamma, gamma_prime, gamma_prime_witness, is_dominating, is_simultaneous_dominating, min_dominating_set,
    min_simultaneous_dominating_set, simultaneous_gamma, undominated,
};
pub use gaps::{gap_profile, GapProfile};
pub use premise::{
    find_trap, premise_profile, premise_profile_with, profile_from_catalog, PremiseProfile, PremiseWitnesses, Trap,
    Undominated,
};
pub use search::{
    adjacency_dimension, enumerate_bases, enumerate_bases_with, is_generator, metric_dimension, min_generator,
    min_generator_batch, min_generator_with, BasisCatalog, SearchConfig, DEFAULT_BUDGET,
};
pub use twins::{twin_classes, TwinClass, TwinKind};
