//! Desk-scale checks of the closed-form results on coronas, joins and
//! permutation families, and a runner for suites of such checks.

pub mod checks;
mod report;
pub mod suite;

pub use checks::{
    check_adim_formula, check_complement_inv, check_f_bounds, check_f_case, check_join, check_join_dominates,
    check_join_kt, check_mod5, check_nt_union, check_p5c5, check_perm_family, check_perm_family_sampled,
    check_remark_bounds, check_sd_corona, check_transfer, choose_basis, BasisChoice, FCase, JoinCase,
};
pub use report::{all_passed, Claim, Outcome, VerificationReport};
pub use suite::{load_suite, parse_suite, run_suite, Scenario, Suite, Task};
