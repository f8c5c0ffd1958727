//! Exact minimum set cover and the covering numbers built on it.

mod bound;
mod greedy;
mod groups;
mod instance;
mod reduce;
mod solve;

pub use bound::{counting_bound, lower_bound, top_k_bound};
pub use greedy::{family_cover, family_of, greedy};
pub use groups::{
    candidate_instance, class_cover_instance, gamma0_exact, is_maximal_in, maximal_candidates, no_single_class_covers,
    sigma0_exact, sigma_exact, subgroup_instance, Candidate, CoverNumber, GroupCover, Mode, SingleClassReport,
    Universe, UNIVERSE_CAP,
};
pub use instance::{Budget, CoverInstance, CoverSet, CoverSolution, Status};
pub use reduce::{reduce, Reduction, ReductionLog};
pub use solve::{brute_force_min, solve_exact, solve_within};
