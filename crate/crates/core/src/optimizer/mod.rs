//! Complete multipartite limit objects: exact densities, optimisation over
//! part profiles, envelopes, class merging and the simplex inequality.

mod density;
mod envelope;
mod lemma;
mod merge;
mod profile;
mod search;

pub use density::{limit_density, q_limit_density, ProfileObjective};
pub use envelope::{concave_envelope, convex_envelope, Envelope};
pub use lemma::{lemma_simplex_check, lemma_simplex_check_with, LemmaCheck, DEFAULT_R_CHECK};
pub use merge::merge_smallest;
pub use profile::{multipartite_classes, MultipartitePattern, PartProfile};
pub use search::{
    big_m, extremum_over_parts, optimize_profile, optimize_profile_with, small_m, OptimizerOptions, ProfileOptimum,
    Sense,
};
