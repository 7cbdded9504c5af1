//! Ground truth at desk scale: exhaustive host enumeration, empirical
//! region clouds, finite-n inequality verifiers and Monte-Carlo sampling.

mod cloud;
mod enumerate;
mod sampling;
mod verify;

pub use cloud::{empirical_boundary, region_cloud, BinExtremum, EmpiricalBoundary, RegionPoint, RegionPointCloud};
pub use enumerate::{enumerate_hosts, max_hosts_order, DEFAULT_MAX_N, HARD_MAX_N, MAX_N_VAR};
pub use sampling::{random_gnp, sample_gnp_density, trial_rng, SampleStats};
pub use verify::{
    suite_checks, verify_c4_finite, verify_corollary_vertex_choice, verify_goodman_vertex, verify_k4minus_pairbound,
    verify_kst_decomposition, verify_suite, C4Check, CheckReport, GoodmanCheck, SuiteConfig, SuiteReport, SUITE_CHECKS,
};
