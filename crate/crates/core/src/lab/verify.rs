//! Finite-n inequality verifiers and the suite report that runs them over
//! every small isomorphism class and a batch of random graphs.

use rayon::prelude::*;

use super::enumerate::enumerate_hosts;
use super::sampling::{random_gnp, trial_rng};
use crate::boundary::c4_finite_bound;
use crate::error::{Error, Result};
use crate::graph::{count_induced, named, Graph};

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct C4Check {
    pub count: u64,
    pub bound: f64,
    pub holds: bool,
}

/// `N(C_4, G) <= x(1-x)^2 n^4/8 + 2n^3` with `x = 2e/n^2`.
pub fn verify_c4_finite(g: &Graph) -> Result<C4Check> {
    let count = if g.order() >= 4 {
        count_induced(&named::cycle(4), g)?
    } else {
        0
    };
    let bound = if g.order() == 0 {
        0.0
    } else {
        c4_finite_bound(g.order(), g.edge_count())?
    };
    Ok(C4Check {
        count,
        bound,
        holds: count as f64 <= bound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct GoodmanCheck {
    /// `Σ e(v)`.
    pub lhs: i64,
    /// `Σ d(v)^2 - e(G) n`, which equals `Σ d(v)^2 - x n^3/2`.
    pub rhs: i64,
    pub holds: bool,
}

/// `Σ_v e(v) >= Σ_v d(v)^2 - x n^3 / 2`, in exact integers.
pub fn verify_goodman_vertex(g: &Graph) -> GoodmanCheck {
    let stats = g.degree_stats();
    let lhs: i64 = stats.iter().map(|s| s.neighborhood_edges as i64).sum();
    let rhs: i64 =
        stats.iter().map(|s| (s.degree * s.degree) as i64).sum::<i64>() - (g.edge_count() * g.order()) as i64;
    GoodmanCheck {
        lhs,
        rhs,
        holds: lhs >= rhs,
    }
}

/// A vertex `v` with
/// `e(v) >= d(v)^2/2 + (1-4x+3x^2)n^2/4 - (1-x)^3 n^3 / (4(n-d(v)))`,
/// where `x = 2e/n^2`, or `None` if no vertex qualifies.
pub fn verify_corollary_vertex_choice(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    let nf = n as f64;
    let x = 2.0 * g.edge_count() as f64 / (nf * nf);
    let base = (1.0 - 4.0 * x + 3.0 * x * x) * nf * nf / 4.0;
    let tail = (1.0 - x).powi(3) * nf.powi(3) / 4.0;
    g.degree_stats().iter().position(|s| {
        let d = s.degree as f64;
        s.neighborhood_edges as f64 + 1e-9 >= d * d / 2.0 + base - tail / (nf - d)
    })
}

/// `N(K_4^-, G) <= C(e(G), 2) / 2`.
pub fn verify_k4minus_pairbound(g: &Graph) -> Result<bool> {
    let count = if g.order() >= 4 {
        count_induced(&named::k_minus(4), g)?
    } else {
        0
    };
    let e = g.edge_count() as u128;
    Ok(2 * count as u128 <= e * e.saturating_sub(1) / 2)
}

/// `s! t! N(K_{s,t}, G) <= (t-s+1)! N(S_{t-s+1}, G) e(G)^{s-1}`, exactly,
/// with `N(S_1, G) = e(G)`.
pub fn verify_kst_decomposition(g: &Graph, s: usize, t: usize) -> Result<bool> {
    if s < 2 || t < s {
        return Err(Error::domain(format!("need 2 <= s <= t, got s={s}, t={t}")));
    }
    let u = t - s + 1;
    let e = g.edge_count() as u128;
    let kst = if g.order() >= s + t {
        count_induced(&named::complete_bipartite(s, t), g)?
    } else {
        0
    };
    let stars = if u == 1 {
        e
    } else if g.order() > u {
        count_induced(&named::star(u), g)? as u128
    } else {
        0
    };
    let lhs = factorial(s) * factorial(t) * kst as u128;
    let rhs = factorial(u) * stars * e.pow(s as u32 - 1);
    Ok(lhs <= rhs)
}

/// Failures of one check, by graph6 of the offending graph.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CheckReport {
    pub name: String,
    pub tested: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SuiteReport {
    pub max_n: usize,
    pub classes: usize,
    pub samples: usize,
    pub sample_n: usize,
    pub sample_densities: Vec<f64>,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
    pub total_failures: usize,
}

/// Names of the checks run by [`verify_suite`], in report order.
pub const SUITE_CHECKS: [&str; 7] = [
    "c4_finite",
    "goodman_vertex",
    "corollary_vertex_choice",
    "k4minus_pairbound",
    "kst_decomposition_2_2",
    "kst_decomposition_2_3",
    "kst_decomposition_3_3",
];

fn run_check(name: &str, g: &Graph) -> Result<bool> {
    Ok(match name {
        "c4_finite" => verify_c4_finite(g)?.holds,
        "goodman_vertex" => verify_goodman_vertex(g).holds,
        "corollary_vertex_choice" => g.order() == 0 || verify_corollary_vertex_choice(g).is_some(),
        "k4minus_pairbound" => verify_k4minus_pairbound(g)?,
        "kst_decomposition_2_2" => verify_kst_decomposition(g, 2, 2)?,
        "kst_decomposition_2_3" => verify_kst_decomposition(g, 2, 3)?,
        "kst_decomposition_3_3" => verify_kst_decomposition(g, 3, 3)?,
        other => unreachable!("unknown check {other}"),
    })
}

/// Configuration of [`verify_suite`].
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    /// Every class on `1..=max_n` vertices is checked.
    pub max_n: usize,
    /// Random graphs; trial `i` uses density `sample_densities[i % len]`.
    pub samples: usize,
    pub sample_n: usize,
    pub sample_densities: Vec<f64>,
    pub seed: u64,
    /// Subset of [`SUITE_CHECKS`] to run.
    pub checks: Vec<&'static str>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 7,
            samples: 500,
            sample_n: 40,
            sample_densities: vec![0.2, 0.5, 0.8],
            seed: 0,
            checks: SUITE_CHECKS.to_vec(),
        }
    }
}

/// Checks selected by a short name: `all`, `c4`, `goodman`, `corollary`,
/// `k4minus` or `kst` (all three `(s, t)` pairs).
pub fn suite_checks(selector: &str) -> Result<Vec<&'static str>> {
    let prefix = match selector {
        "all" => return Ok(SUITE_CHECKS.to_vec()),
        "c4" => "c4_",
        "goodman" => "goodman_",
        "corollary" => "corollary_",
        "k4minus" => "k4minus_",
        "kst" => "kst_",
        other => return Err(Error::parse(format!("unknown verification suite {other:?}"))),
    };
    Ok(SUITE_CHECKS.iter().copied().filter(|c| c.starts_with(prefix)).collect())
}

/// Runs every check on every class up to `max_n` and on the random
/// samples. Failure lists are deterministic: classes in canonical order,
/// then samples in trial order.
pub fn verify_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.samples > 0 && cfg.sample_densities.is_empty() {
        return Err(Error::domain("sample densities must be nonempty"));
    }
    if let Some(bad) = cfg.checks.iter().find(|c| !SUITE_CHECKS.contains(c)) {
        return Err(Error::domain(format!("unknown check {bad:?}")));
    }
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 1..=cfg.max_n {
        graphs.extend(enumerate_hosts(n)?.iter().cloned());
    }
    let classes = graphs.len();
    for i in 0..cfg.samples {
        let p = cfg.sample_densities[i % cfg.sample_densities.len()];
        graphs.push(random_gnp(cfg.sample_n, p, &mut trial_rng(cfg.seed, i as u64))?);
    }
    let outcomes: Vec<Vec<bool>> = graphs
        .par_iter()
        .map(|g| {
            cfg.checks
                .iter()
                .map(|c| run_check(c, g))
                .collect::<Result<Vec<bool>>>()
        })
        .collect::<Result<_>>()?;
    let checks: Vec<CheckReport> = cfg
        .checks
        .iter()
        .enumerate()
        .map(|(j, name)| CheckReport {
            name: name.to_string(),
            tested: graphs.len(),
            failures: graphs
                .iter()
                .zip(&outcomes)
                .filter(|(_, o)| !o[j])
                .map(|(g, _)| g.to_graph6())
                .collect(),
        })
        .collect();
    let total_failures = checks.iter().map(|c| c.failures.len()).sum();
    Ok(SuiteReport {
        max_n: cfg.max_n,
        classes,
        samples: cfg.samples,
        sample_n: cfg.sample_n,
        sample_densities: cfg.sample_densities.clone(),
        seed: cfg.seed,
        checks,
        total_failures,
    })
}
