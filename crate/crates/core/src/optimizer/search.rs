//! Extremising a quantum-graph limit density over part profiles with fixed
//! edge density.
//!
//! The feasible set `{α ≥ 0 : Σα = 1, Σα² = 1 - x}` is, on each support,
//! a sphere around the barycentre inside the simplex hyperplane. Local
//! search is Riemannian gradient ascent on that sphere with Armijo
//! backtracking; the radial retraction keeps every iterate exactly
//! feasible. Coordinates that a step would push below zero are removed and
//! the point is re-retracted on the smaller support.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};
use rayon::prelude::*;

use super::density::ProfileObjective;
use super::profile::PartProfile;
use crate::boundary::density_cell;
use crate::error::{Error, Result};
use crate::quantum::QuantumGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Max,
    Min,
}

impl FromStr for Sense {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "max" => Ok(Sense::Max),
            "min" => Ok(Sense::Min),
            other => Err(Error::parse(format!("sense must be max or min, got {other:?}"))),
        }
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Max => "max",
            Sense::Min => "min",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerOptions {
    pub starts: usize,
    pub seed: u64,
    pub grad_tol: f64,
    pub max_iter: usize,
    /// Parts below this fraction are removed.
    pub prune: f64,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        OptimizerOptions {
            starts: 64,
            seed: 0,
            grad_tol: 1e-10,
            max_iter: 20_000,
            prune: 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ProfileOptimum {
    pub value: f64,
    /// Parts in decreasing order.
    pub profile: PartProfile,
    /// Iterations spent by the winning start.
    pub iterations: usize,
}

/// `I_r(Q, x)` (`Sense::Max`) or `i_r(Q, x)` (`Sense::Min`) with default
/// options.
pub fn optimize_profile(q: &QuantumGraph, r: usize, x: f64, sense: Sense) -> Result<ProfileOptimum> {
    optimize_profile_with(q, r, x, sense, &OptimizerOptions::default())
}

pub fn optimize_profile_with(
    q: &QuantumGraph,
    r: usize,
    x: f64,
    sense: Sense,
    opts: &OptimizerOptions,
) -> Result<ProfileOptimum> {
    if r == 0 {
        return Err(Error::domain("part count must be at least 1"));
    }
    let top = (r as f64 - 1.0) / r as f64;
    if !(x >= 0.0 && x <= top + 1e-12) {
        return Err(Error::domain(format!("x = {x} outside [0, {top}] for r = {r}")));
    }
    let objective = ProfileObjective::new(q)?;
    let c = (1.0 - x).max(1.0 / r as f64);
    let sign = match sense {
        Sense::Max => 1.0,
        Sense::Min => -1.0,
    };
    let starts = starting_points(r, c, opts);
    let runs: Vec<(f64, Vec<f64>, usize)> = starts
        .into_par_iter()
        .map(|s| local_search(&objective, sign, c, s, opts))
        .collect();
    let mut best: Option<(f64, Vec<f64>, usize)> = None;
    for run in runs {
        let better = match &best {
            None => true,
            Some(b) => run.0 > b.0 || (run.0 == b.0 && lex_less(&run.1, &b.1)),
        };
        if better {
            best = Some(run);
        }
    }
    let (signed, alpha, iterations) = best.expect("at least one start");
    Ok(ProfileOptimum {
        value: sign * signed,
        profile: PartProfile::new(alpha)?,
        iterations,
    })
}

fn lex_less(a: &[f64], b: &[f64]) -> bool {
    a.iter()
        .zip(b)
        .find(|(x, y)| x != y)
        .map_or(a.len() < b.len(), |(x, y)| x < y)
}

/// Feasible starts: two-level profiles and geometric profiles on every
/// admissible support size, then Dirichlet(1) points pulled onto the
/// constraint.
fn starting_points(r: usize, c: f64, opts: &OptimizerOptions) -> Vec<Vec<f64>> {
    let m_min = min_parts(c).min(r);
    let mut starts = Vec::new();
    for m in m_min..=r {
        let mf = m as f64;
        let disc = (1.0 - mf * (1.0 - c) / (mf - 1.0).max(1.0)).max(0.0).sqrt();
        for a in [(1.0 + disc) / mf, (1.0 - disc) / mf] {
            let b = 1.0 - (mf - 1.0) * a;
            if b >= 0.0 && a >= 0.0 {
                let mut p = vec![a; m - 1];
                p.push(b);
                starts.push(p);
            }
        }
        if let Some(p) = geometric(m, c) {
            starts.push(p);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut attempts = 0;
    while starts.len() < opts.starts && attempts < 50 * opts.starts {
        attempts += 1;
        let w: Vec<f64> = (0..r).map(|_| Exp1.sample(&mut rng)).collect();
        let sum: f64 = w.iter().sum();
        let p: Vec<f64> = w.iter().map(|v| v / sum).collect();
        if let Some(p) = retract(p, c) {
            starts.push(p);
        }
    }
    starts.retain(|p| !p.is_empty());
    starts.truncate(opts.starts.max(1));
    if starts.is_empty() {
        starts.push(vec![1.0 / r as f64; r]);
    }
    starts
}

/// Smallest support size on which `Σα² = c` is feasible.
fn min_parts(c: f64) -> usize {
    if c >= 1.0 - 1e-15 {
        1
    } else {
        density_cell(1.0 - c)
    }
}

/// `α_i ∝ ρ^i` on `m` parts with `Σα² = c`.
fn geometric(m: usize, c: f64) -> Option<Vec<f64>> {
    if m < 2 || c < 1.0 / m as f64 || c >= 1.0 {
        return None;
    }
    let profile = |rho: f64| {
        let w: Vec<f64> = (0..m).map(|i| rho.powi(i as i32)).collect();
        let s: f64 = w.iter().sum();
        w.into_iter().map(|v| v / s).collect::<Vec<f64>>()
    };
    let sq = |p: &[f64]| p.iter().map(|a| a * a).sum::<f64>();
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if sq(&profile(mid)) > c {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    retract(profile(0.5 * (lo + hi)), c)
}

/// Moves a point of the simplex hyperplane radially from the barycentre onto
/// `Σα² = c`, dropping coordinates that end up negative.
fn retract(mut p: Vec<f64>, c: f64) -> Option<Vec<f64>> {
    for _ in 0..=p.len() {
        let m = p.len();
        if m == 0 {
            return None;
        }
        let shift = (1.0 - p.iter().sum::<f64>()) / m as f64;
        p.iter_mut().for_each(|a| *a += shift);
        let u = 1.0 / m as f64;
        let r2 = c - u;
        if r2 < -1e-15 {
            return None;
        }
        let norm = p.iter().map(|a| (a - u) * (a - u)).sum::<f64>().sqrt();
        if r2 <= 1e-15 {
            p.iter_mut().for_each(|a| *a = u);
        } else if norm < 1e-300 {
            return None;
        } else {
            let scale = r2.sqrt() / norm;
            p.iter_mut().for_each(|a| *a = u + (*a - u) * scale);
        }
        if p.iter().all(|&a| a >= 0.0) {
            return Some(p);
        }
        p.retain(|&a| a > 0.0);
    }
    None
}

fn local_search(
    obj: &ProfileObjective,
    sign: f64,
    c: f64,
    mut a: Vec<f64>,
    opts: &OptimizerOptions,
) -> (f64, Vec<f64>, usize) {
    let f = |p: &[f64]| sign * obj.value(p);
    let mut val = f(&a);
    let mut step: f64 = 0.1;
    let mut iterations = 0;
    while iterations < opts.max_iter {
        iterations += 1;
        let m = a.len();
        if m == 1 || c - 1.0 / m as f64 <= 1e-15 {
            break;
        }
        let u = 1.0 / m as f64;
        let mut g: Vec<f64> = obj.gradient(&a).into_iter().map(|v| sign * v).collect();
        let mean = g.iter().sum::<f64>() / m as f64;
        g.iter_mut().for_each(|v| *v -= mean);
        let d: Vec<f64> = a.iter().map(|v| v - u).collect();
        let dd: f64 = d.iter().map(|v| v * v).sum();
        let gd: f64 = g.iter().zip(&d).map(|(x, y)| x * y).sum();
        g.iter_mut().zip(&d).for_each(|(gi, di)| *gi -= gd / dd * di);
        let gn2: f64 = g.iter().map(|v| v * v).sum();
        if gn2.sqrt() < opts.grad_tol {
            break;
        }
        step = (step * 2.0).min(1.0);
        let mut accepted = false;
        while step > 1e-18 {
            let trial: Vec<f64> = a.iter().zip(&g).map(|(x, y)| x + step * y).collect();
            if let Some(cand) = retract(trial, c) {
                let cv = f(&cand);
                if cv >= val + 1e-4 * step * gn2 || (cand.len() < m && cv >= val) {
                    a = cand;
                    val = cv;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
        if a.iter().any(|&v| v < opts.prune) {
            let kept: Vec<f64> = a.iter().copied().filter(|&v| v >= opts.prune).collect();
            if let Some(p) = retract(kept, c) {
                a = p;
                val = f(&a);
            }
        }
    }
    a.sort_by(|x, y| y.total_cmp(x));
    (val, a, iterations)
}

/// `M(Q, x)`: the largest `I_r(Q, x)` over `⌈1/(1-x)⌉ <= r <= r_max`.
pub fn big_m(q: &QuantumGraph, x: f64, r_max: usize) -> Result<f64> {
    extremum_over_parts(q, x, r_max, Sense::Max, &OptimizerOptions::default()).map(|(v, _)| v)
}

/// `m(Q, x)`: the smallest `i_r(Q, x)` over the same range.
pub fn small_m(q: &QuantumGraph, x: f64, r_max: usize) -> Result<f64> {
    extremum_over_parts(q, x, r_max, Sense::Min, &OptimizerOptions::default()).map(|(v, _)| v)
}

/// Extremum over part counts together with the winning optimum. At `x = 1`
/// the value is `lim ρ(Q, K_n)` and no profile is returned.
pub fn extremum_over_parts(
    q: &QuantumGraph,
    x: f64,
    r_max: usize,
    sense: Sense,
    opts: &OptimizerOptions,
) -> Result<(f64, Option<ProfileOptimum>)> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("x = {x} outside [0, 1]")));
    }
    if x == 1.0 {
        let complete: f64 = q
            .terms()
            .iter()
            .filter(|t| t.graph.edge_count() == t.graph.order() * (t.graph.order() - 1) / 2)
            .map(|t| t.coefficient)
            .sum();
        return Ok((complete, None));
    }
    let r_min = density_cell(x);
    if r_max < r_min {
        return Err(Error::domain(format!("r_max = {r_max} below ⌈1/(1-x)⌉ = {r_min}")));
    }
    let mut best: Option<ProfileOptimum> = None;
    for r in r_min..=r_max {
        let opt = optimize_profile_with(q, r, x, sense, opts)?;
        let better = match (&best, sense) {
            (None, _) => true,
            (Some(b), Sense::Max) => opt.value > b.value,
            (Some(b), Sense::Min) => opt.value < b.value,
        };
        if better {
            best = Some(opt);
        }
    }
    let best = best.expect("nonempty range");
    Ok((best.value, Some(best)))
}
