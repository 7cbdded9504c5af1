use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quantum::QuantumGraph;

/// Generator for trial `trial` under `seed`: ChaCha8 keyed by the seed, one
/// stream per trial, so results do not depend on scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Binomial random graph `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("edge probability {p} outside [0, 1]")));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SampleStats {
    pub mean: f64,
    /// Sample standard deviation (zero for a single trial).
    pub stdev: f64,
    pub min: f64,
    pub max: f64,
    pub trials: usize,
    pub seed: u64,
}

/// Monte-Carlo estimate of `E ρ(Q, G(n, x))`.
pub fn sample_gnp_density(q: &QuantumGraph, n: usize, x: f64, trials: usize, seed: u64) -> Result<SampleStats> {
    if trials == 0 {
        return Err(Error::domain("need at least one trial"));
    }
    if q.max_order() > n {
        return Err(Error::domain(format!(
            "constituent on {} vertices does not fit in n = {n}",
            q.max_order()
        )));
    }
    let values: Vec<f64> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let g = random_gnp(n, x, &mut trial_rng(seed, t))?;
            q.density(&g)
        })
        .collect::<Result<_>>()?;
    let mean = values.iter().sum::<f64>() / trials as f64;
    let var = if trials > 1 {
        values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (trials - 1) as f64
    } else {
        0.0
    };
    Ok(SampleStats {
        mean,
        stdev: var.sqrt(),
        min: values.iter().copied().fold(f64::INFINITY, f64::min),
        max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        trials,
        seed,
    })
}
