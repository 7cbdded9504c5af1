//! Limit densities of complete multipartite patterns in complete
//! multipartite limit objects.
//!
//! An induced copy of `F` in a blow-up meets each host part in either
//! nothing or exactly one part of `F`, so
//! `ρ(F, α) = k! Σ_σ Π_i α_i^{σ(i)} / σ(i)!`, the sum running over all
//! maps from host parts to `{0} ∪ parts(F)` whose nonzero values form the
//! multiset `parts(F)`. A dynamic programme over host parts tracks how many
//! parts of each size are still unplaced.

use super::profile::{MultipartitePattern, PartProfile};
use crate::error::{Error, Result};
use crate::quantum::QuantumGraph;

/// Precomputed tables for one pattern.
#[derive(Debug, Clone)]
pub(crate) struct PatternTable {
    sizes: Vec<usize>,
    strides: Vec<usize>,
    inv_fact: Vec<f64>,
    states: usize,
    full: usize,
    order_fact: f64,
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

impl PatternTable {
    pub(crate) fn new(f: &MultipartitePattern) -> Self {
        let mut sizes: Vec<usize> = f.parts().to_vec();
        sizes.dedup();
        let mult: Vec<usize> = sizes
            .iter()
            .map(|s| f.parts().iter().filter(|&p| p == s).count())
            .collect();
        let mut strides = Vec::with_capacity(sizes.len());
        let mut states = 1;
        let mut full = 0;
        for &m in &mult {
            strides.push(states);
            full += m * states;
            states *= m + 1;
        }
        PatternTable {
            inv_fact: sizes.iter().map(|&s| 1.0 / factorial(s)).collect(),
            sizes,
            strides,
            states,
            full,
            order_fact: factorial(f.order()),
        }
    }

    /// `remaining[state]` after absorbing every part in `alphas`.
    fn run<'a>(&self, alphas: impl Iterator<Item = &'a f64>) -> Vec<f64> {
        let mut cur = vec![0.0; self.states];
        cur[self.full] = 1.0;
        let digits = |state: usize, j: usize| {
            let next = self.strides.get(j + 1).copied().unwrap_or(self.states);
            (state % next) / self.strides[j]
        };
        let mut next = vec![0.0; self.states];
        for &a in alphas {
            next.copy_from_slice(&cur);
            let powers: Vec<f64> = self
                .sizes
                .iter()
                .zip(&self.inv_fact)
                .map(|(&s, &inv)| a.powi(s as i32) * inv)
                .collect();
            for state in 0..self.states {
                let w = cur[state];
                if w == 0.0 {
                    continue;
                }
                for j in 0..self.sizes.len() {
                    if digits(state, j) > 0 {
                        next[state - self.strides[j]] += w * powers[j];
                    }
                }
            }
            std::mem::swap(&mut cur, &mut next);
        }
        cur
    }

    pub(crate) fn value(&self, alpha: &[f64]) -> f64 {
        self.order_fact * self.run(alpha.iter())[0]
    }

    /// Exact partial derivatives with respect to each `α_i`.
    pub(crate) fn gradient(&self, alpha: &[f64]) -> Vec<f64> {
        (0..alpha.len())
            .map(|i| {
                let rest = self.run(alpha.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, a)| a));
                let a = alpha[i];
                let mut d = 0.0;
                for (j, &s) in self.sizes.iter().enumerate() {
                    // exactly one part of size s left for part i
                    let w = rest[self.strides[j]];
                    if w != 0.0 {
                        d += w * a.powi(s as i32 - 1) * self.inv_fact[j] * s as f64;
                    }
                }
                self.order_fact * d
            })
            .collect()
    }
}

/// `lim ρ(F, G_n)` for complete multipartite `G_n` with part fractions `p`.
pub fn limit_density(f: &MultipartitePattern, p: &PartProfile) -> f64 {
    PatternTable::new(f).value(p.fractions())
}

/// A quantum graph whose constituents are all complete multipartite,
/// evaluated on raw fraction vectors.
#[derive(Debug, Clone)]
pub struct ProfileObjective {
    terms: Vec<(f64, PatternTable)>,
}

impl ProfileObjective {
    pub fn new(q: &QuantumGraph) -> Result<Self> {
        let terms = q
            .terms()
            .iter()
            .map(|t| {
                MultipartitePattern::from_graph(&t.graph)
                    .map(|f| (t.coefficient, PatternTable::new(&f)))
                    .ok_or_else(|| {
                        Error::Capability(format!(
                            "constituent {} is not complete multipartite",
                            t.graph.to_graph6()
                        ))
                    })
            })
            .collect::<Result<_>>()?;
        Ok(ProfileObjective { terms })
    }

    pub fn value(&self, alpha: &[f64]) -> f64 {
        self.terms.iter().map(|(c, t)| c * t.value(alpha)).sum()
    }

    pub fn gradient(&self, alpha: &[f64]) -> Vec<f64> {
        let mut g = vec![0.0; alpha.len()];
        for (c, t) in &self.terms {
            for (gi, di) in g.iter_mut().zip(t.gradient(alpha)) {
                *gi += c * di;
            }
        }
        g
    }
}

/// `Σ λ_i ρ(F_i, p)`; a capability error if some `F_i` is not complete
/// multipartite.
pub fn q_limit_density(q: &QuantumGraph, p: &PartProfile) -> Result<f64> {
    Ok(ProfileObjective::new(q)?.value(p.fractions()))
}
