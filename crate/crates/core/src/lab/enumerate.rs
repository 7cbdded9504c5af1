//! One representative per isomorphism class, by vertex augmentation.
//!
//! Every graph on `n` vertices is some graph on `n - 1` vertices plus a
//! vertex with some neighbourhood, so extending each class representative
//! on `n - 1` vertices in all `2^{n-1}` ways and keeping one graph per
//! canonical code yields every class exactly once. Results are cached per
//! order and sorted by canonical code.

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalCode, Graph};

/// Default enumeration cap.
pub const DEFAULT_MAX_N: usize = 8;
/// Largest cap honoured from the environment.
pub const HARD_MAX_N: usize = 9;
/// Environment variable overriding the cap.
pub const MAX_N_VAR: &str = "FEASREG_MAX_N";

/// Effective cap: `FEASREG_MAX_N` if set and valid, clamped to
/// [`HARD_MAX_N`]; otherwise [`DEFAULT_MAX_N`].
pub fn max_hosts_order() -> usize {
    std::env::var(MAX_N_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_N, |v| v.min(HARD_MAX_N))
}

static CACHE: [OnceLock<Vec<Graph>>; HARD_MAX_N + 1] = [const { OnceLock::new() }; HARD_MAX_N + 1];

/// Canonical representatives of all graphs on `n` vertices.
pub fn enumerate_hosts(n: usize) -> Result<&'static [Graph]> {
    let cap = max_hosts_order();
    if n > cap {
        return Err(Error::Capability(format!(
            "host enumeration requested for n = {n}; cap is {cap} (set {MAX_N_VAR}, at most {HARD_MAX_N})"
        )));
    }
    Ok(classes(n))
}

fn classes(n: usize) -> &'static [Graph] {
    CACHE[n].get_or_init(|| {
        if n == 0 {
            return vec![Graph::empty(0)];
        }
        let parents = classes(n - 1);
        let codes: HashSet<CanonicalCode> = parents
            .par_iter()
            .flat_map_iter(|p| {
                (0u32..1 << (n - 1)).map(move |mask| {
                    let mut g = Graph::empty(n);
                    for (u, v) in p.edges() {
                        g.add_edge(u, v);
                    }
                    for u in 0..n - 1 {
                        if mask >> u & 1 == 1 {
                            g.add_edge(u, n - 1);
                        }
                    }
                    canonical_form(&g).expect("order within canonical bound").code
                })
            })
            .collect();
        let mut codes: Vec<CanonicalCode> = codes.into_iter().collect();
        codes.sort_unstable();
        codes.iter().map(CanonicalCode::to_graph).collect()
    })
}
