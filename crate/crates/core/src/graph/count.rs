//! Exact induced-subgraph counts and the densities built on them.
//!
//! Two independent routes are provided. [`count_induced`] uses closed
//! forms for the common patterns on at most four vertices and otherwise enumerates
//! injective embeddings `V(F) -> V(G)` that preserve both edges and
//! non-edges, using bit-set candidate sets, and divides by `|Aut(F)|`.
//! [`count_induced_by_subsets`] walks every `v(F)`-subset in colex order and
//! compares canonical codes; it is the slow oracle the fast route is tested
//! against.

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalCode};
use super::small;
use super::{iter_bits, Graph};
use crate::error::{Error, Result};

/// `C(n, k)` as `u128`, or `None` if it overflows.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}

fn binomial_f64(n: u64, k: u64) -> f64 {
    match binomial(n, k) {
        Some(b) => b as f64,
        None => (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product(),
    }
}

/// `e(G) / C(v(G), 2)`.
pub fn edge_density(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::domain(format!(
            "edge density needs at least 2 vertices, got {}",
            g.order()
        )));
    }
    Ok(g.edge_count() as f64 / binomial_f64(g.order() as u64, 2))
}

/// Number of `v(F)`-subsets `S` of `V(G)` with `G[S]` isomorphic to `F`.
/// Returns 0 when `F` is larger than `G`.
pub fn count_induced(f: &Graph, g: &Graph) -> Result<u64> {
    let k = f.order();
    if k == 0 {
        return Err(Error::domain("pattern must have at least one vertex"));
    }
    let aut = canonical_form(f)?.aut_count;
    if k > g.order() {
        return Ok(0);
    }
    if let Some(c) = small::count_small(f, g) {
        return Ok(c);
    }
    let plan = EmbeddingPlan::new(f);
    let host = Host::new(g);
    let first = plan.order[0];
    let roots: Vec<usize> = (0..g.order())
        .filter(|&v| host.degree[v] >= plan.degree[first] && host.codegree(v) >= plan.codegree(first))
        .collect();
    let embeddings: u64 = if g.order() >= 48 {
        roots.par_iter().map(|&v| plan.extend_from(&host, v)).sum()
    } else {
        roots.iter().map(|&v| plan.extend_from(&host, v)).sum()
    };
    debug_assert_eq!(embeddings % aut, 0);
    Ok(embeddings / aut)
}

/// Same as [`count_induced`], by exhaustive subset enumeration.
pub fn count_induced_by_subsets(f: &Graph, g: &Graph) -> Result<u64> {
    let k = f.order();
    if k == 0 {
        return Err(Error::domain("pattern must have at least one vertex"));
    }
    let target: CanonicalCode = canonical_form(f)?.code;
    let n = g.order();
    if k > n {
        return Ok(0);
    }
    let mut want = f.degrees();
    want.sort_unstable();

    let mut subset: Vec<usize> = (0..k).collect();
    let mut degrees = vec![0usize; k];
    let mut count = 0;
    loop {
        for (i, &u) in subset.iter().enumerate() {
            degrees[i] = subset.iter().filter(|&&v| v != u && g.has_edge(u, v)).count();
        }
        degrees.sort_unstable();
        if degrees == want && canonical_form(&g.induced_subgraph(&subset))?.code == target {
            count += 1;
        }
        // next subset in colex order
        let mut i = 0;
        while i + 1 < k && subset[i] + 1 == subset[i + 1] {
            i += 1;
        }
        if subset[i] + 1 >= n {
            break;
        }
        subset[i] += 1;
        for (j, slot) in subset.iter_mut().enumerate().take(i) {
            *slot = j;
        }
    }
    Ok(count)
}

/// `N(F, G) / C(v(G), v(F))`.
pub fn induced_density(f: &Graph, g: &Graph) -> Result<f64> {
    let count = count_induced(f, g)?;
    Ok(count as f64 / binomial_f64(g.order() as u64, f.order() as u64))
}

struct Host {
    words: usize,
    adj: Vec<u64>,
    non_adj: Vec<u64>,
    degree: Vec<usize>,
    n: usize,
}

impl Host {
    fn new(g: &Graph) -> Self {
        let c = g.complement();
        Host {
            words: g.words(),
            adj: (0..g.order()).flat_map(|v| g.row(v).to_vec()).collect(),
            non_adj: (0..g.order()).flat_map(|v| c.row(v).to_vec()).collect(),
            degree: g.degrees(),
            n: g.order(),
        }
    }

    fn codegree(&self, v: usize) -> usize {
        self.n - 1 - self.degree[v]
    }

    fn row(&self, v: usize, adjacent: bool) -> &[u64] {
        let r = v * self.words..(v + 1) * self.words;
        if adjacent {
            &self.adj[r]
        } else {
            &self.non_adj[r]
        }
    }
}

/// Pattern vertices in a fixed order; `links[p]` lists, for each earlier
/// position `q`, whether the pattern vertices at `q` and `p` are adjacent.
struct EmbeddingPlan {
    order: Vec<usize>,
    links: Vec<Vec<bool>>,
    degree: Vec<usize>,
    k: usize,
}

impl EmbeddingPlan {
    fn new(f: &Graph) -> Self {
        let k = f.order();
        let degree = f.degrees();
        // greedy: start at a max-degree vertex, then prefer vertices with the
        // most adjacencies into the placed prefix
        let mut order = Vec::with_capacity(k);
        let mut placed = vec![false; k];
        while order.len() < k {
            let next = (0..k)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let back = order.iter().filter(|&&u| f.has_edge(u, v)).count();
                    (back, degree[v], std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let links = (0..k)
            .map(|p| (0..p).map(|q| f.has_edge(order[q], order[p])).collect())
            .collect();
        EmbeddingPlan {
            order,
            links,
            degree,
            k,
        }
    }

    fn codegree(&self, v: usize) -> usize {
        self.k - 1 - self.degree[v]
    }

    fn extend_from(&self, host: &Host, root: usize) -> u64 {
        let mut image = Vec::with_capacity(self.k);
        image.push(root);
        let mut scratch = vec![0u64; host.words * self.k];
        self.extend(host, &mut image, &mut scratch)
    }

    fn extend(&self, host: &Host, image: &mut Vec<usize>, scratch: &mut [u64]) -> u64 {
        let p = image.len();
        if p == self.k {
            return 1;
        }
        let w = host.words;
        let (cand, rest) = scratch.split_at_mut(w);
        cand.copy_from_slice(host.row(image[0], self.links[p][0]));
        for (q, &v) in image.iter().enumerate().skip(1) {
            let row = host.row(v, self.links[p][q]);
            for (c, r) in cand.iter_mut().zip(row) {
                *c &= r;
            }
        }
        // images are distinct automatically: every candidate is adjacent or
        // non-adjacent to each placed vertex, and rows are irreflexive
        if p + 1 == self.k {
            return cand.iter().map(|c| c.count_ones() as u64).sum();
        }
        let target = self.order[p];
        let mut total = 0;
        for v in iter_bits(cand) {
            if host.degree[v] < self.degree[target] || host.codegree(v) < self.codegree(target) {
                continue;
            }
            image.push(v);
            total += self.extend(host, image, rest);
            image.pop();
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn edge_density_examples() {
        assert_eq!(edge_density(&complete(5)).unwrap(), 1.0);
        assert_eq!(edge_density(&Graph::empty(5)).unwrap(), 0.0);
        assert_eq!(edge_density(&complete_bipartite(3, 3)).unwrap(), 0.6);
        assert!(edge_density(&Graph::empty(1)).is_err());
    }

    #[test]
    fn count_examples() {
        let k33 = complete_bipartite(3, 3);
        assert_eq!(count_induced(&complete(2), &k33).unwrap(), 9);
        assert_eq!(count_induced(&cycle(4), &k33).unwrap(), 9);
        assert_eq!(count_induced(&k_minus(4), &complete(5)).unwrap(), 0);
        assert_eq!(count_induced(&complete(6), &complete(5)).unwrap(), 0);
        assert!(count_induced(&Graph::empty(0), &k33).is_err());
    }

    #[test]
    fn density_examples() {
        assert_eq!(induced_density(&complete(3), &complete(6)).unwrap(), 1.0);
        assert!((induced_density(&cycle(4), &complete_bipartite(3, 3)).unwrap() - 0.6).abs() < 1e-15);
        // equal orders: C(n, n) = 1
        assert_eq!(induced_density(&cycle(5), &cycle(5)).unwrap(), 1.0);
    }

    #[test]
    fn triangles_in_balanced_four_partite() {
        // oracle: every triple, checked directly
        let g = complete_multipartite(&[2, 2, 2, 2]);
        let mut triangles = 0;
        for a in 0..8 {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        triangles += 1;
                    }
                }
            }
        }
        assert_eq!(triangles, 32);
        assert_eq!(count_induced(&complete(3), &g).unwrap(), triangles);
        assert!((induced_density(&complete(3), &g).unwrap() - 32.0 / 56.0).abs() < 1e-15);
    }

    #[test]
    fn subset_oracle_agrees_on_fixed_cases() {
        let hosts = [
            complete_bipartite(3, 4),
            cycle(7),
            k_minus(6),
            complete_multipartite(&[1, 2, 3]),
        ];
        let patterns = [path(3), cycle(4), k_minus(4), star(3), Graph::empty(3), complete(1)];
        for g in &hosts {
            for f in &patterns {
                assert_eq!(
                    count_induced(f, g).unwrap(),
                    count_induced_by_subsets(f, g).unwrap(),
                    "{f:?} in {g:?}"
                );
            }
        }
    }

    #[test]
    fn large_host_parallel_path() {
        // K_{30,30}: induced C4 = C(30,2)^2
        let g = complete_bipartite(30, 30);
        assert_eq!(count_induced(&cycle(4), &g).unwrap(), 435 * 435);
        assert_eq!(count_induced(&star(2), &g).unwrap(), 2 * 30 * 435);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(600, 10), Some(1_545_269_050_621_668_869_640));
    }
}
