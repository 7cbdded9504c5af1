//! Closed-form induced counts for the patterns that dominate large-host
//! workloads: every 3-vertex graph, and `K_4`, `K_4^-`, `C_4`, `S_3` on four
//! vertices together with their complements. Everything is derived from
//! codegrees and edge counts inside common neighbourhoods, so the cost is
//! polynomial in `n` with small exponent instead of `n^{v(F)}`.

use rayon::prelude::*;

use super::{iter_bits, Graph};

fn ones(a: &[u64]) -> u64 {
    a.iter().map(|w| w.count_ones() as u64).sum()
}

fn and_ones(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as u64).sum()
}

fn c2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

fn c3(m: u64) -> u64 {
    if m < 3 {
        0
    } else {
        m * (m - 1) * (m - 2) / 6
    }
}

/// Number of vertex triples of `S` spanning exactly 0, 1, 2, 3 edges.
fn triple_profile(g: &Graph, set: &[u64]) -> [u64; 4] {
    let s = ones(set);
    let mut scratch = vec![0u64; set.len()];
    let (mut edges2, mut cherries, mut tri3) = (0u64, 0u64, 0u64);
    for w in iter_bits(set) {
        for (dst, (a, b)) in scratch.iter_mut().zip(g.row(w).iter().zip(set)) {
            *dst = a & b;
        }
        let d = ones(&scratch);
        edges2 += d;
        cherries += c2(d);
        for x in iter_bits(&scratch).filter(|&x| x > w) {
            tri3 += and_ones(&scratch, g.row(x));
        }
    }
    let e = edges2 / 2;
    let t = tri3 / 3;
    let a2 = cherries - 3 * t;
    let a1 = e * s.saturating_sub(2) - 2 * a2 - 3 * t;
    let a0 = c3(s) - a1 - a2 - t;
    [a0, a1, a2, t]
}

struct FourCounts {
    k4: u64,
    k4_minus: u64,
    c4: u64,
}

fn four_counts(g: &Graph) -> FourCounts {
    let n = g.order();
    // per vertex u: (K_4 * 6 share, K_4^- share, non-induced C_4 * 2 share)
    let per_vertex = |u: usize| {
        let mut common = vec![0u64; g.row(u).len()];
        let (mut k4x6, mut k4m, mut c4x2) = (0u64, 0u64, 0u64);
        for v in u + 1..n {
            for (dst, (a, b)) in common.iter_mut().zip(g.row(u).iter().zip(g.row(v))) {
                *dst = a & b;
            }
            let c = ones(&common);
            c4x2 += c2(c);
            if g.has_edge(u, v) {
                let inside: u64 = iter_bits(&common).map(|w| and_ones(&common, g.row(w))).sum::<u64>() / 2;
                k4x6 += inside;
                k4m += c2(c) - inside;
            }
        }
        (k4x6, k4m, c4x2)
    };
    let (k4x6, k4m, c4x2) = if n >= 48 {
        (0..n)
            .into_par_iter()
            .map(per_vertex)
            .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2))
    } else {
        (0..n)
            .map(per_vertex)
            .fold((0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2))
    };
    let k4 = k4x6 / 6;
    FourCounts {
        k4,
        k4_minus: k4m,
        c4: c4x2 / 2 - k4m - 3 * k4,
    }
}

fn stars3(g: &Graph) -> u64 {
    let per_vertex = |v: usize| triple_profile(g, g.row(v))[0];
    if g.order() >= 48 {
        (0..g.order()).into_par_iter().map(per_vertex).sum()
    } else {
        (0..g.order()).map(per_vertex).sum()
    }
}

/// Induced count of `f` in `g` when `f` is one of the supported patterns.
/// Callers guarantee `1 <= v(f) <= v(g)`.
pub(crate) fn count_small(f: &Graph, g: &Graph) -> Option<u64> {
    let n = g.order() as u64;
    let e = f.edge_count();
    let mut degs = f.degrees();
    degs.sort_unstable();
    match f.order() {
        1 => Some(n),
        2 => Some(if e == 1 {
            g.edge_count() as u64
        } else {
            c2(n) - g.edge_count() as u64
        }),
        3 => {
            let full: Vec<u64> = complete_set(g.order());
            Some(triple_profile(g, &full)[e])
        }
        4 => match (e, degs.as_slice()) {
            (6, _) => Some(four_counts(g).k4),
            (0, _) => Some(four_counts(&g.complement()).k4),
            (5, _) => Some(four_counts(g).k4_minus),
            (1, _) => Some(four_counts(&g.complement()).k4_minus),
            (4, [2, 2, 2, 2]) => Some(four_counts(g).c4),
            (2, [1, 1, 1, 1]) => Some(four_counts(&g.complement()).c4),
            (3, [1, 1, 1, 3]) => Some(stars3(g)),
            (3, [0, 2, 2, 2]) => Some(stars3(&g.complement())),
            _ => None,
        },
        _ => None,
    }
}

fn complete_set(n: usize) -> Vec<u64> {
    let mut set = vec![0u64; super::words_for(n)];
    for v in 0..n {
        set[v / 64] |= 1 << (v % 64);
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::count::count_induced_by_subsets;
    use crate::graph::named;

    fn all_small_patterns() -> Vec<Graph> {
        let mut out = vec![Graph::empty(1), Graph::empty(2), Graph::complete(2)];
        for k in 3..=4 {
            let pairs: Vec<(usize, usize)> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, p)| *p)
                    .collect();
                out.push(Graph::from_edges(k, &edges).unwrap());
            }
        }
        out
    }

    #[test]
    fn agrees_with_subset_oracle() {
        let hosts = [
            named::cycle(7),
            named::complete_bipartite(3, 4),
            named::k_minus(6),
            named::path(8).complement(),
            Graph::from_edges(
                9,
                &[
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 0),
                    (6, 7),
                    (7, 8),
                    (1, 6),
                    (2, 8),
                    (3, 7),
                ],
            )
            .unwrap(),
        ];
        for g in &hosts {
            for f in all_small_patterns() {
                if let Some(c) = count_small(&f, g) {
                    assert_eq!(
                        c,
                        count_induced_by_subsets(&f, g).unwrap(),
                        "f={} g={}",
                        f.to_graph6(),
                        g.to_graph6()
                    );
                }
            }
        }
    }

    #[test]
    fn coverage() {
        let g = named::cycle(6);
        let covered = all_small_patterns()
            .iter()
            .filter(|f| count_small(f, &g).is_some())
            .count();
        // 3 + all 8 labelled 3-vertex graphs + labelled copies of the eight
        // supported 4-vertex classes (1+1+6+6+3+3+4+4)
        assert_eq!(covered, 3 + 8 + 28);
    }

    #[test]
    fn star_counts_in_complete_bipartite() {
        let g = named::complete_bipartite(5, 7);
        let s3 = named::star(3);
        assert_eq!(count_small(&s3, &g), Some(5 * 35 + 7 * 10));
    }
}
