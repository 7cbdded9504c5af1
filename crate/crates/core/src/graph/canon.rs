//! Canonical labelling by colour refinement plus exhaustive search inside
//! the refined cells.
//!
//! The canonical code of a graph is the lexicographically largest upper
//! triangle (read in graph6 column order) over all labellings that list the
//! refined colour classes in their canonical order. Refinement is
//! isomorphism-invariant, so the code is too; every automorphism preserves
//! the colour classes, so the number of labellings attaining the maximum is
//! exactly the order of the automorphism group.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const DEFAULT_CANON_BOUND: usize = 10;
/// Hard limit: `C(11, 2) = 55` code bits still fit in a `u64`.
pub const MAX_CANON_ORDER: usize = 11;

/// Canonical adjacency encoding. Equal codes mean isomorphic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct CanonicalCode {
    pub order: u8,
    pub bits: u64,
}

/// An isomorphism class: canonical code plus automorphism group order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct IsoClass {
    pub code: CanonicalCode,
    pub aut_count: u64,
}

impl CanonicalCode {
    /// The canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order as usize;
        let len = n * n.saturating_sub(1) / 2;
        let mut g = Graph::empty(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> Result<IsoClass> {
    canonical_form_with_bound(g, DEFAULT_CANON_BOUND)
}

pub fn canonical_form_with_bound(g: &Graph, bound: usize) -> Result<IsoClass> {
    canonical_labeling_with_bound(g, bound).map(|(class, _)| class)
}

/// Canonical form together with one labelling `perm` (vertex `v` of `g`
/// goes to position `perm[v]`) such that `g.relabel(perm)` is the canonical
/// representative.
pub fn canonical_labeling(g: &Graph) -> Result<(IsoClass, Vec<usize>)> {
    canonical_labeling_with_bound(g, DEFAULT_CANON_BOUND)
}

fn canonical_labeling_with_bound(g: &Graph, bound: usize) -> Result<(IsoClass, Vec<usize>)> {
    let n = g.order();
    let bound = bound.min(MAX_CANON_ORDER);
    if n > bound {
        return Err(Error::Capability(format!(
            "canonical form requested for {n} vertices; bound is {bound}"
        )));
    }
    let adj: Vec<u16> = (0..n).map(|v| g.row(v)[0] as u16).collect();
    let colors = refine(&adj);

    // vertices sorted by colour: slot p must hold a vertex of colour slot[p]
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let slot: Vec<u32> = order.iter().map(|&v| colors[v]).collect();

    let mut search = Search {
        adj: &adj,
        colors: &colors,
        slot: &slot,
        len: n * n.saturating_sub(1) / 2,
        placed: Vec::with_capacity(n),
        best: None,
        best_placed: Vec::new(),
        ties: 0,
    };
    search.run(0, 0, 0);

    let bits = search.best.unwrap_or(0);
    let mut perm = vec![0; n];
    for (pos, &v) in search.best_placed.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((
        IsoClass {
            code: CanonicalCode { order: n as u8, bits },
            aut_count: search.ties.max(1),
        },
        perm,
    ))
}

/// Iterated colour refinement. Colours are ranks of sorted signatures, so
/// they depend only on the isomorphism type of the vertex within `adj`.
fn refine(adj: &[u16]) -> Vec<u32> {
    let n = adj.len();
    let mut colors = vec![0u32; n];
    let mut classes = 1;
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter_mut()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        colors = next;
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    adj: &'a [u16],
    colors: &'a [u32],
    slot: &'a [u32],
    len: usize,
    placed: Vec<usize>,
    best: Option<u64>,
    best_placed: Vec<usize>,
    ties: u64,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, prefix: u64, used: u16) {
        let n = self.adj.len();
        if pos == n {
            match self.best {
                Some(b) if prefix < b => {}
                Some(b) if prefix == b => self.ties += 1,
                _ => {
                    self.best = Some(prefix);
                    self.best_placed = self.placed.clone();
                    self.ties = 1;
                }
            }
            return;
        }
        let filled = pos * pos.saturating_sub(1) / 2;
        for v in 0..n {
            if used >> v & 1 == 1 || self.colors[v] != self.slot[pos] {
                continue;
            }
            let mut col = 0u64;
            for &u in &self.placed {
                col = (col << 1) | (self.adj[u] >> v & 1) as u64;
            }
            let next = (prefix << pos) | col;
            let width = filled + pos;
            if let Some(b) = self.best {
                let best_prefix = if self.len == 0 { 0 } else { b >> (self.len - width) };
                if next < best_prefix {
                    continue;
                }
            }
            self.placed.push(v);
            self.run(pos + 1, next, used | 1 << v);
            self.placed.pop();
        }
    }
}
