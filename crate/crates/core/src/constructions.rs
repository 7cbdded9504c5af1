//! Explicit extremal host families, parameterised by order and target edge
//! density.

use std::fmt;
use std::str::FromStr;

use crate::boundary::density_cell;
use crate::error::{Error, Result};
use crate::graph::{named, Graph};

/// Which family to build. Names parse from the CLI spelling (`h-star`,
/// `bipartite-b`, `clique-isolated`, `coclique-joined`, `turan`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    HStar,
    BipartiteB,
    CliqueIsolated,
    CocliqueJoined,
    Turan,
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "h-star" | "hstar" => ConstructionKind::HStar,
            "bipartite-b" | "b" => ConstructionKind::BipartiteB,
            "clique-isolated" => ConstructionKind::CliqueIsolated,
            "coclique-joined" => ConstructionKind::CocliqueJoined,
            "turan" => ConstructionKind::Turan,
            other => return Err(Error::parse(format!("unknown construction {other:?}"))),
        })
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionKind::HStar => "h-star",
            ConstructionKind::BipartiteB => "bipartite-b",
            ConstructionKind::CliqueIsolated => "clique-isolated",
            ConstructionKind::CocliqueJoined => "coclique-joined",
            ConstructionKind::Turan => "turan",
        })
    }
}

/// A fully specified construction. `x` is ignored by `turan`, `r` by the
/// others.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub n: usize,
    pub x: f64,
    pub r: usize,
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Graph> {
        if self.n == 0 {
            return Err(Error::domain("construction needs n >= 1"));
        }
        match self.kind {
            ConstructionKind::HStar => h_star(self.n, self.x),
            ConstructionKind::BipartiteB => bipartite_b(self.n, self.x),
            ConstructionKind::CliqueIsolated => clique_isolated(self.n, self.x),
            ConstructionKind::CocliqueJoined => coclique_joined(self.n, self.x),
            ConstructionKind::Turan => turan(self.n, self.r),
        }
    }
}

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::domain(format!("density {x} outside [0, 1]")))
    }
}

/// `floor(v)` tolerant of values a few ulps below an integer.
fn floor_tol(v: f64) -> usize {
    (v + 1e-9).floor().max(0.0) as usize
}

/// Part sizes of `H*(n, x)`: `k - 1` parts of `floor(α_k n)` and one
/// remainder part, zero-size parts dropped. Empty for `x = 0`, `n` ones for
/// `x = 1`.
pub fn h_star_parts(n: usize, x: f64) -> Result<Vec<usize>> {
    check_unit(x)?;
    if n == 0 {
        return Err(Error::domain("construction needs n >= 1"));
    }
    if x == 0.0 {
        return Ok(vec![n]);
    }
    if x == 1.0 {
        return Ok(vec![1; n]);
    }
    let k = density_cell(x);
    let kf = k as f64;
    let alpha = (1.0 + (1.0 - kf / (kf - 1.0) * x).max(0.0).sqrt()) / kf;
    let big = floor_tol(alpha * n as f64);
    let used = big * (k - 1);
    if used > n {
        return Err(Error::Construction { n, k });
    }
    let mut parts = vec![big; k - 1];
    parts.push(n - used);
    parts.retain(|&p| p > 0);
    Ok(parts)
}

/// The complete `k`-partite graph `H*(n, x)` with `x` in the cell
/// `((k-2)/(k-1), (k-1)/k]`.
pub fn h_star(n: usize, x: f64) -> Result<Graph> {
    Ok(named::complete_multipartite(&h_star_parts(n, x)?))
}

/// Complete bipartite `B(n, x)` with sides `floor(αn)` and the rest, where
/// `α(1-α) = x/2`.
pub fn bipartite_b(n: usize, x: f64) -> Result<Graph> {
    if !(0.0..=0.5).contains(&x) {
        return Err(Error::domain(format!("bipartite_b needs x in [0, 1/2], got {x}")));
    }
    let alpha = (1.0 - (1.0 - 2.0 * x).max(0.0).sqrt()) / 2.0;
    let a = floor_tol(alpha * n as f64).min(n);
    Ok(named::complete_bipartite(a, n - a))
}

/// `K_{floor(√x n)}` plus isolated vertices.
pub fn clique_isolated(n: usize, x: f64) -> Result<Graph> {
    check_unit(x)?;
    let c = floor_tol(x.sqrt() * n as f64).min(n);
    let mut g = Graph::empty(n);
    for u in 0..c {
        for v in u + 1..c {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Complement of `clique_isolated(n, 1 - x)`: an independent set joined to a
/// clique.
pub fn coclique_joined(n: usize, x: f64) -> Result<Graph> {
    check_unit(x)?;
    Ok(clique_isolated(n, 1.0 - x)?.complement())
}

/// Balanced complete `r`-partite graph `T_r(n)`.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    Ok(named::complete_multipartite(&turan_parts(n, r)?))
}

pub fn turan_parts(n: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 || r > n {
        return Err(Error::domain(format!("turan needs 1 <= r <= n, got r={r}, n={n}")));
    }
    Ok((0..r).map(|i| n / r + usize::from(i < n % r)).collect())
}

/// A path from `g1` to `g2` in which consecutive graphs differ in one edge.
///
/// Deletions and additions alternate, leading with the direction that moves
/// toward `g2`'s edge count, so every intermediate edge count stays in
/// `[min(e1, e2), max(e1, e2)]`. When the counts are equal but the graphs
/// differ an excursion of one edge is unavoidable; the path then leads with
/// a deletion. Edges are processed in lexicographic order.
pub fn interpolation_path(g1: &Graph, g2: &Graph) -> Result<Vec<Graph>> {
    if g1.order() != g2.order() {
        return Err(Error::domain(format!(
            "interpolation needs equal orders, got {} and {}",
            g1.order(),
            g2.order()
        )));
    }
    let mut delete: Vec<(usize, usize)> = g1.edges().filter(|&(u, v)| !g2.has_edge(u, v)).collect();
    let mut add: Vec<(usize, usize)> = g2.edges().filter(|&(u, v)| !g1.has_edge(u, v)).collect();
    delete.reverse();
    add.reverse();
    let delete_first = g1.edge_count() >= g2.edge_count();

    let mut path = vec![g1.clone()];
    let mut cur = g1.clone();
    let mut deleting = delete_first;
    while !delete.is_empty() || !add.is_empty() {
        let step = if deleting { delete.pop() } else { add.pop() };
        match step {
            Some((u, v)) if deleting => cur.remove_edge(u, v),
            Some((u, v)) => cur.add_edge(u, v),
            None => {
                deleting = !deleting;
                continue;
            }
        }
        path.push(cur.clone());
        deleting = !deleting;
    }
    Ok(path)
}
