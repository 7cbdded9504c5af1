//! Standard pattern and host graphs.

use super::Graph;
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Graph {
    Graph::complete(n)
}

/// `K_t` minus the edge `{0, 1}`.
pub fn k_minus(t: usize) -> Graph {
    let mut g = Graph::complete(t);
    if t >= 2 {
        g.remove_edge(0, 1);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    if n >= 3 {
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
    }
    g
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Star `S_t = K_{1,t}` with centre 0.
pub fn star(t: usize) -> Graph {
    complete_bipartite(1, t)
}

pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    complete_multipartite(&[s, t])
}

/// Complete multipartite graph; part `i` occupies a contiguous block of
/// vertices in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut label = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        label.extend(std::iter::repeat_n(i, p));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if label[u] != label[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Parses the short names used on the command line and in quantum-graph
/// specs: `K5`, `K4-`, `E3` (edgeless), `C4`, `P3` (path on 3 vertices),
/// `S3` (star with 3 edges), `K2,3`, and a `co` prefix for the complement.
pub fn by_name(name: &str) -> Result<Graph> {
    if let Some(rest) = name.strip_prefix("co") {
        return by_name(rest).map(|g| g.complement());
    }
    let bad = || Error::parse(format!("unknown graph name {name:?}"));
    let (head, tail) = name.split_at(name.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match head {
        "K" => {
            if let Some((s, t)) = tail.split_once(',') {
                Ok(complete_bipartite(num(s)?, num(t)?))
            } else if let Some(t) = tail.strip_suffix('-') {
                Ok(k_minus(num(t)?))
            } else {
                Ok(complete(num(tail)?))
            }
        }
        "E" => Ok(Graph::empty(num(tail)?)),
        "C" => {
            let n = num(tail)?;
            if n < 3 {
                return Err(bad());
            }
            Ok(cycle(n))
        }
        "P" => Ok(path(num(tail)?)),
        "S" => Ok(star(num(tail)?)),
        _ => Err(bad()),
    }
}
