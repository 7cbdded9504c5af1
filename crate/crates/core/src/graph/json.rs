//! Human-authored JSON fixtures: `{"n": 4, "adjacency": [[1], [0, 2], [1, 3], [2]]}`.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub adjacency: Vec<Vec<usize>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            adjacency: (0..g.order()).map(|v| g.neighbors(v).collect()).collect(),
        }
    }

    /// Builds the graph, rejecting loops, out-of-range ids and lists that
    /// are not symmetric.
    pub fn to_graph(&self) -> Result<Graph> {
        if self.adjacency.len() != self.n {
            return Err(Error::parse(format!(
                "adjacency has {} rows for n={}",
                self.adjacency.len(),
                self.n
            )));
        }
        let mut g = Graph::empty(self.n);
        for (u, row) in self.adjacency.iter().enumerate() {
            for &v in row {
                if v >= self.n || v == u {
                    return Err(Error::parse(format!("bad neighbour {v} of vertex {u}")));
                }
                if !self.adjacency[v].contains(&u) {
                    return Err(Error::parse(format!("asymmetric adjacency: {u} -> {v}")));
                }
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn parse(s: &str) -> Result<Graph> {
        serde_json::from_str::<GraphJson>(s)?.to_graph()
    }
}
