use crate::error::{Error, Result};
use crate::graph::{named, Graph};

/// Part fractions of a complete multipartite limit object: a point of the
/// open standard simplex. Empty parts are represented by a shorter vector.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(transparent)]
pub struct PartProfile {
    fractions: Vec<f64>,
}

impl PartProfile {
    /// Accepts positive fractions summing to 1 within `1e-9` and rescales
    /// them to sum to 1.
    pub fn new(fractions: Vec<f64>) -> Result<Self> {
        if fractions.is_empty() {
            return Err(Error::domain("profile needs at least one part"));
        }
        if fractions.iter().any(|&a| !(a.is_finite() && a > 0.0)) {
            return Err(Error::domain("profile fractions must be positive"));
        }
        let sum: f64 = fractions.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::domain(format!("profile fractions sum to {sum}, not 1")));
        }
        Ok(PartProfile {
            fractions: fractions.into_iter().map(|a| a / sum).collect(),
        })
    }

    /// Drops zero weights and normalises the rest.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        if weights.iter().any(|&w| !(w.is_finite() && w >= 0.0)) {
            return Err(Error::domain("weights must be nonnegative"));
        }
        let sum: f64 = weights.iter().sum();
        if sum <= 0.0 {
            return Err(Error::domain("weights sum to zero"));
        }
        Ok(PartProfile {
            fractions: weights.iter().filter(|&&w| w > 0.0).map(|w| w / sum).collect(),
        })
    }

    pub fn balanced(m: usize) -> Self {
        assert!(m >= 1);
        PartProfile {
            fractions: vec![1.0 / m as f64; m],
        }
    }

    pub fn fractions(&self) -> &[f64] {
        &self.fractions
    }

    pub fn parts(&self) -> usize {
        self.fractions.len()
    }

    /// Limit edge density `1 - Σ α_i^2`.
    pub fn edge_density(&self) -> f64 {
        1.0 - self.fractions.iter().map(|a| a * a).sum::<f64>()
    }

    /// Integer part sizes summing to `n` by largest-remainder rounding;
    /// parts that round to zero are dropped.
    pub fn part_sizes(&self, n: usize) -> Vec<usize> {
        let raw: Vec<f64> = self.fractions.iter().map(|a| a * n as f64).collect();
        let mut sizes: Vec<usize> = raw.iter().map(|r| r.floor() as usize).collect();
        let mut short = n - sizes.iter().sum::<usize>();
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&i, &j| {
            let fi = raw[i] - raw[i].floor();
            let fj = raw[j] - raw[j].floor();
            fj.total_cmp(&fi).then(i.cmp(&j))
        });
        for &i in &order {
            if short == 0 {
                break;
            }
            sizes[i] += 1;
            short -= 1;
        }
        sizes.retain(|&s| s > 0);
        sizes
    }

    /// The complete multipartite graph on `n` vertices with
    /// [`part_sizes`](Self::part_sizes).
    pub fn blowup(&self, n: usize) -> Graph {
        named::complete_multipartite(&self.part_sizes(n))
    }
}

/// Part sizes of a complete multipartite pattern, sorted in decreasing
/// order. `K_t` is all ones; the edgeless graph is a single part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct MultipartitePattern {
    parts: Vec<usize>,
}

impl MultipartitePattern {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::domain("pattern parts must be positive and nonempty"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MultipartitePattern { parts })
    }

    /// Recognises complete multipartite graphs: non-adjacency must be an
    /// equivalence relation.
    pub fn from_graph(g: &Graph) -> Option<Self> {
        let classes = multipartite_classes(g)?;
        MultipartitePattern::new(classes.iter().map(Vec::len).collect()).ok()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn to_graph(&self) -> Graph {
        named::complete_multipartite(&self.parts)
    }
}

/// Vertex classes of a complete multipartite graph, ordered by smallest
/// member; `None` if `g` is not complete multipartite or has no vertices.
pub fn multipartite_classes(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&u| u == v || !g.has_edge(u, v)).collect();
        for &u in &members {
            if class_of[u] != usize::MAX {
                return None;
            }
            class_of[u] = classes.len();
        }
        classes.push(members);
    }
    for u in 0..n {
        for w in u + 1..n {
            if g.has_edge(u, w) == (class_of[u] == class_of[w]) {
                return None;
            }
        }
    }
    Some(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_validation() {
        assert!(PartProfile::new(vec![0.5, 0.5]).is_ok());
        assert!(PartProfile::new(vec![0.5, 0.4]).is_err());
        assert!(PartProfile::new(vec![1.0, 0.0]).is_err());
        assert!(PartProfile::new(vec![]).is_err());
        let p = PartProfile::from_weights(&[2.0, 0.0, 2.0]).unwrap();
        assert_eq!(p.fractions(), &[0.5, 0.5]);
        assert_eq!(PartProfile::balanced(4).edge_density(), 0.75);
    }

    #[test]
    fn part_sizes_sum_to_n() {
        let p = PartProfile::new(vec![0.6, 0.3, 0.1]).unwrap();
        assert_eq!(p.part_sizes(120), vec![72, 36, 12]);
        let p = PartProfile::balanced(3);
        assert_eq!(p.part_sizes(10).iter().sum::<usize>(), 10);
        assert_eq!(PartProfile::new(vec![0.999, 0.001]).unwrap().part_sizes(10), vec![10]);
    }

    #[test]
    fn recognises_multipartite() {
        let g = named::complete_multipartite(&[1, 3, 2]);
        assert_eq!(MultipartitePattern::from_graph(&g).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(MultipartitePattern::from_graph(&Graph::empty(3)).unwrap().parts(), &[3]);
        assert_eq!(
            MultipartitePattern::from_graph(&Graph::complete(3)).unwrap().parts(),
            &[1, 1, 1]
        );
        assert!(MultipartitePattern::from_graph(&named::path(4)).is_none());
        assert!(MultipartitePattern::from_graph(&named::cycle(5)).is_none());
        // P_3 = K_{1,2}
        assert_eq!(
            MultipartitePattern::from_graph(&named::path(3)).unwrap().parts(),
            &[2, 1]
        );
    }
}
