//! Quantum graphs: finite real linear combinations of graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, induced_density, named, CanonicalCode, Graph};

/// One constituent: coefficient, canonical representative and its class.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coefficient: f64,
    pub graph: Graph,
    pub code: CanonicalCode,
    pub aut_count: u64,
}

/// A quantum graph in normal form: isomorphic constituents merged, zero
/// coefficients dropped, terms sorted by canonical code.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct QuantumGraph {
    terms: Vec<Term>,
}

impl QuantumGraph {
    pub fn new<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, Graph)>,
    {
        let mut merged: Vec<Term> = Vec::new();
        for (coefficient, g) in terms {
            if !coefficient.is_finite() {
                return Err(Error::domain("quantum graph coefficient must be finite"));
            }
            let class = canonical_form(&g)?;
            match merged.iter_mut().find(|t| t.code == class.code) {
                Some(t) => t.coefficient += coefficient,
                None => merged.push(Term {
                    coefficient,
                    graph: class.code.to_graph(),
                    code: class.code,
                    aut_count: class.aut_count,
                }),
            }
        }
        merged.retain(|t| t.coefficient != 0.0);
        merged.sort_by_key(|t| t.code);
        Ok(QuantumGraph { terms: merged })
    }

    /// `1 · F`.
    pub fn single(f: &Graph) -> Result<Self> {
        QuantumGraph::new([(1.0, f.clone())])
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest constituent order (0 for the empty combination).
    pub fn max_order(&self) -> usize {
        self.terms.iter().map(|t| t.graph.order()).max().unwrap_or(0)
    }

    /// `Σ λ_i ρ(F_i, G)`.
    pub fn density(&self, g: &Graph) -> Result<f64> {
        let mut total = 0.0;
        for t in &self.terms {
            if t.graph.order() > g.order() {
                return Err(Error::domain(format!(
                    "constituent on {} vertices exceeds host order {}",
                    t.graph.order(),
                    g.order()
                )));
            }
            total += t.coefficient * induced_density(&t.graph, g)?;
        }
        Ok(total)
    }

    pub fn complement(&self) -> QuantumGraph {
        QuantumGraph::new(self.terms.iter().map(|t| (t.coefficient, t.graph.complement())))
            .expect("complements of canonicalisable graphs are canonicalisable")
    }

    pub fn is_self_complementary(&self) -> bool {
        self.complement() == *self
    }

    /// Limit of `E ρ(Q, G(n, x))`:
    /// `Σ λ_i · v(F_i)!/|Aut F_i| · x^{e(F_i)} (1-x)^{e(co F_i)}`.
    pub fn rand_density(&self, x: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::domain(format!("x = {x} outside [0, 1]")));
        }
        Ok(self
            .terms
            .iter()
            .map(|t| {
                let v = t.graph.order();
                let e = t.graph.edge_count();
                let non = v * v.saturating_sub(1) / 2 - e;
                let labelled: f64 = (1..=v).map(|i| i as f64).product::<f64>() / t.aut_count as f64;
                t.coefficient * labelled * x.powi(e as i32) * (1.0 - x).powi(non as i32)
            })
            .sum())
    }
}

/// `q_density` in operation form.
pub fn q_density(q: &QuantumGraph, g: &Graph) -> Result<f64> {
    q.density(g)
}

impl fmt::Display for QuantumGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{:?}*g6:{}", t.coefficient, t.graph.to_graph6())?;
        }
        Ok(())
    }
}

/// Parses `1.0*g6:Bw + -0.5*g6:Bg`. An atom is `g6:<graph6>` or a short
/// name understood by [`named::by_name`]; a missing coefficient means 1.
impl FromStr for QuantumGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(QuantumGraph::default());
        }
        let mut terms = Vec::new();
        for part in split_terms(s) {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::parse(format!("empty term in {s:?}")));
            }
            let (coef, atom) = match part.split_once('*') {
                Some((c, a)) => {
                    let c = c.trim();
                    let coefficient = c
                        .parse::<f64>()
                        .map_err(|_| Error::parse(format!("bad coefficient {c:?}")))?;
                    (coefficient, a.trim())
                }
                None => (1.0, part),
            };
            let graph = match atom.strip_prefix("g6:") {
                Some(g6) => Graph::from_graph6(g6)?,
                None => named::by_name(atom)?,
            };
            terms.push((coef, graph));
        }
        QuantumGraph::new(terms)
    }
}

/// Splits on `+` separators, leaving exponent signs (`1e+3`) alone.
fn split_terms(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    for (i, &b) in bytes.iter().enumerate() {
        if b == b'+' {
            let exponent = i > 0 && matches!(bytes[i - 1], b'e' | b'E') && i >= 2 && bytes[i - 2].is_ascii_digit();
            if !exponent {
                out.push(&s[start..i]);
                start = i + 1;
            }
        }
    }
    out.push(&s[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn goodman_q() -> QuantumGraph {
        QuantumGraph::new([(1.0, complete(3)), (1.0, Graph::empty(3))]).unwrap()
    }

    #[test]
    fn merges_isomorphic_and_drops_zeros() {
        let a = path(3);
        let b = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let q = QuantumGraph::new([(1.0, a.clone()), (2.0, b)]).unwrap();
        assert_eq!(q.terms().len(), 1);
        assert_eq!(q.terms()[0].coefficient, 3.0);
        let z = QuantumGraph::new([(1.0, a.clone()), (-1.0, a)]).unwrap();
        assert!(z.is_empty());
    }

    #[test]
    fn density_is_linear() {
        let g = cycle(7);
        let q = goodman_q();
        let direct = induced_density(&complete(3), &g).unwrap() + induced_density(&Graph::empty(3), &g).unwrap();
        assert_eq!(q.density(&g).unwrap(), direct);
        let k2 = QuantumGraph::single(&complete(2)).unwrap();
        assert_eq!(k2.density(&g).unwrap(), crate::graph::edge_density(&g).unwrap());
    }

    #[test]
    fn goodman_on_k66() {
        // oracle: 2·C(6,3) independent triples, no triangles
        let g = complete_bipartite(6, 6);
        let expected = 40.0 / 220.0;
        assert!((goodman_q().density(&g).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn too_small_host_is_domain_error() {
        let q = QuantumGraph::single(&complete(4)).unwrap();
        assert!(matches!(q.density(&complete(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn complements() {
        assert!(goodman_q().is_self_complementary());
        let cherry = QuantumGraph::single(&k_minus(3)).unwrap();
        assert!(!cherry.is_self_complementary());
        let co = cherry.complement();
        assert_eq!(co.terms()[0].graph.edge_count(), 1);
        let c5 = QuantumGraph::new([(2.0, cycle(5))]).unwrap();
        assert!(c5.is_self_complementary());
    }

    #[test]
    fn rand_examples() {
        let k2 = QuantumGraph::single(&complete(2)).unwrap();
        let k3 = QuantumGraph::single(&complete(3)).unwrap();
        let cherry = QuantumGraph::single(&k_minus(3)).unwrap();
        assert!((k2.rand_density(0.3).unwrap() - 0.3).abs() < 1e-15);
        assert!((k3.rand_density(0.3).unwrap() - 0.027).abs() < 1e-15);
        assert_eq!(cherry.rand_density(0.5).unwrap(), 0.375);
        assert!(k3.rand_density(1.5).is_err());
    }

    #[test]
    fn three_vertex_rand_sums_to_one() {
        let all = QuantumGraph::new([
            (1.0, Graph::empty(3)),
            (1.0, Graph::from_edges(3, &[(0, 1)]).unwrap()),
            (1.0, path(3)),
            (1.0, complete(3)),
        ])
        .unwrap();
        for x in [0.0, 0.1, 0.37, 0.5, 0.9, 1.0] {
            assert!((all.rand_density(x).unwrap() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn parse_and_display() {
        let q: QuantumGraph = "1.0*g6:Bw + -0.5*g6:Bg".parse().unwrap();
        assert_eq!(q.terms().len(), 2);
        let back: QuantumGraph = q.to_string().parse().unwrap();
        assert_eq!(back, q);
        let named: QuantumGraph = "K3 + 1e+0*E3".parse().unwrap();
        assert_eq!(named, goodman_q());
        assert!("1.0*".parse::<QuantumGraph>().is_err());
        assert!("abc*K3".parse::<QuantumGraph>().is_err());
        assert!("K3 +".parse::<QuantumGraph>().is_err());
        assert_eq!("0".parse::<QuantumGraph>().unwrap().to_string(), "0");
    }
}
