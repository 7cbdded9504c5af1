use super::profile::multipartite_classes;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Merges the two smallest vertex classes of a complete multipartite graph
/// with at least three classes. Ties go to the class with the smaller least
/// vertex. The vertex set is unchanged; only edges between the two merged
/// classes are removed.
pub fn merge_smallest(g: &Graph) -> Result<Graph> {
    let mut classes = multipartite_classes(g).ok_or_else(|| Error::domain("graph is not complete multipartite"))?;
    if classes.len() < 3 {
        return Err(Error::domain(format!(
            "merging needs at least 3 classes, got {}",
            classes.len()
        )));
    }
    classes.sort_by_key(|c| (c.len(), c[0]));
    let mut out = g.clone();
    for &u in &classes[0] {
        for &v in &classes[1] {
            out.remove_edge(u, v);
        }
    }
    Ok(out)
}
