use rayon::prelude::*;

use super::enumerate::enumerate_hosts;
use crate::boundary::{BoundaryCurve, CurveSample, CurveSource};
use crate::error::{Error, Result};
use crate::graph::{edge_density, Graph};
use crate::quantum::QuantumGraph;

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RegionPoint {
    pub x: f64,
    pub y: f64,
    pub graph6: String,
}

/// `(ρ(G), ρ(Q, G))` for one representative `G` of every class on `n`
/// vertices.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RegionPointCloud {
    pub q: String,
    pub n: usize,
    pub points: Vec<RegionPoint>,
}

impl RegionPointCloud {
    /// `x,y,graph6` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,graph6\n");
        for p in &self.points {
            out.push_str(&format!("{},{},{}\n", p.x, p.y, p.graph6));
        }
        out
    }
}

pub fn region_cloud(q: &QuantumGraph, n: usize) -> Result<RegionPointCloud> {
    if n < 2 {
        return Err(Error::domain("region cloud needs n >= 2"));
    }
    if q.max_order() > n {
        return Err(Error::domain(format!(
            "constituent on {} vertices does not fit in n = {n}",
            q.max_order()
        )));
    }
    let hosts = enumerate_hosts(n)?;
    let points = hosts.par_iter().map(|g| point(q, g)).collect::<Result<Vec<_>>>()?;
    Ok(RegionPointCloud {
        q: q.to_string(),
        n,
        points,
    })
}

fn point(q: &QuantumGraph, g: &Graph) -> Result<RegionPoint> {
    Ok(RegionPoint {
        x: edge_density(g)?,
        y: q.density(g)?,
        graph6: g.to_graph6(),
    })
}

/// Extremal cloud point within one density bin.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct BinExtremum {
    /// Bin centre.
    pub x: f64,
    pub y: f64,
    pub bin_lo: f64,
    pub bin_hi: f64,
    /// Edge density of the witness.
    pub witness_x: f64,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct EmpiricalBoundary {
    pub upper: Vec<BinExtremum>,
    pub lower: Vec<BinExtremum>,
}

impl EmpiricalBoundary {
    pub fn upper_curve(&self) -> BoundaryCurve {
        curve("empirical-upper", &self.upper)
    }

    pub fn lower_curve(&self) -> BoundaryCurve {
        curve("empirical-lower", &self.lower)
    }
}

fn curve(name: &str, bins: &[BinExtremum]) -> BoundaryCurve {
    BoundaryCurve {
        name: name.to_string(),
        samples: bins
            .iter()
            .map(|b| CurveSample {
                x: b.x,
                y: b.y,
                source: CurveSource::Empirical,
            })
            .collect(),
    }
}

/// Per-bin maximum and minimum of the cloud over `bins` equal-width bins
/// of `[0, 1]`. Empty bins are skipped; one bin gives the global extrema.
pub fn empirical_boundary(cloud: &RegionPointCloud, bins: usize) -> Result<EmpiricalBoundary> {
    if bins == 0 {
        return Err(Error::domain("need at least one bin"));
    }
    if cloud.points.is_empty() {
        return Err(Error::domain("empty point cloud"));
    }
    let width = 1.0 / bins as f64;
    let mut hi: Vec<Option<&RegionPoint>> = vec![None; bins];
    let mut lo: Vec<Option<&RegionPoint>> = vec![None; bins];
    for p in &cloud.points {
        let b = ((p.x * bins as f64) as usize).min(bins - 1);
        if hi[b].is_none_or(|q| p.y > q.y) {
            hi[b] = Some(p);
        }
        if lo[b].is_none_or(|q| p.y < q.y) {
            lo[b] = Some(p);
        }
    }
    let collect = |side: &[Option<&RegionPoint>]| {
        side.iter()
            .enumerate()
            .filter_map(|(b, p)| {
                p.map(|p| BinExtremum {
                    x: (b as f64 + 0.5) * width,
                    y: p.y,
                    bin_lo: b as f64 * width,
                    bin_hi: (b + 1) as f64 * width,
                    witness_x: p.x,
                    witness: p.graph6.clone(),
                })
            })
            .collect::<Vec<_>>()
    };
    Ok(EmpiricalBoundary {
        upper: collect(&hi),
        lower: collect(&lo),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn triangle_cloud_on_three_vertices() {
        let q = QuantumGraph::single(&named::complete(3)).unwrap();
        let cloud = region_cloud(&q, 3).unwrap();
        let mut pts: Vec<(f64, f64)> = cloud.points.iter().map(|p| (p.x, p.y)).collect();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        assert_eq!(pts, vec![(0.0, 0.0), (1.0 / 3.0, 0.0), (2.0 / 3.0, 0.0), (1.0, 1.0)]);
        assert!(cloud.to_csv().starts_with("x,y,graph6\n"));
    }

    #[test]
    fn witnesses_reproduce_points() {
        let q = QuantumGraph::single(&named::k_minus(3)).unwrap();
        let cloud = region_cloud(&q, 5).unwrap();
        for p in &cloud.points {
            let g = Graph::from_graph6(&p.graph6).unwrap();
            assert_eq!(q.density(&g).unwrap(), p.y);
        }
    }

    #[test]
    fn boundaries() {
        let q = QuantumGraph::single(&named::complete(3)).unwrap();
        let cloud = region_cloud(&q, 6).unwrap();
        let one = empirical_boundary(&cloud, 1).unwrap();
        assert_eq!(one.upper[0].y, 1.0);
        assert_eq!(one.lower[0].y, 0.0);
        let b = empirical_boundary(&cloud, 10).unwrap();
        assert!(b.upper.iter().zip(&b.lower).all(|(u, l)| u.y >= l.y));
        assert!(b.lower.iter().filter(|l| l.bin_hi <= 0.6).all(|l| l.y == 0.0));
        assert!(empirical_boundary(&cloud, 0).is_err());
        let empty = RegionPointCloud {
            q: String::new(),
            n: 3,
            points: vec![],
        };
        assert!(empirical_boundary(&empty, 3).is_err());
    }

    #[test]
    fn too_small_host() {
        let q = QuantumGraph::single(&named::complete(4)).unwrap();
        assert!(region_cloud(&q, 3).is_err());
    }
}
