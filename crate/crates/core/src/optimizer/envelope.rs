//! Least concave majorant and greatest convex minorant of sampled
//! functions, as piecewise-linear interpolants of hull vertices.

use crate::boundary::interpolate;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Envelope {
    vertices: Vec<(f64, f64)>,
}

impl Envelope {
    /// Hull vertices sorted by `x`.
    pub fn vertices(&self) -> &[(f64, f64)] {
        &self.vertices
    }

    /// Linear interpolation between hull vertices. `x` must lie within the
    /// sampled range.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let lo = self.vertices[0].0;
        let hi = self.vertices[self.vertices.len() - 1].0;
        if !(lo..=hi).contains(&x) {
            return Err(Error::domain(format!("x = {x} outside sampled range [{lo}, {hi}]")));
        }
        Ok(interpolate(&self.vertices, x))
    }
}

fn prepare(samples: &[(f64, f64)]) -> Result<Vec<(f64, f64)>> {
    if samples.len() < 2 {
        return Err(Error::domain("envelope needs at least 2 samples"));
    }
    if samples
        .iter()
        .any(|&(x, y)| !(0.0..=1.0).contains(&x) || !y.is_finite())
    {
        return Err(Error::domain("envelope samples need x in [0, 1] and finite y"));
    }
    let mut pts = samples.to_vec();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    if pts.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::domain("envelope sample x-values must be distinct"));
    }
    Ok(pts)
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Monotone chain over points sorted by `x`; `upper` keeps clockwise turns.
fn chain(pts: &[(f64, f64)], upper: bool) -> Vec<(f64, f64)> {
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for &p in pts {
        while hull.len() >= 2 {
            let c = cross(hull[hull.len() - 2], hull[hull.len() - 1], p);
            if (upper && c >= 0.0) || (!upper && c <= 0.0) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// `cap(f)`: the upper convex hull of the samples.
pub fn concave_envelope(samples: &[(f64, f64)]) -> Result<Envelope> {
    let pts = prepare(samples)?;
    Ok(Envelope {
        vertices: chain(&pts, true),
    })
}

/// `cup(f)`: the lower convex hull of the samples.
pub fn convex_envelope(samples: &[(f64, f64)]) -> Result<Envelope> {
    let pts = prepare(samples)?;
    Ok(Envelope {
        vertices: chain(&pts, false),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concave_input_is_fixed() {
        let pts: Vec<(f64, f64)> = (0..=10)
            .map(|i| (i as f64 / 10.0, -(i as f64 / 10.0).powi(2)))
            .collect();
        let cap = concave_envelope(&pts).unwrap();
        for &(x, y) in &pts {
            assert!((cap.eval(x).unwrap() - y).abs() < 1e-15);
        }
    }

    #[test]
    fn hull_arithmetic() {
        let pts = [(0.0, 0.0), (0.5, 1.0), (1.0, 0.0), (0.25, 0.0)];
        assert_eq!(concave_envelope(&pts).unwrap().eval(0.25).unwrap(), 0.5);
        assert_eq!(convex_envelope(&pts).unwrap().eval(0.25).unwrap(), 0.0);
        assert_eq!(convex_envelope(&pts).unwrap().vertices(), &[(0.0, 0.0), (1.0, 0.0)]);
    }

    #[test]
    fn errors() {
        assert!(concave_envelope(&[(0.5, 1.0)]).is_err());
        assert!(concave_envelope(&[(0.5, 1.0), (0.5, 2.0)]).is_err());
        assert!(concave_envelope(&[(0.5, 1.0), (1.5, 2.0)]).is_err());
        let e = concave_envelope(&[(0.2, 1.0), (0.4, 2.0)]).unwrap();
        assert!(e.eval(0.1).is_err());
    }
}
