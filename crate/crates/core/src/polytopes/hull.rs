use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::goldfield::{OrderedField, Sign};
use crate::vec3::{orient3d, Vec3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HullError {
    #[error("need at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("all points are coplanar")]
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PointClass {
    /// An extreme point of the hull.
    Vertex,
    /// On the hull surface but not extreme (inside a facet or an edge).
    Boundary,
    /// Strictly inside every supporting plane.
    Interior,
}

#[derive(Debug, Clone, Serialize)]
pub struct HullResult {
    /// Outward-oriented triangles; coplanar facets stay split.
    pub faces: Vec<[usize; 3]>,
    pub classes: Vec<PointClass>,
}

impl HullResult {
    fn with_class(&self, c: PointClass) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| self.classes[i] == c).collect()
    }

    pub fn hull_vertices(&self) -> Vec<usize> {
        self.with_class(PointClass::Vertex)
    }

    pub fn interior(&self) -> Vec<usize> {
        self.with_class(PointClass::Interior)
    }

    pub fn boundary(&self) -> Vec<usize> {
        self.with_class(PointClass::Boundary)
    }
}

fn initial_simplex<F: OrderedField>(pts: &[Vec3<F>]) -> Result<[usize; 4], HullError> {
    let a = 0;
    let b = (1..pts.len()).find(|&i| pts[i] != pts[a]).ok_or(HullError::Degenerate)?;
    let ab = pts[b].sub(&pts[a]);
    let c = (1..pts.len())
        .find(|&i| !ab.cross(&pts[i].sub(&pts[a])).is_zero())
        .ok_or(HullError::Degenerate)?;
    let d = (1..pts.len())
        .find(|&i| orient3d(&pts[a], &pts[b], &pts[c], &pts[i]) != Sign::Zero)
        .ok_or(HullError::Degenerate)?;
    Ok([a, b, c, d])
}

/// Exact incremental convex hull.
///
/// A point is inserted only when some current face sees it strictly, so
/// every inserted point is extreme at the time of insertion; points that
/// later end up flat on the surface are reported as
/// [`PointClass::Boundary`].
pub fn convex_hull<F: OrderedField>(pts: &[Vec3<F>]) -> Result<HullResult, HullError> {
    if pts.len() < 4 {
        return Err(HullError::TooFewPoints(pts.len()));
    }
    let [a, b, c, d] = initial_simplex(pts)?;
    let (b, c) = if orient3d(&pts[a], &pts[b], &pts[c], &pts[d]) == Sign::Positive {
        (c, b)
    } else {
        (b, c)
    };
    // Outward means the opposite vertex sees the face negatively.
    let mut faces = vec![[a, b, c], [a, d, b], [b, d, c], [c, d, a]];
    let seeded = [a, b, c, d];
    for p in 0..pts.len() {
        if seeded.contains(&p) {
            continue;
        }
        let visible: Vec<bool> = faces
            .iter()
            .map(|f| orient3d(&pts[f[0]], &pts[f[1]], &pts[f[2]], &pts[p]) == Sign::Positive)
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let lit: HashSet<(usize, usize)> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| v)
            .flat_map(|(f, _)| (0..3).map(move |k| (f[k], f[(k + 1) % 3])))
            .collect();
        let mut next: Vec<[usize; 3]> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(f, _)| *f)
            .collect();
        let mut horizon: Vec<(usize, usize)> = lit
            .iter()
            .filter(|&&(u, v)| !lit.contains(&(v, u)))
            .copied()
            .collect();
        horizon.sort_unstable();
        next.extend(horizon.into_iter().map(|(u, v)| [u, v, p]));
        faces = next;
    }
    faces.sort_unstable();
    let classes = classify(pts, &faces);
    Ok(HullResult { faces, classes })
}

fn classify<F: OrderedField>(pts: &[Vec3<F>], faces: &[[usize; 3]]) -> Vec<PointClass> {
    let normals: Vec<Vec3<F>> = faces
        .iter()
        .map(|f| pts[f[1]].sub(&pts[f[0]]).cross(&pts[f[2]].sub(&pts[f[0]])))
        .collect();
    (0..pts.len())
        .map(|p| {
            let inside = faces
                .iter()
                .all(|f| orient3d(&pts[f[0]], &pts[f[1]], &pts[f[2]], &pts[p]) == Sign::Negative);
            if inside {
                return PointClass::Interior;
            }
            // Extreme iff the incident faces span at least three planes.
            let mut planes: Vec<&Vec3<F>> = Vec::new();
            for (fi, f) in faces.iter().enumerate() {
                if f.contains(&p) && !planes.iter().any(|n| n.same_ray(&normals[fi])) {
                    planes.push(&normals[fi]);
                }
            }
            if planes.len() >= 3 {
                PointClass::Vertex
            } else {
                PointClass::Boundary
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goldfield::Rational;

    fn v(x: i64, y: i64, z: i64) -> Vec3<Rational> {
        Vec3::from_ints(x, y, z)
    }

    #[test]
    fn tetrahedron_with_centroid() {
        let pts = vec![v(3, 3, 3), v(3, -3, -3), v(-3, 3, -3), v(-3, -3, 3), v(0, 0, 0)];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.faces.len(), 4);
        assert_eq!(h.interior(), vec![4]);
        assert_eq!(h.hull_vertices(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn cube_with_face_and_edge_points() {
        let mut pts = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    pts.push(v(x, y, z));
                }
            }
        }
        pts.push(v(1, 0, 0));
        pts.push(v(1, 1, 0));
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.hull_vertices(), (0..8).collect::<Vec<_>>());
        assert_eq!(h.boundary(), vec![8, 9]);
        assert!(h.interior().is_empty());
    }

    #[test]
    fn coplanar_input_is_rejected() {
        let pts = vec![v(0, 0, 0), v(1, 0, 0), v(0, 1, 0), v(1, 1, 0)];
        assert_eq!(convex_hull(&pts).unwrap_err(), HullError::Degenerate);
        assert_eq!(convex_hull(&pts[..3]).unwrap_err(), HullError::TooFewPoints(3));
    }
}
