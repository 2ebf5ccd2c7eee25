use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::VertexType;
use crate::goldfield::{OrderedField, Sign};
use crate::vec3::Vec3;

/// A triangulated surface with optionally typed vertices.
#[derive(Debug, Clone)]
pub struct Polyhedron<F> {
    name: String,
    vertices: Vec<Vec3<F>>,
    types: Vec<Option<VertexType>>,
    edges: Vec<(usize, usize)>,
    faces: Vec<[usize; 3]>,
}

impl<F: OrderedField> Polyhedron<F> {
    /// Edges are taken from the faces, so every face edge is present.
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<Vec3<F>>,
        types: Vec<Option<VertexType>>,
        faces: Vec<[usize; 3]>,
    ) -> Self {
        assert_eq!(vertices.len(), types.len());
        let mut edges = BTreeSet::new();
        for f in &faces {
            for k in 0..3 {
                let (a, b) = (f[k], f[(k + 1) % 3]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        Polyhedron {
            name: name.into(),
            vertices,
            types,
            edges: edges.into_iter().collect(),
            faces,
        }
    }

    pub fn untyped(name: impl Into<String>, vertices: Vec<Vec3<F>>, faces: Vec<[usize; 3]>) -> Self {
        let types = vec![None; vertices.len()];
        Polyhedron::new(name, vertices, types, faces)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[Vec3<F>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vec3<F> {
        &self.vertices[i]
    }

    pub fn types(&self) -> &[Option<VertexType>] {
        &self.types
    }

    pub fn vertex_type(&self, i: usize) -> Option<VertexType> {
        self.types[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    /// Replaces one vertex position, keeping the combinatorics.
    pub fn set_vertex(&mut self, i: usize, v: Vec3<F>) {
        self.vertices[i] = v;
    }

    pub fn indices_of_type(&self, t: VertexType) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&i| self.types[i] == Some(t)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Squared radius → vertex count, by increasing radius.
    pub fn radius_census(&self) -> Vec<(F, usize)> {
        let mut out = BTreeMap::new();
        for v in &self.vertices {
            *out.entry(v.norm_sq()).or_insert(0) += 1;
        }
        out.into_iter().collect()
    }

    /// Squared edge length → edge count, by increasing length.
    pub fn edge_length_census(&self) -> Vec<(F, usize)> {
        let mut out = BTreeMap::new();
        for &(a, b) in &self.edges {
            *out.entry(self.vertices[a].sub(&self.vertices[b]).norm_sq()).or_insert(0) += 1;
        }
        out.into_iter().collect()
    }

    /// Edge count by unordered pair of endpoint types.
    pub fn edge_type_census(&self) -> BTreeMap<(Option<VertexType>, Option<VertexType>), usize> {
        let mut out = BTreeMap::new();
        for &(a, b) in &self.edges {
            let (ta, tb) = (self.types[a], self.types[b]);
            *out.entry((ta.min(tb), ta.max(tb))).or_insert(0) += 1;
        }
        out
    }

    pub fn face_centroid(&self, f: usize) -> Vec3<F> {
        let [a, b, c] = self.faces[f];
        let third = F::from_ratio(1, 3);
        self.vertices[a]
            .add(&self.vertices[b])
            .add(&self.vertices[c])
            .scale(&third)
    }

    /// Every face contains exactly one vertex of each type.
    pub fn trinity_violations(&self) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&f| {
                let ts: BTreeSet<_> = self.faces[f].iter().map(|&v| self.types[v]).collect();
                ts != BTreeSet::from([Some(VertexType::A), Some(VertexType::B), Some(VertexType::C)])
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeshReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    /// Edges not bordered by exactly two faces, with their face count.
    pub non_manifold_edges: Vec<((usize, usize), usize)>,
    /// Pairs of exactly equal vertex positions.
    pub duplicate_vertices: Vec<(usize, usize)>,
    /// Faces that repeat a vertex index.
    pub degenerate_faces: Vec<usize>,
    /// Directed edges used by more than one face.
    pub orientation_conflicts: usize,
}

impl MeshReport {
    pub fn manifold(&self) -> bool {
        self.non_manifold_edges.is_empty()
    }

    pub fn is_closed_sphere(&self) -> bool {
        self.euler == 2
            && self.manifold()
            && self.duplicate_vertices.is_empty()
            && self.degenerate_faces.is_empty()
            && self.orientation_conflicts == 0
    }
}

pub fn mesh_integrity<F: OrderedField>(p: &Polyhedron<F>) -> MeshReport {
    let mut incidence: BTreeMap<(usize, usize), usize> = p.edges.iter().map(|&e| (e, 0)).collect();
    let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
    let mut degenerate_faces = Vec::new();
    for (fi, f) in p.faces.iter().enumerate() {
        if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
            degenerate_faces.push(fi);
        }
        for k in 0..3 {
            let (a, b) = (f[k], f[(k + 1) % 3]);
            *incidence.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            *directed.entry((a, b)).or_insert(0) += 1;
        }
    }
    let mut seen: HashMap<&Vec3<F>, usize> = HashMap::new();
    let mut duplicate_vertices = Vec::new();
    for (i, v) in p.vertices.iter().enumerate() {
        if let Some(&j) = seen.get(v) {
            duplicate_vertices.push((j, i));
        } else {
            seen.insert(v, i);
        }
    }
    MeshReport {
        vertices: p.vertices.len(),
        edges: p.edges.len(),
        faces: p.faces.len(),
        euler: p.euler_characteristic(),
        non_manifold_edges: incidence.into_iter().filter(|&(_, n)| n != 2).collect(),
        duplicate_vertices,
        degenerate_faces,
        orientation_conflicts: directed.values().filter(|&&n| n > 1).count(),
    }
}

/// Distinct squared radii of a polyhedron and the normalised triple
/// `(1, r_mid / r_min, r_max / r_min)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusRatios<F> {
    pub squared_radii: Vec<F>,
    pub ratios: [f64; 3],
}

/// Ratios are square roots of exact squared ratios.
pub fn radius_ratio_report<F: OrderedField>(p: &Polyhedron<F>) -> RadiusRatios<F> {
    let set: BTreeSet<F> = p.vertices.iter().map(|v| v.norm_sq()).collect();
    let squared: Vec<F> = set.into_iter().collect();
    let min = &squared[0];
    let mid = &squared[squared.len() / 2];
    let max = &squared[squared.len() - 1];
    let ratio = |r: &F| r.div(min).expect("nonzero radius").to_f64().sqrt();
    RadiusRatios {
        ratios: [1.0, ratio(mid), ratio(max)],
        squared_radii: squared.clone(),
    }
}

/// Sorts points counter-clockwise around `axis` as seen from its tip.
/// Points are compared by their exact angle from the first point.
pub fn sort_around_axis<F: OrderedField>(axis: &Vec3<F>, points: &mut [(usize, Vec3<F>)]) {
    if points.is_empty() {
        return;
    }
    let project = |p: &Vec3<F>| {
        let n2 = axis.norm_sq();
        p.scale(&n2).sub(&axis.scale(&p.dot(axis)))
    };
    let reference = project(&points[0].1);
    let half = |u: &Vec3<F>| {
        let s = reference.cross(u).dot(axis).sign();
        match s {
            Sign::Positive => 0,
            Sign::Zero if reference.dot(u).sign() == Sign::Positive => 0,
            _ => 1,
        }
    };
    points.sort_by(|(_, p), (_, q)| {
        let (u, v) = (project(p), project(q));
        let (hu, hv) = (half(&u), half(&v));
        if hu != hv {
            return hu.cmp(&hv);
        }
        if u.cross(&reference).is_zero() && v.cross(&reference).is_zero() && hu == 0 {
            return Ordering::Equal;
        }
        match u.cross(&v).dot(axis).sign() {
            Sign::Positive => Ordering::Less,
            Sign::Negative => Ordering::Greater,
            Sign::Zero => Ordering::Equal,
        }
    });
}
