use std::collections::HashMap;

use serde::Serialize;

use super::ShadowError;
use crate::goldfield::{GoldenNum, OrderedField};
use crate::polytopes::Polyhedron;
use crate::quatgroup::BinaryGroup;
use crate::vec3::Vec3;

/// Exact 3×3 matrix, row major.
pub type Mat3 = [[GoldenNum; 3]; 3];

fn apply(m: &Mat3, v: &Vec3<GoldenNum>) -> Vec3<GoldenNum> {
    let row = |r: &[GoldenNum; 3]| r[0].clone() * &v.x + &(r[1].clone() * &v.y) + &(r[2].clone() * &v.z);
    Vec3::new(row(&m[0]), row(&m[1]), row(&m[2]))
}

fn negate(m: Mat3) -> Mat3 {
    m.map(|r| r.map(|x| -x))
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceOrbitMap {
    pub seed_face: usize,
    /// `face_of_element[e]` is the image of the seed face under symmetry `e`.
    pub face_of_element: Vec<usize>,
    /// Inverse of `face_of_element`; `None` where the map misses a face.
    pub element_of_face: Vec<Option<usize>>,
    pub orbit_size: usize,
    pub stabilizer_size: usize,
    pub centroid_radius_sq: Option<GoldenNum>,
}

impl FaceOrbitMap {
    pub fn is_bijection(&self) -> bool {
        self.element_of_face.iter().all(Option::is_some) && self.orbit_size == self.face_of_element.len()
    }

    pub fn centroid_radius(&self) -> Option<f64> {
        self.centroid_radius_sq.as_ref().map(|r| r.to_f64().sqrt())
    }
}

/// The 120 elements of I_h indexed by 2I: `R_q` when `q` is the smaller of
/// `±q` in the canonical order, `−R_q` otherwise.
pub fn ih_matrices(two_i: &BinaryGroup<GoldenNum>) -> Vec<Mat3> {
    two_i
        .elements()
        .iter()
        .map(|q| {
            let r = q.rotation_matrix();
            if *q <= q.neg() {
                r
            } else {
                negate(r)
            }
        })
        .collect()
}

/// Maps the seed face 0 through every element of I_h and checks that the
/// images cover all 120 faces once.
pub fn face_orbit_bijection(two_i: &BinaryGroup<GoldenNum>, m: &Polyhedron<GoldenNum>) -> Result<FaceOrbitMap, ShadowError> {
    let faces = m.faces();
    if faces.is_empty() {
        return Err(ShadowError::Orbit("no faces".into()));
    }
    let vertex_index: HashMap<&Vec3<GoldenNum>, usize> = m.vertices().iter().enumerate().map(|(i, v)| (v, i)).collect();
    let face_index: HashMap<[usize; 3], usize> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let mut k = *f;
            k.sort_unstable();
            (k, i)
        })
        .collect();
    let seed = 0;
    let mut face_of_element = Vec::with_capacity(two_i.order());
    for (e, r) in ih_matrices(two_i).iter().enumerate() {
        let mut image = [0; 3];
        for (slot, &v) in faces[seed].iter().enumerate() {
            let w = apply(r, m.vertex(v));
            image[slot] = *vertex_index
                .get(&w)
                .ok_or_else(|| ShadowError::Orbit(format!("symmetry {e} moves vertex {v} off the mesh")))?;
        }
        image.sort_unstable();
        let f = *face_index
            .get(&image)
            .ok_or_else(|| ShadowError::Orbit(format!("symmetry {e} moves the seed face off the mesh")))?;
        face_of_element.push(f);
    }
    let mut element_of_face = vec![None; faces.len()];
    for (e, &f) in face_of_element.iter().enumerate() {
        element_of_face[f].get_or_insert(e);
    }
    let orbit_size = element_of_face.iter().filter(|x| x.is_some()).count();
    let stabilizer_size = face_of_element.iter().filter(|&&f| f == seed).count();
    let first = m.face_centroid(0).norm_sq();
    let common = (1..faces.len()).all(|f| m.face_centroid(f).norm_sq() == first);
    Ok(FaceOrbitMap {
        seed_face: seed,
        face_of_element,
        element_of_face,
        orbit_size,
        stabilizer_size,
        centroid_radius_sq: common.then_some(first),
    })
}
