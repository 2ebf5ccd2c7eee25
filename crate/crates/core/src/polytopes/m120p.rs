use std::collections::BTreeSet;

use super::mesh::{mesh_integrity, sort_around_axis, Polyhedron};
use super::{integrity, ConstructionError, VertexType};
use crate::goldfield::{GoldenNum, OrderedField, Sign};
use crate::vec3::{orient3d, Vec3};

#[derive(Debug, Clone)]
pub struct M120pConstruction {
    /// Vertices ordered A (20), C (12), B (30), each block sorted.
    pub polyhedron: Polyhedron<GoldenNum>,
    /// Count recorded after each construction step.
    pub steps: Vec<(&'static str, usize)>,
    /// The five octahedra, as indices of their B vertices.
    pub octahedra: Vec<[usize; 6]>,
    /// The five cubes, as indices of their A vertices.
    pub cubes: Vec<[usize; 8]>,
    /// Rhombic triacontahedron faces as (B centre, [A, C, A, C]).
    pub rhombi: Vec<(usize, [usize; 4])>,
}

fn g(a: i64, b: i64) -> GoldenNum {
    GoldenNum::from_ints(a, b)
}

/// All sign choices of the nonzero entries, for each cyclic shift.
fn cyclic_signed(base: [GoldenNum; 3]) -> Vec<Vec3<GoldenNum>> {
    let mut out = BTreeSet::new();
    for shift in 0..3 {
        let c = [
            base[shift % 3].clone(),
            base[(shift + 1) % 3].clone(),
            base[(shift + 2) % 3].clone(),
        ];
        for mask in 0..8u32 {
            let s: Vec<GoldenNum> = (0..3)
                .map(|k| if mask & (1 << k) != 0 { -c[k].clone() } else { c[k].clone() })
                .collect();
            out.insert(Vec3::new(s[0].clone(), s[1].clone(), s[2].clone()));
        }
    }
    out.into_iter().collect()
}

fn dodecahedron(scale: &GoldenNum) -> Vec<Vec3<GoldenNum>> {
    let one = GoldenNum::one();
    let mut v: BTreeSet<Vec3<GoldenNum>> = cyclic_signed([one.clone(), one.clone(), one]).into_iter().collect();
    v.extend(cyclic_signed([GoldenNum::zero(), GoldenNum::phi(), GoldenNum::phi_inv()]));
    v.into_iter().map(|p| p.scale(scale)).collect()
}

fn icosahedron(scale: &GoldenNum) -> Vec<Vec3<GoldenNum>> {
    cyclic_signed([GoldenNum::zero(), GoldenNum::one(), GoldenNum::phi()])
        .into_iter()
        .map(|p| p.scale(scale))
        .collect()
}

/// Midpoints of the shortest vertex pairs.
fn edge_midpoints(pts: &[Vec3<GoldenNum>]) -> BTreeSet<Vec3<GoldenNum>> {
    let mut best: Option<GoldenNum> = None;
    let mut mids = BTreeSet::new();
    let half = GoldenNum::from_ratio(1, 2);
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let d = pts[i].sub(&pts[j]).norm_sq();
            let mid = pts[i].add(&pts[j]).scale(&half);
            match &best {
                Some(b) if d > *b => {}
                Some(b) if d == *b => {
                    mids.insert(mid);
                }
                _ => {
                    best = Some(d);
                    mids = BTreeSet::from([mid]);
                }
            }
        }
    }
    mids
}

fn max_dot_pair(b: &Vec3<GoldenNum>, among: &[(usize, Vec3<GoldenNum>)]) -> Vec<(usize, Vec3<GoldenNum>)> {
    let best = among.iter().map(|(_, p)| p.dot(b)).max().expect("nonempty");
    among.iter().filter(|(_, p)| p.dot(b) == best).cloned().collect()
}

/// Builds the M120p from a dodecahedron at circumradius φ²√3.
///
/// Steps: the dodecahedron (A) and its five inscribed cubes; the five
/// octahedra dual to the cubes, placed so their edge midpoints meet the
/// cubes' edge midpoints (B); the dual icosahedron placed so its edge
/// midpoints meet the dodecahedron's (C); the rhombic triacontahedron on
/// A ∪ C; and finally each B vertex fanned over the rhombus it caps.
pub fn m120p_construct() -> Result<M120pConstruction, ConstructionError> {
    let name = "M120p";
    let mut steps = Vec::new();
    let phi2 = g(1, 1);
    let dodeca = dodecahedron(&phi2);
    steps.push(("dodecahedron vertices (A)", dodeca.len()));
    let dodeca_set: BTreeSet<&Vec3<GoldenNum>> = dodeca.iter().collect();

    // Each square face of an inscribed cube gives an octahedron vertex
    // at twice its centre.
    let cube_edge = g(4, 0) * &phi2.square();
    let mut b_set = BTreeSet::new();
    for u in &dodeca {
        let nbrs: Vec<&Vec3<GoldenNum>> = dodeca.iter().filter(|v| v.sub(u).norm_sq() == cube_edge).collect();
        for (i, v) in nbrs.iter().enumerate() {
            for w in &nbrs[i + 1..] {
                let fourth = v.add(w).sub(u);
                if v.sub(u).dot(&w.sub(u)).is_zero() && dodeca_set.contains(&fourth) {
                    b_set.insert(v.add(w));
                }
            }
        }
    }
    let b_pts: Vec<Vec3<GoldenNum>> = b_set.into_iter().collect();
    steps.push(("octahedron vertices from the five cubes (B)", b_pts.len()));
    if b_pts.len() != 30 {
        return Err(integrity(name, format!("{} octahedron vertices, expected 30", b_pts.len())));
    }

    let mut octahedra_pts: Vec<Vec<Vec3<GoldenNum>>> = Vec::new();
    for b in &b_pts {
        let mut octa: Vec<Vec3<GoldenNum>> = b_pts.iter().filter(|p| p.dot(b).is_zero()).cloned().collect();
        octa.push(b.clone());
        octa.push(b.neg());
        octa.sort();
        if octa.len() != 6 {
            return Err(integrity(name, format!("octahedron through {b} has {} vertices", octa.len())));
        }
        if !octahedra_pts.contains(&octa) {
            octahedra_pts.push(octa);
        }
    }
    steps.push(("octahedra", octahedra_pts.len()));

    let half = GoldenNum::from_ratio(1, 2);
    let mut cubes_pts: Vec<Vec<Vec3<GoldenNum>>> = Vec::new();
    for octa in &octahedra_pts {
        let axes: Vec<&Vec3<GoldenNum>> = octa.iter().filter(|p| *p > &p.neg()).collect();
        let mut cube = Vec::new();
        for mask in 0..8u32 {
            let mut c = Vec3::zero();
            for (k, a) in axes.iter().enumerate() {
                c = if mask & (1 << k) != 0 { c.sub(a) } else { c.add(a) };
            }
            let c = c.scale(&half);
            if !dodeca_set.contains(&c) {
                return Err(integrity(name, format!("cube vertex {c} is not a dodecahedron vertex")));
            }
            cube.push(c);
        }
        cube.sort();
        cubes_pts.push(cube);
    }
    steps.push(("cubes", cubes_pts.len()));
    if dodeca.iter().any(|d| cubes_pts.iter().filter(|c| c.contains(d)).count() != 2) {
        return Err(integrity(name, "the five cubes do not cover each dodecahedron vertex twice"));
    }

    let icosa = icosahedron(&phi2);
    steps.push(("icosahedron vertices (C)", icosa.len()));
    if edge_midpoints(&icosa) != edge_midpoints(&dodeca) {
        return Err(integrity(name, "icosahedron and dodecahedron edge midpoints differ"));
    }

    let mut vertices = dodeca.clone();
    vertices.extend(icosa.iter().cloned());
    vertices.extend(b_pts.iter().cloned());
    let mut types = vec![Some(VertexType::A); 20];
    types.extend(vec![Some(VertexType::C); 12]);
    types.extend(vec![Some(VertexType::B); 30]);

    let a_idx: Vec<(usize, Vec3<GoldenNum>)> = (0..20).map(|i| (i, vertices[i].clone())).collect();
    let c_idx: Vec<(usize, Vec3<GoldenNum>)> = (20..32).map(|i| (i, vertices[i].clone())).collect();
    let mut rhombi = Vec::new();
    let mut faces = Vec::new();
    let origin = Vec3::zero();
    for bi in 32..62 {
        let b = &vertices[bi];
        let mut ring = max_dot_pair(b, &a_idx);
        ring.extend(max_dot_pair(b, &c_idx));
        if ring.len() != 4 {
            return Err(integrity(name, format!("B vertex {b} caps {} vertices", ring.len())));
        }
        if orient3d(&ring[0].1, &ring[1].1, &ring[2].1, &ring[3].1) != Sign::Zero {
            return Err(integrity(name, format!("rhombus under {b} is not planar")));
        }
        sort_around_axis(b, &mut ring);
        let ids = [ring[0].0, ring[1].0, ring[2].0, ring[3].0];
        let ids = if types[ids[0]] == Some(VertexType::A) { ids } else { [ids[1], ids[2], ids[3], ids[0]] };
        if types[ids[1]] != Some(VertexType::C) || types[ids[2]] != Some(VertexType::A) {
            return Err(integrity(name, format!("rhombus under {b} does not alternate A and C")));
        }
        rhombi.push((bi, ids));
        for k in 0..4 {
            let mut f = [bi, ids[k], ids[(k + 1) % 4]];
            match orient3d(&vertices[f[0]], &vertices[f[1]], &vertices[f[2]], &origin) {
                Sign::Negative => {}
                Sign::Positive => f.swap(1, 2),
                Sign::Zero => return Err(integrity(name, format!("face {f:?} is coplanar with the centre"))),
            }
            faces.push(f);
        }
    }
    steps.push(("rhombic triacontahedron faces", rhombi.len()));
    steps.push(("triangular faces", faces.len()));

    let find = |p: &Vec3<GoldenNum>| vertices.iter().position(|v| v == p).expect("constructed vertex");
    let octahedra = octahedra_pts
        .iter()
        .map(|o| std::array::from_fn(|k| find(&o[k])))
        .collect();
    let cubes = cubes_pts
        .iter()
        .map(|c| std::array::from_fn(|k| find(&c[k])))
        .collect();

    let polyhedron = Polyhedron::new(name, vertices, types, faces);
    let report = mesh_integrity(&polyhedron);
    if (report.vertices, report.edges, report.faces) != (62, 180, 120) || !report.is_closed_sphere() {
        return Err(integrity(name, format!("mesh check failed: {report:?}")));
    }
    let bad = polyhedron.trinity_violations();
    if !bad.is_empty() {
        return Err(integrity(name, format!("faces without one vertex of each type: {bad:?}")));
    }
    Ok(M120pConstruction {
        polyhedron,
        steps,
        octahedra,
        cubes,
        rhombi,
    })
}
