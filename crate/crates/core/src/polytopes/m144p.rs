use std::collections::{BTreeSet, HashMap};

use super::mesh::{mesh_integrity, sort_around_axis, Polyhedron};
use super::{integrity, ConstructionError};
use crate::goldfield::{Rational, Sign};
use crate::vec3::{orient3d, Vec3};

/// The 74 integer vertices of the M144p, grouped by shell
/// (r² = 16, 12, 8, 14) and sorted within each shell.
pub const REFERENCE_VERTICES: [[i64; 3]; 74] = [
    [-4, 0, 0], [0, -4, 0], [0, 0, -4], [0, 0, 4],
    [0, 4, 0], [4, 0, 0], [-2, -2, -2], [-2, -2, 2],
    [-2, 2, -2], [-2, 2, 2], [2, -2, -2], [2, -2, 2],
    [2, 2, -2], [2, 2, 2], [-2, -2, 0], [-2, 0, -2],
    [-2, 0, 2], [-2, 2, 0], [0, -2, -2], [0, -2, 2],
    [0, 2, -2], [0, 2, 2], [2, -2, 0], [2, 0, -2],
    [2, 0, 2], [2, 2, 0], [-3, -2, -1], [-3, -2, 1],
    [-3, -1, -2], [-3, -1, 2], [-3, 1, -2], [-3, 1, 2],
    [-3, 2, -1], [-3, 2, 1], [-2, -3, -1], [-2, -3, 1],
    [-2, -1, -3], [-2, -1, 3], [-2, 1, -3], [-2, 1, 3],
    [-2, 3, -1], [-2, 3, 1], [-1, -3, -2], [-1, -3, 2],
    [-1, -2, -3], [-1, -2, 3], [-1, 2, -3], [-1, 2, 3],
    [-1, 3, -2], [-1, 3, 2], [1, -3, -2], [1, -3, 2],
    [1, -2, -3], [1, -2, 3], [1, 2, -3], [1, 2, 3],
    [1, 3, -2], [1, 3, 2], [2, -3, -1], [2, -3, 1],
    [2, -1, -3], [2, -1, 3], [2, 1, -3], [2, 1, 3],
    [2, 3, -1], [2, 3, 1], [3, -2, -1], [3, -2, 1],
    [3, -1, -2], [3, -1, 2], [3, 1, -2], [3, 1, 2],
    [3, 2, -1], [3, 2, 1],
];

pub fn reference_vertices() -> Vec<Vec3<Rational>> {
    REFERENCE_VERTICES.iter().map(|&[x, y, z]| Vec3::from_ints(x, y, z)).collect()
}

/// Exact set equality between a polyhedron's vertices and [`REFERENCE_VERTICES`].
pub fn matches_reference_vertices(p: &Polyhedron<Rational>) -> bool {
    let ours: BTreeSet<_> = p.vertices().iter().cloned().collect();
    let table: BTreeSet<_> = reference_vertices().into_iter().collect();
    ours.len() == p.vertices().len() && ours == table
}

#[derive(Debug, Clone)]
pub struct M144pConstruction {
    pub polyhedron: Polyhedron<Rational>,
    /// Surviving node count after each construction step.
    pub steps: Vec<(&'static str, usize)>,
}

fn l1(p: &[i64; 3]) -> i64 {
    p.iter().map(|c| c.abs()).sum()
}

/// Integer points with `|x| + |y| + |z| = n`: the surface nodes of an
/// `n`-frequency octahedron in the FCC lattice (`x + y + z` even).
fn octahedron_surface(n: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for x in -n..=n {
        for y in -n..=n {
            for z in -n..=n {
                let p = [x, y, z];
                if l1(&p) == n && (x + y + z).rem_euclid(2) == 0 {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Builds the M144p from a 6-frequency FCC octahedron.
///
/// Steps: take the 6- and 4-frequency octahedral shells; drop the nodes on
/// the 6-frequency edges; drop the corners of each remaining face triangle,
/// leaving a hexagon and its centre per face; keep the corners and mid-edge
/// nodes of the 4-frequency octahedron; on each face, join the centre to its
/// hexagon and to the six exposed 4-frequency nodes, and close each hexagon
/// node against the two exposed nodes beside it. The result must match
/// [`REFERENCE_VERTICES`] exactly and be a closed 74/216/144 sphere.
pub fn m144p_construct() -> Result<M144pConstruction, ConstructionError> {
    let name = "M144p";
    let mut steps = Vec::new();
    let outer = octahedron_surface(6);
    let inner = octahedron_surface(4);
    steps.push(("6-frequency octahedron surface nodes", outer.len()));
    steps.push(("4-frequency octahedron surface nodes", inner.len()));

    let off_edges: Vec<[i64; 3]> = outer.into_iter().filter(|p| p.iter().all(|&c| c != 0)).collect();
    steps.push(("after removing 6-frequency edge nodes", off_edges.len()));

    let hexagons: Vec<[i64; 3]> = off_edges.into_iter().filter(|p| p.iter().all(|c| c.abs() != 4)).collect();
    steps.push(("after removing face-triangle corners", hexagons.len()));

    let exposed: Vec<[i64; 3]> = inner
        .into_iter()
        .filter(|p| {
            let nz: Vec<i64> = p.iter().copied().filter(|&c| c != 0).collect();
            nz.len() == 1 || (nz.len() == 2 && nz.iter().all(|c| c.abs() == 2))
        })
        .collect();

    let mut nodes: Vec<[i64; 3]> = hexagons.iter().chain(&exposed).copied().collect();
    nodes.sort_unstable();
    steps.push(("after adding exposed 4-frequency nodes", nodes.len()));
    let index: HashMap<[i64; 3], usize> = nodes.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let pos = |p: &[i64; 3]| Vec3::<Rational>::from_ints(p[0], p[1], p[2]);

    let mut faces = Vec::new();
    for s in octants() {
        let centre = [2 * s[0], 2 * s[1], 2 * s[2]];
        let in_octant = |p: &[i64; 3]| (0..3).all(|k| p[k] * s[k] >= 0);
        let mut ring: Vec<(usize, Vec3<Rational>)> = hexagons
            .iter()
            .chain(&exposed)
            .filter(|p| in_octant(p) && **p != centre)
            .map(|p| (index[p], pos(p)))
            .collect();
        if ring.len() != 12 {
            return Err(integrity(name, format!("face {centre:?} has {} ring nodes", ring.len())));
        }
        sort_around_axis(&pos(&centre), &mut ring);
        let on_hexagon = |i: usize| l1(&nodes[i]) == 6;
        let start = (0..12).find(|&k| !on_hexagon(ring[k].0)).unwrap_or(0);
        ring.rotate_left(start);
        let ids: Vec<usize> = ring.iter().map(|(i, _)| *i).collect();
        if (0..12).any(|k| on_hexagon(ids[k]) != (k % 2 == 1)) {
            return Err(integrity(name, format!("face {centre:?}: hexagon and exposed nodes do not alternate")));
        }
        let c = index[&centre];
        for k in 0..12 {
            faces.push([c, ids[k], ids[(k + 1) % 12]]);
            if k % 2 == 1 {
                faces.push([ids[k], ids[k - 1], ids[(k + 1) % 12]]);
            }
        }
    }
    steps.push(("triangular faces", faces.len()));

    let vertices: Vec<Vec3<Rational>> = nodes.iter().map(pos).collect();
    let origin = Vec3::zero();
    for f in faces.iter_mut() {
        match orient3d(&vertices[f[0]], &vertices[f[1]], &vertices[f[2]], &origin) {
            Sign::Negative => {}
            Sign::Positive => f.swap(1, 2),
            Sign::Zero => return Err(integrity(name, format!("face {f:?} is coplanar with the centre"))),
        }
    }

    // Renumber to the table order.
    let table = reference_vertices();
    let table_index: HashMap<&Vec3<Rational>, usize> = table.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut remap = Vec::with_capacity(vertices.len());
    for v in &vertices {
        match table_index.get(v) {
            Some(&i) => remap.push(i),
            None => return Err(integrity(name, format!("vertex {v} is not in the reference table"))),
        }
    }
    if vertices.len() != table.len() {
        return Err(integrity(name, format!("{} vertices, expected {}", vertices.len(), table.len())));
    }
    let faces: Vec<[usize; 3]> = faces.iter().map(|f| f.map(|i| remap[i])).collect();
    let polyhedron = Polyhedron::untyped(name, table, faces);

    let report = mesh_integrity(&polyhedron);
    if (report.vertices, report.edges, report.faces) != (74, 216, 144) || !report.is_closed_sphere() {
        return Err(integrity(name, format!("mesh check failed: {report:?}")));
    }
    Ok(M144pConstruction { polyhedron, steps })
}

fn octants() -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for x in [-1, 1] {
        for y in [-1, 1] {
            for z in [-1, 1] {
                out.push([x, y, z]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_counts() {
        let m = m144p_construct().unwrap();
        let counts: Vec<usize> = m.steps.iter().map(|s| s.1).collect();
        assert_eq!(counts, vec![146, 66, 80, 56, 74, 144]);
    }

    #[test]
    fn table_is_74_distinct_points() {
        let set: BTreeSet<_> = REFERENCE_VERTICES.iter().collect();
        assert_eq!(set.len(), 74);
    }
}
