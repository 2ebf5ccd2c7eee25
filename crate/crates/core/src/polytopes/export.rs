use std::fmt::Write;

use serde::Serialize;

use super::mesh::Polyhedron;
use super::VertexType;
use crate::goldfield::OrderedField;

/// Wavefront OBJ with 12 significant digits and 1-based face indices.
pub fn to_obj<F: OrderedField>(p: &Polyhedron<F>) -> String {
    let mut s = format!("# {}\n", p.name());
    for v in p.vertices() {
        let [x, y, z] = v.to_f64();
        writeln!(s, "v {} {} {}", sig12(x), sig12(y), sig12(z)).unwrap();
    }
    for f in p.faces() {
        writeln!(s, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1).unwrap();
    }
    s
}

/// ASCII PLY with a per-vertex type property (0 = untyped, 1 = A, 2 = B, 3 = C).
pub fn to_ply<F: OrderedField>(p: &Polyhedron<F>) -> String {
    let mut s = String::from("ply\nformat ascii 1.0\n");
    writeln!(s, "comment {}", p.name()).unwrap();
    writeln!(s, "element vertex {}", p.vertices().len()).unwrap();
    s.push_str("property double x\nproperty double y\nproperty double z\nproperty uchar type\n");
    writeln!(s, "element face {}", p.faces().len()).unwrap();
    s.push_str("property list uchar int vertex_indices\nend_header\n");
    for (v, t) in p.vertices().iter().zip(p.types()) {
        let [x, y, z] = v.to_f64();
        let code = match t {
            None => 0,
            Some(VertexType::A) => 1,
            Some(VertexType::B) => 2,
            Some(VertexType::C) => 3,
        };
        writeln!(s, "{} {} {} {}", sig12(x), sig12(y), sig12(z), code).unwrap();
    }
    for f in p.faces() {
        writeln!(s, "3 {} {} {}", f[0], f[1], f[2]).unwrap();
    }
    s
}

#[derive(Serialize)]
struct JsonVertex {
    index: usize,
    exact: [String; 3],
    float: [f64; 3],
    #[serde(rename = "type")]
    kind: Option<VertexType>,
}

#[derive(Serialize)]
struct JsonMesh<'a> {
    name: &'a str,
    vertices: Vec<JsonVertex>,
    edges: &'a [(usize, usize)],
    faces: &'a [[usize; 3]],
}

/// JSON with exact coordinate strings, floats, type labels and topology.
pub fn to_json<F: OrderedField>(p: &Polyhedron<F>) -> String {
    let mesh = JsonMesh {
        name: p.name(),
        vertices: p
            .vertices()
            .iter()
            .zip(p.types())
            .enumerate()
            .map(|(i, (v, t))| JsonVertex {
                index: i,
                exact: [v.x.to_string(), v.y.to_string(), v.z.to_string()],
                float: v.to_f64(),
                kind: *t,
            })
            .collect(),
        edges: p.edges(),
        faces: p.faces(),
    };
    serde_json::to_string_pretty(&mesh).expect("serialisable mesh")
}

/// `r2,r2_float,count` rows of the radius census.
pub fn write_census_csv<F: OrderedField>(p: &Polyhedron<F>) -> String {
    let mut s = String::from("r2,r2_float,count\n");
    for (r2, n) in p.radius_census() {
        writeln!(s, "{},{:.4},{}", r2, r2.to_f64(), n).unwrap();
    }
    s
}

/// Shortest decimal rendering with at most 12 significant digits.
pub(crate) fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let s = format!("{:.11e}", x);
    let v: f64 = s.parse().expect("formatted float");
    let out = format!("{}", v);
    if out == "-0" {
        "0".to_string()
    } else {
        out
    }
}
