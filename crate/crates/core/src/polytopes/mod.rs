//! The Mereon polyhedra and the exact tools used to check them: mesh
//! integrity, shell and edge censuses, and an exact convex hull.

mod disdyakis;
mod export;
mod hull;
mod m120p;
mod m144p;
mod mesh;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use disdyakis::{disdyakis_construct, DtField};
pub use export::{to_json, to_obj, to_ply, write_census_csv};
pub use hull::{convex_hull, HullError, HullResult, PointClass};
pub use m120p::{m120p_construct, M120pConstruction};
pub use m144p::{matches_reference_vertices, reference_vertices, m144p_construct, M144pConstruction, REFERENCE_VERTICES};
pub use mesh::{mesh_integrity, radius_ratio_report, sort_around_axis, MeshReport, Polyhedron, RadiusRatios};

/// Vertex type of the Mereon boundary: A on 3-fold axes, B on 2-fold axes,
/// C on 5-fold axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexType {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Role {
    Input,
    Thruput,
    Output,
}

impl VertexType {
    pub const ALL: [VertexType; 3] = [VertexType::A, VertexType::B, VertexType::C];

    /// Rotation order of the symmetry axis through the vertex.
    pub fn fold(self) -> u32 {
        match self {
            VertexType::A => 3,
            VertexType::B => 2,
            VertexType::C => 5,
        }
    }

    pub fn role(self) -> Role {
        match self {
            VertexType::A => Role::Input,
            VertexType::B => Role::Thruput,
            VertexType::C => Role::Output,
        }
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexType::A => "A",
            VertexType::B => "B",
            VertexType::C => "C",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{name}: {detail}")]
    Integrity { name: &'static str, detail: String },
}

pub(crate) fn integrity(name: &'static str, detail: impl Into<String>) -> ConstructionError {
    ConstructionError::Integrity {
        name,
        detail: detail.into(),
    }
}
