//! Exact reconstruction of the Mereon polyhedra, the binary polyhedral
//! quaternion groups, and the stereographic shadow of the 600-cell.
//!
//! All geometry that decides a yes/no question is computed over exact
//! fields ([`goldfield`]); floats appear only in reports, in the McKay
//! character computation, and in the torus-knot sampler.

pub mod cliffknot;
pub mod goldfield;
pub mod vec3;
pub mod quatgroup;
pub mod polytopes;
pub mod mckay;
pub mod model;
pub mod shadow;
pub mod tables;
pub mod verify;
