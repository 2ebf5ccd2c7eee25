//! The drop-w lift of the M120p onto the unit 3-sphere and the
//! stereographic shadow of 2I from the pole `(−1, 0, 0, 0)`.
//!
//! Radii involving nested radicals are compared through their squares,
//! which stay inside Q(√5).

mod faces;
mod lift;
mod shells;

use thiserror::Error;

pub use faces::{face_orbit_bijection, ih_matrices, FaceOrbitMap, Mat3};
pub use lift::{lift, scale_to_unit, type_from_w, unit_scale, verify_62_match, LiftedVertex, MatchReport, RemainderCensus};
pub use shells::{
    angular_alignment_check, cell24_shell_check, closed_form_radius_sq, inner_icosahedron_check,
    inner_icosahedron_mesh, phi_ladder_check, projected_points, radius_sq_of_w, reciprocal_pair_check, shell_decompose, stereo_project,
    AlignmentReport, Cell24Report, InnerIcosahedronReport, LadderStep, PhiLadder, Projection,
    ReciprocalReport, Shell, ShellLabel,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShadowError {
    #[error("vertex {vertex}: scaled radius exceeds 1")]
    OutsideUnitBall { vertex: usize },
    #[error("vertex {vertex}: 1 − r'² = {value} has no square root in Q(√5)")]
    NoRootInField { vertex: usize, value: String },
    #[error("vertex {vertex}: lifted quaternion {quaternion} is not in 2I")]
    NoMatch { vertex: usize, quaternion: String },
    #[error("vertex {vertex}: w = {w} is not a vertex latitude")]
    UnknownLatitude { vertex: usize, w: String },
    #[error("vertex {vertex}: lifted type {lifted} differs from constructed type {built}")]
    TypeMismatch { vertex: usize, lifted: String, built: String },
    #[error("element {element}: projection is not along any M120p vertex direction")]
    Misaligned { element: usize },
    #[error("shell at w = {w} mixes vertex types")]
    MixedShell { w: String },
    #[error("face orbit: {0}")]
    Orbit(String),
}
