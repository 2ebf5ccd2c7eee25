use super::m120p::m120p_construct;
use super::mesh::Polyhedron;
use super::{ConstructionError, VertexType};
use crate::goldfield::{ContainsGolden, GoldenNum, OrderedField, QuadExt, Root, RootPhiPlus2};
use crate::vec3::Vec3;

/// Q(√5, √3, √(φ+2)): coordinates of the Disdyakis vertices are exact here.
pub type DtField = QuadExt<QuadExt<GoldenNum, Root<3>>, RootPhiPlus2>;

fn lift(g: GoldenNum) -> DtField {
    DtField::from_golden(g)
}

fn sqrt3() -> DtField {
    DtField::base(QuadExt::root())
}

fn sqrt_phi_plus_2() -> DtField {
    DtField::root()
}

/// The Disdyakis triacontahedron comparison solid: the 62 M120p vertex
/// directions placed at radii `√3` (A, 3-fold), `√(1 + φ⁴)` (C, 5-fold) and
/// `φ√(1 + φ²)` (B, 2-fold), with the M120p face structure.
pub fn disdyakis_construct() -> Result<Polyhedron<DtField>, ConstructionError> {
    let m = m120p_construct()?.polyhedron;
    let phi = GoldenNum::phi();
    let phi_inv = GoldenNum::phi_inv();
    let phi_plus_2 = GoldenNum::from_ints(2, 1);
    // M120p radii: A φ²√3, C φ²√(φ+2), B 2φ²; note 1 + φ⁴ = 3φ² and 1 + φ² = φ + 2.
    let a_factor = lift(phi_inv.square());
    let c_factor = sqrt3() * &sqrt_phi_plus_2() * &lift((phi.clone() * &phi_plus_2).inverse().expect("nonzero"));
    let b_factor = sqrt_phi_plus_2() * &lift((GoldenNum::from_i64(2) * &phi).inverse().expect("nonzero"));
    let vertices: Vec<Vec3<DtField>> = m
        .vertices()
        .iter()
        .zip(m.types())
        .map(|(v, t)| {
            let factor = match t.expect("typed vertex") {
                VertexType::A => &a_factor,
                VertexType::C => &c_factor,
                VertexType::B => &b_factor,
            };
            v.map(|c| lift(c.clone())).scale(factor)
        })
        .collect();
    Ok(Polyhedron::new(
        "disdyakis",
        vertices,
        m.types().to_vec(),
        m.faces().to_vec(),
    ))
}
