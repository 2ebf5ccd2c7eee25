//! Every group and polyhedron the reports and checks need, built once.

use thiserror::Error;

use crate::goldfield::{GoldenNum, Sqrt2Num};
use crate::polytopes::{
    disdyakis_construct, m120p_construct, m144p_construct, ConstructionError, DtField, M120pConstruction,
    M144pConstruction, Polyhedron,
};
use crate::quatgroup::{build_2i, build_2o, build_2t, BinaryGroup, GroupError};

#[derive(Debug, Error)]
pub enum ModelError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone)]
pub struct Model {
    pub two_t: BinaryGroup<GoldenNum>,
    pub two_o: BinaryGroup<Sqrt2Num>,
    pub two_i: BinaryGroup<GoldenNum>,
    pub m144p: M144pConstruction,
    pub m120p: M120pConstruction,
    pub disdyakis: Polyhedron<DtField>,
}

impl Model {
    pub fn build() -> Result<Self, ModelError> {
        Ok(Model {
            two_t: build_2t()?,
            two_o: build_2o()?,
            two_i: build_2i()?,
            m144p: m144p_construct()?,
            m120p: m120p_construct()?,
            disdyakis: disdyakis_construct()?,
        })
    }

    pub fn m120p(&self) -> &Polyhedron<GoldenNum> {
        &self.m120p.polyhedron
    }
}
