//! Quaternions over exact fields and the binary polyhedral groups
//! 2T (order 24), 2O (order 48, over Q(√2)) and 2I (order 120, over Q(√5)).

mod group;
mod quaternion;

use thiserror::Error;

pub use group::{
    build_2i, build_2o, build_2t, closure, element_order, even_permutations, family_of,
    golden_family, subgroup_obstruction_2o_in_2i, BinaryGroup, ClassExport, ConjugacyClass,
    ElementExport, EmbeddingObstruction, Family, GroupExport, GroupLabel,
};
pub use quaternion::{GoldenQuaternion, Quad2Quaternion, Quaternion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("{label} should have {expected} elements, found {found}")]
    WrongOrder {
        label: GroupLabel,
        expected: usize,
        found: usize,
    },
    #[error("element {0} does not have unit norm")]
    NotUnit(String),
    #[error("-q is missing for q = {0}")]
    NotSymmetric(String),
    #[error("product leaves the set: {0}")]
    NotClosed(String),
    #[error("closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("no power up to {0} is the identity")]
    OrderExceeded(usize),
    #[error("unknown group label {0:?}")]
    UnknownLabel(String),
}
