//! Character tables of the binary polyhedral groups and their McKay graphs.
//!
//! Characters are floating point; every integer they feed (dimensions,
//! adjacency entries) is rounded behind a residual bound.

mod characters;
mod classes;
mod graph;

use thiserror::Error;

pub use characters::{character_table, format_complex, round6, CharacterTable};
pub use classes::{class_algebra, ClassData};
pub use graph::{ade_classify, identify_diagram, mckay_graph, AdeLabel, Diagram, McKayGraph};

use crate::goldfield::OrderedField;
use crate::quatgroup::BinaryGroup;

/// Seed of the random class-matrix combination.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum McKayError {
    #[error("class-sum eigenvalues did not separate after {0} random combinations")]
    DegenerateEigenspace(u32),
    #[error("irrep dimension off an integer by {0}")]
    NonIntegralDimension(f64),
    #[error("McKay entry ({i}, {j}) = {value} is not a nonnegative integer")]
    NonIntegralEntry { i: usize, j: usize, value: f64 },
}

/// Class data, character table and McKay graph in one pass.
pub fn analyse<F: OrderedField>(g: &BinaryGroup<F>, seed: u64) -> Result<(ClassData, CharacterTable, McKayGraph), McKayError> {
    let data = class_algebra(g);
    let table = character_table(&data, seed)?;
    let graph = mckay_graph(&data, &table)?;
    Ok((data, table, graph))
}
