//! The clips operation `[H1] ∘ [H2] = {[H1 ∩ g H2 g⁻¹] : g ∈ O(3)}`.

pub mod engine;
pub mod method;
pub mod oracle;
pub mod reduce;
pub mod tables;
pub mod verify;

pub use engine::ClipsEngine;
pub use method::{ClipsMethod, ClipsQuery, MethodChoice, MethodRegistry, QueryOutcome};
pub use oracle::{clips_concrete, clips_infinite, clips_oracle, ConjugatorStrategy, SweepConfig};
pub use reduce::{clips_reduce, Reduction};
pub use tables::{
    clips_type2_type3, ell_octa, gamma, published_branches, table_cell, zee, Branch, CellValue, ColumnFamily, Condition,
    Erratum, RowFamily, Term, ERRATA,
};
pub use verify::{cell_grid, check_cell, check_cells, default_grid, CellReport, CellCoord};

use thiserror::Error;

use crate::class::{ClassLabel, LabelError};
use crate::concrete::GroupError;

#[derive(Debug, Error)]
pub enum ClipsError {
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("expected {expected}, got {lhs} and {rhs}")]
    WrongKinds { expected: &'static str, lhs: ClassLabel, rhs: ClassLabel },
    #[error("table evaluation failed: {0}")]
    Table(String),
    #[error("unknown clips method '{0}'")]
    UnknownMethod(String),
}
