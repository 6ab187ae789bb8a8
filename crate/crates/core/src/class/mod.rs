//! Symbolic universe of conjugacy classes of closed O(3) subgroups.

mod grammar;
mod label;
mod set;

pub use grammar::{format_label, parse_label};
pub(crate) use grammar::minus_from_subscript;
pub use label::{canonical_compare, ClassLabel, Improper, Order, Rotational, TypeKind};
pub use set::ClassSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("syntax error at byte {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },
    #[error("invalid label at byte {pos}: {msg}")]
    Semantic { pos: usize, msg: String },
    #[error("{0} denotes no group")]
    Degenerate(String),
}
