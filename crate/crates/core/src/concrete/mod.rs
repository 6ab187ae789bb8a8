//! Explicit matrix realizations of the finite closed subgroups of O(3),
//! their intersections, recognition, and membership models for the
//! infinite ones.

pub mod axes;
pub mod axial;
pub mod group;
pub mod materialize;
pub mod recognize;
pub mod rotation;

pub use axes::{axis_catalog, AxisCatalog, TaggedAxis};
pub use axial::{AxialGroup, AxialKind, SubgroupModel};
pub use group::{close_group, AxisLine, ElementSet, ORDER_CAP};
pub use materialize::{golden_ratio, materialize, reference_group, rotation_generators, twist_representative};
pub use recognize::{recognize, recognize_so3};
pub use rotation::{random_rotation, rodrigues, seeded_rotation, RotationElement, Vec3, EPS_EQ};

use thiserror::Error;

use crate::class::{ClassLabel, LabelError};

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("matrix is not orthogonal (defect {0:e})")]
    NotOrthogonal(f64),
    #[error("rotation axis is not a unit vector (norm {0})")]
    NonUnitAxis(f64),
    #[error("group closure exceeded {0} elements")]
    OrderCapExceeded(usize),
    #[error("{0} is an infinite group; it has no element list (clips involving it are computed from axial membership rules)")]
    Infinite(ClassLabel),
    #[error("orientation must be a proper rotation")]
    ImproperOrientation,
    #[error("cannot classify group: {0}")]
    Unclassifiable(String),
    #[error(transparent)]
    Label(#[from] LabelError),
}
