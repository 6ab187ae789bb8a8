//! Membership models for the infinite closed subgroups.
//!
//! Every infinite proper subgroup of O(3) other than SO(3) preserves a line
//! `u` (its primary axis) and is a union of some of four components:
//!
//! | component | elements                      | kinds                    |
//! |-----------|-------------------------------|--------------------------|
//! | rotations | `R(u, θ)`                     | all                      |
//! | inverted  | `−R(u, θ)`                    | SO(2)+Z2c, O(2)+Z2c      |
//! | flips     | `R(v, π)`, `v ⊥ u`            | O(2), O(2)+Z2c           |
//! | mirrors   | `−R(v, π)`, `v ⊥ u`           | O(2)+Z2c, O(2)^-         |

use crate::class::{ClassLabel, Improper, Rotational};

use super::group::ElementSet;
use super::materialize::reference_group;
use super::rotation::{e3, rotation_about, same_line, RotationElement, Vec3};
use super::GroupError;

/// Angular tolerance for recognizing half-turns and right angles.
const ANGLE_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxialKind {
    SO2,
    O2,
    SO2Centered,
    O2Centered,
    O2Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Components {
    inverted: bool,
    flips: bool,
    mirrors: bool,
}

impl AxialKind {
    pub const ALL: [AxialKind; 5] =
        [AxialKind::SO2, AxialKind::O2, AxialKind::SO2Centered, AxialKind::O2Centered, AxialKind::O2Minus];

    fn components(self) -> Components {
        let (inverted, flips, mirrors) = match self {
            AxialKind::SO2 => (false, false, false),
            AxialKind::O2 => (false, true, false),
            AxialKind::SO2Centered => (true, false, false),
            AxialKind::O2Centered => (true, true, true),
            AxialKind::O2Minus => (false, false, true),
        };
        Components { inverted, flips, mirrors }
    }

    fn from_components(c: Components) -> AxialKind {
        match (c.inverted, c.flips, c.mirrors) {
            (false, false, false) => AxialKind::SO2,
            (false, true, false) => AxialKind::O2,
            (true, false, false) => AxialKind::SO2Centered,
            (true, true, true) => AxialKind::O2Centered,
            (false, false, true) => AxialKind::O2Minus,
            other => unreachable!("component set {other:?} is not closed"),
        }
    }

    pub fn label(self) -> ClassLabel {
        match self {
            AxialKind::SO2 => ClassLabel::TypeI(Rotational::SO2),
            AxialKind::O2 => ClassLabel::TypeI(Rotational::O2),
            AxialKind::SO2Centered => ClassLabel::TypeII(Rotational::SO2),
            AxialKind::O2Centered => ClassLabel::TypeII(Rotational::O2),
            AxialKind::O2Minus => ClassLabel::TypeIII(Improper::O2Minus),
        }
    }

    pub fn from_label(label: ClassLabel) -> Option<AxialKind> {
        Some(match label {
            ClassLabel::TypeI(Rotational::SO2) => AxialKind::SO2,
            ClassLabel::TypeI(Rotational::O2) => AxialKind::O2,
            ClassLabel::TypeII(Rotational::SO2) => AxialKind::SO2Centered,
            ClassLabel::TypeII(Rotational::O2) => AxialKind::O2Centered,
            ClassLabel::TypeIII(Improper::O2Minus) => AxialKind::O2Minus,
            _ => return None,
        })
    }

    /// The kind whose components are common to both.
    pub fn meet(self, other: AxialKind) -> AxialKind {
        let (a, b) = (self.components(), other.components());
        Self::from_components(Components {
            inverted: a.inverted && b.inverted,
            flips: a.flips && b.flips,
            mirrors: a.mirrors && b.mirrors,
        })
    }
}

/// An infinite axial group with a given primary axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxialGroup {
    pub kind: AxialKind,
    pub axis: Vec3,
}

impl AxialGroup {
    pub fn new(kind: AxialKind, axis: Vec3) -> Self {
        Self { kind, axis: axis.normalize() }
    }

    pub fn contains(&self, x: &RotationElement) -> bool {
        if x.is_identity() {
            return true;
        }
        let c = self.kind.components();
        let proper = x.proper_part();
        if proper.is_identity() {
            // x = -Id
            return c.inverted;
        }
        let axis = proper.axis().expect("not the identity");
        let on_axis = same_line(&axis, &self.axis);
        let perpendicular_half_turn =
            (proper.angle() - std::f64::consts::PI).abs() < ANGLE_TOL && axis.dot(&self.axis).abs() < ANGLE_TOL;
        if x.is_proper() {
            on_axis || (c.flips && perpendicular_half_turn)
        } else {
            (c.inverted && on_axis) || (c.mirrors && perpendicular_half_turn)
        }
    }

    pub fn conjugated_by(&self, g: &RotationElement) -> AxialGroup {
        AxialGroup { kind: self.kind, axis: g.apply(&self.axis) }
    }

    /// The elements of `set` lying in this group (a subgroup of `set`).
    pub fn intersect_finite(&self, set: &ElementSet) -> ElementSet {
        set.filter(|x| self.contains(x))
    }

    /// Intersection with another axial group: axial when the axes agree,
    /// otherwise a finite group drawn from `±Id` and the `±` half-turns about
    /// the two axes and their common perpendicular.
    pub fn intersect(&self, other: &AxialGroup) -> AxialMeet {
        if same_line(&self.axis, &other.axis) {
            return AxialMeet::Axial(AxialGroup::new(self.kind.meet(other.kind), self.axis));
        }
        let common = self.axis.cross(&other.axis).normalize();
        let mut candidates = vec![RotationElement::identity(), -RotationElement::identity()];
        for line in [self.axis, other.axis, common] {
            let half = rotation_about(&line, std::f64::consts::PI);
            candidates.push(half);
            candidates.push(-half);
        }
        let elements = candidates
            .into_iter()
            .filter(|x| self.contains(x) && other.contains(x))
            .collect();
        AxialMeet::Finite(ElementSet::from_elements(elements))
    }
}

#[derive(Debug, Clone)]
pub enum AxialMeet {
    Axial(AxialGroup),
    Finite(ElementSet),
}

/// A concrete representative of any closed subgroup class.
#[derive(Debug, Clone)]
pub enum SubgroupModel {
    Finite(ElementSet),
    Axial(AxialGroup),
    /// SO(3) (`centered = false`) or O(3).
    Full { centered: bool },
}

impl SubgroupModel {
    /// The representative in reference orientation (axial groups about `e3`).
    pub fn reference(label: ClassLabel) -> Result<SubgroupModel, GroupError> {
        let label = label.canonicalize()?;
        if let Some(kind) = AxialKind::from_label(label) {
            return Ok(SubgroupModel::Axial(AxialGroup::new(kind, e3())));
        }
        match label {
            ClassLabel::TypeI(Rotational::SO3) => Ok(SubgroupModel::Full { centered: false }),
            ClassLabel::TypeII(Rotational::SO3) => Ok(SubgroupModel::Full { centered: true }),
            finite => Ok(SubgroupModel::Finite(reference_group(finite)?)),
        }
    }

    pub fn contains(&self, x: &RotationElement) -> bool {
        match self {
            SubgroupModel::Finite(set) => set.contains(x),
            SubgroupModel::Axial(group) => group.contains(x),
            SubgroupModel::Full { centered } => *centered || x.is_proper(),
        }
    }

    pub fn conjugated_by(&self, g: &RotationElement) -> SubgroupModel {
        match self {
            SubgroupModel::Finite(set) => SubgroupModel::Finite(set.conjugated_by(g)),
            SubgroupModel::Axial(group) => SubgroupModel::Axial(group.conjugated_by(g)),
            full => full.clone(),
        }
    }
}
