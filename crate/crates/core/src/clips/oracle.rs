//! Direct evaluation of `{[H1 ∩ g H2 g⁻¹] : g ∈ SO(3)}` on explicit groups.
//!
//! Finite pairs are intersected for an enumerated family of conjugators and
//! each intersection is recognized. Two strategies are available:
//!
//! * [`ConjugatorStrategy::Alignment`] (default) enumerates every rotation
//!   that maps a pair of non-parallel element lines of `H2` onto a pair of
//!   element lines of `H1` with the same angle, plus one generic twist for
//!   every single-line alignment, plus generic rotations. If the
//!   intersection has two non-parallel element lines its conjugator is one
//!   of the two-line maps; if all its non-central elements share one line,
//!   the generic twist about that line produces the same intersection; and
//!   `{Id}`, `{±Id}` arise from generic rotations. Orbit representatives are
//!   used for the first line on each side, since `g ↦ h1 g h2` only
//!   conjugates the intersection.
//! * [`ConjugatorStrategy::AngularGrid`] aligns one catalog axis (or a
//!   generic direction) of each group and sweeps the twist about it over
//!   the angles `kπ/N`, `N = 2·lcm(parameters, 24)`.
//!
//! Infinite groups are handled through their membership models: the
//! intersection of a finite group with an axial group depends only on which
//! element lines coincide with, or are perpendicular to, the axial
//! direction, and two axial groups meet according to the relative position
//! of their axes (equal, perpendicular or generic).

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::f64::consts::PI;
use std::hash::{Hash, Hasher};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::class::{ClassLabel, ClassSet, Improper, Rotational};
use crate::concrete::axes::axis_catalog;
use crate::concrete::axial::{AxialGroup, AxialKind, AxialMeet};
use crate::concrete::group::{AxisLine, ElementSet};
use crate::concrete::materialize::reference_group;
use crate::concrete::recognize::recognize;
use crate::concrete::rotation::{
    align, e1, e3, frame_map, orthogonal_unit, random_rotation, rodrigues, same_line, RotationElement, Vec3,
};

use super::ClipsError;

/// Tolerance for comparing cosines of angles between element lines.
const COS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ConjugatorStrategy {
    #[default]
    Alignment,
    AngularGrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SweepConfig {
    /// Generic rotations added to every finite sweep.
    pub random_samples: usize,
    /// Base seed; each pair derives its own stream from it.
    pub seed: u64,
    pub strategy: ConjugatorStrategy,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { random_samples: 64, seed: 0x0C11_95E5, strategy: ConjugatorStrategy::Alignment }
    }
}

impl SweepConfig {
    fn rng_for(&self, c1: ClassLabel, c2: ClassLabel) -> ChaCha8Rng {
        let mut hasher = DefaultHasher::new();
        (self.seed, c1.to_string(), c2.to_string()).hash(&mut hasher);
        ChaCha8Rng::seed_from_u64(hasher.finish())
    }
}

/// A random unit vector.
fn random_direction(rng: &mut ChaCha8Rng) -> Vec3 {
    random_rotation(rng).apply(&e3())
}

/// A random unit vector orthogonal to `v`.
fn random_orthogonal(v: &Vec3, rng: &mut ChaCha8Rng) -> Vec3 {
    let p = orthogonal_unit(v);
    let q = v.normalize().cross(&p);
    let angle = rng.random_range(0.0..2.0 * PI);
    p * angle.cos() + q * angle.sin()
}

fn alignment_conjugators(h1: &ElementSet, h2: &ElementSet, config: &SweepConfig, rng: &mut ChaCha8Rng) -> Vec<RotationElement> {
    let lines1 = h1.axis_lines();
    let lines2 = h2.axis_lines();
    let reps1 = h1.orbit_representatives(&lines1);
    let reps2 = h2.orbit_representatives(&lines2);
    let mut out = vec![RotationElement::identity()];
    out.extend((0..config.random_samples).map(|_| random_rotation(rng)));
    for a in &reps2 {
        for b in &reps1 {
            for sign in [1.0, -1.0] {
                let target = b.direction * sign;
                let twist = rodrigues(&target, rng.random_range(0.0..2.0 * PI)).expect("unit axis");
                out.push(twist * align(&a.direction, &target));
            }
        }
    }
    for a1 in &reps2 {
        for b1 in &reps1 {
            for a2 in lines2.iter().filter(|l| !same_line(&l.direction, &a1.direction)) {
                let ca = a1.direction.dot(&a2.direction);
                for b2 in lines1.iter().filter(|l| !same_line(&l.direction, &b1.direction)) {
                    let cb = b1.direction.dot(&b2.direction);
                    if (ca.abs() - cb.abs()).abs() > COS_TOL {
                        continue;
                    }
                    for s1 in [1.0, -1.0] {
                        for s2 in [1.0, -1.0] {
                            if (ca - s1 * s2 * cb).abs() <= COS_TOL {
                                out.push(frame_map(
                                    &a1.direction,
                                    &a2.direction,
                                    &(b1.direction * s1),
                                    &(b2.direction * s2),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Parameter entering the angular grid density.
fn grid_parameter(label: ClassLabel) -> u32 {
    match label {
        ClassLabel::TypeI(r) | ClassLabel::TypeII(r) => match r {
            Rotational::Cyclic(n) | Rotational::Dihedral(n) => n,
            Rotational::Tetra => 3,
            Rotational::Octa => 4,
            Rotational::Icosa => 5,
            _ => 1,
        },
        ClassLabel::TypeIII(t) => match t {
            Improper::CyclicMinus(n) | Improper::DihedralD(n) => 2 * n,
            Improper::DihedralZ(n) => n,
            Improper::OctaMinus => 4,
            Improper::O2Minus => 1,
        },
    }
}

fn grid_conjugators(
    c1: ClassLabel,
    c2: ClassLabel,
    config: &SweepConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<RotationElement>, ClipsError> {
    let n = 2 * grid_parameter(c1).lcm(&grid_parameter(c2)).lcm(&24);
    let generic = random_direction(rng);
    let dirs = |label: ClassLabel| -> Result<Vec<Vec3>, ClipsError> {
        let mut v: Vec<Vec3> = axis_catalog(label)?.all().map(|a| a.direction).collect();
        v.push(generic);
        Ok(v)
    };
    let (dirs1, dirs2) = (dirs(c1)?, dirs(c2)?);
    let mut out = vec![RotationElement::identity()];
    out.extend((0..config.random_samples).map(|_| random_rotation(rng)));
    for a in &dirs2 {
        for b in &dirs1 {
            let g0 = align(a, b);
            for k in 0..2 * n {
                let twist = rodrigues(b, k as f64 * PI / n as f64).expect("unit axis");
                out.push(twist * g0);
            }
        }
    }
    Ok(out)
}

/// Bit set of the elements of `h1` lying in `g h2 g⁻¹`.
fn intersection_mask(h1: &ElementSet, h2: &ElementSet, g: &RotationElement) -> Vec<u64> {
    let ginv = g.inverse();
    let mut mask = vec![0u64; h1.len().div_ceil(64)];
    for (i, x) in h1.elements().iter().enumerate() {
        if h2.contains(&x.conjugated_by(&ginv)) {
            mask[i / 64] |= 1 << (i % 64);
        }
    }
    mask
}

fn recognize_masks(h1: &ElementSet, masks: HashSet<Vec<u64>>) -> Result<ClassSet, ClipsError> {
    let labels: Result<Vec<ClassLabel>, ClipsError> = masks
        .into_par_iter()
        .map(|mask| {
            let elements = h1
                .elements()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask[i / 64] >> (i % 64) & 1 == 1)
                .map(|(_, x)| *x)
                .collect();
            Ok(recognize(&ElementSet::from_elements(elements))?)
        })
        .collect();
    Ok(labels?.into_iter().collect())
}

/// Clips of two finite classes by explicit intersection.
pub fn clips_oracle(c1: ClassLabel, c2: ClassLabel, config: &SweepConfig) -> Result<ClassSet, ClipsError> {
    let (c1, c2) = (c1.canonicalize()?, c2.canonicalize()?);
    let h1 = reference_group(c1)?;
    let h2 = reference_group(c2)?;
    let mut rng = config.rng_for(c1, c2);
    let conjugators = match config.strategy {
        ConjugatorStrategy::Alignment => alignment_conjugators(&h1, &h2, config, &mut rng),
        ConjugatorStrategy::AngularGrid => grid_conjugators(c1, c2, config, &mut rng)?,
    };
    let masks: HashSet<Vec<u64>> = conjugators
        .par_iter()
        .map(|g| intersection_mask(&h1, &h2, g))
        .collect();
    recognize_masks(&h1, masks)
}

/// Axial directions giving every possible intersection with a finite group
/// whose element lines are `lines` (orbit representatives `reps`).
fn axial_directions(lines: &[AxisLine], reps: &[AxisLine], rng: &mut ChaCha8Rng) -> Vec<Vec3> {
    let mut dirs = vec![random_direction(rng)];
    for rep in reps {
        dirs.push(rep.direction);
        dirs.push(random_orthogonal(&rep.direction, rng));
    }
    for (i, v1) in lines.iter().enumerate() {
        for v2 in &lines[i + 1..] {
            dirs.push(v1.direction.cross(&v2.direction).normalize());
        }
    }
    dirs
}

fn finite_axial(finite: ClassLabel, kind: AxialKind, rng: &mut ChaCha8Rng) -> Result<ClassSet, ClipsError> {
    let h = reference_group(finite)?;
    let lines = h.axis_lines();
    let reps = h.orbit_representatives(&lines);
    let mut out = ClassSet::new();
    for u in axial_directions(&lines, &reps, rng) {
        out.insert(recognize(&AxialGroup::new(kind, u).intersect_finite(&h))?);
    }
    Ok(out)
}

fn axial_axial(k1: AxialKind, k2: AxialKind, rng: &mut ChaCha8Rng) -> Result<ClassSet, ClipsError> {
    let first = AxialGroup::new(k1, e3());
    let generic = loop {
        let u = random_direction(rng);
        if !same_line(&u, &e3()) && u.z.abs() > 1e-3 {
            break u;
        }
    };
    let mut out = ClassSet::new();
    for u in [e3(), e1(), generic] {
        out.insert(match first.intersect(&AxialGroup::new(k2, u)) {
            AxialMeet::Axial(group) => group.kind.label(),
            AxialMeet::Finite(set) => recognize(&set)?,
        });
    }
    Ok(out)
}

/// `X ∩ SO(3) = X₊`.
fn proper_part_label(label: ClassLabel) -> Result<ClassLabel, ClipsError> {
    Ok(ClassLabel::TypeI(label.rotation_part()).canonicalize()?)
}

/// Clips when at least one class is infinite.
pub fn clips_infinite(c1: ClassLabel, c2: ClassLabel, config: &SweepConfig) -> Result<ClassSet, ClipsError> {
    let (c1, c2) = (c1.canonicalize()?, c2.canonicalize()?);
    let mut rng = config.rng_for(c1, c2);
    let so3 = ClassLabel::TypeI(Rotational::SO3);
    if c1 == ClassLabel::O3 {
        return Ok(ClassSet::singleton(c2));
    }
    if c2 == ClassLabel::O3 {
        return Ok(ClassSet::singleton(c1));
    }
    if c1 == so3 {
        return Ok(ClassSet::singleton(proper_part_label(c2)?));
    }
    if c2 == so3 {
        return Ok(ClassSet::singleton(proper_part_label(c1)?));
    }
    match (AxialKind::from_label(c1), AxialKind::from_label(c2)) {
        (Some(k1), Some(k2)) => axial_axial(k1, k2, &mut rng),
        (Some(k1), None) => finite_axial(c2, k1, &mut rng),
        (None, Some(k2)) => finite_axial(c1, k2, &mut rng),
        (None, None) => clips_oracle(c1, c2, config),
    }
}

/// Clips by explicit intersection, for any pair of classes.
pub fn clips_concrete(c1: ClassLabel, c2: ClassLabel, config: &SweepConfig) -> Result<ClassSet, ClipsError> {
    if c1.is_finite() && c2.is_finite() {
        clips_oracle(c1, c2, config)
    } else {
        clips_infinite(c1, c2, config)
    }
}
