use std::f64::consts::PI;

use crate::class::{ClassLabel, Improper, Rotational};

use super::materialize::golden_ratio;
use super::rotation::{e1, e2, e3, rodrigues, rotation_about, Vec3};
use super::GroupError;

/// A characteristic axis of a finite group `Γ`.
///
/// `fold` is the order of the rotation stabilizer of the line in
/// `Γ̃ = Γ₊ ∪ (−Γ₋)`, so either `R(a, 2π/fold)` or `−R(a, 2π/fold)` lies in
/// `Γ`. `proper_fold` counts the proper rotations of `Γ` about the line
/// (identity included); it equals `fold` unless improper elements carry
/// the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaggedAxis {
    pub direction: Vec3,
    pub fold: u32,
    pub proper_fold: u32,
}

impl TaggedAxis {
    fn new(direction: Vec3, fold: u32, proper_fold: u32) -> Self {
        Self { direction: direction.normalize(), fold, proper_fold }
    }

    /// The axis carries improper elements that are not `−Id` times a
    /// proper element of the group.
    pub fn is_twisted(&self) -> bool {
        self.proper_fold < self.fold
    }
}

/// Axes of a finite group in its reference orientation, grouped as
/// primary (main axis, or the coordinate axes for T/O, the five-fold axes
/// for I), secondary and ternary.
#[derive(Debug, Clone, Default)]
pub struct AxisCatalog {
    pub primary_axes: Vec<TaggedAxis>,
    pub secondary_axes: Vec<TaggedAxis>,
    pub ternary_axes: Vec<TaggedAxis>,
}

impl AxisCatalog {
    pub fn all(&self) -> impl Iterator<Item = &TaggedAxis> + '_ {
        self.primary_axes.iter().chain(&self.secondary_axes).chain(&self.ternary_axes)
    }

    pub fn len(&self) -> usize {
        self.primary_axes.len() + self.secondary_axes.len() + self.ternary_axes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Counts of axes per fold, sorted by decreasing fold.
    pub fn fold_summary(&self) -> Vec<(u32, usize)> {
        let mut folds: Vec<u32> = self.all().map(|a| a.fold).collect();
        folds.sort_unstable_by(|a, b| b.cmp(a));
        folds.dedup();
        folds.into_iter().map(|k| (k, self.all().filter(|a| a.fold == k).count())).collect()
    }
}

/// Half-turn axes `b_k = R(e3, kπ/n) e1`, `k = 0..n-1`.
fn secondary_directions(n: u32) -> Vec<Vec3> {
    (0..n)
        .map(|k| rodrigues(&e3(), k as f64 * PI / n as f64).expect("unit axis").apply(&e1()))
        .collect()
}

fn tetra_diagonals() -> Vec<Vec3> {
    vec![
        Vec3::new(1.0, 1.0, 1.0),
        Vec3::new(1.0, -1.0, -1.0),
        Vec3::new(-1.0, 1.0, -1.0),
        Vec3::new(-1.0, -1.0, 1.0),
    ]
}

fn octa_edges() -> Vec<Vec3> {
    vec![
        Vec3::new(1.0, 1.0, 0.0),
        Vec3::new(1.0, -1.0, 0.0),
        Vec3::new(1.0, 0.0, 1.0),
        Vec3::new(1.0, 0.0, -1.0),
        Vec3::new(0.0, 1.0, 1.0),
        Vec3::new(0.0, 1.0, -1.0),
    ]
}

/// The five-, three- and two-fold axes of the icosahedral group generated
/// by `R(e3, π)`, `R(e1+e2+e3, 2π/3)`, `R(e1 + φ e3, 2π/5)`.
///
/// The classical coordinate lists describe the icosahedron whose five-fold
/// axes include `φ e1 + e3`; a quarter turn about `e3` brings them onto the
/// generators used here.
fn icosa_axes() -> (Vec<Vec3>, Vec<Vec3>, Vec<Vec3>) {
    let p = golden_ratio();
    let ip = 1.0 / p;
    let (a, b) = (1.0 + ip, p + 1.0);
    let fives = vec![
        Vec3::new(1.0 + 3.0 * p, 0.0, 2.0 + p),
        Vec3::new(2.0 + p, 1.0 + 3.0 * p, 0.0),
        Vec3::new(0.0, 2.0 + p, -(1.0 + 3.0 * p)),
        Vec3::new(0.0, -(2.0 + p), -(1.0 + 3.0 * p)),
        Vec3::new(1.0 + 3.0 * p, 0.0, -(2.0 + p)),
        Vec3::new(2.0 + p, -(1.0 + 3.0 * p), 0.0),
    ];
    let threes = vec![
        Vec3::new(1.0, 1.0, 1.0),
        Vec3::new(p, ip, 0.0),
        Vec3::new(1.0, 1.0, -1.0),
        Vec3::new(0.0, p, -ip),
        Vec3::new(0.0, p, ip),
        Vec3::new(-1.0, 1.0, 1.0),
        Vec3::new(-p, ip, 0.0),
        Vec3::new(-1.0, 1.0, -1.0),
        Vec3::new(-ip, 0.0, -p),
        Vec3::new(ip, 0.0, -p),
    ];
    let twos = vec![
        Vec3::new(1.0, b, a),
        Vec3::new(a, 1.0, b),
        Vec3::new(b, a, 1.0),
        Vec3::new(p, 0.0, 0.0),
        Vec3::new(b, a, -1.0),
        Vec3::new(b, -a, 1.0),
        Vec3::new(a, -1.0, b),
        Vec3::new(b, -a, -1.0),
        Vec3::new(1.0, b, -a),
        Vec3::new(0.0, p, 0.0),
        Vec3::new(-1.0, b, a),
        Vec3::new(0.0, 0.0, p),
        Vec3::new(-a, 1.0, b),
        Vec3::new(-1.0, b, -a),
        Vec3::new(-a, -1.0, b),
    ];
    let quarter = rotation_about(&e3(), PI / 2.0);
    let turn = |vs: Vec<Vec3>| vs.iter().map(|v| quarter.apply(v)).collect();
    (turn(fives), turn(threes), turn(twos))
}

fn uniform(dirs: Vec<Vec3>, fold: u32, proper_fold: u32) -> Vec<TaggedAxis> {
    dirs.into_iter().map(|d| TaggedAxis::new(d, fold, proper_fold)).collect()
}

fn rotation_catalog(r: Rotational) -> Result<AxisCatalog, GroupError> {
    let mut c = AxisCatalog::default();
    match r {
        Rotational::Trivial => {}
        Rotational::Cyclic(n) => c.primary_axes = uniform(vec![e3()], n, n),
        Rotational::Dihedral(n) => {
            c.primary_axes = uniform(vec![e3()], n, n);
            c.secondary_axes = uniform(secondary_directions(n), 2, 2);
        }
        Rotational::Tetra => {
            c.primary_axes = uniform(vec![e1(), e2(), e3()], 2, 2);
            c.secondary_axes = uniform(tetra_diagonals(), 3, 3);
        }
        Rotational::Octa => {
            c.primary_axes = uniform(vec![e1(), e2(), e3()], 4, 4);
            c.secondary_axes = uniform(tetra_diagonals(), 3, 3);
            c.ternary_axes = uniform(octa_edges(), 2, 2);
        }
        Rotational::Icosa => {
            let (fives, threes, twos) = icosa_axes();
            c.primary_axes = uniform(fives, 5, 5);
            c.secondary_axes = uniform(threes, 3, 3);
            c.ternary_axes = uniform(twos, 2, 2);
        }
        Rotational::SO2 | Rotational::O2 | Rotational::SO3 => {
            return Err(GroupError::Infinite(ClassLabel::TypeI(r)))
        }
    }
    Ok(c)
}

/// Characteristic axes of a finite class in the orientation produced by
/// `reference_group`.
pub fn axis_catalog(label: ClassLabel) -> Result<AxisCatalog, GroupError> {
    let label = label.canonicalize()?;
    if !label.is_finite() {
        return Err(GroupError::Infinite(label));
    }
    match label {
        ClassLabel::TypeI(r) | ClassLabel::TypeII(r) => rotation_catalog(r),
        ClassLabel::TypeIII(t) => {
            let mut c = AxisCatalog::default();
            match t {
                Improper::CyclicMinus(n) => c.primary_axes = uniform(vec![e3()], 2 * n, n),
                Improper::DihedralZ(n) => {
                    c.primary_axes = uniform(vec![e3()], n, n);
                    c.secondary_axes = uniform(secondary_directions(n), 2, 1);
                }
                Improper::DihedralD(n) => {
                    c.primary_axes = uniform(vec![e3()], 2 * n, n);
                    // b_{2k} carry half-turns, b_{2k+1} carry reflections
                    c.secondary_axes = secondary_directions(2 * n)
                        .into_iter()
                        .enumerate()
                        .map(|(k, d)| TaggedAxis::new(d, 2, if k % 2 == 0 { 2 } else { 1 }))
                        .collect();
                }
                Improper::OctaMinus => {
                    c.primary_axes = uniform(vec![e1(), e2(), e3()], 4, 2);
                    c.secondary_axes = uniform(tetra_diagonals(), 3, 3);
                    c.ternary_axes = uniform(octa_edges(), 2, 1);
                }
                Improper::O2Minus => unreachable!("infinite"),
            }
            Ok(c)
        }
    }
}
