use std::f64::consts::PI;
use std::ops::{Mul, Neg};

use nalgebra::{Matrix3, Vector3};
use rand::{Rng, SeedableRng};

use super::GroupError;

pub type Vec3 = Vector3<f64>;
pub type Mat3 = Matrix3<f64>;

/// Max-norm distance below which two elements are the same.
pub const EPS_EQ: f64 = 1e-9;
/// Allowed deviation of an axis from unit length.
pub const UNIT_TOL: f64 = 1e-12;
/// Two unit vectors span the same line when `|u × v|` is below this.
pub const LINE_TOL: f64 = 1e-7;

/// An element of O(3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationElement {
    m: Mat3,
}

impl RotationElement {
    pub fn identity() -> Self {
        Self { m: Mat3::identity() }
    }

    /// Checks orthogonality to within [`EPS_EQ`].
    pub fn from_matrix(m: Mat3) -> Result<Self, GroupError> {
        let defect = (m.transpose() * m - Mat3::identity()).amax();
        if defect > EPS_EQ {
            return Err(GroupError::NotOrthogonal(defect));
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    /// +1 or -1.
    pub fn det_sign(&self) -> i8 {
        if self.m.determinant() > 0.0 {
            1
        } else {
            -1
        }
    }

    pub fn is_proper(&self) -> bool {
        self.det_sign() > 0
    }

    pub fn inverse(&self) -> Self {
        Self { m: self.m.transpose() }
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.m - other.m).amax()
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.m
            .iter()
            .zip(other.m.iter())
            .all(|(a, b)| (a - b).abs() <= EPS_EQ)
    }

    pub fn is_identity(&self) -> bool {
        self.approx_eq(&Self::identity())
    }

    /// `g x g⁻¹`.
    pub fn conjugated_by(&self, g: &RotationElement) -> Self {
        Self { m: g.m * self.m * g.m.transpose() }
    }

    /// The rotation `±self` with determinant +1.
    pub fn proper_part(&self) -> Self {
        if self.is_proper() {
            *self
        } else {
            -*self
        }
    }

    /// Rotation angle of the proper part, in `[0, π]`.
    pub fn angle(&self) -> f64 {
        let r = self.proper_part().m;
        ((r.trace() - 1.0) / 2.0).clamp(-1.0, 1.0).acos()
    }

    /// Unit axis of the proper part, or `None` for ±Id. The sign is arbitrary
    /// for half-turns.
    pub fn axis(&self) -> Option<Vec3> {
        let r = self.proper_part().m;
        let cos = ((r.trace() - 1.0) / 2.0).clamp(-1.0, 1.0);
        if (1.0 - cos) < 1e-12 && (r - Mat3::identity()).amax() <= EPS_EQ {
            return None;
        }
        if cos < -0.5 {
            // near a half-turn the antisymmetric part vanishes; use (1 - cos) u uᵀ
            let sym = (r + r.transpose()) * 0.5 - Mat3::identity() * cos;
            let col = (0..3)
                .max_by(|&a, &b| sym[(a, a)].total_cmp(&sym[(b, b)]))
                .unwrap();
            let mut u: Vec3 = sym.column(col).into();
            u /= u.norm();
            let sin_part = Vec3::new(r[(2, 1)] - r[(1, 2)], r[(0, 2)] - r[(2, 0)], r[(1, 0)] - r[(0, 1)]);
            if sin_part.dot(&u) < 0.0 {
                u = -u;
            }
            return Some(u);
        }
        let w = Vec3::new(r[(2, 1)] - r[(1, 2)], r[(0, 2)] - r[(2, 0)], r[(1, 0)] - r[(0, 1)]);
        Some(w / w.norm())
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        self.m * v
    }
}

impl Mul for RotationElement {
    type Output = RotationElement;

    fn mul(self, rhs: Self) -> Self::Output {
        Self { m: self.m * rhs.m }
    }
}

impl Neg for RotationElement {
    type Output = RotationElement;

    fn neg(self) -> Self::Output {
        Self { m: -self.m }
    }
}

/// The antisymmetric matrix `j(n)` with `j(n) v = n × v`.
pub fn skew(n: &Vec3) -> Mat3 {
    Mat3::new(0.0, -n.z, n.y, n.z, 0.0, -n.x, -n.y, n.x, 0.0)
}

/// Rodrigues formula `R(n, θ) = Id + j(n) sin θ + j(n)² (1 − cos θ)`.
pub fn rodrigues(axis: &Vec3, angle: f64) -> Result<RotationElement, GroupError> {
    let norm = axis.norm();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(GroupError::NonUnitAxis(norm));
    }
    let j = skew(axis);
    let m = Mat3::identity() + j * angle.sin() + j * j * (1.0 - angle.cos());
    Ok(RotationElement { m })
}

/// Rotation about the line spanned by `direction` (any nonzero length).
pub fn rotation_about(direction: &Vec3, angle: f64) -> RotationElement {
    rodrigues(&direction.normalize(), angle).expect("normalized axis")
}

/// Uniformly distributed rotation (Shoemake's subgroup algorithm).
pub fn random_rotation<R: Rng + ?Sized>(rng: &mut R) -> RotationElement {
    let (u1, u2, u3): (f64, f64, f64) = (rng.random(), rng.random(), rng.random());
    let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
    let (x, y, z, w) = (
        a * (2.0 * PI * u2).sin(),
        a * (2.0 * PI * u2).cos(),
        b * (2.0 * PI * u3).sin(),
        b * (2.0 * PI * u3).cos(),
    );
    let q = nalgebra::UnitQuaternion::from_quaternion(nalgebra::Quaternion::new(w, x, y, z));
    RotationElement { m: *q.to_rotation_matrix().matrix() }
}

/// The uniformly distributed rotation drawn from a ChaCha8 stream seeded
/// with `seed`; stable across runs and platforms.
pub fn seeded_rotation(seed: u64) -> RotationElement {
    random_rotation(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
}

/// A unit vector orthogonal to `u`.
pub fn orthogonal_unit(u: &Vec3) -> Vec3 {
    let helper = if u.x.abs() < 0.9 { Vec3::x() } else { Vec3::y() };
    u.cross(&helper).normalize()
}

/// Some proper rotation taking the unit vector `from` to the unit vector `to`.
pub fn align(from: &Vec3, to: &Vec3) -> RotationElement {
    let helper = orthogonal_unit(from);
    frame_map(from, &helper, to, &orthogonal_unit(to))
}

/// The proper rotation sending `a1 ↦ b1` and the half-plane of `a2` (relative
/// to `a1`) onto that of `b2`. Requires `a1 ∦ a2`, `b1 ∦ b2` and equal angles.
pub fn frame_map(a1: &Vec3, a2: &Vec3, b1: &Vec3, b2: &Vec3) -> RotationElement {
    let frame = |p: &Vec3, q: &Vec3| {
        let e1 = p.normalize();
        let e2 = (q - e1 * e1.dot(q)).normalize();
        let e3 = e1.cross(&e2);
        Mat3::from_columns(&[e1, e2, e3])
    };
    let fa = frame(a1, a2);
    let fb = frame(b1, b2);
    RotationElement { m: fb * fa.transpose() }
}

pub fn same_line(u: &Vec3, v: &Vec3) -> bool {
    u.cross(v).norm() < LINE_TOL
}

pub fn e1() -> Vec3 {
    Vec3::x()
}

pub fn e2() -> Vec3 {
    Vec3::y()
}

pub fn e3() -> Vec3 {
    Vec3::z()
}
