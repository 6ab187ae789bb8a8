use std::f64::consts::PI;

use crate::class::{ClassLabel, Improper, Rotational};

use super::group::{close_group, ElementSet};
use super::rotation::{e1, e3, rodrigues, rotation_about, RotationElement, Vec3};
use super::GroupError;

/// Golden ratio used by the icosahedral generator.
pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// Generators of the type I groups in the reference orientation.
pub fn rotation_generators(r: Rotational) -> Result<Vec<RotationElement>, GroupError> {
    let turn = |axis: Vec3, angle: f64| rotation_about(&axis, angle);
    let diagonal = Vec3::new(1.0, 1.0, 1.0);
    Ok(match r.canonicalize()? {
        Rotational::Trivial => vec![],
        Rotational::Cyclic(n) => vec![turn(e3(), 2.0 * PI / n as f64)],
        Rotational::Dihedral(n) => vec![turn(e3(), 2.0 * PI / n as f64), turn(e1(), PI)],
        Rotational::Tetra => vec![turn(e3(), PI), turn(e1(), PI), turn(diagonal, 2.0 * PI / 3.0)],
        Rotational::Octa => vec![turn(e3(), PI / 2.0), turn(e1(), PI), turn(diagonal, 2.0 * PI / 3.0)],
        Rotational::Icosa => vec![
            turn(e3(), PI),
            turn(diagonal, 2.0 * PI / 3.0),
            turn(Vec3::new(1.0, 0.0, golden_ratio()), 2.0 * PI / 5.0),
        ],
        r @ (Rotational::SO2 | Rotational::O2 | Rotational::SO3) => {
            return Err(GroupError::Infinite(ClassLabel::TypeI(r)))
        }
    })
}

/// The coset representative `γ` with `Γ = Γ₊ ∪ (−γ Γ₊)`.
pub fn twist_representative(t: Improper) -> RotationElement {
    match t {
        Improper::CyclicMinus(n) | Improper::DihedralD(n) => {
            rodrigues(&e3(), PI / n as f64).expect("unit axis")
        }
        Improper::DihedralZ(_) | Improper::O2Minus => rodrigues(&e1(), PI).expect("unit axis"),
        Improper::OctaMinus => rodrigues(&e3(), PI / 2.0).expect("unit axis"),
    }
}

fn rotation_group(r: Rotational) -> Result<ElementSet, GroupError> {
    close_group(&rotation_generators(r)?)
}

/// The group of class `label` in the reference orientation.
pub fn reference_group(label: ClassLabel) -> Result<ElementSet, GroupError> {
    let label = label.canonicalize()?;
    if !label.is_finite() {
        return Err(GroupError::Infinite(label));
    }
    match label {
        ClassLabel::TypeI(r) => rotation_group(r),
        ClassLabel::TypeII(r) => Ok(rotation_group(r)?.with_central_inversion()),
        ClassLabel::TypeIII(t) => {
            Ok(rotation_group(t.rotation_part())?.with_twisted_coset(&twist_representative(t)))
        }
    }
}

/// `g Γ g⁻¹` for the reference group `Γ` of `label`; `orientation` must be a
/// proper rotation.
pub fn materialize(label: ClassLabel, orientation: &RotationElement) -> Result<ElementSet, GroupError> {
    if !orientation.is_proper() {
        return Err(GroupError::ImproperOrientation);
    }
    Ok(reference_group(label)?.conjugated_by(orientation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concrete::rotation::random_rotation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn l(s: &str) -> ClassLabel {
        s.parse().unwrap()
    }

    #[test]
    fn z4_minus_matches_worked_example() {
        let z = materialize(l("Z4^-"), &RotationElement::identity()).unwrap();
        assert_eq!(z.len(), 4);
        let expected = [
            RotationElement::identity(),
            rodrigues(&e3(), PI).unwrap(),
            -rodrigues(&e3(), PI / 2.0).unwrap(),
            -rodrigues(&e3(), 3.0 * PI / 2.0).unwrap(),
        ];
        for x in &expected {
            assert!(z.contains(x));
        }
    }

    #[test]
    fn trivial_group_in_any_orientation() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_rotation(&mut rng);
        let t = materialize(ClassLabel::TRIVIAL, &g).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.elements()[0].is_identity());
    }

    #[test]
    fn infinite_labels_refused() {
        for s in ["SO(2)", "O(2)", "O(2)^-", "SO(3)", "O(3)", "O(2)+Z2c"] {
            assert!(matches!(
                materialize(l(s), &RotationElement::identity()),
                Err(GroupError::Infinite(_))
            ));
        }
    }

    #[test]
    fn improper_orientation_refused() {
        let r = -RotationElement::identity();
        assert!(matches!(materialize(l("Z3"), &r), Err(GroupError::ImproperOrientation)));
    }

    #[test]
    fn tetrahedral_axis_multiset() {
        let t = reference_group(l("T")).unwrap();
        assert_eq!(t.len(), 12);
        let lines = t.axis_lines();
        let twofold: Vec<_> = lines.iter().filter(|a| a.fold == 2).collect();
        let threefold: Vec<_> = lines.iter().filter(|a| a.fold == 3).collect();
        assert_eq!((twofold.len(), threefold.len(), lines.len()), (3, 4, 7));
    }

    #[test]
    fn type_three_generators_agree_with_coset_construction() {
        // generator lists with -R(...) entries, closed independently
        let neg = |axis: Vec3, angle: f64| -rotation_about(&axis, angle);
        let cases: Vec<(&str, Vec<RotationElement>)> = vec![
            ("Z2^-", vec![neg(e3(), PI)]),
            ("Z8^-", vec![neg(e3(), PI / 4.0)]),
            ("D6^d", vec![neg(e3(), PI / 3.0), rotation_about(&e1(), PI)]),
            ("D5^z", vec![rotation_about(&e3(), 2.0 * PI / 5.0), neg(e1(), PI)]),
            ("O^-", vec![neg(e3(), PI / 2.0), neg(Vec3::new(0.0, 1.0, -1.0), PI)]),
        ];
        for (name, gens) in cases {
            let from_table = close_group(&gens).unwrap();
            let built = reference_group(l(name)).unwrap();
            assert_eq!(from_table.len(), built.len(), "{name}");
            assert!(built.elements().iter().all(|x| from_table.contains(x)), "{name}");
        }
    }
}
