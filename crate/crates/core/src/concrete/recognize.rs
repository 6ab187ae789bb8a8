use crate::class::{ClassLabel, Improper, Rotational};

use super::group::ElementSet;
use super::GroupError;

/// Classifies a finite group of proper rotations.
///
/// One axis gives Z_n; a rotation axis of fold `order / 2` gives D_n;
/// otherwise the (fold → axis count) signature must be that of T, O or I.
pub fn recognize_so3(set: &ElementSet) -> Result<Rotational, GroupError> {
    if set.elements().iter().any(|x| !x.is_proper()) {
        return Err(GroupError::Unclassifiable("improper element in a rotation group".into()));
    }
    let order = set.len() as u32;
    if order == 1 {
        return Ok(Rotational::Trivial);
    }
    let lines = set.axis_lines();
    if lines.len() == 1 {
        return Ok(Rotational::Cyclic(order));
    }
    let max_fold = lines.iter().map(|l| l.fold).max().unwrap_or(1);
    if 2 * max_fold == order {
        return Ok(Rotational::Dihedral(max_fold));
    }
    let count = |k: u32| lines.iter().filter(|l| l.fold == k).count();
    let signature = (count(5), count(4), count(3), count(2), lines.len());
    match (order, signature) {
        (12, (0, 0, 4, 3, 7)) => Ok(Rotational::Tetra),
        (24, (0, 3, 4, 6, 13)) => Ok(Rotational::Octa),
        (60, (6, 0, 10, 15, 31)) => Ok(Rotational::Icosa),
        _ => Err(GroupError::Unclassifiable(format!(
            "order {order} with fold signature {signature:?}"
        ))),
    }
}

/// Classifies a finite subgroup of O(3), returning its canonical label.
///
/// Type III groups are identified from the pair (Γ̃, Γ₊) where
/// Γ̃ = Γ₊ ∪ (−Γ₋).
pub fn recognize(set: &ElementSet) -> Result<ClassLabel, GroupError> {
    let plus = set.proper_part();
    let minus = set.improper_part();
    let proper = recognize_so3(&plus)?;
    if minus.is_empty() {
        return Ok(ClassLabel::TypeI(proper));
    }
    if set.contains_central_inversion() {
        return Ok(ClassLabel::TypeII(proper));
    }
    if plus.len() != minus.len() {
        return Err(GroupError::Unclassifiable(format!(
            "|Γ₊| = {} but |Γ₋| = {}",
            plus.len(),
            minus.len()
        )));
    }
    let mut tilde = plus.elements().to_vec();
    tilde.extend(minus.elements().iter().map(|x| -*x));
    let extended = recognize_so3(&ElementSet::from_elements(tilde))?;
    use Rotational as R;
    let improper = match (extended, proper) {
        (R::Cyclic(2), R::Trivial) => Improper::CyclicMinus(1),
        (R::Cyclic(k), R::Cyclic(n)) if k == 2 * n => Improper::CyclicMinus(n),
        (R::Dihedral(k), R::Cyclic(n)) if k == n => Improper::DihedralZ(n),
        (R::Dihedral(2), R::Cyclic(2)) => Improper::DihedralZ(2),
        (R::Dihedral(k), R::Dihedral(n)) if k == 2 * n => Improper::DihedralD(n),
        (R::Octa, R::Tetra) => Improper::OctaMinus,
        pair => {
            return Err(GroupError::Unclassifiable(format!(
                "index-2 pair {pair:?} is not a type III construction"
            )))
        }
    };
    Ok(improper.canonicalize()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concrete::materialize::{materialize, reference_group};
    use crate::concrete::rotation::{e1, e3, random_rotation, rodrigues, RotationElement, Vec3};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn l(s: &str) -> ClassLabel {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_is_z4_minus() {
        let set = ElementSet::from_elements(vec![
            RotationElement::identity(),
            rodrigues(&e3(), PI).unwrap(),
            -rodrigues(&e3(), PI / 2.0).unwrap(),
            -rodrigues(&e3(), 3.0 * PI / 2.0).unwrap(),
        ]);
        assert_eq!(recognize(&set).unwrap(), l("Z4^-"));
        assert_eq!(recognize(&ElementSet::trivial()).unwrap(), ClassLabel::TRIVIAL);
    }

    #[test]
    fn d6_is_not_tetrahedral() {
        let d6 = reference_group(l("D6")).unwrap();
        assert_eq!(recognize_so3(&d6).unwrap(), Rotational::Dihedral(6));
        let t = reference_group(l("T")).unwrap();
        assert_eq!(recognize_so3(&t).unwrap(), Rotational::Tetra);
    }

    #[test]
    fn half_turn_about_any_axis_is_z2() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let u = random_rotation(&mut rng).apply(&Vec3::z());
            let set = ElementSet::from_elements(vec![
                RotationElement::identity(),
                rodrigues(&u, PI).unwrap(),
            ]);
            assert_eq!(recognize(&set).unwrap(), l("Z2"));
        }
    }

    #[test]
    fn octahedral_signature() {
        let o = reference_group(l("O")).unwrap();
        assert_eq!(recognize_so3(&o).unwrap(), Rotational::Octa);
        let fours = o.axis_lines().iter().filter(|a| a.fold == 4).count();
        assert_eq!(fours, 3);
    }

    #[test]
    fn mixed_dihedral_round_trip_in_random_orientations() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let g = random_rotation(&mut rng);
            assert_eq!(recognize(&materialize(l("D6^d"), &g).unwrap()).unwrap(), l("D6^d"));
        }
    }

    #[test]
    fn reflections_recognized() {
        let mirror = ElementSet::from_elements(vec![RotationElement::identity(), -rodrigues(&e1(), PI).unwrap()]);
        assert_eq!(recognize(&mirror).unwrap(), l("Z2^-"));
        let inversion = ElementSet::from_elements(vec![RotationElement::identity(), -RotationElement::identity()]);
        assert_eq!(recognize(&inversion).unwrap(), l("1+Z2c"));
    }

    #[test]
    fn rejects_rotation_group_with_improper_elements() {
        let set = reference_group(l("Z2^-")).unwrap();
        assert!(recognize_so3(&set).is_err());
    }
}
