use std::cmp::Ordering;
use std::fmt;

use super::LabelError;

/// Conjugacy classes of closed subgroups of SO(3) (type I).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rotational {
    Trivial,
    /// Z_n, order n.
    Cyclic(u32),
    /// D_n, order 2n.
    Dihedral(u32),
    /// T, order 12.
    Tetra,
    /// O, order 24.
    Octa,
    /// I, order 60.
    Icosa,
    SO2,
    O2,
    SO3,
}

/// Type III families: groups containing improper elements but not -Id.
///
/// Parameters follow the constructions `Γ₊ ∪ (−γ Γ₊)`:
/// `CyclicMinus(n)` is Z_{2n}^- and `DihedralD(n)` is D_{2n}^d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Improper {
    /// Z_{2n}^-, order 2n.
    CyclicMinus(u32),
    /// D_n^z, order 2n.
    DihedralZ(u32),
    /// D_{2n}^d, order 4n.
    DihedralD(u32),
    /// O^-, order 24.
    OctaMinus,
    O2Minus,
}

/// Symbolic conjugacy class of a closed subgroup of O(3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    TypeI(Rotational),
    /// `inner ⊕ Z_2^c`.
    TypeII(Rotational),
    TypeIII(Improper),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeKind {
    I,
    II,
    III,
}

impl fmt::Display for TypeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeKind::I => f.write_str("I"),
            TypeKind::II => f.write_str("II"),
            TypeKind::III => f.write_str("III"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(k) => Some(k),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

impl Rotational {
    pub fn canonicalize(self) -> Result<Rotational, LabelError> {
        Ok(match self {
            Rotational::Cyclic(0) | Rotational::Dihedral(0) => {
                return Err(LabelError::Degenerate(format!("{self:?}")))
            }
            Rotational::Cyclic(1) => Rotational::Trivial,
            Rotational::Dihedral(1) => Rotational::Cyclic(2),
            other => other,
        })
    }

    pub fn order(self) -> Order {
        match self {
            Rotational::Trivial => Order::Finite(1),
            Rotational::Cyclic(n) => Order::Finite(n as u64),
            Rotational::Dihedral(n) => Order::Finite(2 * n as u64),
            Rotational::Tetra => Order::Finite(12),
            Rotational::Octa => Order::Finite(24),
            Rotational::Icosa => Order::Finite(60),
            Rotational::SO2 | Rotational::O2 | Rotational::SO3 => Order::Infinite,
        }
    }
}

impl Improper {
    pub fn canonicalize(self) -> Result<ClassLabel, LabelError> {
        Ok(match self {
            Improper::CyclicMinus(0) | Improper::DihedralZ(0) | Improper::DihedralD(0) => {
                return Err(LabelError::Degenerate(format!("{self:?}")))
            }
            // D_1^z = Z_2^-
            Improper::DihedralZ(1) => ClassLabel::TypeIII(Improper::CyclicMinus(1)),
            // D_2^d = D_2^z
            Improper::DihedralD(1) => ClassLabel::TypeIII(Improper::DihedralZ(2)),
            other => ClassLabel::TypeIII(other),
        })
    }

    pub fn order(self) -> Order {
        match self {
            Improper::CyclicMinus(n) | Improper::DihedralZ(n) => Order::Finite(2 * n as u64),
            Improper::DihedralD(n) => Order::Finite(4 * n as u64),
            Improper::OctaMinus => Order::Finite(24),
            Improper::O2Minus => Order::Infinite,
        }
    }

    /// Γ₊ = Γ ∩ SO(3).
    pub fn rotation_part(self) -> Rotational {
        match self {
            Improper::CyclicMinus(1) => Rotational::Trivial,
            Improper::CyclicMinus(n) | Improper::DihedralZ(n) => Rotational::Cyclic(n),
            Improper::DihedralD(1) => Rotational::Cyclic(2),
            Improper::DihedralD(n) => Rotational::Dihedral(n),
            Improper::OctaMinus => Rotational::Tetra,
            Improper::O2Minus => Rotational::SO2,
        }
    }

    /// Γ̃ = Γ₊ ∪ (−Γ₋), the rotation group containing Γ₊ with index 2.
    pub fn extended_rotation(self) -> Rotational {
        match self {
            Improper::CyclicMinus(n) => Rotational::Cyclic(2 * n),
            Improper::DihedralZ(n) => Rotational::Dihedral(n),
            Improper::DihedralD(n) => Rotational::Dihedral(2 * n),
            Improper::OctaMinus => Rotational::Octa,
            Improper::O2Minus => Rotational::O2,
        }
    }
}

impl ClassLabel {
    pub const TRIVIAL: ClassLabel = ClassLabel::TypeI(Rotational::Trivial);
    pub const O3: ClassLabel = ClassLabel::TypeII(Rotational::SO3);

    /// Canonical representative of the class.
    ///
    /// Applies Z_1 → 1, D_1 → Z_2, D_1^z → Z_2^-, D_2^d → D_2^z (and the same
    /// collapses inside a type II label). Idempotent.
    pub fn canonicalize(self) -> Result<ClassLabel, LabelError> {
        match self {
            ClassLabel::TypeI(r) => r.canonicalize().map(ClassLabel::TypeI),
            ClassLabel::TypeII(r) => r.canonicalize().map(ClassLabel::TypeII),
            ClassLabel::TypeIII(t) => t.canonicalize(),
        }
    }

    pub fn is_canonical(self) -> bool {
        self.canonicalize().map(|c| c == self).unwrap_or(false)
    }

    pub fn kind(self) -> TypeKind {
        match self {
            ClassLabel::TypeI(_) => TypeKind::I,
            ClassLabel::TypeII(_) => TypeKind::II,
            ClassLabel::TypeIII(_) => TypeKind::III,
        }
    }

    pub fn order(self) -> Order {
        match self {
            ClassLabel::TypeI(r) => r.order(),
            ClassLabel::TypeII(r) => match r.order() {
                Order::Finite(k) => Order::Finite(2 * k),
                Order::Infinite => Order::Infinite,
            },
            ClassLabel::TypeIII(t) => t.order(),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self.order(), Order::Finite(_))
    }

    /// Γ₊, the rotation subgroup (as a type I class).
    pub fn rotation_part(self) -> Rotational {
        match self {
            ClassLabel::TypeI(r) | ClassLabel::TypeII(r) => r,
            ClassLabel::TypeIII(t) => t.rotation_part(),
        }
    }

    /// `H ↦ H ⊕ Z_2^c` for type I classes; `None` otherwise.
    pub fn centered(self) -> Option<ClassLabel> {
        match self {
            ClassLabel::TypeI(r) => Some(ClassLabel::TypeII(r)),
            _ => None,
        }
    }

    fn sort_key(self) -> (u8, u64, u8, u32) {
        use Improper as M;
        use Rotational as R;
        const INFINITE: u8 = 1;
        let param = |r: Rotational| match r {
            R::Cyclic(n) | R::Dihedral(n) => n,
            _ => 0,
        };
        let rot_rank = |r: Rotational| match r {
            R::Trivial => 0,
            R::Cyclic(_) => 1,
            R::Dihedral(_) => 3,
            R::Tetra => 6,
            R::Octa => 7,
            R::Icosa => 9,
            R::SO2 | R::O2 | R::SO3 => unreachable!("infinite handled separately"),
        };
        let infinite_slot = |l: ClassLabel| match l {
            ClassLabel::TypeI(R::SO2) => 0,
            ClassLabel::TypeI(R::O2) => 1,
            ClassLabel::TypeII(R::SO2) => 2,
            ClassLabel::TypeII(R::O2) => 3,
            ClassLabel::TypeIII(M::O2Minus) => 4,
            ClassLabel::TypeI(R::SO3) => 5,
            ClassLabel::TypeII(R::SO3) => 6,
            _ => unreachable!("finite label"),
        };
        match self.order() {
            Order::Infinite => (INFINITE, 0, infinite_slot(self), 0),
            Order::Finite(k) => match self {
                ClassLabel::TypeI(r) => (0, k, rot_rank(r), param(r)),
                ClassLabel::TypeII(r) => (0, k, 10 + rot_rank(r), param(r)),
                ClassLabel::TypeIII(t) => {
                    let (rank, p) = match t {
                        M::CyclicMinus(n) => (2, n),
                        M::DihedralZ(n) => (4, n),
                        M::DihedralD(n) => (5, n),
                        M::OctaMinus => (8, 0),
                        M::O2Minus => unreachable!(),
                    };
                    (0, k, rank, p)
                }
            },
        }
    }
}

/// Total order used for every [`ClassSet`]: finite classes by
/// (order, family rank, parameter), then the infinite classes in the fixed
/// sequence SO(2), O(2), SO(2)+Z2c, O(2)+Z2c, O(2)^-, SO(3), O(3).
pub fn canonical_compare(a: ClassLabel, b: ClassLabel) -> Ordering {
    a.sort_key().cmp(&b.sort_key())
}

impl Ord for ClassLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_compare(*self, *other)
    }
}

impl PartialOrd for ClassLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> ClassLabel {
        s.parse().unwrap()
    }

    #[test]
    fn notation_conventions_collapse() {
        let dz1 = ClassLabel::TypeIII(Improper::DihedralZ(1));
        assert_eq!(dz1.canonicalize().unwrap(), l("Z2^-"));
        let z1 = ClassLabel::TypeI(Rotational::Cyclic(1));
        assert_eq!(z1.canonicalize().unwrap(), ClassLabel::TRIVIAL);
        let dd1 = ClassLabel::TypeIII(Improper::DihedralD(1));
        assert_eq!(dd1.canonicalize().unwrap(), l("D2^z"));
        let dz4 = ClassLabel::TypeIII(Improper::DihedralZ(4));
        assert_eq!(dz4.canonicalize().unwrap(), dz4);
        let d1c = ClassLabel::TypeII(Rotational::Dihedral(1));
        assert_eq!(d1c.canonicalize().unwrap(), l("Z2+Z2c"));
    }

    #[test]
    fn degenerate_parameters_rejected() {
        assert!(ClassLabel::TypeI(Rotational::Dihedral(0)).canonicalize().is_err());
        assert!(ClassLabel::TypeI(Rotational::Cyclic(0)).canonicalize().is_err());
        assert!(ClassLabel::TypeIII(Improper::CyclicMinus(0)).canonicalize().is_err());
        assert!(ClassLabel::TypeII(Rotational::Dihedral(0)).canonicalize().is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(l("Z5").order(), Order::Finite(5));
        assert_eq!(l("D6^d").order(), Order::Finite(12));
        assert_eq!(l("T+Z2c").order(), Order::Finite(24));
        assert_eq!(l("Z6^-").order(), Order::Finite(6));
        assert_eq!(l("D5^z").order(), Order::Finite(10));
        assert_eq!(l("O^-").order(), Order::Finite(24));
        assert_eq!(l("I+Z2c").order(), Order::Finite(120));
        for inf in ["SO(2)", "O(2)", "O(2)^-", "SO(3)", "O(3)", "SO(2)+Z2c", "O(2)+Z2c"] {
            assert_eq!(l(inf).order(), Order::Infinite, "{inf}");
        }
    }

    #[test]
    fn compare_examples() {
        assert_eq!(canonical_compare(l("1"), l("Z2")), Ordering::Less);
        assert_eq!(canonical_compare(l("Z4"), l("Z4^-")), Ordering::Less);
        assert_eq!(canonical_compare(l("O(2)^-"), l("O(3)")), Ordering::Less);
        assert_eq!(canonical_compare(l("I+Z2c"), l("SO(2)")), Ordering::Less);
        assert_eq!(canonical_compare(l("D6"), l("T")), Ordering::Less);
    }

    #[test]
    fn type_parts() {
        assert_eq!(l("Z6^-").rotation_part(), Rotational::Cyclic(3));
        assert_eq!(l("Z2^-").rotation_part(), Rotational::Trivial);
        assert_eq!(l("D8^d").rotation_part(), Rotational::Dihedral(4));
        assert_eq!(l("O^-").rotation_part(), Rotational::Tetra);
        assert_eq!(l("O(2)^-").rotation_part(), Rotational::SO2);
        assert_eq!(l("D3").centered(), Some(l("D3+Z2c")));
        assert_eq!(l("SO(3)").centered(), Some(ClassLabel::O3));
    }
}
