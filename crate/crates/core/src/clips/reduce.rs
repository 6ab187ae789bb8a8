//! Rewrites of a clips pair to simpler computations.

use crate::class::{ClassLabel, ClassSet, Rotational};

/// How a pair is reduced.
#[derive(Debug, Clone, PartialEq)]
pub enum Reduction {
    /// The result is known outright.
    Done(ClassSet),
    /// Same result as the clips of this pair.
    Delegate(ClassLabel, ClassLabel),
    /// The `⊕ Z2c` image, member by member, of the clips of this type I pair.
    Centered(ClassLabel, ClassLabel),
    /// Closed form for (type III, type II).
    Table { type3: ClassLabel, type2: ClassLabel },
}

/// Reduction of a canonical pair, or `None` if it must be computed
/// directly (type I × type I, type III × type III, and pairs of these kinds
/// involving infinite axial groups).
///
/// Rules, in order:
/// * `X ∘ O(3) = {X}`;
/// * `1 ∘ X = {1}`;
/// * `X ∘ SO(3) = {X₊}`;
/// * `H1 ∘ (H2 ⊕ Z2c) = H1 ∘ H2` for `H1` of type I;
/// * `(H1 ⊕ Z2c) ∘ (H2 ⊕ Z2c) = (H1 ∘ H2) ⊕ Z2c`;
/// * `Γ ∘ H = Γ₊ ∘ H` for `Γ` of type III and `H` of type I;
/// * type III × type II uses the closed-form tables.
pub fn clips_reduce(c1: ClassLabel, c2: ClassLabel) -> Option<Reduction> {
    use ClassLabel::{TypeI, TypeII, TypeIII};
    let so3 = TypeI(Rotational::SO3);
    if c2 == ClassLabel::O3 {
        return Some(Reduction::Done(ClassSet::singleton(c1)));
    }
    if c1 == ClassLabel::O3 {
        return Some(Reduction::Done(ClassSet::singleton(c2)));
    }
    if c1 == ClassLabel::TRIVIAL || c2 == ClassLabel::TRIVIAL {
        return Some(Reduction::Done(ClassSet::singleton(ClassLabel::TRIVIAL)));
    }
    let proper = |label: ClassLabel| {
        TypeI(label.rotation_part()).canonicalize().expect("rotation part of a canonical class")
    };
    if c2 == so3 {
        return Some(Reduction::Done(ClassSet::singleton(proper(c1))));
    }
    if c1 == so3 {
        return Some(Reduction::Done(ClassSet::singleton(proper(c2))));
    }
    match (c1, c2) {
        (TypeI(_), TypeII(inner)) => Some(Reduction::Delegate(c1, TypeI(inner))),
        (TypeII(inner), TypeI(_)) => Some(Reduction::Delegate(TypeI(inner), c2)),
        (TypeII(a), TypeII(b)) => Some(Reduction::Centered(TypeI(a), TypeI(b))),
        (TypeIII(_), TypeI(_)) => Some(Reduction::Delegate(proper(c1), c2)),
        (TypeI(_), TypeIII(_)) => Some(Reduction::Delegate(c1, proper(c2))),
        (TypeIII(_), TypeII(_)) => Some(Reduction::Table { type3: c1, type2: c2 }),
        (TypeII(_), TypeIII(_)) => Some(Reduction::Table { type3: c2, type2: c1 }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> ClassLabel {
        s.parse().unwrap()
    }

    #[test]
    fn published_reductions() {
        assert_eq!(clips_reduce(l("T"), l("Z2+Z2c")), Some(Reduction::Delegate(l("T"), l("Z2"))));
        assert_eq!(clips_reduce(l("D3+Z2c"), l("D3+Z2c")), Some(Reduction::Centered(l("D3"), l("D3"))));
        assert_eq!(clips_reduce(l("Z5"), l("O(3)")), Some(Reduction::Done(ClassSet::singleton(l("Z5")))));
        assert_eq!(clips_reduce(l("O^-"), l("Z7")), Some(Reduction::Delegate(l("T"), l("Z7"))));
        assert_eq!(
            clips_reduce(l("1"), l("I+Z2c")),
            Some(Reduction::Done(ClassSet::singleton(ClassLabel::TRIVIAL)))
        );
    }

    #[test]
    fn direct_kinds_are_not_reduced() {
        assert_eq!(clips_reduce(l("D4"), l("Z6")), None);
        assert_eq!(clips_reduce(l("O^-"), l("D6^d")), None);
        assert_eq!(clips_reduce(l("SO(2)"), l("O(2)")), None);
    }

    #[test]
    fn mixed_kinds_go_to_tables() {
        assert_eq!(
            clips_reduce(l("Z4+Z2c"), l("Z4^-")),
            Some(Reduction::Table { type3: l("Z4^-"), type2: l("Z4+Z2c") })
        );
        assert_eq!(clips_reduce(l("O(2)^-"), l("SO(3)")), Some(Reduction::Done(ClassSet::singleton(l("SO(2)")))));
    }
}
