use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::label::ClassLabel;
use super::LabelError;

/// Duplicate-free set of canonical class labels, iterated in the
/// [`canonical_compare`](super::canonical_compare) order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassSet(BTreeSet<ClassLabel>);

impl ClassSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: ClassLabel) -> Self {
        let mut set = Self::new();
        set.insert(label);
        set
    }

    /// Canonicalizes each label before inserting it.
    pub fn from_raw<I: IntoIterator<Item = ClassLabel>>(labels: I) -> Result<Self, LabelError> {
        let mut set = Self::new();
        for label in labels {
            set.0.insert(label.canonicalize()?);
        }
        Ok(set)
    }

    /// Parses whitespace- or comma-separated label text.
    pub fn parse_list(text: &str) -> Result<Self, LabelError> {
        let mut set = Self::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            set.0.insert(token.parse()?);
        }
        Ok(set)
    }

    pub fn insert(&mut self, label: ClassLabel) -> bool {
        debug_assert!(label.is_canonical(), "{label:?} is not canonical");
        self.0.insert(label)
    }

    pub fn contains(&self, label: &ClassLabel) -> bool {
        self.0.contains(label)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ClassLabel> + '_ {
        self.0.iter()
    }

    pub fn union(&self, other: &ClassSet) -> ClassSet {
        ClassSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &ClassSet) -> ClassSet {
        ClassSet(self.0.difference(&other.0).copied().collect())
    }

    /// Memberwise `H ↦ H ⊕ Z_2^c`. `None` if some member is not of type I.
    pub fn centered_image(&self) -> Option<ClassSet> {
        self.0.iter().map(|l| l.centered()).collect::<Option<BTreeSet<_>>>().map(ClassSet)
    }

    pub fn labels(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl Extend<ClassLabel> for ClassSet {
    fn extend<T: IntoIterator<Item = ClassLabel>>(&mut self, iter: T) {
        for label in iter {
            self.insert(label);
        }
    }
}

impl FromIterator<ClassLabel> for ClassSet {
    fn from_iter<T: IntoIterator<Item = ClassLabel>>(iter: T) -> Self {
        let mut set = ClassSet::new();
        set.extend(iter);
        set
    }
}

impl IntoIterator for ClassSet {
    type Item = ClassLabel;
    type IntoIter = std::collections::btree_set::IntoIter<ClassLabel>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a ClassSet {
    type Item = &'a ClassLabel;
    type IntoIter = std::collections::btree_set::Iter<'a, ClassLabel>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, label) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{label}")?;
        }
        Ok(())
    }
}
