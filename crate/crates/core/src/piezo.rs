//! Isotropy classes of the piezoelectricity law.
//!
//! The law couples an elasticity tensor (`Ela`), a piezoelectricity tensor
//! (`Piez`) and a permittivity tensor (`Sym`). The isotropy classes of a
//! direct sum of representations are the clips of the families of the
//! summands, so the classes of the coupled law are obtained by folding
//! [`ClipsEngine::clips_families`] over the three builtin catalogs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::class::{ClassLabel, ClassSet, Improper, LabelError, Rotational};
use crate::clips::{ClipsEngine, ClipsError};

#[derive(Debug, Error)]
pub enum PiezoError {
    #[error("unknown tensor space '{0}' (expected Ela, Piez, Sym or PiezLaw)")]
    UnknownSpace(String),
    #[error("a direct sum needs at least one catalog")]
    EmptySum,
    #[error("line {line}: {source}")]
    Catalog { line: usize, source: LabelError },
    #[error(transparent)]
    Clips(#[from] ClipsError),
}

/// The tensor spaces with a builtin catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SpaceName {
    /// Elasticity tensors.
    Ela,
    /// Piezoelectricity tensors.
    Piez,
    /// Symmetric second-order tensors (permittivity).
    Sym,
    /// The coupled law `Ela ⊕ Piez ⊕ Sym`.
    PiezLaw,
}

impl SpaceName {
    pub const ALL: [SpaceName; 4] = [SpaceName::Ela, SpaceName::Piez, SpaceName::Sym, SpaceName::PiezLaw];

    pub fn as_str(self) -> &'static str {
        match self {
            SpaceName::Ela => "Ela",
            SpaceName::Piez => "Piez",
            SpaceName::Sym => "Sym",
            SpaceName::PiezLaw => "PiezLaw",
        }
    }
}

impl fmt::Display for SpaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpaceName {
    type Err = PiezoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SpaceName::ALL
            .into_iter()
            .find(|space| space.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| PiezoError::UnknownSpace(s.to_string()))
    }
}

/// The isotropy classes of one tensor space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotropyCatalog {
    pub space: SpaceName,
    pub classes: ClassSet,
}

impl IsotropyCatalog {
    /// The element below every other class of the catalog, if any.
    pub fn least(&self, engine: &ClipsEngine) -> Result<Option<ClassLabel>, ClipsError> {
        self.extremum(engine, |engine, candidate, other| engine.class_leq(candidate, other))
    }

    /// The element above every other class of the catalog, if any.
    pub fn greatest(&self, engine: &ClipsEngine) -> Result<Option<ClassLabel>, ClipsError> {
        self.extremum(engine, |engine, candidate, other| engine.class_leq(other, candidate))
    }

    fn extremum(
        &self,
        engine: &ClipsEngine,
        dominates: impl Fn(&ClipsEngine, ClassLabel, ClassLabel) -> Result<bool, ClipsError>,
    ) -> Result<Option<ClassLabel>, ClipsError> {
        'candidates: for &candidate in &self.classes {
            for &other in &self.classes {
                if !dominates(engine, candidate, other)? {
                    continue 'candidates;
                }
            }
            return Ok(Some(candidate));
        }
        Ok(None)
    }
}

const fn c(r: Rotational) -> ClassLabel {
    ClassLabel::TypeI(r)
}

const fn cc(r: Rotational) -> ClassLabel {
    ClassLabel::TypeII(r)
}

const fn m(i: Improper) -> ClassLabel {
    ClassLabel::TypeIII(i)
}

use Improper::{CyclicMinus, DihedralD, DihedralZ, O2Minus, OctaMinus};
use Rotational::{Cyclic, Dihedral, Octa, Trivial, O2, SO2, SO3};

const ELA: [ClassLabel; 8] = [
    c(Trivial),
    cc(Cyclic(2)),
    cc(Dihedral(2)),
    cc(Dihedral(3)),
    cc(Dihedral(4)),
    cc(Octa),
    cc(O2),
    cc(SO3),
];

const PIEZ: [ClassLabel; 16] = [
    c(Trivial),
    c(Cyclic(2)),
    c(Cyclic(3)),
    m(DihedralZ(2)),
    m(DihedralZ(3)),
    m(CyclicMinus(1)),
    m(CyclicMinus(2)),
    c(Dihedral(2)),
    c(Dihedral(3)),
    m(DihedralD(2)),
    m(DihedralD(3)),
    c(SO2),
    c(O2),
    m(O2Minus),
    m(OctaMinus),
    cc(SO3),
];

const SYM: [ClassLabel; 3] = [cc(Dihedral(2)), cc(O2), cc(SO3)];

/// The isotropy classes of the coupled law as printed, in printed order,
/// with their printed spelling. `D2^d` and `D2^z` name the same class.
pub const PIEZLAW_PRINTED: [&str; 26] = [
    "1", "Z2", "Z3", "Z4", "D2", "D3", "D4", "SO(2)", "O(2)", "O(3)", "Z2+Z2c", "D2+Z2c", "D3+Z2c", "D4+Z2c",
    "O+Z2c", "O(2)+Z2c", "Z2^-", "Z4^-", "D2^z", "D3^z", "D4^z", "D2^d", "D4^d", "D6^d", "O^-", "O(2)^-",
];

/// Published catalogs, canonicalized. The catalog of the coupled law is the
/// printed list of [`PIEZLAW_PRINTED`].
pub fn builtin_isotropy(space: SpaceName) -> IsotropyCatalog {
    let classes = match space {
        SpaceName::Ela => ClassSet::from_raw(ELA),
        SpaceName::Piez => ClassSet::from_raw(PIEZ),
        SpaceName::Sym => ClassSet::from_raw(SYM),
        SpaceName::PiezLaw => return golden_piezlaw().catalog(),
    }
    .expect("builtin catalogs are valid");
    IsotropyCatalog { space, classes }
}

/// A printed class list together with its canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrintedList {
    pub printed: Vec<String>,
    pub canonical: ClassSet,
    /// Groups of printed names denoting the same class.
    pub collisions: Vec<(ClassLabel, Vec<String>)>,
}

impl PrintedList {
    pub fn parse<'a>(names: impl IntoIterator<Item = &'a str>) -> Result<Self, PiezoError> {
        let mut by_class: BTreeMap<ClassLabel, Vec<String>> = BTreeMap::new();
        let mut printed = Vec::new();
        for (i, name) in names.into_iter().enumerate() {
            let label: ClassLabel = name.parse().map_err(|source| PiezoError::Catalog { line: i + 1, source })?;
            by_class.entry(label).or_default().push(name.to_string());
            printed.push(name.to_string());
        }
        let canonical = by_class.keys().copied().collect();
        let collisions = by_class.into_iter().filter(|(_, names)| names.len() > 1).collect();
        Ok(Self { printed, canonical, collisions })
    }

    fn catalog(&self) -> IsotropyCatalog {
        IsotropyCatalog { space: SpaceName::PiezLaw, classes: self.canonical.clone() }
    }
}

/// The printed class list of the coupled law.
pub fn golden_piezlaw() -> PrintedList {
    PrintedList::parse(PIEZLAW_PRINTED).expect("printed list is valid")
}

/// Reads a catalog: one label per line; blank lines and `#` comments are
/// skipped.
pub fn read_catalog(text: &str) -> Result<PrintedList, PiezoError> {
    let names: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty())
        .collect();
    for &(line, name) in &names {
        name.parse::<ClassLabel>().map_err(|source| PiezoError::Catalog { line, source })?;
    }
    PrintedList::parse(names.into_iter().map(|(_, name)| name))
}

/// Writes one canonical label per line.
pub fn write_catalog(classes: &ClassSet) -> String {
    classes.iter().map(|label| format!("{label}\n")).collect()
}

/// Which pairs of the last fold step produced each class.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DirectSum {
    pub classes: ClassSet,
    pub provenance: BTreeMap<ClassLabel, Vec<(ClassLabel, ClassLabel)>>,
}

/// Isotropy classes of the direct sum of the given spaces: the left fold of
/// family clips over the catalogs.
pub fn isotropy_direct_sum(engine: &ClipsEngine, catalogs: &[IsotropyCatalog]) -> Result<DirectSum, PiezoError> {
    let (first, rest) = catalogs.split_first().ok_or(PiezoError::EmptySum)?;
    let mut acc = DirectSum {
        classes: first.classes.clone(),
        provenance: first.classes.iter().map(|&label| (label, Vec::new())).collect(),
    };
    for catalog in rest {
        let mut next = DirectSum::default();
        for &a in &acc.classes {
            for &b in &catalog.classes {
                for x in engine.clips(a, b)? {
                    next.classes.insert(x);
                    next.provenance.entry(x).or_default().push((a, b));
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Classes of `Ela ⊕ Piez ⊕ Sym`.
pub fn compute_piez(engine: &ClipsEngine) -> Result<(IsotropyCatalog, DirectSum), PiezoError> {
    let sum = isotropy_direct_sum(
        engine,
        &[builtin_isotropy(SpaceName::Ela), builtin_isotropy(SpaceName::Piez), builtin_isotropy(SpaceName::Sym)],
    )?;
    Ok((IsotropyCatalog { space: SpaceName::PiezLaw, classes: sum.classes.clone() }, sum))
}

/// Difference between a computed and an expected class set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogDiff {
    /// Expected but not computed.
    pub missing: Vec<ClassLabel>,
    /// Computed but not expected, with the pairs that produced them.
    pub extra: Vec<(ClassLabel, Vec<(ClassLabel, ClassLabel)>)>,
}

impl CatalogDiff {
    pub fn new(computed: &DirectSum, expected: &ClassSet) -> Self {
        let missing = expected.difference(&computed.classes).into_iter().collect();
        let extra = computed
            .classes
            .difference(expected)
            .into_iter()
            .map(|x| (x, computed.provenance.get(&x).cloned().unwrap_or_default()))
            .collect();
        Self { missing, extra }
    }

    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

impl fmt::Display for CatalogDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.missing {
            writeln!(f, "missing {x}")?;
        }
        for (x, pairs) in &self.extra {
            let pairs: Vec<String> = pairs.iter().map(|(a, b)| format!("[{a}]o[{b}]")).collect();
            writeln!(f, "extra {x} from {}", pairs.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> ClassSet {
        ClassSet::parse_list(s).unwrap()
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(builtin_isotropy(SpaceName::Ela).classes.len(), 8);
        assert_eq!(builtin_isotropy(SpaceName::Piez).classes.len(), 16);
        assert_eq!(builtin_isotropy(SpaceName::Sym).classes, set("D2+Z2c O(2)+Z2c O(3)"));
        let golden = golden_piezlaw();
        assert_eq!(golden.printed.len(), 26);
        assert_eq!(golden.canonical.len(), 25);
        assert_eq!(golden.collisions, vec![("D2^z".parse().unwrap(), vec!["D2^z".to_string(), "D2^d".to_string()])]);
    }

    #[test]
    fn fixtures_match_builtin_catalogs() {
        let fixtures = [
            (SpaceName::Ela, include_str!("../fixtures/ela.txt")),
            (SpaceName::Piez, include_str!("../fixtures/piez.txt")),
            (SpaceName::Sym, include_str!("../fixtures/sym.txt")),
            (SpaceName::PiezLaw, include_str!("../fixtures/piezlaw.txt")),
        ];
        for (space, text) in fixtures {
            let classes = builtin_isotropy(space).classes;
            assert_eq!(text, write_catalog(&classes), "{space}");
        }
    }

    #[test]
    fn space_names_parse() {
        assert_eq!("piez".parse::<SpaceName>().unwrap(), SpaceName::Piez);
        assert!("Foo".parse::<SpaceName>().is_err());
    }

    #[test]
    fn catalogs_have_extrema() {
        let e = ClipsEngine::default();
        for space in [SpaceName::Ela, SpaceName::Piez, SpaceName::Sym] {
            let catalog = builtin_isotropy(space);
            assert_eq!(catalog.greatest(&e).unwrap(), Some(ClassLabel::O3), "{space}");
            assert!(catalog.least(&e).unwrap().is_some(), "{space}");
        }
        assert_eq!(builtin_isotropy(SpaceName::Sym).least(&e).unwrap(), Some("D2+Z2c".parse().unwrap()));
    }

    #[test]
    fn single_catalog_sum_is_itself() {
        let e = ClipsEngine::default();
        let ela = builtin_isotropy(SpaceName::Ela);
        assert_eq!(isotropy_direct_sum(&e, std::slice::from_ref(&ela)).unwrap().classes, ela.classes);
        assert!(matches!(isotropy_direct_sum(&e, &[]), Err(PiezoError::EmptySum)));
    }

    #[test]
    fn catalog_text_round_trip() {
        let classes = builtin_isotropy(SpaceName::Piez).classes;
        assert_eq!(read_catalog(&write_catalog(&classes)).unwrap().canonical, classes);
        let err = read_catalog("1\n# note\nZ2\nQ7\n").unwrap_err();
        assert!(matches!(err, PiezoError::Catalog { line: 4, .. }));
    }

    #[test]
    fn diff_reports_provenance() {
        let computed = DirectSum {
            classes: set("1 Z2"),
            provenance: [("Z2".parse().unwrap(), vec![("D2".parse().unwrap(), "Z2+Z2c".parse().unwrap())])]
                .into_iter()
                .collect(),
        };
        let diff = CatalogDiff::new(&computed, &set("1 Z3"));
        assert_eq!(diff.missing, vec!["Z3".parse().unwrap()]);
        assert_eq!(diff.extra.len(), 1);
        assert!(diff.to_string().contains("extra Z2 from [D2]o[Z2+Z2c]"));
    }
}
