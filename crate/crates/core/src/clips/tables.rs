//! Closed forms for `[Γ] ∘ [H ⊕ Z2c]` with `Γ` of type III.
//!
//! Each cell is a list of branches, tried in order; a branch is a condition
//! on the row parameter `m` and column parameter `n` together with member
//! templates evaluated with
//!
//! * `d = gcd(m, n)`, `d_k = gcd(k, n)`, `d'_k = gcd(k, m)`;
//! * `Z(n) = Z2` for even `n`, `Z2^-` otherwise;
//! * `Γ(m, n)`: `{D2, D2^z}`, `{D2^z}`, `{Z2}` or `{Z2^-}` according to the
//!   parities of `m` and `n` (even/even, even/odd, odd/even, odd/odd);
//! * `L_O = {1, Z2, Z2^-, Γ(n, 3), Z_{d_3}, D_{d_3}, D_{d_3}^z}`.
//!
//! Subscripts are written as group orders: `Z_k^-` has order `k`, `D_k^d`
//! has order `2k`. Every cell additionally contains the trivial class.
//!
//! The published data is kept verbatim in [`published_branches`]; the
//! branches actually used by [`clips_type2_type3`] are the published ones
//! plus the documented [`ERRATA`].

use std::fmt;

use num_integer::Integer;

use crate::class::{minus_from_subscript, ClassLabel, ClassSet, Improper, LabelError, Rotational, TypeKind};

use super::ClipsError;

/// `Z(n)`.
pub fn zee(n: u32) -> ClassLabel {
    if n.is_multiple_of(2) {
        ClassLabel::TypeI(Rotational::Cyclic(2))
    } else {
        ClassLabel::TypeIII(Improper::CyclicMinus(1))
    }
}

/// `Γ(m, n)`.
pub fn gamma(m: u32, n: u32) -> ClassSet {
    let d2 = ClassLabel::TypeI(Rotational::Dihedral(2));
    let d2z = ClassLabel::TypeIII(Improper::DihedralZ(2));
    match (m.is_multiple_of(2), n.is_multiple_of(2)) {
        (true, true) => [d2, d2z].into_iter().collect(),
        (true, false) => ClassSet::singleton(d2z),
        (false, true) => ClassSet::singleton(ClassLabel::TypeI(Rotational::Cyclic(2))),
        (false, false) => ClassSet::singleton(ClassLabel::TypeIII(Improper::CyclicMinus(1))),
    }
}

/// `L_O` for the column parameter `n`, with `Γ(n, 3)` taken literally.
pub fn ell_octa(n: u32) -> ClassSet {
    let d3 = n.gcd(&3);
    let mut set: ClassSet = [
        ClassLabel::TRIVIAL,
        ClassLabel::TypeI(Rotational::Cyclic(2)),
        ClassLabel::TypeIII(Improper::CyclicMinus(1)),
    ]
    .into_iter()
    .collect();
    set.extend(gamma(n, 3));
    set.extend(
        [
            ClassLabel::TypeI(Rotational::Cyclic(d3)),
            ClassLabel::TypeI(Rotational::Dihedral(d3)),
            ClassLabel::TypeIII(Improper::DihedralZ(d3)),
        ]
        .into_iter()
        .map(|l| l.canonicalize().expect("positive subscript")),
    );
    set
}

/// Row families: `H ⊕ Z2c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowFamily {
    /// `Z_m ⊕ Z2c`
    Cyclic,
    /// `D_m ⊕ Z2c`
    Dihedral,
    Octa,
    Tetra,
    Icosa,
    SO2,
    O2,
}

/// Column families: the type III classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColumnFamily {
    /// `Z_{2n}^-`
    CyclicMinus,
    /// `D_n^z`
    DihedralZ,
    /// `D_{2n}^d`
    DihedralD,
    OctaMinus,
    O2Minus,
}

impl RowFamily {
    pub const ALL: [RowFamily; 7] = [
        RowFamily::Cyclic,
        RowFamily::Dihedral,
        RowFamily::Octa,
        RowFamily::Tetra,
        RowFamily::Icosa,
        RowFamily::SO2,
        RowFamily::O2,
    ];

    pub fn is_parametrized(self) -> bool {
        matches!(self, RowFamily::Cyclic | RowFamily::Dihedral)
    }

    /// The row class for parameter `m` (ignored for fixed rows).
    pub fn label(self, m: u32) -> Result<ClassLabel, LabelError> {
        let inner = match self {
            RowFamily::Cyclic => Rotational::Cyclic(m),
            RowFamily::Dihedral => Rotational::Dihedral(m),
            RowFamily::Octa => Rotational::Octa,
            RowFamily::Tetra => Rotational::Tetra,
            RowFamily::Icosa => Rotational::Icosa,
            RowFamily::SO2 => Rotational::SO2,
            RowFamily::O2 => Rotational::O2,
        };
        ClassLabel::TypeII(inner).canonicalize()
    }

    /// Splits a type II class into its row family and parameter.
    ///
    /// `1 ⊕ Z2c` has no row; `Z2 ⊕ Z2c` could be read as `Z_2` or `D_1`, and
    /// is read as `Z_2`.
    pub fn of(label: ClassLabel) -> Option<(RowFamily, u32)> {
        let ClassLabel::TypeII(inner) = label else { return None };
        Some(match inner {
            Rotational::Trivial | Rotational::SO3 => return None,
            Rotational::Cyclic(m) => (RowFamily::Cyclic, m),
            Rotational::Dihedral(m) => (RowFamily::Dihedral, m),
            Rotational::Tetra => (RowFamily::Tetra, 0),
            Rotational::Octa => (RowFamily::Octa, 0),
            Rotational::Icosa => (RowFamily::Icosa, 0),
            Rotational::SO2 => (RowFamily::SO2, 0),
            Rotational::O2 => (RowFamily::O2, 0),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            RowFamily::Cyclic => "Zm+Z2c",
            RowFamily::Dihedral => "Dm+Z2c",
            RowFamily::Octa => "O+Z2c",
            RowFamily::Tetra => "T+Z2c",
            RowFamily::Icosa => "I+Z2c",
            RowFamily::SO2 => "SO(2)+Z2c",
            RowFamily::O2 => "O(2)+Z2c",
        }
    }

    pub fn from_name(name: &str) -> Option<RowFamily> {
        let key = name.trim();
        RowFamily::ALL.into_iter().find(|r| {
            r.name() == key || r.name().trim_end_matches("+Z2c") == key || r.short_name() == key
        })
    }

    fn short_name(self) -> &'static str {
        match self {
            RowFamily::Cyclic => "Z",
            RowFamily::Dihedral => "D",
            _ => "",
        }
    }
}

impl ColumnFamily {
    pub const ALL: [ColumnFamily; 5] = [
        ColumnFamily::CyclicMinus,
        ColumnFamily::DihedralZ,
        ColumnFamily::DihedralD,
        ColumnFamily::OctaMinus,
        ColumnFamily::O2Minus,
    ];

    pub fn is_parametrized(self) -> bool {
        matches!(self, ColumnFamily::CyclicMinus | ColumnFamily::DihedralZ | ColumnFamily::DihedralD)
    }

    /// Smallest admissible column parameter.
    pub fn min_parameter(self) -> u32 {
        match self {
            ColumnFamily::DihedralZ => 2,
            _ => 1,
        }
    }

    pub fn label(self, n: u32) -> Result<ClassLabel, LabelError> {
        let t = match self {
            ColumnFamily::CyclicMinus => Improper::CyclicMinus(n),
            ColumnFamily::DihedralZ => Improper::DihedralZ(n),
            ColumnFamily::DihedralD => Improper::DihedralD(n),
            ColumnFamily::OctaMinus => Improper::OctaMinus,
            ColumnFamily::O2Minus => Improper::O2Minus,
        };
        t.canonicalize()
    }

    /// Splits a type III class into its column family and parameter.
    ///
    /// `D_2^z` (= `D_2^d`) is read in the `D_n^z` column with `n = 2`.
    pub fn of(label: ClassLabel) -> Option<(ColumnFamily, u32)> {
        let ClassLabel::TypeIII(t) = label else { return None };
        Some(match t {
            Improper::CyclicMinus(n) => (ColumnFamily::CyclicMinus, n),
            Improper::DihedralZ(n) => (ColumnFamily::DihedralZ, n),
            Improper::DihedralD(n) => (ColumnFamily::DihedralD, n),
            Improper::OctaMinus => (ColumnFamily::OctaMinus, 0),
            Improper::O2Minus => (ColumnFamily::O2Minus, 0),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            ColumnFamily::CyclicMinus => "Z2n^-",
            ColumnFamily::DihedralZ => "Dn^z",
            ColumnFamily::DihedralD => "D2n^d",
            ColumnFamily::OctaMinus => "O^-",
            ColumnFamily::O2Minus => "O(2)^-",
        }
    }

    pub fn from_name(name: &str) -> Option<ColumnFamily> {
        ColumnFamily::ALL.into_iter().find(|c| c.name() == name.trim())
    }
}

/// Branch guard, evaluated with the row parameter `m` and column parameter
/// `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    Always,
    /// `m/d` even.
    MOverDEven,
    /// `m` even and `m/d` odd.
    MEvenMOverDOdd,
    MOdd,
    MEven,
    /// `m` and `n` odd.
    MOddNOdd,
    /// `4 | n`.
    FourDividesN,
    /// `n` even and `4 ∤ n`.
    NEvenNotFour,
    /// `4 | m`.
    FourDividesM,
    /// `m` even and `4 ∤ m`.
    MEvenNotFour,
    /// Fallback when no earlier branch applies.
    Else,
}

impl Condition {
    pub fn holds(self, m: u32, n: u32) -> bool {
        let d = m.gcd(&n);
        match self {
            Condition::Always | Condition::Else => true,
            Condition::MOverDEven => d > 0 && (m / d).is_multiple_of(2),
            Condition::MEvenMOverDOdd => m.is_multiple_of(2) && d > 0 && (m / d) % 2 == 1,
            Condition::MOdd => m % 2 == 1,
            Condition::MEven => m.is_multiple_of(2),
            Condition::MOddNOdd => m % 2 == 1 && n % 2 == 1,
            Condition::FourDividesN => n.is_multiple_of(4),
            Condition::NEvenNotFour => n.is_multiple_of(2) && !n.is_multiple_of(4),
            Condition::FourDividesM => m.is_multiple_of(4),
            Condition::MEvenNotFour => m.is_multiple_of(2) && !m.is_multiple_of(4),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Always => "always",
            Condition::MOverDEven => "m/d even",
            Condition::MEvenMOverDOdd => "m even and m/d odd",
            Condition::MOdd => "m odd",
            Condition::MEven => "m even",
            Condition::MOddNOdd => "m odd and n odd",
            Condition::FourDividesN => "4|n",
            Condition::NEvenNotFour => "n even and 4∤n",
            Condition::FourDividesM => "4|m",
            Condition::MEvenNotFour => "m even and 4∤m",
            Condition::Else => "else",
        })
    }
}

/// Integer expressions appearing in subscripts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sub {
    Const(u32),
    M,
    N,
    /// `d = gcd(m, n)`
    Gcd,
    /// `2 gcd(m, n)`
    TwoD,
    /// `2n`
    TwoN,
    /// `d_k = gcd(k, n)`
    Dk(u32),
    /// `d'_k = gcd(k, m)`
    DPrimeK(u32),
}

impl Sub {
    fn eval(self, m: u32, n: u32) -> u32 {
        match self {
            Sub::Const(k) => k,
            Sub::M => m,
            Sub::N => n,
            Sub::Gcd => m.gcd(&n),
            Sub::TwoD => 2 * m.gcd(&n),
            Sub::TwoN => 2 * n,
            Sub::Dk(k) => k.gcd(&n),
            Sub::DPrimeK(k) => k.gcd(&m),
        }
    }
}

impl fmt::Display for Sub {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sub::Const(k) => write!(f, "{k}"),
            Sub::M => f.write_str("m"),
            Sub::N => f.write_str("n"),
            Sub::Gcd => f.write_str("d"),
            Sub::TwoD => f.write_str("2d"),
            Sub::TwoN => f.write_str("2n"),
            Sub::Dk(k) => write!(f, "d{k}"),
            Sub::DPrimeK(k) => write!(f, "d'{k}"),
        }
    }
}

/// Member templates of a branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Term {
    /// `Z_s`
    Z(Sub),
    /// `Z_s^-` (order `s`)
    ZMinus(Sub),
    /// `D_s`
    D(Sub),
    /// `D_s^z`
    Dz(Sub),
    /// `D_s^d` (order `2s`)
    Dd(Sub),
    Fixed(ClassLabel),
    /// `Z(n)`
    Zee,
    /// `Γ(a, b)`
    Gamma(Sub, Sub),
    /// `L_O`
    EllOcta,
}

impl Term {
    fn expand(self, m: u32, n: u32, out: &mut ClassSet) -> Result<(), ClipsError> {
        let raw = |label: ClassLabel| label.canonicalize().map_err(ClipsError::from);
        match self {
            Term::Z(s) => {
                out.insert(raw(ClassLabel::TypeI(Rotational::Cyclic(s.eval(m, n))))?);
            }
            Term::ZMinus(s) => {
                let k = s.eval(m, n);
                let label = minus_from_subscript(k).ok_or(ClipsError::Table(format!("Z{k}^- has odd order")))?;
                out.insert(label);
            }
            Term::D(s) => {
                out.insert(raw(ClassLabel::TypeI(Rotational::Dihedral(s.eval(m, n))))?);
            }
            Term::Dz(s) => {
                out.insert(raw(ClassLabel::TypeIII(Improper::DihedralZ(s.eval(m, n))))?);
            }
            Term::Dd(s) => {
                let k = s.eval(m, n);
                if k % 2 != 0 {
                    return Err(ClipsError::Table(format!("D{k}^d has odd subscript")));
                }
                out.insert(raw(ClassLabel::TypeIII(Improper::DihedralD(k / 2)))?);
            }
            Term::Fixed(label) => {
                out.insert(raw(label)?);
            }
            Term::Zee => {
                out.insert(zee(n));
            }
            Term::Gamma(a, b) => out.extend(gamma(a.eval(m, n), b.eval(m, n))),
            Term::EllOcta => out.extend(ell_octa(n)),
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Z(s) => write!(f, "Z{s}"),
            Term::ZMinus(s) => write!(f, "Z{s}^-"),
            Term::D(s) => write!(f, "D{s}"),
            Term::Dz(s) => write!(f, "D{s}^z"),
            Term::Dd(s) => write!(f, "D{s}^d"),
            Term::Fixed(l) => write!(f, "{l}"),
            Term::Zee => f.write_str("Z(n)"),
            Term::Gamma(a, b) => write!(f, "Γ({a},{b})"),
            Term::EllOcta => f.write_str("L_O"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Branch {
    pub condition: Condition,
    pub terms: &'static [Term],
}

impl Branch {
    /// The members, including the trivial class.
    pub fn evaluate(&self, m: u32, n: u32) -> Result<ClassSet, ClipsError> {
        let mut out = ClassSet::singleton(ClassLabel::TRIVIAL);
        for term in self.terms {
            term.expand(m, n, &mut out)?;
        }
        Ok(out)
    }

    pub fn template(&self) -> String {
        let mut parts = vec!["1".to_string()];
        parts.extend(self.terms.iter().map(Term::to_string));
        parts.join(", ")
    }
}

/// A correction to a published branch of cell (`row`, `column`) guarded by
/// `condition`: whenever `applies_when` also holds, `add` is joined to the
/// published set and `remove` taken out of it.
#[derive(Debug, Clone, Copy)]
pub struct Erratum {
    pub row: RowFamily,
    pub column: ColumnFamily,
    pub condition: Condition,
    pub applies_when: Condition,
    pub add: &'static [Term],
    pub remove: &'static [Term],
    pub reason: &'static str,
}

fn expand_terms(terms: &[Term], m: u32, n: u32) -> Result<ClassSet, ClipsError> {
    let mut out = ClassSet::new();
    for term in terms {
        term.expand(m, n, &mut out)?;
    }
    Ok(out)
}

use Sub::*;
use Term::*;

const Z2: Term = Fixed(ClassLabel::TypeI(Rotational::Cyclic(2)));
const Z3: Term = Fixed(ClassLabel::TypeI(Rotational::Cyclic(3)));
const Z4: Term = Fixed(ClassLabel::TypeI(Rotational::Cyclic(4)));
const Z5: Term = Fixed(ClassLabel::TypeI(Rotational::Cyclic(5)));
const D2: Term = Fixed(ClassLabel::TypeI(Rotational::Dihedral(2)));
const D4: Term = Fixed(ClassLabel::TypeI(Rotational::Dihedral(4)));
const Z2M: Term = Fixed(ClassLabel::TypeIII(Improper::CyclicMinus(1)));
const Z4M: Term = Fixed(ClassLabel::TypeIII(Improper::CyclicMinus(2)));
const D2Z: Term = Fixed(ClassLabel::TypeIII(Improper::DihedralZ(2)));
const D3Z: Term = Fixed(ClassLabel::TypeIII(Improper::DihedralZ(3)));
const D4Z: Term = Fixed(ClassLabel::TypeIII(Improper::DihedralZ(4)));
const D5Z: Term = Fixed(ClassLabel::TypeIII(Improper::DihedralZ(5)));
const D4D: Term = Fixed(ClassLabel::TypeIII(Improper::DihedralD(2)));
const TETRA: Term = Fixed(ClassLabel::TypeI(Rotational::Tetra));
const OCTA_MINUS: Term = Fixed(ClassLabel::TypeIII(Improper::OctaMinus));
const SO2: Term = Fixed(ClassLabel::TypeI(Rotational::SO2));
const O2_MINUS: Term = Fixed(ClassLabel::TypeIII(Improper::O2Minus));

macro_rules! b {
    ($condition:expr, $terms:expr $(,)?) => {
        Branch { condition: $condition, terms: $terms }
    };
}

/// The cell exactly as published (without the trivial class, which every
/// cell contains).
pub fn published_branches(row: RowFamily, column: ColumnFamily) -> &'static [Branch] {
    use ColumnFamily as C;
    use Condition::*;
    use RowFamily as R;
    match (row, column) {
        (R::Cyclic, C::CyclicMinus) => &[b!(MOverDEven, &[ZMinus(TwoD)]), b!(Else, &[Z(Gcd)])],
        (R::Cyclic, C::DihedralZ) => &[b!(MOdd, &[Z(Gcd)]), b!(Else, &[Z(Gcd), Z2M])],
        (R::Cyclic, C::DihedralD) => &[
            b!(MOverDEven, &[Z2, Z2M, ZMinus(TwoD)]),
            b!(MEvenMOverDOdd, &[Z2, Z2M, Z(Gcd)]),
            b!(Else, &[Z(Gcd)]),
        ],
        (R::Dihedral, C::CyclicMinus) => &[b!(MOverDEven, &[ZMinus(TwoD), Zee]), b!(Else, &[Z(Gcd), Zee])],
        (R::Dihedral, C::DihedralZ) => &[
            b!(MEven, &[Z(Gcd), Z2M, Dz(Dk(2)), Dz(Gcd)]),
            b!(Else, &[Z(Gcd), Z2M, Z(Dk(2)), Dz(Gcd)]),
        ],
        (R::Dihedral, C::DihedralD) => &[
            b!(MOverDEven, &[Gamma(M, N), Z2, Z2M, ZMinus(TwoD), Dd(TwoD)]),
            b!(MEvenMOverDOdd, &[Gamma(M, N), Z2, Z2M, Z(Gcd), D(Gcd), Dz(Gcd)]),
            b!(Else, &[Gamma(M, N), Z(Gcd), D(Gcd), Dz(Gcd)]),
        ],
        (R::Octa, C::CyclicMinus) => &[
            b!(FourDividesN, &[Z2, Z(Dk(3)), Z4]),
            b!(NEvenNotFour, &[Z2, Z(Dk(3)), Z4M]),
            b!(Else, &[Z2M, Z(Dk(3))]),
        ],
        (R::Octa, C::DihedralZ) => {
            &[b!(Always, &[Z(Dk(2)), Z(Dk(3)), Z(Dk(4)), Z2M, Dz(Dk(2)), Dz(Dk(3)), Dz(Dk(4))])]
        }
        (R::Octa, C::DihedralD) => &[
            b!(FourDividesN, &[EllOcta, D2, D2Z, Z4, D4, D4Z]),
            b!(NEvenNotFour, &[EllOcta, D2, D2Z, Z4M, D4D]),
            b!(Else, &[EllOcta, D2Z]),
        ],
        (R::Tetra, C::CyclicMinus) => &[b!(Always, &[Z(Dk(3)), Zee])],
        (R::Tetra, C::DihedralZ) => &[b!(Always, &[Z2M, Z(Dk(2)), Z(Dk(3)), Dz(Dk(2))])],
        (R::Tetra, C::DihedralD) => &[b!(Always, &[Z2, Z2M, Gamma(Const(2), N), Z(Dk(3))])],
        (R::Icosa, C::CyclicMinus) => &[b!(Always, &[Zee, Z(Dk(3)), Z(Dk(5))])],
        (R::Icosa, C::DihedralZ) => {
            &[b!(Always, &[Z(Dk(2)), Z(Dk(3)), Z(Dk(5)), Z2M, Dz(Dk(2)), Dz(Dk(3)), Dz(Dk(5))])]
        }
        (R::Icosa, C::DihedralD) => &[b!(
            Always,
            &[
                Z2,
                Z2M,
                Gamma(Const(2), N),
                Gamma(Const(3), N),
                Gamma(Const(5), N),
                Z(Dk(3)),
                D(Dk(3)),
                Dz(Dk(3)),
                Z(Dk(5)),
                D(Dk(5)),
                Dz(Dk(5)),
            ],
        )],
        (R::SO2, C::CyclicMinus) => &[b!(Always, &[ZMinus(TwoN)])],
        (R::SO2, C::DihedralZ) => &[b!(Always, &[Z2M, Z(N)])],
        (R::SO2, C::DihedralD) => &[b!(Always, &[Z2, Z2M, ZMinus(TwoN)])],
        (R::O2, C::CyclicMinus) => &[b!(Always, &[Zee, ZMinus(TwoN)])],
        (R::O2, C::DihedralZ) => &[b!(Always, &[Dz(Dk(2)), Dz(N)])],
        (R::O2, C::DihedralD) => &[b!(Always, &[Zee, D(Dk(2)), D2Z, Dd(TwoN)])],
        (R::Cyclic, C::OctaMinus) => &[
            b!(FourDividesM, &[Z(DPrimeK(3)), Z2M, Z4M]),
            b!(Else, &[Z(DPrimeK(2)), Z(DPrimeK(3)), ZMinus(DPrimeK(2))]),
        ],
        (R::Cyclic, C::O2Minus) => &[b!(Always, &[Z(M), ZMinus(DPrimeK(2))])],
        (R::Dihedral, C::OctaMinus) => &[
            b!(FourDividesM, &[Z2, Z(DPrimeK(3)), Z2M, Z4M, Dz(DPrimeK(3)), D2Z, D4D]),
            b!(MEvenNotFour, &[Z2, Z(DPrimeK(3)), Z2M, D2, Dz(DPrimeK(3)), D2Z]),
            b!(Else, &[Z2, Z(DPrimeK(3)), Z2M, Dz(DPrimeK(3))]),
        ],
        (R::Dihedral, C::O2Minus) => &[b!(MEven, &[Z(M), Z2M, D2Z, Dz(M)]), b!(Else, &[Z(M), Z2, Z2M, Dz(M)])],
        (R::Octa, C::OctaMinus) => &[b!(Always, &[Z2, Z3, Z2M, Z4M, D2Z, D3Z, D4D, OCTA_MINUS])],
        (R::Octa, C::O2Minus) => &[b!(Always, &[Z2, Z3, Z4, Z2M, D2Z, D3Z, D4Z])],
        (R::Tetra, C::OctaMinus) => &[b!(Always, &[Z2, Z3, Z2M, D2, D2Z, TETRA])],
        (R::Tetra, C::O2Minus) => &[b!(Always, &[Z2, Z3, Z2M, D2Z])],
        (R::Icosa, C::OctaMinus) => &[b!(Always, &[Z2, Z2M, D2, D2Z, Z3, D3Z, TETRA])],
        (R::Icosa, C::O2Minus) => &[b!(Always, &[Z2, Z3, Z5, Z2M, D2Z, D3Z, D5Z])],
        (R::SO2, C::OctaMinus) => &[b!(Always, &[Z3, Z2M, Z4M])],
        (R::SO2, C::O2Minus) => &[b!(Always, &[Z2M, SO2])],
        (R::O2, C::OctaMinus) => &[b!(Always, &[Z2M, D3Z, D4D])],
        (R::O2, C::O2Minus) => &[b!(Always, &[D2Z, O2_MINUS])],
    }
}

const TRIVIAL: Term = Fixed(ClassLabel::TRIVIAL);

const O2_MINUS_AXIS: &str = "every plane through the axis of O(2)^- is a mirror, so a k-fold axis \
     (k >= 2) placed on it also brings the mirrors of H + Z2c through that axis; H + Z2c has such a \
     mirror exactly when H has a 2-fold axis perpendicular to it, so Z_k alone is never an intersection";

/// Documented corrections to the published cells.
///
/// Each was found by explicit intersection and is justified geometrically in
/// its `reason`.
pub const ERRATA: &[Erratum] = &[
    Erratum {
        row: RowFamily::Dihedral,
        column: ColumnFamily::DihedralZ,
        condition: Condition::MEven,
        applies_when: Condition::Always,
        add: &[Z(Dk(2))],
        remove: &[],
        reason: "for n even, a 2-fold axis of D_m placed on the axis of D_n^z with a generic twist \
                 shares only the half-turn: Z_{d_2} belongs to the m even branch as well",
    },
    Erratum {
        row: RowFamily::Dihedral,
        column: ColumnFamily::DihedralD,
        condition: Condition::Else,
        applies_when: Condition::Always,
        add: &[Z2, Z2M],
        remove: &[],
        reason: "a 2-fold axis of D_m placed on a proper secondary axis of D_2n^d with a generic twist \
                 gives Z2, and placed on a mirror normal of D_2n^d it gives Z2^- (the mirror of D_m + Z2c \
                 normal to that axis)",
    },
    Erratum {
        row: RowFamily::Dihedral,
        column: ColumnFamily::O2Minus,
        condition: Condition::MEven,
        applies_when: Condition::Always,
        add: &[],
        remove: &[Z(M)],
        reason: O2_MINUS_AXIS,
    },
    Erratum {
        row: RowFamily::Dihedral,
        column: ColumnFamily::O2Minus,
        condition: Condition::Else,
        applies_when: Condition::Always,
        add: &[],
        remove: &[Z(M)],
        reason: O2_MINUS_AXIS,
    },
    Erratum {
        row: RowFamily::Tetra,
        column: ColumnFamily::O2Minus,
        condition: Condition::Always,
        applies_when: Condition::Always,
        add: &[],
        remove: &[Z2],
        reason: O2_MINUS_AXIS,
    },
    Erratum {
        row: RowFamily::Octa,
        column: ColumnFamily::O2Minus,
        condition: Condition::Always,
        applies_when: Condition::Always,
        add: &[],
        remove: &[Z2, Z3, Z4],
        reason: O2_MINUS_AXIS,
    },
    Erratum {
        row: RowFamily::Icosa,
        column: ColumnFamily::O2Minus,
        condition: Condition::Always,
        applies_when: Condition::Always,
        add: &[],
        remove: &[Z2, Z3, Z5],
        reason: O2_MINUS_AXIS,
    },
    Erratum {
        row: RowFamily::O2,
        column: ColumnFamily::O2Minus,
        condition: Condition::Always,
        applies_when: Condition::Always,
        add: &[Z2M],
        remove: &[TRIVIAL],
        reason: "the plane spanned by the two axes is a mirror of both O(2)^- and O(2) + Z2c, so every \
                 intersection contains Z2^- and the trivial class is never attained",
    },
    Erratum {
        row: RowFamily::O2,
        column: ColumnFamily::DihedralZ,
        condition: Condition::Always,
        applies_when: Condition::Always,
        add: &[Z2M, Z(Dk(2))],
        remove: &[],
        reason: "an axis of O(2) + Z2c perpendicular to a mirror normal of D_n^z (but not to the main \
                 axis) shares only that mirror, giving Z2^-; for n even an axis perpendicular to the main \
                 axis, and to no mirror normal, shares only the half-turn about the main axis, giving Z2",
    },
    Erratum {
        row: RowFamily::O2,
        column: ColumnFamily::DihedralD,
        condition: Condition::Always,
        applies_when: Condition::Always,
        add: &[Z2M],
        remove: &[],
        reason: "an axis of O(2) + Z2c perpendicular to a mirror normal of D_2n^d, in generic position \
                 otherwise, shares only that mirror, giving Z2^-",
    },
    Erratum {
        row: RowFamily::O2,
        column: ColumnFamily::OctaMinus,
        condition: Condition::Always,
        applies_when: Condition::Always,
        add: &[Z2, D2Z],
        remove: &[],
        reason: "an axis of O(2) + Z2c in a coordinate plane, in generic position otherwise, shares only \
                 the half-turn about the normal coordinate axis (Z2); along a 2-fold edge axis of O it \
                 shares that half-turn and the two mirrors through the edge (D2^z)",
    },
    Erratum {
        row: RowFamily::Tetra,
        column: ColumnFamily::OctaMinus,
        condition: Condition::Always,
        applies_when: Condition::Always,
        add: &[],
        remove: &[D2],
        reason: "a common D2 matches the coordinate frames of both groups; the rotations preserving that \
                 frame normalize T, so the whole of T is shared and D2 is never the intersection",
    },
    Erratum {
        row: RowFamily::Icosa,
        column: ColumnFamily::OctaMinus,
        condition: Condition::Always,
        applies_when: Condition::Always,
        add: &[],
        remove: &[D2],
        reason: "a common D2 is an orthogonal triple of 2-fold axes of I, which lies in a unique \
                 tetrahedral subgroup having the same 3-fold axes as the rotations of O^-; the whole of T \
                 is then shared and D2 is never the intersection",
    },
];

/// The evaluated cell: which branch applied and the resulting set.
#[derive(Debug, Clone, PartialEq)]
pub struct CellValue {
    pub branch: Condition,
    pub template: String,
    pub published: ClassSet,
    pub result: ClassSet,
    /// Reasons of the errata that changed the published set.
    pub corrections: Vec<&'static str>,
}

/// Evaluates the cell at row parameter `m` and column parameter `n`
/// (parameters of fixed rows/columns are ignored).
pub fn table_cell(row: RowFamily, column: ColumnFamily, m: u32, n: u32) -> Result<CellValue, ClipsError> {
    let branch = published_branches(row, column)
        .iter()
        .find(|br| br.condition.holds(m, n))
        .expect("every cell ends with an unconditional branch");
    let published = branch.evaluate(m, n)?;
    let mut result = published.clone();
    let mut corrections = Vec::new();
    for erratum in ERRATA {
        if erratum.row == row
            && erratum.column == column
            && erratum.condition == branch.condition
            && erratum.applies_when.holds(m, n)
        {
            let corrected = result
                .union(&expand_terms(erratum.add, m, n)?)
                .difference(&expand_terms(erratum.remove, m, n)?);
            if corrected != result {
                corrections.push(erratum.reason);
            }
            result = corrected;
        }
    }
    Ok(CellValue { branch: branch.condition, template: branch.template(), published, result, corrections })
}

/// `[t3] ∘ [t2]` for `t3` of type III and `t2` of type II, both canonical.
pub fn clips_type2_type3(t3: ClassLabel, t2: ClassLabel) -> Result<ClassSet, ClipsError> {
    if t3.kind() != TypeKind::III || t2.kind() != TypeKind::II {
        return Err(ClipsError::WrongKinds { expected: "type III × type II", lhs: t3, rhs: t2 });
    }
    if t2 == ClassLabel::O3 {
        return Ok(ClassSet::singleton(t3));
    }
    let Some((row, m)) = RowFamily::of(t2) else {
        // 1 ⊕ Z2c meets a type III group in the identity only
        return Ok(ClassSet::singleton(ClassLabel::TRIVIAL));
    };
    let (column, n) = ColumnFamily::of(t3).expect("type III");
    Ok(table_cell(row, column, m, n)?.result)
}
