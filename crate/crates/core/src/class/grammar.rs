//! ASCII label grammar.
//!
//! ```text
//! label := "1" | "Z" INT | "D" INT | "T" | "O" | "I" | "SO(2)" | "O(2)" | "SO(3)" | "O(3)"
//!        | "Z" INT "^-" | "D" INT "^z" | "D" INT "^d" | "O^-" | "O(2)^-"
//!        | base "+Z2c"
//! ```
//!
//! The integer after `Z..^-` and `D..^d` is the subscript as written in the
//! usual notation, so `Z6^-` has order 6 and `D6^d` has order 12.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::label::{ClassLabel, Improper, Rotational};
use super::LabelError;

const CENTER_SUFFIX: &str = "+Z2c";

pub fn parse_label(text: &str) -> Result<ClassLabel, LabelError> {
    let mut cursor = Cursor { src: text, pos: 0 };
    let base = cursor.base()?;
    let label = if cursor.eat(CENTER_SUFFIX) {
        match base {
            ClassLabel::TypeI(Rotational::SO3) => {
                return Err(LabelError::Semantic {
                    pos: 0,
                    msg: "SO(3)+Z2c is spelled O(3)".into(),
                })
            }
            ClassLabel::TypeI(r) => ClassLabel::TypeII(r),
            _ => {
                return Err(LabelError::Semantic {
                    pos: 0,
                    msg: format!("'+Z2c' applies to rotation groups only, not {}", &text[..cursor.pos - CENTER_SUFFIX.len()]),
                })
            }
        }
    } else {
        base
    };
    if cursor.pos != text.len() {
        return Err(cursor.syntax("end of label"));
    }
    label.canonicalize()
}

pub fn format_label(label: ClassLabel) -> String {
    label.to_string()
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn syntax(&self, expected: &str) -> LabelError {
        LabelError::Syntax {
            pos: self.pos,
            expected: expected.to_string(),
        }
    }

    fn int(&mut self) -> Result<(usize, u32), LabelError> {
        let start = self.pos;
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.syntax("integer"));
        }
        self.pos += digits;
        let value: u32 = self.src[start..self.pos].parse().map_err(|_| LabelError::Semantic {
            pos: start,
            msg: "integer out of range".into(),
        })?;
        if value == 0 {
            return Err(LabelError::Semantic {
                pos: start,
                msg: "parameter must be at least 1".into(),
            });
        }
        Ok((start, value))
    }

    fn base(&mut self) -> Result<ClassLabel, LabelError> {
        use ClassLabel::{TypeI, TypeII, TypeIII};
        // longest spellings first
        const FIXED: [(&str, ClassLabel); 9] = [
            ("SO(2)", TypeI(Rotational::SO2)),
            ("SO(3)", TypeI(Rotational::SO3)),
            ("O(2)^-", TypeIII(Improper::O2Minus)),
            ("O(2)", TypeI(Rotational::O2)),
            ("O(3)", TypeII(Rotational::SO3)),
            ("O^-", TypeIII(Improper::OctaMinus)),
            ("O", TypeI(Rotational::Octa)),
            ("T", TypeI(Rotational::Tetra)),
            ("I", TypeI(Rotational::Icosa)),
        ];
        for (token, label) in FIXED {
            if self.eat(token) {
                return Ok(label);
            }
        }
        if self.eat("1") {
            return Ok(ClassLabel::TRIVIAL);
        }
        if self.eat("Z") {
            let (at, k) = self.int()?;
            if self.eat("^-") {
                return minus_from_subscript(k).ok_or(LabelError::Semantic {
                    pos: at,
                    msg: format!("Z{k}^- needs an even subscript"),
                });
            }
            return Ok(TypeI(Rotational::Cyclic(k)));
        }
        if self.eat("D") {
            let (at, k) = self.int()?;
            if self.eat("^z") {
                return Ok(TypeIII(Improper::DihedralZ(k)));
            }
            if self.eat("^d") {
                if k % 2 != 0 {
                    return Err(LabelError::Semantic {
                        pos: at,
                        msg: format!("D{k}^d needs an even subscript"),
                    });
                }
                return Ok(TypeIII(Improper::DihedralD(k / 2)));
            }
            return Ok(TypeI(Rotational::Dihedral(k)));
        }
        Err(self.syntax("class label"))
    }
}

/// Z_k^- by its subscript; the formal Z_1^- is the trivial group.
pub(crate) fn minus_from_subscript(k: u32) -> Option<ClassLabel> {
    match k {
        1 => Some(ClassLabel::TRIVIAL),
        k if k % 2 == 0 => Some(ClassLabel::TypeIII(Improper::CyclicMinus(k / 2))),
        _ => None,
    }
}

impl fmt::Display for Rotational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rotational::Trivial => f.write_str("1"),
            Rotational::Cyclic(n) => write!(f, "Z{n}"),
            Rotational::Dihedral(n) => write!(f, "D{n}"),
            Rotational::Tetra => f.write_str("T"),
            Rotational::Octa => f.write_str("O"),
            Rotational::Icosa => f.write_str("I"),
            Rotational::SO2 => f.write_str("SO(2)"),
            Rotational::O2 => f.write_str("O(2)"),
            Rotational::SO3 => f.write_str("SO(3)"),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::TypeI(r) => write!(f, "{r}"),
            ClassLabel::TypeII(Rotational::SO3) => f.write_str("O(3)"),
            ClassLabel::TypeII(r) => write!(f, "{r}{CENTER_SUFFIX}"),
            ClassLabel::TypeIII(t) => match t {
                Improper::CyclicMinus(n) => write!(f, "Z{}^-", 2 * n),
                Improper::DihedralZ(n) => write!(f, "D{n}^z"),
                Improper::DihedralD(n) => write!(f, "D{}^d", 2 * n),
                Improper::OctaMinus => f.write_str("O^-"),
                Improper::O2Minus => f.write_str("O(2)^-"),
            },
        }
    }
}

impl FromStr for ClassLabel {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_label(s.trim())
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClassLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_label(&text).map_err(serde::de::Error::custom)
    }
}
