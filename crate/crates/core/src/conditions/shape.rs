//! Structural Types I–III, colourful classes, and the solid/valid predicates.

use std::fmt;

use super::divisibility;
use crate::types::Quintuple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QsType {
    I,
    II,
    III,
}

/// A subset of {Type-I, Type-II, Type-III}.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct TypeSet {
    pub type_i: bool,
    pub type_ii: bool,
    pub type_iii: bool,
}

impl TypeSet {
    pub fn is_empty(&self) -> bool {
        !(self.type_i || self.type_ii || self.type_iii)
    }

    pub fn contains(&self, t: QsType) -> bool {
        match t {
            QsType::I => self.type_i,
            QsType::II => self.type_ii,
            QsType::III => self.type_iii,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = QsType> + '_ {
        [QsType::I, QsType::II, QsType::III]
            .into_iter()
            .filter(|&t| self.contains(t))
    }
}

impl fmt::Display for TypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .iter()
            .map(|t| match t {
                QsType::I => "I",
                QsType::II => "II",
                QsType::III => "III",
            })
            .collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// The `k` for which `q = (I-k, I+k, a, a+k, 2a+I+k)` with `1 <= k < I` and
/// `a >= I+k`, if any.
fn type_iii_k(q: &Quintuple) -> Option<u64> {
    let [a0, a1, a2, a3] = q.weights();
    let index = q.index();
    let k = a1.checked_sub(index)?;
    (k >= 1 && k < index && a0 + k == index && a3 == a2 + k && a2 >= index + k).then_some(k)
}

pub fn detect_types(q: &Quintuple) -> TypeSet {
    let a = q.weights();
    let index = q.index();
    let mut types = TypeSet::default();
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            if a[i] + a[j] == index {
                types.type_i = true;
            }
            // I = a_i + a_j/2, tested as 2I = 2a_i + a_j.
            if a[j].is_multiple_of(2) && 2 * index == 2 * a[i] + a[j] {
                types.type_ii = true;
            }
        }
    }
    types.type_iii = type_iii_k(q).is_some();
    types
}

/// Which of the six guarded colourful cases hold. At most one entry is ever
/// true; [`detect_class`] relies on this.
pub fn class_guards(q: &Quintuple) -> [bool; 6] {
    let [a0, a1, a2, _] = q.weights();
    let i2 = 2 * q.index();
    let index = q.index();
    [
        index == a0 + a1,
        index == a0 + a2 && index > a0 + a1,
        index == a1 + a2 && index > a0 + a2,
        i2 == 2 * a0 + a1,
        i2 == a0 + 2 * a1 && i2 > 2 * a0 + a1,
        type_iii_k(q).is_some(),
    ]
}

/// The colourful class number 1..=6 of `q`, or `None`.
pub fn detect_class(q: &Quintuple) -> Option<u8> {
    class_guards(q).iter().position(|&g| g).map(|p| p as u8 + 1)
}

/// Conditions (i)–(iv) together with one of Types I–III.
pub fn is_solid(q: &Quintuple) -> bool {
    divisibility::well_formed(q)
        && q.degree() > q.weight(3)
        && divisibility::cond_iv(q)
        && !detect_types(q).is_empty()
}

/// Conditions (i)–(vi) together with one of Types I–III.
pub fn is_valid(q: &Quintuple) -> bool {
    !detect_types(q).is_empty() && divisibility::quasismooth_divisibility(q).accepted()
}
