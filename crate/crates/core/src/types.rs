//! Domain types shared across the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};

/// An ordered weight system `(a0,a1,a2,a3)` together with a degree `d`.
///
/// Construction enforces `1 <= a0 <= a1 <= a2 <= a3 < d` and a positive
/// index `I = a0+a1+a2+a3-d`. The index is always derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u64; 5]", into = "[u64; 5]")]
pub struct Quintuple {
    weights: [u64; 4],
    degree: u64,
}

impl Quintuple {
    pub fn new(weights: [u64; 4], degree: u64) -> Result<Self> {
        if let Some(&w) = weights.iter().find(|&&w| w == 0) {
            return Err(Error::NonPositive(w as i128));
        }
        if weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Unordered(weights));
        }
        if degree <= weights[3] {
            return Err(Error::Degenerate {
                degree,
                largest: weights[3],
            });
        }
        let sum = weight_sum(&weights)?;
        if sum <= degree {
            return Err(Error::NonPositiveIndex { weights, degree });
        }
        Ok(Self { weights, degree })
    }

    /// Builds the quintuple whose degree is `a0+a1+a2+a3-index`.
    pub fn with_index(weights: [u64; 4], index: u64) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidIndex(0));
        }
        let sum = weight_sum(&weights)?;
        let degree = sum
            .checked_sub(index)
            .ok_or(Error::NonPositiveIndex { weights, degree: 0 })?;
        Self::new(weights, degree)
    }

    /// Sorts the weights before validating.
    pub fn sorted(mut weights: [u64; 4], degree: u64) -> Result<Self> {
        weights.sort_unstable();
        Self::new(weights, degree)
    }

    pub fn weights(&self) -> [u64; 4] {
        self.weights
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn index(&self) -> u64 {
        // Validated at construction: the sum fits and exceeds the degree.
        self.weights.iter().sum::<u64>() - self.degree
    }

    pub fn to_array(&self) -> [u64; 5] {
        let [a0, a1, a2, a3] = self.weights;
        [a0, a1, a2, a3, self.degree]
    }
}

fn weight_sum(weights: &[u64; 4]) -> Result<u64> {
    weights
        .iter()
        .try_fold(0u64, |acc, &w| acc.checked_add(w))
        .ok_or(Error::Overflow)
}

impl TryFrom<[u64; 5]> for Quintuple {
    type Error = Error;

    fn try_from(v: [u64; 5]) -> Result<Self> {
        Self::new([v[0], v[1], v[2], v[3]], v[4])
    }
}

impl From<Quintuple> for [u64; 5] {
    fn from(q: Quintuple) -> Self {
        q.to_array()
    }
}

impl fmt::Display for Quintuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1, a2, a3] = self.weights;
        write!(f, "({a0},{a1},{a2},{a3},{})", self.degree)
    }
}

/// Where a series or quintuple comes from: one of the six colourful classes,
/// or the Type-IV tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SeriesClass {
    Class1,
    Class2,
    Class3,
    Class4,
    Class5,
    Class6,
    TableSeries,
    Sporadic,
}

impl SeriesClass {
    pub fn colourful(class: u8) -> Result<Self> {
        Ok(match class {
            1 => Self::Class1,
            2 => Self::Class2,
            3 => Self::Class3,
            4 => Self::Class4,
            5 => Self::Class5,
            6 => Self::Class6,
            other => return Err(Error::InvalidClass(other)),
        })
    }

    /// The class number for colourful origins.
    pub fn number(&self) -> Option<u8> {
        match self {
            Self::Class1 => Some(1),
            Self::Class2 => Some(2),
            Self::Class3 => Some(3),
            Self::Class4 => Some(4),
            Self::Class5 => Some(5),
            Self::Class6 => Some(6),
            Self::TableSeries | Self::Sporadic => None,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Self::Class1 => "class1",
            Self::Class2 => "class2",
            Self::Class3 => "class3",
            Self::Class4 => "class4",
            Self::Class5 => "class5",
            Self::Class6 => "class6",
            Self::TableSeries => "tableSeries",
            Self::Sporadic => "sporadic",
        }
    }
}

impl fmt::Display for SeriesClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Increment of `(a0,a1,a2,a3,d)` per unit of one parameter.
pub type Step = [u64; 5];

/// A parametric family `base + x·steps[0] (+ y·steps[1])` with
/// non-negative parameters; members are the ordered tuples it produces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct Series {
    pub(crate) origin: SeriesClass,
    pub(crate) base: Quintuple,
    pub(crate) steps: Vec<Step>,
    pub(crate) modulus: u64,
}

impl Series {
    /// Validates the step vectors and derives the modulus as the gcd of all
    /// weight increments.
    pub fn new(origin: SeriesClass, base: Quintuple, steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() || steps.len() > 2 {
            return Err(Error::InvalidSeries(format!(
                "expected one or two step vectors, got {}",
                steps.len()
            )));
        }
        let mut modulus = 0;
        for step in &steps {
            let weight_total = step[..4]
                .iter()
                .try_fold(0u64, |acc, &s| acc.checked_add(s))
                .ok_or(Error::Overflow)?;
            if weight_total == 0 {
                return Err(Error::InvalidSeries("zero step vector".into()));
            }
            if weight_total != step[4] {
                return Err(Error::InvalidSeries(format!(
                    "degree increment {} differs from weight increments {weight_total}",
                    step[4]
                )));
            }
            modulus = step[..4].iter().fold(modulus, |acc, &s| gcd(acc, s));
        }
        if steps.len() == 2 && steps[0] == steps[1] {
            return Err(Error::InvalidSeries("repeated step vector".into()));
        }
        Ok(Self {
            origin,
            base,
            steps,
            modulus,
        })
    }

    pub fn origin(&self) -> SeriesClass {
        self.origin
    }

    pub fn base(&self) -> Quintuple {
        self.base
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn parameter_count(&self) -> usize {
        self.steps.len()
    }

    pub fn index(&self) -> u64 {
        self.base.index()
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    base: Quintuple,
    steps: Vec<Step>,
    class: SeriesClass,
}

impl TryFrom<SeriesRepr> for Series {
    type Error = Error;

    fn try_from(r: SeriesRepr) -> Result<Self> {
        Series::new(r.class, r.base, r.steps)
    }
}

impl From<Series> for SeriesRepr {
    fn from(s: Series) -> Self {
        SeriesRepr {
            base: s.base,
            steps: s.steps,
            class: s.origin,
        }
    }
}

/// The complete answer for one index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub index: u64,
    #[serde(rename = "two_parameter_series")]
    pub two_param: Vec<Series>,
    #[serde(rename = "one_parameter_series")]
    pub one_param: Vec<Series>,
    pub sporadic: Vec<Quintuple>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quintuple_invariants() {
        let q = Quintuple::new([1, 2, 3, 5], 10).unwrap();
        assert_eq!(q.index(), 1);
        assert_eq!(q.to_string(), "(1,2,3,5,10)");
        assert_eq!(Quintuple::with_index([1, 2, 3, 5], 1), Ok(q));
        assert_eq!(Quintuple::new([3, 3, 5, 5], 15).unwrap().index(), 1);

        assert_eq!(
            Quintuple::new([2, 1, 3, 5], 10),
            Err(Error::Unordered([2, 1, 3, 5]))
        );
        assert_eq!(Quintuple::new([0, 1, 3, 5], 8), Err(Error::NonPositive(0)));
        assert_eq!(
            Quintuple::new([1, 2, 3, 5], 5),
            Err(Error::Degenerate {
                degree: 5,
                largest: 5
            })
        );
        assert!(matches!(
            Quintuple::new([1, 2, 3, 5], 11),
            Err(Error::NonPositiveIndex { .. })
        ));
        assert_eq!(
            Quintuple::new([u64::MAX - 1, u64::MAX, u64::MAX, u64::MAX], u64::MAX),
            Err(Error::Degenerate {
                degree: u64::MAX,
                largest: u64::MAX
            })
        );
        assert_eq!(
            Quintuple::with_index([u64::MAX / 2, u64::MAX / 2, u64::MAX / 2, u64::MAX / 2], 1),
            Err(Error::Overflow)
        );
        assert_eq!(
            Quintuple::sorted([7, 6, 9, 10], 27).unwrap().weights(),
            [6, 7, 9, 10]
        );
    }

    #[test]
    fn quintuple_serde_rejects_invalid() {
        let q: Quintuple = serde_json::from_str("[2,2,3,3,6]").unwrap();
        assert_eq!(q.index(), 4);
        assert!(serde_json::from_str::<Quintuple>("[3,2,3,3,6]").is_err());
    }

    #[test]
    fn series_validation() {
        let base = Quintuple::new([1, 1, 1, 1], 2).unwrap();
        let s = Series::new(
            SeriesClass::Class1,
            base,
            vec![[0, 0, 1, 0, 1], [0, 0, 0, 1, 1]],
        )
        .unwrap();
        assert_eq!(s.modulus(), 1);
        assert_eq!(s.parameter_count(), 2);
        assert!(Series::new(SeriesClass::Class1, base, vec![[0, 0, 1, 0, 2]]).is_err());
        assert!(Series::new(SeriesClass::Class1, base, vec![]).is_err());
        assert!(Series::new(SeriesClass::Class1, base, vec![[0; 5]]).is_err());

        let json = r#"{"base":[1,3,3,4,9],"steps":[[0,0,3,3,6]],"class":"class6"}"#;
        let s: Series = serde_json::from_str(json).unwrap();
        assert_eq!(s.modulus(), 3);
        assert_eq!(s.origin(), SeriesClass::Class6);
        assert_eq!(serde_json::to_string(&s).unwrap(), json);
    }
}
