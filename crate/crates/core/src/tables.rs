//! Embedded Type-IV data: one-parameter rows with weights linear in a
//! parameter `n >= 1`, and sporadic rows.
//!
//! The `source` column records the singularity case each row originates from.

use std::collections::BTreeSet;

use crate::conditions::quasismooth_divisibility;
use crate::error::{Error, Result};
use crate::types::{Quintuple, Series, SeriesClass};

/// `slope·n + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub slope: i64,
    pub intercept: i64,
}

impl Affine {
    pub fn eval(&self, n: i64) -> i64 {
        self.slope * n + self.intercept
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub weights: [Affine; 4],
    pub degree: Affine,
    pub index: Affine,
    pub source: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SporadicRow {
    pub weights: [u64; 4],
    pub degree: u64,
    pub index: u64,
    pub source: &'static str,
}

const fn a(slope: i64, intercept: i64) -> Affine {
    Affine { slope, intercept }
}

const fn row(
    weights: [Affine; 4],
    degree: Affine,
    index: Affine,
    source: &'static str,
) -> TableRow {
    TableRow {
        weights,
        degree,
        index,
        source,
    }
}

const fn spor(weights: [u64; 4], degree: u64, index: u64, source: &'static str) -> SporadicRow {
    SporadicRow {
        weights,
        degree,
        index,
        source,
    }
}

pub const SERIES_ROWS: [TableRow; 35] = [
    row(
        [a(0, 1), a(3, -2), a(4, -3), a(6, -5)],
        a(12, -9),
        a(1, 0),
        "VII.2(3)",
    ),
    row(
        [a(0, 1), a(3, -2), a(4, -3), a(6, -4)],
        a(12, -8),
        a(1, 0),
        "II.2(2)",
    ),
    row(
        [a(0, 1), a(4, -3), a(6, -5), a(9, -7)],
        a(18, -14),
        a(1, 0),
        "VII.3(1)",
    ),
    row(
        [a(0, 1), a(6, -5), a(10, -8), a(15, -12)],
        a(30, -24),
        a(1, 0),
        "III.1(4)",
    ),
    row(
        [a(0, 1), a(6, -4), a(10, -7), a(15, -10)],
        a(30, -20),
        a(1, 0),
        "III.2(2)",
    ),
    row(
        [a(0, 1), a(6, -3), a(10, -5), a(15, -8)],
        a(30, -15),
        a(1, 0),
        "III.2(4)",
    ),
    row(
        [a(0, 1), a(8, -2), a(12, -3), a(18, -5)],
        a(36, -9),
        a(2, 0),
        "IV.3(3)",
    ),
    row(
        [a(0, 2), a(6, -3), a(8, -4), a(12, -7)],
        a(24, -12),
        a(2, 0),
        "II.2(4)",
    ),
    row(
        [a(0, 2), a(6, 1), a(8, 2), a(12, 3)],
        a(24, 6),
        a(2, 2),
        "II.2(1)",
    ),
    row(
        [a(0, 3), a(6, 1), a(6, 2), a(9, 3)],
        a(18, 6),
        a(3, 3),
        "II.2(1)",
    ),
    row(
        [a(0, 7), a(28, -22), a(42, -33), a(63, -53)],
        a(126, -99),
        a(7, -2),
        "XI.3(14)",
    ),
    row(
        [a(0, 7), a(28, -18), a(42, -27), a(63, -44)],
        a(126, -81),
        a(7, -1),
        "XI.3(14)",
    ),
    row(
        [a(0, 7), a(28, -17), a(42, -29), a(63, -40)],
        a(126, -80),
        a(7, 1),
        "X.3(1)",
    ),
    row(
        [a(0, 7), a(28, -13), a(42, -23), a(63, -31)],
        a(126, -62),
        a(7, 2),
        "X.3(1)",
    ),
    row(
        [a(0, 7), a(28, -10), a(42, -15), a(63, -26)],
        a(126, -45),
        a(7, 1),
        "XI.3(14)",
    ),
    row(
        [a(0, 7), a(28, -9), a(42, -17), a(63, -22)],
        a(126, -44),
        a(7, 3),
        "X.3(1)",
    ),
    row(
        [a(0, 7), a(28, -6), a(42, -9), a(63, -17)],
        a(126, -27),
        a(7, 2),
        "XI.3(14)",
    ),
    row(
        [a(0, 7), a(28, -5), a(42, -11), a(63, -13)],
        a(126, -26),
        a(7, 4),
        "X.3(1)",
    ),
    row(
        [a(0, 7), a(28, -2), a(42, -3), a(63, -8)],
        a(126, -9),
        a(7, 3),
        "XI.3(14)",
    ),
    row(
        [a(0, 7), a(28, -1), a(42, -5), a(63, -4)],
        a(126, -8),
        a(7, 5),
        "X.3(1)",
    ),
    row(
        [a(0, 7), a(28, 2), a(42, 3), a(63, 1)],
        a(126, 9),
        a(7, 4),
        "XI.3(14)",
    ),
    row(
        [a(0, 7), a(28, 3), a(42, 1), a(63, 5)],
        a(126, 10),
        a(7, 6),
        "X.3(1)",
    ),
    row(
        [a(0, 2), a(2, 1), a(2, 1), a(4, 1)],
        a(8, 4),
        a(0, 1),
        "II.3(4)",
    ),
    row(
        [a(0, 3), a(3, 0), a(3, 1), a(3, 1)],
        a(9, 3),
        a(0, 2),
        "III.5(1)",
    ),
    row(
        [a(0, 3), a(3, 1), a(3, 2), a(3, 2)],
        a(9, 6),
        a(0, 2),
        "II.5(1)",
    ),
    row(
        [a(0, 3), a(3, 1), a(3, 2), a(6, 1)],
        a(12, 5),
        a(0, 2),
        "XVIII.2(2)",
    ),
    row(
        [a(0, 3), a(3, 1), a(6, 1), a(9, 0)],
        a(18, 3),
        a(0, 2),
        "VII.3(2)",
    ),
    row(
        [a(0, 3), a(3, 1), a(6, 1), a(9, 3)],
        a(18, 6),
        a(0, 2),
        "II.2(2)",
    ),
    row(
        [a(0, 4), a(2, 1), a(2, 1), a(4, 0)],
        a(8, 4),
        a(0, 2),
        "V.3(4)",
    ),
    row(
        [a(0, 4), a(2, 3), a(4, 6), a(6, 7)],
        a(12, 18),
        a(0, 2),
        "XII.3(17)",
    ),
    row(
        [a(0, 6), a(6, -1), a(12, -4), a(18, -9)],
        a(36, -12),
        a(0, 4),
        "VII.3(2)",
    ),
    row(
        [a(0, 6), a(6, -1), a(12, -4), a(18, -3)],
        a(36, -6),
        a(0, 4),
        "IV.3(1)",
    ),
    row(
        [a(0, 6), a(6, 3), a(6, 5), a(6, 5)],
        a(18, 15),
        a(0, 4),
        "III.5(1)",
    ),
    row(
        [a(0, 8), a(4, 5), a(4, 7), a(4, 9)],
        a(12, 23),
        a(0, 6),
        "XIX.2(2)",
    ),
    row(
        [a(0, 9), a(3, 5), a(3, 8), a(6, 7)],
        a(12, 23),
        a(0, 6),
        "XIX.2(2)",
    ),
];

pub const SPORADIC_ROWS: [SporadicRow; 63] = [
    spor([1, 3, 5, 8], 16, 1, "VIII.3(5)"),
    spor([2, 3, 5, 9], 18, 1, "II.2(3)"),
    spor([3, 3, 5, 5], 15, 1, "I.19"),
    spor([3, 5, 7, 11], 25, 1, "X.2(3)"),
    spor([3, 5, 7, 14], 28, 1, "VII.4(4)"),
    spor([3, 5, 11, 18], 36, 1, "VII.3(1)"),
    spor([5, 14, 17, 21], 56, 1, "XI.3(8)"),
    spor([5, 19, 27, 31], 81, 1, "X.3(3)"),
    spor([5, 19, 27, 50], 100, 1, "VII.3(3)"),
    spor([7, 11, 27, 37], 81, 1, "X.3(4)"),
    spor([7, 11, 27, 44], 88, 1, "VII.3(5)"),
    spor([9, 15, 17, 20], 60, 1, "VII.6(3)"),
    spor([9, 15, 23, 23], 69, 1, "III.5(1)"),
    spor([11, 29, 39, 49], 127, 1, "XIX.2(2)"),
    spor([11, 49, 69, 128], 256, 1, "X.3(1)"),
    spor([13, 23, 35, 57], 127, 1, "XIX.2(2)"),
    spor([13, 35, 81, 128], 256, 1, "X.3(2)"),
    spor([1, 3, 4, 6], 12, 2, "I.3"),
    spor([1, 4, 6, 9], 18, 2, "IV.3(3)"),
    spor([1, 6, 10, 15], 30, 2, "I.4"),
    spor([2, 3, 4, 7], 14, 2, "IX.3(1)"),
    spor([3, 4, 5, 10], 20, 2, "II.3(2)"),
    spor([3, 4, 6, 7], 18, 2, "VII.3(10)"),
    spor([3, 4, 10, 15], 30, 2, "II.2(3)"),
    spor([5, 13, 19, 22], 57, 2, "X.3(3)"),
    spor([5, 13, 19, 35], 70, 2, "VII.3(3)"),
    spor([6, 9, 10, 13], 36, 2, "VII.3(8)"),
    spor([7, 8, 19, 25], 57, 2, "X.3(4)"),
    spor([7, 8, 19, 32], 64, 2, "VII.3(3)"),
    spor([9, 12, 13, 16], 48, 2, "VII.6(2)"),
    spor([9, 12, 19, 19], 57, 2, "III.5(1)"),
    spor([9, 19, 24, 31], 81, 2, "XI.3(20)"),
    spor([10, 19, 35, 43], 105, 2, "XI.3(18)"),
    spor([11, 21, 28, 47], 105, 2, "XI.3(16)"),
    spor([11, 25, 32, 41], 107, 2, "XIX.3(1)"),
    spor([11, 25, 34, 43], 111, 2, "XIX.2(2)"),
    spor([11, 43, 61, 113], 226, 2, "X.3(1)"),
    spor([13, 18, 45, 61], 135, 2, "XI.3(14)"),
    spor([13, 20, 29, 47], 107, 2, "XIX.3(1)"),
    spor([13, 20, 31, 49], 111, 2, "XIX.2(2)"),
    spor([13, 31, 71, 113], 226, 2, "X.3(2)"),
    spor([14, 17, 29, 41], 99, 2, "XIX.2(3)"),
    spor([5, 7, 11, 13], 33, 3, "X.3(3)"),
    spor([5, 7, 11, 20], 40, 3, "VII.3(3)"),
    spor([11, 21, 29, 37], 95, 3, "XIX.2(2)"),
    spor([11, 37, 53, 98], 196, 3, "X.3(1)"),
    spor([13, 17, 27, 41], 95, 3, "XIX.2(2)"),
    spor([13, 27, 61, 98], 196, 3, "X.3(2)"),
    spor([15, 19, 43, 74], 148, 3, "X.3(1)"),
    spor([9, 11, 12, 17], 45, 4, "XI.3(20)"),
    spor([10, 13, 25, 31], 75, 4, "XI.3(14)"),
    spor([11, 17, 20, 27], 71, 4, "XIX.3(1)"),
    spor([11, 17, 24, 31], 79, 4, "XIX.2(2)"),
    spor([11, 31, 45, 83], 166, 4, "X.3(1)"),
    spor([13, 14, 19, 29], 71, 4, "XIX.3(1)"),
    spor([13, 14, 23, 33], 79, 4, "XIX.2(2)"),
    spor([13, 23, 51, 83], 166, 4, "X.3(2)"),
    spor([11, 13, 19, 25], 63, 5, "XIX.2(2)"),
    spor([11, 25, 37, 68], 136, 5, "X.3(1)"),
    spor([13, 19, 41, 68], 136, 5, "X.3(2)"),
    spor([11, 19, 29, 53], 106, 6, "X.3(1)"),
    spor([13, 15, 31, 53], 106, 6, "X.3(2)"),
    spor([11, 13, 21, 38], 76, 7, "X.3(1)"),
];

impl TableRow {
    /// Weights and degree at `n`, in row order, if all are positive.
    pub fn at(&self, n: i64) -> Option<([u64; 4], u64)> {
        let mut weights = [0u64; 4];
        for (w, e) in weights.iter_mut().zip(&self.weights) {
            *w = u64::try_from(e.eval(n)).ok().filter(|&v| v > 0)?;
        }
        let degree = u64::try_from(self.degree.eval(n)).ok().filter(|&v| v > 0)?;
        Some((weights, degree))
    }

    /// The row's quintuple at `n`, with weights sorted.
    pub fn quintuple_at(&self, n: i64) -> Option<Quintuple> {
        let (weights, degree) = self.at(n)?;
        Quintuple::sorted(weights, degree).ok()
    }

    pub fn has_constant_index(&self) -> bool {
        self.index.slope == 0
    }

    fn step(&self) -> Result<[u64; 5]> {
        let mut step = [0u64; 5];
        for (s, e) in step.iter_mut().zip(&self.weights) {
            *s = u64::try_from(e.slope).map_err(|_| Error::InvalidSeries(self.source.into()))?;
        }
        step[4] = step[..4].iter().sum();
        Ok(step)
    }

    /// For a constant-index row: the series starting at the first `n >= 1`
    /// whose weights are ordered, and the sorted quintuples for the smaller
    /// `n` that precede it.
    fn constant_index_split(&self) -> Result<(Series, Vec<Quintuple>)> {
        let mut leading = Vec::new();
        for n in 1..=MAX_UNORDERED_PREFIX {
            let Some((weights, degree)) = self.at(n) else {
                continue;
            };
            if weights.windows(2).all(|w| w[0] <= w[1]) {
                let base = Quintuple::new(weights, degree)?;
                return Ok((
                    Series::new(SeriesClass::TableSeries, base, vec![self.step()?])?,
                    leading,
                ));
            }
            if let Ok(q) = Quintuple::sorted(weights, degree) {
                leading.push(q);
            }
        }
        Err(Error::InvalidSeries(format!(
            "row {} never becomes ordered",
            self.source
        )))
    }
}

/// Weights of a constant-index row are ordered from this `n` on at the latest.
const MAX_UNORDERED_PREFIX: i64 = 16;

fn quasismooth(q: &Quintuple) -> bool {
    quasismooth_divisibility(q).accepted()
}

/// The Type-IV series and sporadic quintuples of the given index.
///
/// Instantiations that fail the quasi-smoothness conditions are dropped: row
/// `(7, 28n-22, 42n-33, 63n-53)` at `n = 1` gives `(6,7,9,10,27)`, and
/// `gcd(6,10) = 2` does not divide 27.
pub fn instantiate(index: u64) -> Result<(Vec<Series>, Vec<Quintuple>)> {
    if index == 0 {
        return Err(Error::InvalidIndex(index));
    }
    let target = i64::try_from(index).map_err(|_| Error::Overflow)?;
    let mut series = Vec::new();
    let mut quintuples = BTreeSet::new();
    for row in &SERIES_ROWS {
        let Affine { slope, intercept } = row.index;
        if slope == 0 {
            if intercept == target {
                let (s, leading) = row.constant_index_split()?;
                if quasismooth(&s.base()) {
                    series.push(s);
                }
                quintuples.extend(leading.into_iter().filter(quasismooth));
            }
        } else if (target - intercept) % slope == 0 && (target - intercept) / slope >= 1 {
            if let Some(q) = row
                .quintuple_at((target - intercept) / slope)
                .filter(quasismooth)
            {
                quintuples.insert(q);
            }
        }
    }
    for r in SPORADIC_ROWS.iter().filter(|r| r.index == index) {
        let q = Quintuple::new(r.weights, r.degree)?;
        if quasismooth(&q) {
            quintuples.insert(q);
        }
    }
    Ok((series, quintuples.into_iter().collect()))
}

/// Whether the Type-IV data of `q`'s index covers `q`.
pub fn covers(q: &Quintuple) -> Result<bool> {
    let (series, quintuples) = instantiate(q.index())?;
    Ok(quintuples.contains(q) || series.iter().any(|s| s.contains(q)))
}
