//! Enumeration of the colourful series of an index, and assembly of the full
//! classification with the Type-IV data merged in.
//!
//! For each class the class-defining weights range over a finite set. For
//! each choice the modulus `m` is fixed, and the series-defining weights run
//! over one period window starting at the ordering boundary, so every
//! residue class has exactly one ordered minimal representative. Each
//! representative that is solid spans a series.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arith::{div_ceil, lcm, lcm3};
use crate::conditions::{is_solid, is_valid};
use crate::error::{Error, Result};
use crate::series::{make_series, SeriesKey};
use crate::tables;
use crate::types::{Classification, Quintuple, Series};

/// Class-defining weights `(a0, a1, third)` with the modulus `m`, where
/// `third` is `a2` for classes 2 and 3 and `k` for classes 4 to 6.
#[derive(Debug, Clone, Copy)]
struct Defining {
    a0: u64,
    a1: u64,
    third: u64,
    m: u64,
}

fn defining_weights(class: u8, index: u64) -> Result<Vec<Defining>> {
    let i = index;
    let mut out = Vec::new();
    match class {
        1 => {
            for a0 in 1..=i / 2 {
                let a1 = i - a0;
                out.push(Defining {
                    a0,
                    a1,
                    third: 0,
                    m: lcm(a0, a1)?,
                });
            }
        }
        2 => {
            for a0 in 1..=i / 2 {
                for a1 in a0..i - a0 {
                    let a2 = i - a0;
                    out.push(Defining {
                        a0,
                        a1,
                        third: a2,
                        m: lcm3(a0, a1, a2)?,
                    });
                }
            }
        }
        3 => {
            for a1 in 2..=i / 2 {
                for a0 in 1..a1 {
                    let a2 = i - a1;
                    out.push(Defining {
                        a0,
                        a1,
                        third: a2,
                        m: lcm3(a0, a1, a2)?,
                    });
                }
            }
        }
        4 => {
            for k in div_ceil(i, 3).max(1)..i {
                let (a0, a1) = (i - k, 2 * k);
                out.push(Defining {
                    a0,
                    a1,
                    third: k,
                    m: lcm(a0, a1)?,
                });
            }
        }
        5 => {
            for k in 1..div_ceil(i, 3) {
                let (a0, a1) = (2 * k, i - k);
                out.push(Defining {
                    a0,
                    a1,
                    third: k,
                    m: lcm(a0, a1)?,
                });
            }
        }
        6 => {
            for k in 1..i {
                let (a0, a1) = (i - k, i + k);
                out.push(Defining {
                    a0,
                    a1,
                    third: k,
                    m: lcm3(a0, a1, k)?,
                });
            }
        }
        other => return Err(Error::InvalidClass(other)),
    }
    Ok(out)
}

/// Candidate representatives `(weights, degree)` in one period window.
fn candidates(class: u8, def: Defining) -> Vec<([u64; 4], u64)> {
    let Defining { a0, a1, third, m } = def;
    let mut out = Vec::new();
    match class {
        1 => {
            for a2 in a1..a1 + m {
                for a3 in a2..a2 + m {
                    out.push(([a0, a1, a2, a3], a2 + a3));
                }
            }
        }
        2 => {
            for a3 in third..third + m {
                out.push(([a0, a1, third, a3], a1 + a3));
            }
        }
        3 => {
            for a3 in third..third + m {
                out.push(([a0, a1, third, a3], a0 + a3));
            }
        }
        4 | 5 => {
            for a2 in a1..a1 + m {
                let a3 = a2 + third;
                out.push(([a0, a1, a2, a3], 2 * a3));
            }
        }
        6 => {
            for a2 in a1..a1 + m {
                out.push(([a0, a1, a2, a2 + third], a1 + 2 * a2));
            }
        }
        _ => {}
    }
    out
}

fn series_for(class: u8, index: u64, def: Defining) -> Result<Vec<Series>> {
    let mut out = Vec::new();
    for (weights, degree) in candidates(class, def) {
        let rep = Quintuple::new(weights, degree)?;
        debug_assert_eq!(rep.index(), index);
        if !is_solid(&rep) {
            continue;
        }
        if !is_valid(&rep) {
            return Err(Error::SolidNotValid(rep.to_string()));
        }
        out.push(make_series(class, rep, def.m)?);
    }
    Ok(out)
}

/// Every series of the given colourful class at `index`.
pub fn enumerate_class(class: u8, index: u64) -> Result<Vec<Series>> {
    if index == 0 {
        return Err(Error::InvalidIndex(index));
    }
    let defs = defining_weights(class, index)?;
    let per_def: Vec<Vec<Series>> = defs
        .into_par_iter()
        .map(|def| series_for(class, index, def))
        .collect::<Result<_>>()?;
    Ok(per_def.into_iter().flatten().collect())
}

/// The full classification for `index`: colourful series of all six classes
/// plus the Type-IV data, deduplicated and deterministically ordered.
pub fn classify_index(index: u64) -> Result<Classification> {
    if index == 0 {
        return Err(Error::InvalidIndex(index));
    }
    let colourful: Vec<Vec<Series>> = (1..=6u8)
        .into_par_iter()
        .map(|class| enumerate_class(class, index))
        .collect::<Result<_>>()?;
    let (table_series, table_quintuples) = tables::instantiate(index)?;

    let mut by_key: BTreeMap<SeriesKey, Series> = BTreeMap::new();
    for s in colourful.into_iter().flatten().chain(table_series) {
        by_key
            .entry(s.canonical_key())
            .or_insert_with(|| s.canonicalized());
    }

    let mut sporadic: Vec<Quintuple> = table_quintuples
        .into_iter()
        .filter(|q| !by_key.values().any(|s| s.contains(q)))
        .collect();
    sporadic.sort_unstable();
    sporadic.dedup();

    let (two_param, one_param) = by_key.into_values().partition(|s| s.parameter_count() == 2);
    Ok(Classification {
        index,
        two_param,
        one_param,
        sporadic,
    })
}

impl Classification {
    pub fn series(&self) -> impl Iterator<Item = &Series> {
        self.two_param.iter().chain(&self.one_param)
    }

    /// Every member of every series with `a3 <= bound`, plus the sporadic
    /// quintuples within the bound, as a sorted set.
    pub fn members(&self, bound: u64) -> std::collections::BTreeSet<Quintuple> {
        let mut out: std::collections::BTreeSet<Quintuple> =
            self.series().flat_map(|s| s.expand(bound)).collect();
        out.extend(self.sporadic.iter().filter(|q| q.weight(3) <= bound));
        out
    }
}
