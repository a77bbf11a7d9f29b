//! Brute-force ground truth.
//!
//! [`brute_force`] enumerates every ordered weight system up to a bound and
//! keeps those passing the monomial-form conditions. It depends on nothing
//! but [`crate::conditions::monomial`]; classes, series and tables are never
//! consulted.

use rayon::prelude::*;

use crate::conditions::{detect_class, detect_types, monomial::quasismooth_monomial, TypeSet};
use crate::error::Result;
use crate::tables;
use crate::types::Quintuple;

/// All quasi-smooth well-formed quintuples of the given index with
/// `a3 <= bound`, sorted.
pub fn brute_force(index: u64, bound: u64) -> Vec<Quintuple> {
    if index == 0 || bound == 0 {
        return Vec::new();
    }
    let mut hits: Vec<Quintuple> = (1..=bound)
        .into_par_iter()
        .flat_map_iter(|a0| {
            let mut local = Vec::new();
            for a1 in a0..=bound {
                for a2 in a1..=bound {
                    // d > a3 is equivalent to a0 + a1 + a2 > I.
                    if a0 + a1 + a2 <= index {
                        continue;
                    }
                    for a3 in a2..=bound {
                        let degree = a0 + a1 + a2 + a3 - index;
                        let Ok(q) = Quintuple::new([a0, a1, a2, a3], degree) else {
                            continue;
                        };
                        if quasismooth_monomial(&q) {
                            local.push(q);
                        }
                    }
                }
            }
            local
        })
        .collect();
    hits.sort_unstable();
    hits
}

/// How one oracle hit is accounted for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coverage {
    pub quintuple: Quintuple,
    pub types: TypeSet,
    pub class: Option<u8>,
    pub table_covered: bool,
}

impl Coverage {
    pub fn covered(&self) -> bool {
        !self.types.is_empty() || self.table_covered
    }
}

/// Diagnoses every oracle hit by Type, class and table coverage.
pub fn type_coverage(index: u64, bound: u64) -> Result<Vec<Coverage>> {
    let hits = brute_force(index, bound);
    if hits.is_empty() {
        return Ok(Vec::new());
    }
    let (series, quintuples) = tables::instantiate(index)?;
    Ok(hits
        .into_iter()
        .map(|q| Coverage {
            quintuple: q,
            types: detect_types(&q),
            class: detect_class(&q),
            table_covered: quintuples.contains(&q) || series.iter().any(|s| s.contains(&q)),
        })
        .collect())
}
