//! Series construction, expansion, membership and canonical keys.
//!
//! A colourful tuple of class `c` spans the series obtained by shifting its
//! series-defining weights by multiples of a modulus `m`:
//!
//! | class   | m                     | step vectors                            |
//! |---------|-----------------------|-----------------------------------------|
//! | 1       | lcm(a0, a1)           | (0,0,m,0,m) and (0,0,0,m,m)             |
//! | 2, 3    | lcm(a0, a1, a2)       | (0,0,0,m,m)                             |
//! | 4, 5    | lcm(a0, a1)           | (0,0,m,m,2m)                            |
//! | 6       | lcm(I-k, I+k, k)      | (0,0,m,m,2m)                            |

use crate::arith::{lcm, lcm3};
use crate::conditions::{detect_class, is_solid};
use crate::error::{Error, Result};
use crate::types::{Quintuple, Series, SeriesClass, Step};

/// The modulus `m` of the series attached to a tuple of the given class.
pub fn class_modulus(class: u8, rep: &Quintuple) -> Result<u64> {
    let [a0, a1, a2, _] = rep.weights();
    match class {
        1 | 4 | 5 => lcm(a0, a1),
        2 | 3 => lcm3(a0, a1, a2),
        6 => {
            let k = a1
                .checked_sub(rep.index())
                .filter(|&k| k > 0)
                .ok_or_else(|| {
                    Error::InvalidSeries(format!("{rep} does not have the class-6 shape"))
                })?;
            lcm3(a0, a1, k)
        }
        other => Err(Error::InvalidClass(other)),
    }
}

/// The step vectors of a class with modulus `m`.
pub fn class_steps(class: u8, m: u64) -> Result<Vec<Step>> {
    let two_m = m.checked_mul(2).ok_or(Error::Overflow)?;
    Ok(match class {
        1 => vec![[0, 0, m, 0, m], [0, 0, 0, m, m]],
        2 | 3 => vec![[0, 0, 0, m, m]],
        4..=6 => vec![[0, 0, m, m, two_m]],
        other => return Err(Error::InvalidClass(other)),
    })
}

/// Builds the series of a solid colourful representative.
pub fn make_series(class: u8, rep: Quintuple, m: u64) -> Result<Series> {
    if !is_solid(&rep) {
        return Err(Error::NotSolid(rep.to_string()));
    }
    if detect_class(&rep) != Some(class) {
        return Err(Error::InvalidSeries(format!(
            "{rep} is not of class {class}"
        )));
    }
    let expected = class_modulus(class, &rep)?;
    if m != expected {
        return Err(Error::InvalidSeries(format!(
            "modulus {m} differs from {expected} for class {class}"
        )));
    }
    Series::new(SeriesClass::colourful(class)?, rep, class_steps(class, m)?)
}

/// Canonical identity of a series: its minimal base and sorted steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeriesKey {
    pub base: [u64; 5],
    pub steps: Vec<Step>,
}

fn offset(base: &[u64; 5], steps: &[Step], params: &[u64]) -> Option<[u64; 5]> {
    let mut out = *base;
    for (step, &p) in steps.iter().zip(params) {
        for (o, &s) in out.iter_mut().zip(step) {
            *o = o.checked_add(s.checked_mul(p)?)?;
        }
    }
    Some(out)
}

fn to_quintuple(v: [u64; 5]) -> Option<Quintuple> {
    Quintuple::new([v[0], v[1], v[2], v[3]], v[4]).ok()
}

impl Series {
    /// The member at the given parameters, if it is an ordered tuple.
    pub fn member(&self, params: &[u64]) -> Option<Quintuple> {
        if params.len() != self.steps.len() {
            return None;
        }
        offset(&self.base.to_array(), &self.steps, params).and_then(to_quintuple)
    }

    /// Largest parameter value along `step` that keeps every weight at most
    /// `bound`, starting from the base.
    fn parameter_limit(&self, step: &Step, bound: u64) -> Option<u64> {
        let base = self.base.weights();
        (0..4)
            .filter(|&i| step[i] > 0)
            .map(|i| bound.checked_sub(base[i]).map(|room| room / step[i]))
            .try_fold(u64::MAX, |acc, lim| lim.map(|l| acc.min(l)))
    }

    /// Every ordered member with `a3 <= bound`, in lexicographic parameter
    /// order.
    pub fn expand(&self, bound: u64) -> Vec<Quintuple> {
        let mut out = Vec::new();
        if bound < self.base.weight(3) {
            return out;
        }
        let limits: Option<Vec<u64>> = self
            .steps
            .iter()
            .map(|s| self.parameter_limit(s, bound))
            .collect();
        let Some(limits) = limits else {
            return out;
        };
        match limits.as_slice() {
            [x_max] => {
                out.extend((0..=*x_max).filter_map(|x| self.member(&[x])));
            }
            [x_max, y_max] => {
                for x in 0..=*x_max {
                    out.extend((0..=*y_max).filter_map(|y| self.member(&[x, y])));
                }
            }
            _ => unreachable!("series have one or two parameters"),
        }
        out.retain(|q| q.weight(3) <= bound);
        out
    }

    /// Whether `q = base + Σ params·steps` for non-negative parameters.
    pub fn contains(&self, q: &Quintuple) -> bool {
        let base = self.base.to_array();
        let target = q.to_array();
        if target.iter().zip(&base).any(|(t, b)| t < b) {
            return false;
        }
        let diff: [u64; 5] = std::array::from_fn(|i| target[i] - base[i]);
        match self.steps.as_slice() {
            [s] => single_multiple(&diff, s).is_some(),
            [s, t] => {
                let x_max = (0..5)
                    .filter(|&i| s[i] > 0)
                    .map(|i| diff[i] / s[i])
                    .min()
                    .unwrap_or(0);
                (0..=x_max).any(|x| {
                    let rest: [u64; 5] = std::array::from_fn(|i| diff[i] - s[i] * x);
                    single_multiple(&rest, t).is_some()
                })
            }
            _ => false,
        }
    }

    /// The base reached by stepping backwards while the predecessor is still
    /// an ordered tuple, and the sorted step vectors.
    pub fn canonical_key(&self) -> SeriesKey {
        let mut base = self.base.to_array();
        loop {
            let previous = self.steps.iter().find_map(|step| {
                let v: Option<Vec<u64>> = base
                    .iter()
                    .zip(step)
                    .map(|(b, s)| b.checked_sub(*s))
                    .collect();
                v.and_then(|v| to_quintuple([v[0], v[1], v[2], v[3], v[4]]))
            });
            match previous {
                Some(p) => base = p.to_array(),
                None => break,
            }
        }
        let mut steps = self.steps.clone();
        steps.sort_unstable();
        SeriesKey { base, steps }
    }

    /// A copy whose base is the canonical minimal member.
    pub fn canonicalized(&self) -> Series {
        let key = self.canonical_key();
        let base = to_quintuple(key.base).expect("canonical base is an ordered tuple");
        Series {
            origin: self.origin,
            base,
            steps: self.steps.clone(),
            modulus: self.modulus,
        }
    }
}

/// `p` with `diff = p·step`, if one exists.
fn single_multiple(diff: &[u64; 5], step: &Step) -> Option<u64> {
    let pivot = (0..5).find(|&i| step[i] > 0)?;
    if !diff[pivot].is_multiple_of(step[pivot]) {
        return None;
    }
    let p = diff[pivot] / step[pivot];
    (0..5)
        .all(|i| step[i].checked_mul(p) == Some(diff[i]))
        .then_some(p)
}
