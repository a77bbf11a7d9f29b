//! Shared fixtures: the reference small-index tables and the Johnson–Kollár
//! list, parsed from text.

#![allow(dead_code)]

use std::collections::BTreeSet;

use delpezzo::Quintuple;

const GOLDEN: &str = include_str!("../fixtures/golden_tables.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Two,
    One,
    Sporadic,
}

/// `constant + cx·x + cy·y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Linear {
    pub constant: u64,
    pub cx: u64,
    pub cy: u64,
}

impl Linear {
    pub fn at(&self, x: u64, y: u64) -> u64 {
        self.constant + self.cx * x + self.cy * y
    }
}

/// Parses `2x+3`, `x+y+2`, `3(x+y)+10`, `7`.
pub fn parse_linear(expr: &str) -> Linear {
    let mut expanded = String::new();
    let mut rest = expr;
    while let Some(open) = rest.find("(x+y)") {
        let (head, tail) = rest.split_at(open);
        let digits_start = head
            .rfind(|c: char| !c.is_ascii_digit())
            .map_or(0, |p| p + 1);
        let k = &head[digits_start..];
        let k = if k.is_empty() { "1" } else { k };
        expanded.push_str(&head[..digits_start]);
        expanded.push_str(&format!("{k}x+{k}y"));
        rest = &tail["(x+y)".len()..];
    }
    expanded.push_str(rest);
    let mut out = Linear {
        constant: 0,
        cx: 0,
        cy: 0,
    };
    for term in expanded.split('+').filter(|t| !t.is_empty()) {
        let (coef, var) = match term.strip_suffix('x') {
            Some(c) => (c, Some('x')),
            None => match term.strip_suffix('y') {
                Some(c) => (c, Some('y')),
                None => (term, None),
            },
        };
        let value: u64 = if coef.is_empty() {
            1
        } else {
            coef.parse()
                .unwrap_or_else(|_| panic!("bad term {term} in {expr}"))
        };
        match var {
            Some('x') => out.cx += value,
            Some('y') => out.cy += value,
            _ => out.constant += value,
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct GoldenEntry {
    pub index: u64,
    pub kind: Kind,
    pub weights: [Linear; 4],
    pub degree: Linear,
    pub text: String,
}

impl GoldenEntry {
    /// Ordered members with `a3 <= bound` and non-negative parameters.
    pub fn expand(&self, bound: u64) -> Vec<Quintuple> {
        let y_max = if self.kind == Kind::Two { bound } else { 0 };
        let x_max = if self.kind == Kind::Sporadic {
            0
        } else {
            bound
        };
        let mut out = Vec::new();
        for x in 0..=x_max {
            for y in 0..=y_max {
                let w = self.weights.map(|l| l.at(x, y));
                if w[3] > bound {
                    continue;
                }
                if let Ok(q) = Quintuple::new(w, self.degree.at(x, y)) {
                    out.push(q);
                }
            }
        }
        out
    }
}

pub fn golden_entries() -> Vec<GoldenEntry> {
    GOLDEN
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [index, kind, weights, degree] = fields[..] else {
                panic!("malformed fixture line {line}");
            };
            let kind = match kind {
                "two" => Kind::Two,
                "one" => Kind::One,
                "sporadic" => Kind::Sporadic,
                other => panic!("unknown kind {other}"),
            };
            let inner = weights.trim_start_matches('(').trim_end_matches(')');
            let parts: Vec<Linear> = inner.split(',').map(parse_linear).collect();
            GoldenEntry {
                index: index.parse().unwrap(),
                kind,
                weights: [parts[0], parts[1], parts[2], parts[3]],
                degree: parse_linear(degree),
                text: format!("{weights} {degree}"),
            }
        })
        .collect()
}

/// Union of all tabulated members for `index` with `a3 <= bound`.
pub fn golden_members(index: u64, bound: u64) -> BTreeSet<Quintuple> {
    golden_entries()
        .iter()
        .filter(|e| e.index == index)
        .flat_map(|e| e.expand(bound))
        .collect()
}

pub fn q(w: [u64; 4], d: u64) -> Quintuple {
    Quintuple::new(w, d).unwrap()
}

/// The 22 sporadic quintuples of the index-1 classification.
pub fn johnson_kollar_sporadic() -> Vec<Quintuple> {
    [
        ([1, 1, 1, 1], 3),
        ([1, 1, 1, 2], 4),
        ([1, 1, 2, 3], 6),
        ([1, 2, 3, 5], 10),
        ([1, 3, 5, 7], 15),
        ([1, 3, 5, 8], 16),
        ([2, 3, 5, 9], 18),
        ([3, 3, 5, 5], 15),
        ([3, 5, 7, 11], 25),
        ([3, 5, 7, 14], 28),
        ([3, 5, 11, 18], 36),
        ([5, 14, 17, 21], 56),
        ([5, 19, 27, 31], 81),
        ([5, 19, 27, 50], 100),
        ([7, 11, 27, 37], 81),
        ([7, 11, 27, 44], 88),
        ([9, 15, 17, 20], 60),
        ([9, 15, 23, 23], 69),
        ([11, 29, 39, 49], 127),
        ([11, 49, 69, 128], 256),
        ([13, 23, 35, 57], 127),
        ([13, 35, 81, 128], 256),
    ]
    .into_iter()
    .map(|(w, d)| q(w, d))
    .collect()
}
