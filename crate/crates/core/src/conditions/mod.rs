//! Well-formedness and quasi-smoothness conditions.
//!
//! Two independent routes decide whether a quintuple admits a quasi-smooth,
//! well-formed hypersurface:
//!
//! - [`divisibility`] states conditions (i)–(vi) as divisibility tests on the
//!   degree and weights;
//! - [`monomial`] states them as existence of monomials of degree `d`, found
//!   by bounded Diophantine search.
//!
//! [`shape`] detects the structural Types I–III and the colourful classes.

pub mod divisibility;
pub mod monomial;
pub mod shape;

pub use divisibility::{cond_iv, cond_v_vi, quasismooth_divisibility, well_formed};
pub use monomial::quasismooth_monomial;
pub use shape::{class_guards, detect_class, detect_types, is_solid, is_valid, QsType, TypeSet};

/// The six unordered index pairs, in the order used by every per-pair report.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The four index triples; triple `t` omits index `3 - t`.
pub const TRIPLES: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];

/// Per-condition outcome of the divisibility form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    /// Condition (i), per entry of [`PAIRS`]: the pair gcd divides `d`.
    pub wf_pairs: [bool; 6],
    /// Condition (ii), per entry of [`TRIPLES`]: the triple is coprime.
    pub wf_triples: [bool; 4],
    /// Condition (iii): `d > a3`.
    pub nondegenerate: bool,
    /// Condition (iv), per weight.
    pub cond_iv: [bool; 4],
    /// Condition (v), for each pair with gcd > 1.
    pub cond_v: Vec<((usize, usize), bool)>,
    /// Condition (vi), per entry of [`PAIRS`].
    pub cond_vi: [bool; 6],
    pub types: TypeSet,
    pub class: Option<u8>,
}

impl ConditionReport {
    pub fn well_formed(&self) -> bool {
        self.wf_pairs.iter().all(|&b| b) && self.wf_triples.iter().all(|&b| b)
    }

    pub fn cond_iv_holds(&self) -> bool {
        self.cond_iv.iter().all(|&b| b)
    }

    pub fn cond_v_holds(&self) -> bool {
        self.cond_v.iter().all(|&(_, b)| b)
    }

    pub fn cond_vi_holds(&self) -> bool {
        self.cond_vi.iter().all(|&b| b)
    }

    /// Conditions (i)–(vi) all pass.
    pub fn accepted(&self) -> bool {
        self.well_formed()
            && self.nondegenerate
            && self.cond_iv_holds()
            && self.cond_v_holds()
            && self.cond_vi_holds()
    }

    /// Conditions (i)–(iv) pass and some Type I–III applies.
    pub fn solid(&self) -> bool {
        self.well_formed() && self.nondegenerate && self.cond_iv_holds() && !self.types.is_empty()
    }

    pub fn valid(&self) -> bool {
        self.accepted() && !self.types.is_empty()
    }

    /// Short labels of the failing conditions, e.g. `["ii", "iv"]`.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.wf_pairs.iter().all(|&b| b) {
            out.push("i");
        }
        if !self.wf_triples.iter().all(|&b| b) {
            out.push("ii");
        }
        if !self.nondegenerate {
            out.push("iii");
        }
        if !self.cond_iv_holds() {
            out.push("iv");
        }
        if !self.cond_v_holds() {
            out.push("v");
        }
        if !self.cond_vi_holds() {
            out.push("vi");
        }
        out
    }
}
