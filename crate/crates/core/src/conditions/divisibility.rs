//! Conditions (i)–(vi) in divisibility form.
//!
//! `x ⋮ y` in the comments reads "x is divisible by y".

use super::{shape, ConditionReport, PAIRS, TRIPLES};
use crate::arith::{gcd, gcd3};
use crate::types::Quintuple;

fn divides(divisor: u64, value: u64) -> bool {
    value.is_multiple_of(divisor)
}

fn pair_gcds_divide_degree(q: &Quintuple) -> [bool; 6] {
    let a = q.weights();
    PAIRS.map(|(i, j)| divides(gcd(a[i], a[j]), q.degree()))
}

fn triples_coprime(q: &Quintuple) -> [bool; 4] {
    let a = q.weights();
    TRIPLES.map(|[i, j, k]| gcd3(a[i], a[j], a[k]) == 1)
}

/// Conditions (i) and (ii).
pub fn well_formed(q: &Quintuple) -> bool {
    pair_gcds_divide_degree(q).iter().all(|&b| b) && triples_coprime(q).iter().all(|&b| b)
}

fn cond_iv_per_weight(q: &Quintuple) -> [bool; 4] {
    let a = q.weights();
    let d = q.degree();
    // For every i some j (possibly i) has d - a_j ⋮ a_i.
    std::array::from_fn(|i| a.iter().any(|&aj| aj <= d && divides(a[i], d - aj)))
}

/// Condition (iv).
pub fn cond_iv(q: &Quintuple) -> bool {
    cond_iv_per_weight(q).iter().all(|&b| b)
}

/// A monomial `x_i^b_i x_j^b_j` of degree `d` with `b_i + b_j >= 2`, as the
/// five divisibility alternatives shared by (v) and the first branch of (vi).
fn pair_monomial(ai: u64, aj: u64, d: u64) -> bool {
    if divides(ai, d) || divides(aj, d) {
        return true;
    }
    if (aj <= d && divides(ai, d - aj)) || (ai <= d && divides(aj, d - ai)) {
        return true;
    }
    // b_j >= 2 with d - a_j·b_j >= 0 and ⋮ a_i.
    (2..=d / aj).any(|bj| divides(ai, d - aj * bj))
}

/// A monomial `x_i^c_i x_j^c_j x_k` of degree `d` with `c_i + c_j >= 1`.
fn pair_times(ai: u64, aj: u64, ak: u64, d: u64) -> bool {
    let Some(rest) = d.checked_sub(ak) else {
        return false;
    };
    if rest == 0 {
        return false;
    }
    if divides(ai, rest) || divides(aj, rest) {
        return true;
    }
    (1..=rest / aj).any(|cj| divides(ai, rest - aj * cj))
}

fn cond_v_per_pair(q: &Quintuple) -> Vec<((usize, usize), bool)> {
    let a = q.weights();
    let d = q.degree();
    PAIRS
        .iter()
        .filter(|&&(i, j)| gcd(a[i], a[j]) > 1)
        .map(|&(i, j)| ((i, j), pair_monomial(a[i], a[j], d)))
        .collect()
}

fn cond_vi_per_pair(q: &Quintuple) -> [bool; 6] {
    let a = q.weights();
    let d = q.degree();
    PAIRS.map(|(i, j)| {
        if pair_monomial(a[i], a[j], d) {
            return true;
        }
        // With four weights the complement {k, l} of {i, j} is unique.
        let mut rest = (0..4).filter(|&t| t != i && t != j);
        let (k, l) = (rest.next().unwrap(), rest.next().unwrap());
        pair_times(a[i], a[j], a[k], d) && pair_times(a[i], a[j], a[l], d)
    })
}

/// Conditions (v) and (vi), as `(v holds, vi holds)`.
pub fn cond_v_vi(q: &Quintuple) -> (bool, bool) {
    (
        cond_v_per_pair(q).iter().all(|&(_, b)| b),
        cond_vi_per_pair(q).iter().all(|&b| b),
    )
}

/// The full report for conditions (i)–(vi), with Types and class attached.
pub fn quasismooth_divisibility(q: &Quintuple) -> ConditionReport {
    ConditionReport {
        wf_pairs: pair_gcds_divide_degree(q),
        wf_triples: triples_coprime(q),
        nondegenerate: q.degree() > q.weight(3),
        cond_iv: cond_iv_per_weight(q),
        cond_v: cond_v_per_pair(q),
        cond_vi: cond_vi_per_pair(q),
        types: shape::detect_types(q),
        class: shape::detect_class(q),
    }
}
