//! Conditions (i)–(vi) in monomial form.
//!
//! Every quasi-smoothness condition is phrased as the existence of a monomial
//! of degree `d` and decided by exhaustive search over exponent vectors. This
//! shares no logic with [`super::divisibility`] and serves as its oracle.

use crate::arith::gcd;
use crate::types::Quintuple;

/// Is there a monomial `Π x_t^e_t · m` of degree `d`, where the `x_t` have
/// weights `free`, `m` is a fixed factor of weight `fixed`, all `e_t >= 0`
/// and `Σ e_t >= min_total`?
fn monomial_exists(free: &[u64], fixed: u64, d: u64, min_total: u64) -> bool {
    let Some(target) = d.checked_sub(fixed) else {
        return false;
    };
    search(free, target, min_total)
}

fn search(free: &[u64], target: u64, min_total: u64) -> bool {
    match free {
        [] => target == 0 && min_total == 0,
        [w, rest @ ..] => {
            (0..=target / w).any(|e| search(rest, target - e * w, min_total.saturating_sub(e)))
        }
    }
}

fn well_formed(a: &[u64; 4], d: u64) -> bool {
    for i in 0..4 {
        for j in i + 1..4 {
            if !d.is_multiple_of(gcd(a[i], a[j])) {
                return false;
            }
            for k in j + 1..4 {
                if gcd(gcd(a[i], a[j]), a[k]) != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// `x_i^m x_j` of degree `d` with `m >= 1`, for some `j`.
fn condition_iv(a: &[u64; 4], d: u64) -> bool {
    (0..4).all(|i| (0..4).any(|j| monomial_exists(&[a[i]], a[j], d, 1)))
}

fn condition_v(a: &[u64; 4], d: u64) -> bool {
    for i in 0..4 {
        for j in i + 1..4 {
            if gcd(a[i], a[j]) > 1 && !monomial_exists(&[a[i], a[j]], 0, d, 2) {
                return false;
            }
        }
    }
    true
}

fn condition_vi(a: &[u64; 4], d: u64) -> bool {
    for i in 0..4 {
        for j in i + 1..4 {
            if monomial_exists(&[a[i], a[j]], 0, d, 2) {
                continue;
            }
            let mut rescued = false;
            for k in 0..4 {
                for l in k + 1..4 {
                    if [i, j].contains(&k) || [i, j].contains(&l) {
                        continue;
                    }
                    rescued |= monomial_exists(&[a[i], a[j]], a[k], d, 1)
                        && monomial_exists(&[a[i], a[j]], a[l], d, 1);
                }
            }
            if !rescued {
                return false;
            }
        }
    }
    true
}

/// Well-formed and quasi-smooth, decided by monomial existence.
pub fn quasismooth_monomial(q: &Quintuple) -> bool {
    let a = q.weights();
    let d = q.degree();
    well_formed(&a, d)
        && a.iter().all(|&w| w != d)
        && condition_iv(&a, d)
        && condition_v(&a, d)
        && condition_vi(&a, d)
}
