//! Exact integer helpers.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple of two positive integers, failing on overflow.
pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::NonPositive(0));
    }
    if b == 0 {
        return Err(Error::NonPositive(0));
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::Overflow)
}

pub fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(a, gcd(b, c))
}

pub fn lcm3(a: u64, b: u64, c: u64) -> Result<u64> {
    lcm(a, lcm(b, c)?)
}

pub fn gcd_list(values: &[u64]) -> Result<u64> {
    let (&first, rest) = values.split_first().ok_or(Error::EmptyList)?;
    Ok(rest.iter().fold(first, |acc, &v| gcd(acc, v)))
}

pub fn lcm_list(values: &[u64]) -> Result<u64> {
    if values.is_empty() {
        return Err(Error::EmptyList);
    }
    values.iter().try_fold(1, |acc, &v| lcm(acc, v))
}

pub fn div_ceil(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}
