//! Kähler–Einstein obstructions for a quintuple.
//!
//! - GMSY (Bishop–Lichnerowicz type): no orbifold KE metric when `I > 3·a0`.
//! - Spotti: no orbifold KE metric when `K_S²·N >= 12`, where `N` is the
//!   largest order of a local orbifold group.

use std::fmt;

use num_rational::Ratio;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::types::Quintuple;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub k_squared: Rational,
    pub n: u64,
    pub gmsy: bool,
    pub spotti: bool,
}

impl ObstructionReport {
    pub fn k_squared_n(&self) -> Rational {
        self.k_squared * Rational::from_integer(self.n as i128)
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "K^2={} N={} K^2N={} gmsy={} spotti={}",
            self.k_squared,
            self.n,
            self.k_squared_n(),
            self.gmsy,
            self.spotti
        )
    }
}

/// Anticanonical self-intersection `I²·d / (a0·a1·a2·a3)`.
pub fn k_squared(q: &Quintuple) -> Result<Rational> {
    let index = i128::from(q.index());
    let numerator = index
        .checked_mul(index)
        .and_then(|v| v.checked_mul(i128::from(q.degree())))
        .ok_or(Error::Overflow)?;
    let denominator = q
        .weights()
        .iter()
        .try_fold(1i128, |acc, &w| acc.checked_mul(i128::from(w)))
        .ok_or(Error::Overflow)?;
    Ok(Rational::new(numerator, denominator))
}

/// Largest local group order, for a general member of the family.
///
/// The vertex `P_i` lies on the surface exactly when `a_i` does not divide
/// `d`, giving a point of order `a_i`; a coordinate edge whose weights share
/// a factor `g > 1` carries points of order `g`.
pub fn max_group_order(q: &Quintuple) -> u64 {
    let a = q.weights();
    let d = q.degree();
    let vertices = a.iter().copied().filter(|&w| !d.is_multiple_of(w));
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let g = gcd(a[i], a[j]);
            if g > 1 {
                edges.push(g);
            }
        }
    }
    vertices.chain(edges).chain([1]).max().unwrap_or(1)
}

pub fn obstruction_report(q: &Quintuple) -> Result<ObstructionReport> {
    let k_squared = k_squared(q)?;
    let n = max_group_order(q);
    let product = k_squared
        .numer()
        .checked_mul(i128::from(n))
        .map(|num| Rational::new(num, *k_squared.denom()))
        .ok_or(Error::Overflow)?;
    Ok(ObstructionReport {
        k_squared,
        n,
        gmsy: q.index() > 3 * q.weight(0),
        spotti: product >= Rational::from_integer(12),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(w: [u64; 4], d: u64) -> Quintuple {
        Quintuple::new(w, d).unwrap()
    }

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn k_squared_examples() {
        assert_eq!(k_squared(&q([1, 3, 4, 8], 12)).unwrap(), r(2, 1));
        assert_eq!(k_squared(&q([2, 2, 3, 3], 6)).unwrap(), r(8, 3));
        assert_eq!(k_squared(&q([1, 1, 1, 1], 3)).unwrap(), r(3, 1));
    }

    #[test]
    fn group_order_examples() {
        assert_eq!(max_group_order(&q([1, 3, 7, 8], 15)), 8);
        assert_eq!(max_group_order(&q([2, 2, 3, 7], 10)), 7);
        assert_eq!(max_group_order(&q([2, 2, 3, 3], 6)), 3);
        assert_eq!(max_group_order(&q([1, 1, 1, 1], 3)), 1);
    }

    #[test]
    fn report_examples() {
        let rep = obstruction_report(&q([1, 3, 4, 8], 12)).unwrap();
        assert!(rep.gmsy && rep.spotti);
        assert_eq!(rep.k_squared_n(), r(16, 1));

        let rep = obstruction_report(&q([1, 3, 7, 8], 15)).unwrap();
        assert!(rep.gmsy && !rep.spotti);
        assert_eq!(rep.k_squared_n(), r(80, 7));

        let rep = obstruction_report(&q([2, 2, 3, 7], 10)).unwrap();
        assert!(!rep.gmsy && rep.spotti);
        assert_eq!(rep.k_squared_n(), r(40, 3));
        assert_eq!(
            rep.to_string(),
            "K^2=40/21 N=7 K^2N=40/3 gmsy=false spotti=true"
        );
    }
}
