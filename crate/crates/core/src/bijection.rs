//! The bijection between Z_n^reg and reduced fractions k/d whose
//! denominators are the unitary divisors of n: a regular m maps to m/n in
//! lowest terms, and k/d maps back to k(n/d). Grouping the fractions by
//! denominator splits rho(n) into phi(d)-sized classes.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{gcd, is_unitary_divisor};
use crate::error::{Error, Result};
use crate::regular::{enumerate_regulars, is_regular, Method};

/// A fraction k/d in lowest terms with 0 <= k < d; k = 0 occurs only as
/// 0/1, which represents the element 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ReducedFraction {
    numerator: u64,
    denominator: u64,
}

impl ReducedFraction {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Domain("fraction denominator must be positive".into()));
        }
        if numerator >= denominator {
            return Err(Error::Domain(format!(
                "fraction {numerator}/{denominator} not in [0, 1)"
            )));
        }
        if gcd(numerator, denominator) != 1 {
            return Err(Error::Domain(format!(
                "fraction {numerator}/{denominator} not in lowest terms"
            )));
        }
        if numerator == 0 && denominator != 1 {
            return Err(Error::Domain("zero numerator requires denominator 1".into()));
        }
        Ok(ReducedFraction {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Map a regular element m to m/n in lowest terms. The resulting
/// denominator is always a unitary divisor of n.
pub fn to_reduced_fraction(m: u64, n: u64) -> Result<ReducedFraction> {
    if !is_regular(m, n, Method::UnitaryGcd)? {
        return Err(Error::NotRegular { m, n });
    }
    let g = gcd(m, n);
    ReducedFraction::new(m / g, n / g)
}

/// Inverse map: k/d with d || n comes from the regular element k(n/d).
pub fn from_reduced_fraction(f: ReducedFraction, n: u64) -> Result<u64> {
    let d = f.denominator();
    if !is_unitary_divisor(d, n) {
        return Err(Error::NotUnitary { d, n });
    }
    Ok(f.numerator() * (n / d))
}

/// The reduced fractions of all regular elements, grouped by denominator.
/// Keys are exactly the unitary divisors of n, the group for d holds
/// phi(d) fractions sorted by numerator, and the total count is rho(n).
pub fn group_by_denominator(n: u64) -> Result<BTreeMap<u64, Vec<ReducedFraction>>> {
    let mut groups: BTreeMap<u64, Vec<ReducedFraction>> = BTreeMap::new();
    for m in enumerate_regulars(n)? {
        let f = to_reduced_fraction(m, n)?;
        // m = k(n/d) is increasing in k for fixed d, so each group is
        // already sorted by numerator.
        groups.entry(f.denominator()).or_default().push(f);
    }
    Ok(groups)
}
