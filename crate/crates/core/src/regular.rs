//! Regular elements of Z_n: an element m is regular when m^2 x = m
//! (mod n) has a solution x. This module provides five equivalent tests,
//! constructive witnesses with pseudo-inverses, enumeration of the
//! regular set, and four independent algorithms for its cardinality
//! rho(n) (OEIS A055653).

use std::fmt;

use crate::arith::{
    factorize, gcd, is_unitary_divisor, mod_inverse, mulmod, totient, unitary_divisors, valuation,
    MAX_VALUE,
};
use crate::error::{Error, Result};

/// Default bound on the O(n^2) brute-force search.
pub const DEFAULT_BRUTE_CAP: u64 = 10_000;

/// The five equivalent regularity tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Exhaustive search for x with m^2 x = m (mod n). O(n) per element;
    /// this is the ground-truth oracle, independent of gcd machinery.
    Definition,
    /// gcd(m, n) is a unitary divisor of n.
    UnitaryGcd,
    /// gcd(m^2, n) divides m.
    GcdDivides,
    /// gcd(m^2, n) = gcd(m, n).
    GcdEqual,
    /// Every prime p | n has multiplicity 0 or >= its multiplicity in n
    /// when measured in m, with m = 0 counting as infinite.
    PAdic,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Definition,
        Method::UnitaryGcd,
        Method::GcdDivides,
        Method::GcdEqual,
        Method::PAdic,
    ];
}

fn check_modulus(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("modulus must be positive".into()));
    }
    if n > MAX_VALUE {
        return Err(Error::Domain(format!("modulus {n} exceeds 2^63 - 1")));
    }
    Ok(())
}

fn check_element(m: u64, n: u64) -> Result<()> {
    check_modulus(n)?;
    if m >= n {
        return Err(Error::Domain(format!("element {m} not reduced modulo {n}")));
    }
    Ok(())
}

/// Test whether m is regular modulo n. All methods agree on every input;
/// `Definition` costs O(n), the others are cheap.
pub fn is_regular(m: u64, n: u64, method: Method) -> Result<bool> {
    check_element(m, n)?;
    Ok(match method {
        Method::Definition => {
            // Walk acc = m^2 x mod n for x = 0, 1, ... with one addition
            // per step.
            let t = mulmod(m, m, n);
            let mut acc = 0u64;
            let mut found = false;
            for _ in 0..n {
                if acc == m {
                    found = true;
                    break;
                }
                acc += t;
                if acc >= n {
                    acc -= n;
                }
            }
            found
        }
        Method::UnitaryGcd => is_unitary_divisor(gcd(m, n), n),
        Method::GcdDivides => m % gcd(mulmod(m, m, n), n) == 0,
        Method::GcdEqual => gcd(mulmod(m, m, n), n) == gcd(m, n),
        Method::PAdic => {
            let nf = factorize(n)?;
            let mut ok = true;
            for &(p, np) in nf.factors() {
                let mp = valuation(m, p).expect("factor of n is prime");
                if !(mp.is_zero() || mp.at_least(np)) {
                    ok = false;
                    break;
                }
            }
            ok
        }
    })
}

/// A constructive certificate of regularity: x solves m^2 x = m (mod n)
/// and b = xmx is a pseudo-inverse with mbm = m, bmb = b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityWitness {
    pub m: u64,
    pub n: u64,
    pub x: u64,
    pub b: u64,
}

impl RegularityWitness {
    /// Check every defining congruence.
    pub fn verify(&self) -> bool {
        let RegularityWitness { m, n, x, b } = *self;
        m < n
            && x < n
            && b < n
            && mulmod(mulmod(m, m, n), x, n) == m
            && mulmod(mulmod(m, b, n), m, n) == m
            && mulmod(mulmod(b, m, n), b, n) == b
    }
}

/// Construct the canonical witness for a regular element: x is the
/// smallest non-negative inverse of m modulo n/gcd(m, n) (zero when that
/// quotient is 1), and b = xmx mod n.
pub fn witness(m: u64, n: u64) -> Result<RegularityWitness> {
    check_element(m, n)?;
    let g = gcd(m, n);
    if !is_unitary_divisor(g, n) {
        return Err(Error::NotRegular { m, n });
    }
    let q = n / g;
    // gcd(m, q) = 1 because gcd(m/g, q) = 1 and gcd(g, q) = 1.
    let x = mod_inverse(m % q, q).expect("regular element is invertible mod n/g");
    let b = mulmod(mulmod(x, m, n), x, n);
    Ok(RegularityWitness { m, n, x, b })
}

/// All regular elements of Z_n = {0, ..., n-1}, increasing. 0 and every
/// unit are always present.
pub fn enumerate_regulars(n: u64) -> Result<Vec<u64>> {
    check_modulus(n)?;
    Ok((0..n)
        .filter(|&m| is_unitary_divisor(gcd(m, n), n))
        .collect())
}

/// rho(n) as the sum of phi(d) over the unitary divisors d of n.
pub fn rho(n: u64) -> Result<u64> {
    let mut sum = 0u64;
    for d in unitary_divisors(n)? {
        sum += totient(d).expect("unitary divisor is positive");
    }
    Ok(sum)
}

/// rho(n) as the signed double sum over subset pairs J subset I subset
/// P(n) with term (-1)^(|I|+|J|) * n / (prod_{i in I\J} i * prod_{j in J}
/// j^(e_j)), evaluated in exact signed arithmetic. Each denominator
/// divides n by construction; that is asserted, not assumed.
pub fn rho_inclusion_exclusion(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    let factors = f.factors();
    let omega = factors.len();
    let mut sum: i128 = 0;
    for i_mask in 0u32..(1u32 << omega) {
        // Submask walk visits every J subset of I, including I and the
        // empty set.
        let mut j_mask = i_mask;
        loop {
            let mut denom = 1u64;
            for (bit, &(p, e)) in factors.iter().enumerate() {
                if j_mask >> bit & 1 == 1 {
                    denom *= p.pow(e);
                } else if i_mask >> bit & 1 == 1 {
                    denom *= p;
                }
            }
            assert_eq!(n % denom, 0, "denominator {denom} must divide {n}");
            let term = (n / denom) as i128;
            if (i_mask.count_ones() + j_mask.count_ones()) % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            if j_mask == 0 {
                break;
            }
            j_mask = (j_mask - 1) & i_mask;
        }
    }
    Ok(u64::try_from(sum).expect("inclusion-exclusion sum is a non-negative count"))
}

/// rho(n) as the sum of phi(prod_{j in J} j^(e_j)) over all subsets J of
/// the prime divisors, with the totient assembled from the known prime
/// powers rather than by refactorizing.
pub fn rho_subset_totients(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    let factors = f.factors();
    let omega = factors.len();
    let mut sum = 0u64;
    for mask in 0u32..(1u32 << omega) {
        let mut phi = 1u64;
        for (bit, &(p, e)) in factors.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                phi *= p.pow(e - 1) * (p - 1);
            }
        }
        sum += phi;
    }
    Ok(sum)
}

/// rho(n) by exhaustive search over all pairs (m, x). Ground truth,
/// independent of the gcd machinery, but O(n^2): refused above `cap`.
pub fn rho_bruteforce_capped(n: u64, cap: u64) -> Result<u64> {
    check_modulus(n)?;
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut count = 0u64;
    for m in 0..n {
        let t = mulmod(m, m, n);
        let mut acc = 0u64;
        for _ in 0..n {
            if acc == m {
                count += 1;
                break;
            }
            acc += t;
            if acc >= n {
                acc -= n;
            }
        }
    }
    Ok(count)
}

/// `rho_bruteforce_capped` with the default cap.
pub fn rho_bruteforce(n: u64) -> Result<u64> {
    rho_bruteforce_capped(n, DEFAULT_BRUTE_CAP)
}

/// rho(n) computed by all four routes, for cross-validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhoReport {
    pub n: u64,
    pub rho_eq1: u64,
    pub rho_ie: u64,
    pub rho_subset: u64,
    pub rho_brute: u64,
    pub agree: bool,
}

impl fmt::Display for RhoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} eq1={} ie={} subset={} brute={} agree={}",
            self.n, self.rho_eq1, self.rho_ie, self.rho_subset, self.rho_brute, self.agree
        )
    }
}

pub fn cross_validate_capped(n: u64, cap: u64) -> Result<RhoReport> {
    let rho_eq1 = rho(n)?;
    let rho_ie = rho_inclusion_exclusion(n)?;
    let rho_subset = rho_subset_totients(n)?;
    let rho_brute = rho_bruteforce_capped(n, cap)?;
    let agree = rho_eq1 == rho_ie && rho_ie == rho_subset && rho_subset == rho_brute;
    Ok(RhoReport {
        n,
        rho_eq1,
        rho_ie,
        rho_subset,
        rho_brute,
        agree,
    })
}

/// `cross_validate_capped` with the default cap.
pub fn cross_validate(n: u64) -> Result<RhoReport> {
    cross_validate_capped(n, DEFAULT_BRUTE_CAP)
}
