//! Regular elements of Z/nZ.
//!
//! An element m of Z_n is regular when m^2 x = m (mod n) for some x, or
//! equivalently when gcd(m, n) is a unitary divisor of n. This crate
//! implements the five classical regularity tests, constructive
//! witnesses and pseudo-inverses, enumeration of the regular set, four
//! independent algorithms for its cardinality rho(n) (OEIS A055653),
//! the bijection onto reduced fractions with unitary denominators, and
//! a linear sieve that tabulates phi and rho over dense ranges.

pub mod arith;
pub mod bijection;
pub mod error;
pub mod regular;
pub mod sieve;

pub use arith::{
    factorize, gcd, is_prime, is_unitary_divisor, totient, unitary_divisors, valuation,
    PrimeFactorization, Valuation, MAX_VALUE,
};
pub use bijection::{
    from_reduced_fraction, group_by_denominator, to_reduced_fraction, ReducedFraction,
};
pub use error::{Error, Result};
pub use regular::{
    cross_validate, cross_validate_capped, enumerate_regulars, is_regular, rho, rho_bruteforce,
    rho_bruteforce_capped, rho_inclusion_exclusion, rho_subset_totients, witness, Method,
    RegularityWitness, RhoReport, DEFAULT_BRUTE_CAP,
};
pub use sieve::SieveTable;
