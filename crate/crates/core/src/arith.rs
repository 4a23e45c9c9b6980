//! Exact integer arithmetic over the u64 domain: gcd, primality,
//! factorization, Euler's totient, unitary divisors, and p-adic
//! valuations.

use crate::error::{Error, Result};

/// Largest supported input value, 2^63 - 1. Everything above is rejected
/// as a domain error rather than risking overflow in intermediates.
pub const MAX_VALUE: u64 = (1u64 << 63) - 1;

/// Greatest common divisor, with `gcd(0, 0) = 0` and `gcd(0, n) = n`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `a * b mod n` through a 128-bit intermediate.
pub(crate) fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, n);
        }
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    acc
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin; the fixed witness set decides primality
/// for every n < 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho. Returns a nontrivial factor; `n` must be odd,
/// composite, and free of the trial-division primes in `MR_BASES`.
fn pollard_rho(n: u64) -> u64 {
    let step = |x: u64, c: u64| {
        let v = mulmod(x, x, n) as u128 + c as u128;
        (v % n as u128) as u64
    };
    for c in 1u64.. {
        let mut x = 2u64;
        let mut y = 2u64;
        let mut saved = 2u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut r = 1usize;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y, c);
            }
            let mut k = 0usize;
            while k < r && g == 1 {
                saved = y;
                let batch = 128.min(r - k);
                for _ in 0..batch {
                    y = step(y, c);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += batch;
            }
            r *= 2;
        }
        if g == n {
            // The batched gcd skipped past the factor; replay one step at
            // a time from the last checkpoint.
            g = 1;
            let mut ys = saved;
            while g == 1 {
                ys = step(ys, c);
                g = gcd(x.abs_diff(ys), n);
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("pollard_rho: some polynomial x^2 + c splits every composite")
}

/// A positive integer together with its prime factorization. Factors are
/// (prime, multiplicity) pairs with primes strictly increasing; the empty
/// list represents 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// The (prime, multiplicity) pairs, primes increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The distinct prime divisors, increasing.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Multiplicity of `p` in the factorization; 0 when p does not divide
    /// the value.
    pub fn multiplicity(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Number of distinct prime divisors.
    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }
}

/// Exact prime factorization of `n` in 1..=2^63-1. Small primes are
/// stripped by trial division, the rest split by Miller-Rabin plus
/// Pollard rho.
pub fn factorize(n: u64) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(Error::Domain("factorize: n must be positive".into()));
    }
    if n > MAX_VALUE {
        return Err(Error::Domain(format!("factorize: {n} exceeds 2^63 - 1")));
    }
    let mut rest = n;
    let mut primes = Vec::new();
    for p in MR_BASES {
        while rest % p == 0 {
            primes.push(p);
            rest /= p;
        }
    }
    if rest > 1 {
        split(rest, &mut primes);
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(PrimeFactorization { value: n, factors })
}

fn split(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

/// A p-adic multiplicity. `Infinite` is the valuation of 0, which every
/// prime power divides; the derived ordering puts it above every
/// `Finite` value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn is_zero(self) -> bool {
        self == Valuation::Finite(0)
    }

    pub fn at_least(self, e: u32) -> bool {
        match self {
            Valuation::Finite(k) => k >= e,
            Valuation::Infinite => true,
        }
    }
}

/// Largest e with p^e | n, or `Infinite` for n = 0.
pub fn valuation(n: u64, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Ok(Valuation::Infinite);
    }
    let mut e = 0u32;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    Ok(Valuation::Finite(e))
}

/// Euler's totient from the factorization: phi = prod p^(e-1) (p - 1).
pub fn totient(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    let mut phi = 1u64;
    for &(p, e) in f.factors() {
        phi *= p.pow(e - 1) * (p - 1);
    }
    Ok(phi)
}

/// All unitary divisors of `n` in increasing order: products of full
/// prime-power components, one per subset of the prime divisors, so
/// there are 2^omega(n) of them.
pub fn unitary_divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut divs = Vec::with_capacity(1usize << f.num_primes());
    divs.push(1u64);
    for &(p, e) in f.factors() {
        let q = p.pow(e);
        let len = divs.len();
        for i in 0..len {
            divs.push(divs[i] * q);
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// True iff d | n and gcd(d, n/d) = 1, written d || n. Total: returns
/// false for arguments outside the positive domain.
pub fn is_unitary_divisor(d: u64, n: u64) -> bool {
    if d == 0 || n == 0 || n % d != 0 {
        return false;
    }
    gcd(d, n / d) == 1
}

/// Inverse of `a` modulo `m` as the smallest non-negative representative,
/// or None when gcd(a, m) != 1. Everything is invertible mod 1, with
/// inverse 0.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}
