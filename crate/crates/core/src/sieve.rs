//! Batch computation of smallest prime factors, phi(n), and rho(n) for
//! all n up to a limit. The smallest-prime-factor table comes from a
//! linear sieve; phi and rho are then assembled per index from the
//! prime-power decomposition, using rho(p^e) = 1 + phi(p^e) and
//! multiplicativity, so every entry depends only on the spf table and
//! the fill can be chunked across threads without changing the output.

use std::io::Write;
use std::thread;

use crate::error::{Error, Result};

/// Dense tables over 1..=limit. Immutable once built; safe to share.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveTable {
    limit: u32,
    spf: Vec<u32>,
    phi: Vec<u64>,
    rho: Vec<u64>,
}

impl SieveTable {
    /// Build tables for 1..=limit. The thread count shapes only the
    /// work split; the result is bit-identical for every value.
    pub fn build(limit: u64, threads: usize) -> Result<Self> {
        if limit == 0 {
            return Err(Error::Domain("sieve limit must be positive".into()));
        }
        if threads == 0 {
            return Err(Error::Domain("thread count must be positive".into()));
        }
        if limit > u32::MAX as u64 {
            return Err(Error::Resource(format!(
                "sieve limit {limit} exceeds the table bound {}",
                u32::MAX
            )));
        }
        let n = limit as usize;
        let spf = build_spf(n)?;
        let mut phi = alloc_zeroed(n + 1)?;
        let mut rho = alloc_zeroed(n + 1)?;
        fill_phi_rho(&spf, &mut phi[1..], &mut rho[1..], threads);
        Ok(SieveTable {
            limit: limit as u32,
            spf,
            phi,
            rho,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit as u64
    }

    /// Smallest prime factor of n. Panics unless 2 <= n <= limit.
    pub fn spf(&self, n: u64) -> u64 {
        assert!(n >= 2, "spf is defined for n >= 2");
        self.spf[self.index(n)] as u64
    }

    /// Euler's totient of n. Panics unless 1 <= n <= limit.
    pub fn phi(&self, n: u64) -> u64 {
        self.phi[self.index(n)]
    }

    /// Number of regular elements of Z_n. Panics unless 1 <= n <= limit.
    pub fn rho(&self, n: u64) -> u64 {
        self.rho[self.index(n)]
    }

    fn index(&self, n: u64) -> usize {
        assert!(
            n >= 1 && n <= self.limit as u64,
            "index {n} outside table range 1..={}",
            self.limit
        );
        n as usize
    }

    /// Write "n,rho(n)" CSV rows for lo..=hi after a "n,rho" header.
    /// LF line endings, no trailing blank line.
    pub fn rho_range_csv<W: Write>(&self, lo: u64, hi: u64, out: &mut W) -> Result<()> {
        if lo < 1 || lo > hi || hi > self.limit as u64 {
            return Err(Error::Domain(format!(
                "range {lo}..{hi} not within 1..{}",
                self.limit
            )));
        }
        out.write_all(b"n,rho\n")?;
        for n in lo..=hi {
            writeln!(out, "{},{}", n, self.rho[n as usize])?;
        }
        Ok(())
    }
}

fn alloc_zeroed(len: usize) -> Result<Vec<u64>> {
    let mut v: Vec<u64> = Vec::new();
    v.try_reserve_exact(len)
        .map_err(|_| Error::Resource(format!("cannot allocate {} bytes", len * 8)))?;
    v.resize(len, 0);
    Ok(v)
}

/// Linear sieve: spf[n] is the smallest prime factor of n for n >= 2
/// (and spf[p] = p for primes). Each composite is struck exactly once.
fn build_spf(n: usize) -> Result<Vec<u32>> {
    let mut spf: Vec<u32> = Vec::new();
    spf.try_reserve_exact(n + 1)
        .map_err(|_| Error::Resource(format!("cannot allocate {} bytes", (n + 1) * 4)))?;
    spf.resize(n + 1, 0);
    let mut primes: Vec<u32> = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u32);
        }
        let lp = spf[i];
        for &p in &primes {
            if p > lp {
                break;
            }
            let m = i as u64 * p as u64;
            if m > n as u64 {
                break;
            }
            spf[m as usize] = p;
        }
    }
    Ok(spf)
}

fn fill_phi_rho(spf: &[u32], phi: &mut [u64], rho: &mut [u64], threads: usize) {
    let len = phi.len();
    debug_assert_eq!(len, rho.len());
    let chunk = len.div_ceil(threads.min(len));
    thread::scope(|scope| {
        let mut phi_rest = phi;
        let mut rho_rest = rho;
        let mut base = 1u64;
        while !phi_rest.is_empty() {
            let take = chunk.min(phi_rest.len());
            let (phi_chunk, next_phi) = phi_rest.split_at_mut(take);
            let (rho_chunk, next_rho) = rho_rest.split_at_mut(take);
            phi_rest = next_phi;
            rho_rest = next_rho;
            let start = base;
            if threads == 1 {
                fill_chunk(spf, start, phi_chunk, rho_chunk);
            } else {
                scope.spawn(move || fill_chunk(spf, start, phi_chunk, rho_chunk));
            }
            base += take as u64;
        }
    });
}

fn fill_chunk(spf: &[u32], start: u64, phi: &mut [u64], rho: &mut [u64]) {
    for (i, (phi_slot, rho_slot)) in phi.iter_mut().zip(rho.iter_mut()).enumerate() {
        let (p, r) = phi_rho_of(spf, (start + i as u64) as u32);
        *phi_slot = p;
        *rho_slot = r;
    }
}

/// phi and rho of one index from its spf decomposition: per prime-power
/// component p^e, phi gains p^e - p^(e-1) and rho gains 1 + phi(p^e).
fn phi_rho_of(spf: &[u32], n: u32) -> (u64, u64) {
    let mut m = n;
    let mut phi = 1u64;
    let mut rho = 1u64;
    while m > 1 {
        let p = spf[m as usize];
        let mut pe = 1u64;
        while m % p == 0 {
            m /= p;
            pe *= p as u64;
        }
        let phi_pe = pe - pe / p as u64;
        phi *= phi_pe;
        rho *= 1 + phi_pe;
    }
    (phi, rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values_up_to_ten() {
        let table = SieveTable::build(10, 1).unwrap();
        let rho: Vec<u64> = (1..=10).map(|n| table.rho(n)).collect();
        assert_eq!(rho, vec![1, 2, 3, 3, 5, 6, 7, 5, 7, 10]);
        let phi: Vec<u64> = (1..=10).map(|n| table.phi(n)).collect();
        assert_eq!(phi, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4]);
    }

    #[test]
    fn limit_one() {
        let table = SieveTable::build(1, 1).unwrap();
        assert_eq!(table.rho(1), 1);
        assert_eq!(table.phi(1), 1);
    }

    #[test]
    fn spf_is_smallest_prime_factor() {
        let table = SieveTable::build(1000, 1).unwrap();
        for n in 2..=1000u64 {
            let p = table.spf(n);
            assert!(crate::arith::is_prime(p), "spf({n}) = {p} not prime");
            assert_eq!(n % p, 0, "spf({n}) = {p} does not divide");
            for q in 2..p {
                assert_ne!(n % q, 0, "{q} < spf({n}) divides {n}");
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(SieveTable::build(0, 1), Err(Error::Domain(_))));
        assert!(matches!(SieveTable::build(10, 0), Err(Error::Domain(_))));
        assert!(matches!(
            SieveTable::build(u32::MAX as u64 + 1, 1),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn csv_examples() {
        let table = SieveTable::build(10, 1).unwrap();
        let mut out = Vec::new();
        table.rho_range_csv(1, 3, &mut out).unwrap();
        assert_eq!(out, b"n,rho\n1,1\n2,2\n3,3\n");

        out.clear();
        table.rho_range_csv(5, 5, &mut out).unwrap();
        assert_eq!(out, b"n,rho\n5,5\n");

        let table = SieveTable::build(1, 1).unwrap();
        out.clear();
        table.rho_range_csv(1, 1, &mut out).unwrap();
        assert_eq!(out, b"n,rho\n1,1\n");
    }

    #[test]
    fn csv_range_validation() {
        let table = SieveTable::build(10, 1).unwrap();
        let mut out = Vec::new();
        assert!(matches!(
            table.rho_range_csv(0, 5, &mut out),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            table.rho_range_csv(5, 2, &mut out),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            table.rho_range_csv(1, 11, &mut out),
            Err(Error::Domain(_))
        ));
    }
}
