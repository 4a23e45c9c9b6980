//! Invariant sweeps checked against independent brute-force oracles.
//! The oracles below use nothing from the crate: their own gcd, trial
//! division, and exhaustive searches.

use regmod_core::{
    enumerate_regulars, from_reduced_fraction, group_by_denominator, is_regular,
    is_unitary_divisor, rho, rho_bruteforce_capped, rho_inclusion_exclusion, rho_subset_totients,
    to_reduced_fraction, totient, unitary_divisors, witness, Method, ReducedFraction,
};

fn oracle_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn oracle_divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn oracle_totient(n: u64) -> u64 {
    (1..=n).filter(|&k| oracle_gcd(k, n) == 1).count() as u64
}

fn oracle_unitary_divisors(n: u64) -> Vec<u64> {
    oracle_divisors(n)
        .into_iter()
        .filter(|&d| oracle_gcd(d, n / d) == 1)
        .collect()
}

/// Exhaustive search straight from the definition of regularity.
fn oracle_is_regular(m: u64, n: u64) -> bool {
    (0..n).any(|x| (m as u128 * m as u128 * x as u128) % n as u128 == m as u128)
}

fn oracle_is_squarefree(n: u64) -> bool {
    let mut d = 2;
    while d * d <= n {
        if n % (d * d) == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn oracle_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[test]
fn factorization_product_recovers_value() {
    for n in 1u64..=5000 {
        let f = regmod_core::factorize(n).unwrap();
        let prod: u64 = f.factors().iter().map(|&(p, e)| p.pow(e)).product();
        assert_eq!(prod, n);
        assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
        assert!(f.factors().iter().all(|&(p, e)| oracle_is_prime(p) && e >= 1));
        assert_eq!(f.value() == 1, f.factors().is_empty());
    }
}

#[test]
fn totient_matches_bruteforce() {
    for n in 1u64..=5000 {
        assert_eq!(totient(n).unwrap(), oracle_totient(n), "phi({n})");
    }
}

#[test]
fn unitary_divisor_count_is_power_of_two() {
    for n in 1u64..=5000 {
        let divs = unitary_divisors(n).unwrap();
        let omega = regmod_core::factorize(n).unwrap().num_primes();
        assert_eq!(divs.len(), 1usize << omega, "count for n = {n}");
    }
}

#[test]
fn unitary_divisors_match_predicate_and_oracle() {
    for n in 1u64..=2000 {
        let divs = unitary_divisors(n).unwrap();
        assert_eq!(divs, oracle_unitary_divisors(n), "n = {n}");
        for d in oracle_divisors(n) {
            assert_eq!(
                divs.binary_search(&d).is_ok(),
                is_unitary_divisor(d, n),
                "d = {d}, n = {n}"
            );
        }
    }
}

#[test]
fn gauss_totient_sum_identity() {
    for n in 1u64..=5000 {
        let sum: u64 = oracle_divisors(n).into_iter().map(|d| totient(d).unwrap()).sum();
        assert_eq!(sum, n, "sum of phi over divisors of {n}");
    }
}

#[test]
fn five_characterizations_agree() {
    for n in 1u64..=1000 {
        for m in 0..n {
            let expected = oracle_is_regular(m, n);
            for method in Method::ALL {
                assert_eq!(
                    is_regular(m, n, method).unwrap(),
                    expected,
                    "m = {m}, n = {n}, {method:?}"
                );
            }
        }
    }
}

#[test]
fn rho_methods_agree_with_each_other_and_bruteforce() {
    for n in 1u64..=5000 {
        let r = rho(n).unwrap();
        assert_eq!(r, rho_inclusion_exclusion(n).unwrap(), "ie at n = {n}");
        assert_eq!(r, rho_subset_totients(n).unwrap(), "subset at n = {n}");
    }
    for n in 1u64..=2000 {
        assert_eq!(
            rho(n).unwrap(),
            rho_bruteforce_capped(n, 2000).unwrap(),
            "brute at n = {n}"
        );
    }
}

#[test]
fn rho_counts_enumerated_regulars() {
    for n in 1u64..=5000 {
        assert_eq!(rho(n).unwrap(), enumerate_regulars(n).unwrap().len() as u64);
    }
}

#[test]
fn enumeration_matches_definition_oracle() {
    for n in 1u64..=300 {
        let expected: Vec<u64> = (0..n).filter(|&m| oracle_is_regular(m, n)).collect();
        assert_eq!(enumerate_regulars(n).unwrap(), expected, "n = {n}");
    }
}

#[test]
fn rho_is_multiplicative_on_coprime_pairs() {
    // Deterministic splitmix64 stream; pairs kept when coprime.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mut checked = 0;
    while checked < 500 {
        let a = next() % (1 << 20) + 1;
        let b = next() % (1 << 20) + 1;
        if oracle_gcd(a, b) != 1 {
            continue;
        }
        assert_eq!(
            rho(a * b).unwrap(),
            rho(a).unwrap() * rho(b).unwrap(),
            "a = {a}, b = {b}"
        );
        checked += 1;
    }
}

#[test]
fn regular_set_closed_under_multiplication() {
    for n in 1u64..=300 {
        let regs = enumerate_regulars(n).unwrap();
        let mut member = vec![false; n as usize];
        for &m in &regs {
            member[m as usize] = true;
        }
        for &a in &regs {
            for &b in &regs {
                let prod = (a as u128 * b as u128 % n as u128) as u64;
                assert!(member[prod as usize], "{a} * {b} mod {n} not regular");
            }
        }
    }
}

#[test]
fn witnesses_are_sound_and_pseudo_inverses_regular() {
    for n in 1u64..=300 {
        for m in enumerate_regulars(n).unwrap() {
            let w = witness(m, n).unwrap();
            assert!(w.verify(), "witness invariants at m = {m}, n = {n}");
            assert!(
                is_regular(w.b, n, Method::UnitaryGcd).unwrap(),
                "pseudo-inverse {} not regular mod {n}",
                w.b
            );
        }
    }
}

#[test]
fn fraction_round_trip_a() {
    for n in 1u64..=2000 {
        for m in enumerate_regulars(n).unwrap() {
            let f = to_reduced_fraction(m, n).unwrap();
            assert_eq!(from_reduced_fraction(f, n).unwrap(), m, "m = {m}, n = {n}");
        }
    }
}

#[test]
fn fraction_round_trip_b() {
    for n in 1u64..=2000 {
        for d in unitary_divisors(n).unwrap() {
            for k in 0..d {
                if oracle_gcd(k, d) != 1 || (k == 0 && d != 1) {
                    continue;
                }
                let f = ReducedFraction::new(k, d).unwrap();
                let m = from_reduced_fraction(f, n).unwrap();
                assert!(m < n);
                assert_eq!(to_reduced_fraction(m, n).unwrap(), f, "k/d = {k}/{d}, n = {n}");
            }
        }
    }
}

#[test]
fn fraction_groups_have_totient_sizes() {
    for n in 1u64..=2000 {
        let groups = group_by_denominator(n).unwrap();
        let keys: Vec<u64> = groups.keys().copied().collect();
        assert_eq!(keys, unitary_divisors(n).unwrap(), "denominators for n = {n}");
        let mut total = 0u64;
        for (&d, fractions) in &groups {
            assert_eq!(fractions.len() as u64, totient(d).unwrap(), "group {d} of n = {n}");
            assert!(fractions.windows(2).all(|w| w[0].numerator() < w[1].numerator()));
            total += fractions.len() as u64;
        }
        assert_eq!(total, rho(n).unwrap(), "total for n = {n}");
    }
}

#[test]
fn rho_equals_n_exactly_for_squarefree() {
    for n in 1u64..=5000 {
        let r = rho(n).unwrap();
        if oracle_is_squarefree(n) {
            assert_eq!(r, n, "squarefree n = {n}");
        } else {
            assert!(r < n, "squareful n = {n} gave rho = {r}");
        }
    }
}

#[test]
fn rho_on_prime_powers() {
    for p in 2u64..=5000 {
        if !oracle_is_prime(p) {
            continue;
        }
        let mut pk = p;
        let mut pk_prev = 1;
        while pk <= 5000 {
            assert_eq!(rho(pk).unwrap(), 1 + pk - pk_prev, "p^k = {pk}");
            pk_prev = pk;
            match pk.checked_mul(p) {
                Some(next) => pk = next,
                None => break,
            }
        }
    }
}
