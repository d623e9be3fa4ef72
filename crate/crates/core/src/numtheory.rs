//! Elementary number theory on small integers: gcd, smallest prime factor,
//! square-freeness, the number of distinct prime divisors, the Möbius
//! function, Euler's totient, and the coprime sets used by the bijections.
//!
//! Everything factorizes through an [`SpfTable`], a smallest-prime-factor
//! sieve. Values above the sieve limit are still answered correctly by
//! falling back to trial division, so the limit only affects speed.
//!
//! The free functions at the bottom of this module consult a process-wide
//! table (default limit [`DEFAULT_SIEVE_LIMIT`]) that can be rebuilt with
//! [`rebuild_sieve`].

use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

/// Default limit of the process-wide sieve.
pub const DEFAULT_SIEVE_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    #[error("argument must be positive, got 0")]
    Zero,
}

/// Greatest common divisor by Euclid's algorithm. `gcd(0, b) = b`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Smallest prime dividing a positive integer, with 1 mapped to `Infinity`.
///
/// The derived ordering puts every prime below `Infinity`, which is exactly
/// the convention the involution case split relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MinPrime {
    Prime(u64),
    Infinity,
}

impl MinPrime {
    pub fn prime(self) -> Option<u64> {
        match self {
            MinPrime::Prime(p) => Some(p),
            MinPrime::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, MinPrime::Infinity)
    }
}

impl fmt::Display for MinPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinPrime::Prime(p) => write!(f, "{p}"),
            MinPrime::Infinity => f.write_str("inf"),
        }
    }
}

/// Smallest-prime-factor sieve over `2..=limit`.
#[derive(Debug, Clone)]
pub struct SpfTable {
    limit: u64,
    // spf[i] for i in 0..=limit; entries 0 and 1 are unused and hold 0.
    spf: Vec<u32>,
}

impl SpfTable {
    pub fn new(limit: u64) -> Self {
        let limit = limit.max(1);
        let len = usize::try_from(limit).expect("sieve limit exceeds address space") + 1;
        assert!(limit <= u64::from(u32::MAX), "sieve limit too large");
        let mut spf = vec![0u32; len];
        for i in 2..len {
            if spf[i] != 0 {
                continue;
            }
            spf[i] = i as u32;
            let mut j = i.saturating_mul(i);
            while j < len {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
        SpfTable { limit, spf }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of `n`; `Infinity` for `n = 1`.
    pub fn min_prime(&self, n: u64) -> Result<MinPrime, NumberError> {
        match n {
            0 => Err(NumberError::Zero),
            1 => Ok(MinPrime::Infinity),
            _ => Ok(MinPrime::Prime(self.spf_of(n))),
        }
    }

    fn spf_of(&self, n: u64) -> u64 {
        debug_assert!(n >= 2);
        if n <= self.limit {
            return u64::from(self.spf[n as usize]);
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return d;
            }
            d += 1;
        }
        n
    }

    /// Prime factorization as `(prime, exponent)` pairs in increasing order.
    pub fn factorize(&self, n: u64) -> Vec<(u64, u32)> {
        assert!(n >= 1, "cannot factorize 0");
        let mut out: Vec<(u64, u32)> = Vec::new();
        let mut rest = n;
        while rest > 1 {
            let p = self.spf_of(rest);
            rest /= p;
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Number of distinct prime divisors.
    pub fn delta(&self, n: u64) -> u32 {
        self.factorize(n).len() as u32
    }

    pub fn is_squarefree(&self, n: u64) -> bool {
        self.factorize(n).iter().all(|&(_, e)| e == 1)
    }

    pub fn moebius(&self, n: u64) -> i8 {
        let factors = self.factorize(n);
        if factors.iter().any(|&(_, e)| e > 1) {
            0
        } else if factors.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn totient(&self, n: u64) -> u64 {
        self.factorize(n)
            .iter()
            .fold(n, |acc, &(p, _)| acc / p * (p - 1))
    }
}

fn global() -> &'static RwLock<Arc<SpfTable>> {
    use std::sync::OnceLock;
    static TABLE: OnceLock<RwLock<Arc<SpfTable>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Arc::new(SpfTable::new(DEFAULT_SIEVE_LIMIT))))
}

/// Handle to the process-wide sieve.
pub fn sieve() -> Arc<SpfTable> {
    Arc::clone(&global().read().expect("sieve lock poisoned"))
}

/// Replace the process-wide sieve with one covering `2..=limit`.
pub fn rebuild_sieve(limit: u64) {
    let table = Arc::new(SpfTable::new(limit));
    *global().write().expect("sieve lock poisoned") = table;
}

/// Smallest prime dividing `n`, `Infinity` for 1. Rejects 0.
pub fn min_prime(n: u64) -> Result<MinPrime, NumberError> {
    sieve().min_prime(n)
}

/// Number of distinct prime divisors of `n` (`n ≥ 1`).
pub fn delta(n: u64) -> u32 {
    sieve().delta(n)
}

/// Möbius function of `n` (`n ≥ 1`).
pub fn moebius(n: u64) -> i8 {
    sieve().moebius(n)
}

pub fn is_squarefree(n: u64) -> bool {
    sieve().is_squarefree(n)
}

/// Euler's totient of `n` (`n ≥ 1`).
pub fn totient(n: u64) -> u64 {
    sieve().totient(n)
}

/// Integers in `1..=n` coprime to `n`.
pub fn coprime_set(n: u64) -> Vec<u64> {
    (1..=n).filter(|&k| gcd(k, n) == 1).collect()
}

/// Integers `k` with `1 ≤ k < n/2` and `gcd(k, n) = 1`.
pub fn half_coprime_set(n: u64) -> Vec<u64> {
    // k < n/2  <=>  2k < n
    (1..n)
        .take_while(|&k| 2 * k < n)
        .filter(|&k| gcd(k, n) == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_spf(n: u64) -> u64 {
        (2..=n).find(|d| n.is_multiple_of(*d)).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(6, 3), 3);
        assert_eq!(gcd(9, 3), 3);
        for n in 1..50 {
            assert_eq!(gcd(1, n), 1);
        }
        assert_eq!(gcd(0, 7), 7);
    }

    #[test]
    fn min_prime_examples() {
        assert_eq!(min_prime(1), Ok(MinPrime::Infinity));
        assert_eq!(min_prime(2), Ok(MinPrime::Prime(2)));
        assert_eq!(min_prime(3), Ok(MinPrime::Prime(3)));
        assert_eq!(min_prime(0), Err(NumberError::Zero));
        assert!(MinPrime::Prime(u64::MAX) < MinPrime::Infinity);
    }

    #[test]
    fn spf_table_matches_trial_division() {
        let table = SpfTable::new(500);
        for n in 2..=500 {
            assert_eq!(table.min_prime(n), Ok(MinPrime::Prime(trial_spf(n))), "n = {n}");
        }
        // above the limit the fallback must agree too
        for n in 501..800 {
            assert_eq!(table.min_prime(n), Ok(MinPrime::Prime(trial_spf(n))), "n = {n}");
        }
    }

    #[test]
    fn spf_is_prime_exactly_on_primes() {
        let table = SpfTable::new(1000);
        for n in 2..=1000u64 {
            let p = table.min_prime(n).unwrap().prime().unwrap();
            let is_prime = trial_spf(n) == n;
            assert_eq!(p == n, is_prime);
            assert_eq!(n % p, 0);
            assert!((2..p).all(|d| n % d != 0));
        }
    }

    #[test]
    fn delta_moebius_squarefree_examples() {
        assert_eq!(delta(1), 0);
        assert_eq!(delta(12), 2);
        assert_eq!(delta(30), 3);
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(2), -1);
        assert_eq!(moebius(4), 0);
        assert!(is_squarefree(1));
        assert!(is_squarefree(6));
        assert!(!is_squarefree(12));
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(4), 2);
        assert_eq!(totient(2) + totient(3) + totient(5), 7);
        for n in 1..300 {
            assert_eq!(totient(n), coprime_set(n).len() as u64);
        }
    }

    #[test]
    fn coprime_sets() {
        assert_eq!(coprime_set(1), vec![1]);
        assert_eq!(coprime_set(6), vec![1, 5]);
        assert_eq!(coprime_set(5), vec![1, 2, 3, 4]);
        assert_eq!(half_coprime_set(3), vec![1]);
        assert!(half_coprime_set(2).is_empty());
        assert_eq!(half_coprime_set(9), vec![1, 2, 4]);
    }

    #[test]
    fn half_coprime_is_half_of_totient() {
        for n in 3..=2000 {
            assert_eq!(2 * half_coprime_set(n).len() as u64, totient(n), "n = {n}");
        }
    }

    #[test]
    fn moebius_divisor_sum() {
        for n in 1..=2000u64 {
            let s: i64 = (1..=n).filter(|d| n % d == 0).map(|d| i64::from(moebius(d))).sum();
            assert_eq!(s, if n == 1 { 1 } else { 0 }, "n = {n}");
            assert_eq!(moebius(n) != 0, is_squarefree(n));
        }
    }

    #[test]
    fn totient_multiplicative_on_coprime_pairs() {
        for m in 1..80 {
            for n in 1..80 {
                if gcd(m, n) == 1 {
                    assert_eq!(totient(m * n), totient(m) * totient(n));
                }
            }
        }
    }

    #[test]
    fn rebuilt_sieve_gives_same_answers() {
        let small = SpfTable::new(10);
        let big = SpfTable::new(5000);
        for n in 1..3000 {
            assert_eq!(small.moebius(n), big.moebius(n));
            assert_eq!(small.totient(n), big.totient(n));
        }
    }
}
