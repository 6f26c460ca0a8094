//! Primality testing and Sophie Germain prime enumeration.
//!
//! Below 2^64 primality is decided exactly by Miller-Rabin with a known
//! deterministic witness set. Above 2^64 `is_prime` is a strong
//! probable-prime test with 64 rounds over bases drawn from a ChaCha
//! stream seeded by the input, so the answer is deterministic per input
//! while the error probability stays below 4^-64 = 2^-128.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};

/// Witnesses that make Miller-Rabin deterministic for all n < 2^64.
const U64_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Exact primality for any u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in U64_WITNESSES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in U64_WITNESSES {
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

/// Strong probable-prime test for n >= 2^64. Bases are drawn from a
/// ChaCha20 stream seeded by n itself, so repeated calls agree.
fn is_probable_prime_big(n: &BigUint) -> bool {
    let one = BigUint::one();
    let two = &one + &one;
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61] {
        if (n % p).to_u32() == Some(0) {
            return false;
        }
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;

    let mut seed = [0u8; 32];
    for (i, b) in n.to_bytes_le().into_iter().take(32).enumerate() {
        seed[i] = b;
    }
    let mut rng = ChaCha20Rng::from_seed(seed);
    let span = n - &two - &two; // bases in [2, n-2]
    'round: for _ in 0..64 {
        let a = rng.gen_biguint_below(&span) + &two;
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'round;
            }
        }
        return false;
    }
    true
}

/// Primality test: exact below 2^64, strong probable prime above.
pub fn is_prime(n: &BigInt) -> bool {
    if n <= &BigInt::one() {
        return false;
    }
    let mag = n.magnitude();
    match mag.to_u64() {
        Some(v) => is_prime_u64(v),
        None => is_probable_prime_big(mag),
    }
}

/// True iff both p and 2p+1 are prime.
pub fn is_sophie_germain(p: &BigInt) -> bool {
    is_prime(p) && is_prime(&(p * 2 + 1))
}

/// A Sophie Germain prime together with its safe companion q = 2p + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimePair {
    pub p: u64,
    pub q: u64,
}

fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x as u128 * x as u128 > n as u128 {
        x -= 1;
    }
    while (x as u128 + 1) * (x as u128 + 1) <= n as u128 {
        x += 1;
    }
    x
}

fn simple_sieve(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Upper bound on the range covered by the segmented sieve; primes above
/// it are found by per-candidate Miller-Rabin instead.
const SIEVE_LIMIT: u64 = 1_000_000_000;

const SEGMENT: u64 = 1 << 17;

/// Calls f on every prime p <= limit in increasing order.
fn each_prime_up_to(limit: u64, f: impl FnMut(u64)) {
    each_prime_with_sieve_bound(limit, SIEVE_LIMIT, f)
}

fn each_prime_with_sieve_bound(limit: u64, sieve_bound: u64, mut f: impl FnMut(u64)) {
    if limit < 2 {
        return;
    }
    let sieved = limit.min(sieve_bound.max(2));
    let base = simple_sieve(isqrt_u64(sieved).max(2));
    for &p in &base {
        if p <= sieved {
            f(p);
        }
    }
    let mut lo = isqrt_u64(sieved).max(2) + 1;
    let mut flags = vec![false; SEGMENT as usize];
    while lo <= sieved {
        let hi = (lo + SEGMENT - 1).min(sieved);
        let len = (hi - lo + 1) as usize;
        flags[..len].fill(false);
        for &p in &base {
            if p * p > hi {
                break;
            }
            let mut j = lo.div_ceil(p).max(2) * p;
            while j <= hi {
                flags[(j - lo) as usize] = true;
                j += p;
            }
        }
        for (i, &c) in flags[..len].iter().enumerate() {
            if !c {
                f(lo + i as u64);
            }
        }
        lo = hi + 1;
    }
    // fallback beyond the sieve window
    let mut n = sieved.max(2) | 1;
    if n <= sieved {
        n += 2;
    }
    while n <= limit {
        if is_prime_u64(n) {
            f(n);
        }
        n += 2;
    }
}

/// All Sophie Germain primes p <= limit, in increasing order, with their
/// companions. p = 2 is included (2*2+1 = 5 is prime).
pub fn enumerate_sg(limit: u64) -> Vec<PrimePair> {
    let mut out = Vec::new();
    each_prime_up_to(limit, |p| {
        if let Some(q) = p.checked_mul(2).and_then(|d| d.checked_add(1)) {
            if is_prime_u64(q) {
                out.push(PrimePair { p, q });
            }
        }
    });
    out
}

fn check_residue_args(m: u32, k: u64) -> Result<u64> {
    assert!(m >= 1 && m <= 62, "modulus exponent m out of range");
    let modulus = 1u64 << m;
    if k % 2 == 0 {
        return Err(Error::EvenResidue(k));
    }
    if k >= modulus {
        return Err(Error::ResidueOutOfRange { k, m });
    }
    Ok(modulus)
}

/// Sophie Germain primes p <= limit with p = k (mod 2^m), for odd k.
/// p = 2 never appears here; it has no odd residue class.
pub fn sg_residue_class(limit: u64, m: u32, k: u64) -> Result<Vec<u64>> {
    let modulus = check_residue_args(m, k)?;
    Ok(enumerate_sg(limit)
        .into_iter()
        .map(|pair| pair.p)
        .filter(|&p| p > 2 && p % modulus == k)
        .collect())
}

/// Counts of Sophie Germain primes per odd residue class mod 2^m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClassStats {
    pub modulus: u64,
    pub limit: u64,
    /// One entry per odd residue in [1, 2^m), possibly zero.
    pub counts: BTreeMap<u64, u64>,
}

/// Tallies Sophie Germain primes in (2, limit] by residue mod 2^m.
pub fn sg_density_stats(limit: u64, m: u32) -> ResidueClassStats {
    assert!(m >= 1 && m <= 62, "modulus exponent m out of range");
    let modulus = 1u64 << m;
    let mut counts: BTreeMap<u64, u64> = (1..modulus).step_by(2).map(|k| (k, 0)).collect();
    for pair in enumerate_sg(limit) {
        if pair.p > 2 {
            *counts.get_mut(&(pair.p % modulus)).expect("odd residue") += 1;
        }
    }
    ResidueClassStats {
        modulus,
        limit,
        counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn trial_division(n: u64) -> bool {
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
    fn is_prime_examples() {
        assert!(is_prime(&BigInt::from(2)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(!is_prime(&BigInt::from(0)));
        assert!(!is_prime(&BigInt::from(-7)));
        assert!(is_prime(&BigInt::from(719)));
    }

    #[test]
    fn is_prime_matches_trial_division_below_1e5() {
        for n in 0..100_000u64 {
            assert_eq!(is_prime_u64(n), trial_division(n), "n={n}");
        }
    }

    #[test]
    fn is_prime_big_inputs() {
        // 2^89 - 1 is a Mersenne prime; 2^67 - 1 = 193707721 * 761838257287
        let m89 = (BigInt::from(1) << 89) - 1;
        let m67 = (BigInt::from(1) << 67) - 1;
        assert!(is_prime(&m89));
        assert!(!is_prime(&m67));
    }

    #[test]
    fn sophie_germain_examples() {
        assert!(is_sophie_germain(&BigInt::from(11)));
        assert!(!is_sophie_germain(&BigInt::from(7)));
        assert!(is_sophie_germain(&BigInt::from(953)));
        assert!(is_sophie_germain(&BigInt::from(2)));
    }

    #[test]
    fn sophie_germain_matches_trial_division_below_1e5() {
        let by_enum: Vec<u64> = enumerate_sg(100_000).into_iter().map(|pr| pr.p).collect();
        let by_trial: Vec<u64> = (2..=100_000u64)
            .filter(|&p| trial_division(p) && trial_division(2 * p + 1))
            .collect();
        assert_eq!(by_enum, by_trial);
    }

    #[test]
    fn enumerate_examples() {
        let ps: Vec<u64> = enumerate_sg(12).into_iter().map(|pr| pr.p).collect();
        assert_eq!(ps, vec![2, 3, 5, 11]);
        let tiny: Vec<u64> = enumerate_sg(2).into_iter().map(|pr| pr.p).collect();
        assert_eq!(tiny, vec![2]);
        for pair in enumerate_sg(1000) {
            assert_eq!(pair.q, 2 * pair.p + 1);
            assert!(is_prime_u64(pair.p) && is_prime_u64(pair.q));
        }
    }

    #[test]
    fn residue_class_lists_below_1000() {
        assert_eq!(
            sg_residue_class(1000, 3, 1).unwrap(),
            vec![41, 89, 113, 233, 281, 593, 641, 761, 809, 953]
        );
        assert_eq!(
            sg_residue_class(1000, 3, 3).unwrap(),
            vec![3, 11, 83, 131, 179, 251, 419, 443, 491, 659, 683]
        );
        assert_eq!(
            sg_residue_class(1000, 3, 5).unwrap(),
            vec![5, 29, 53, 173, 293, 509, 653]
        );
        assert_eq!(
            sg_residue_class(1000, 3, 7).unwrap(),
            vec![23, 191, 239, 359, 431, 719, 743, 911]
        );
        assert!(sg_residue_class(4, 3, 5).unwrap().is_empty());
        assert!(matches!(
            sg_residue_class(1000, 3, 4),
            Err(Error::EvenResidue(4))
        ));
        assert!(matches!(
            sg_residue_class(1000, 3, 9),
            Err(Error::ResidueOutOfRange { k: 9, m: 3 })
        ));
    }

    #[test]
    fn density_stats_examples() {
        let stats = sg_density_stats(1000, 3);
        let expected: BTreeMap<u64, u64> = [(1, 10), (3, 11), (5, 7), (7, 8)].into();
        assert_eq!(stats.counts, expected);

        let tiny = sg_density_stats(3, 1);
        assert_eq!(tiny.counts, [(1u64, 1u64)].into());
    }

    #[test]
    fn density_stats_below_1e6_golden() {
        // counts confirmed against an independent sieve enumeration
        let stats = sg_density_stats(1_000_000, 3);
        let expected: BTreeMap<u64, u64> = [(1, 1878), (3, 1969), (5, 1955), (7, 1943)].into();
        assert_eq!(stats.counts, expected);
    }

    #[test]
    fn partition_property() {
        let limit = 10_000;
        let all: Vec<u64> = enumerate_sg(limit).into_iter().map(|pr| pr.p).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for m in [1u32, 2, 3, 4] {
            let mut union = vec![2u64];
            for k in (1..(1u64 << m)).step_by(2) {
                union.extend(sg_residue_class(limit, m, k).unwrap());
            }
            union.sort_unstable();
            assert_eq!(union, all, "m={m}");
        }
    }

    #[test]
    fn sieve_and_fallback_agree() {
        let direct: Vec<u64> = (2..=1000).filter(|&n| trial_division(n)).collect();
        let mut sieved = Vec::new();
        each_prime_up_to(1000, |p| sieved.push(p));
        assert_eq!(sieved, direct);
        // force the per-candidate fallback past a tiny sieve window
        let mut mixed = Vec::new();
        each_prime_with_sieve_bound(1000, 100, |p| mixed.push(p));
        assert_eq!(mixed, direct);
        let mut tiny = Vec::new();
        each_prime_with_sieve_bound(2, 100, |p| tiny.push(p));
        assert_eq!(tiny, vec![2]);
    }
}
