//! Checkers and closed-form solvers for the classical ingredient
//! equations: a^x - b^y = 1, p^x + 1 = y^2, the repunit-perfect-power
//! quotient equation, and 1 + (2^k(2p+1))^y = z^2.
//!
//! The closed forms encode complete solution sets that are theorems in
//! the literature; the bounded searches here re-derive them within range
//! and act as independent oracles.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith;
use crate::error::{Error, Result};
use crate::primes;

/// A solution of a^x - b^y = 1 with all entries > 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CatalanSolution {
    pub a: u64,
    pub b: u64,
    pub x: u32,
    pub y: u32,
}

/// All solutions of a^x - b^y = 1 with 2 <= a <= a_max, 2 <= b <= b_max,
/// 2 <= x <= x_max, 2 <= y <= y_max, ordered by (a, b, x, y).
pub fn catalan_search(a_max: u64, b_max: u64, x_max: u32, y_max: u32) -> Vec<CatalanSolution> {
    assert!(
        a_max >= 2 && b_max >= 2 && x_max >= 2 && y_max >= 2,
        "all bounds must be >= 2"
    );
    // index b^y by value so the a^x loop is a lookup
    let mut powers: HashMap<BigInt, Vec<(u64, u32)>> = HashMap::new();
    for b in 2..=b_max {
        let big = BigInt::from(b);
        let mut v = &big * &big;
        for y in 2..=y_max {
            powers.entry(v.clone()).or_default().push((b, y));
            v *= &big;
        }
    }
    let mut out = Vec::new();
    for a in 2..=a_max {
        let big = BigInt::from(a);
        let mut v = &big * &big;
        for x in 2..=x_max {
            if let Some(hits) = powers.get(&(&v - 1)) {
                for &(b, y) in hits {
                    out.push(CatalanSolution { a, b, x, y });
                }
            }
            v *= &big;
        }
    }
    out.sort_unstable();
    out
}

/// All non-negative solutions (x, y) of p^x + 1 = y^2 for prime p:
/// (3, 3) for p = 2, (1, 2) for p = 3, none otherwise.
pub fn solve_px_plus_one_square(p: &BigInt) -> Result<Vec<(u64, u64)>> {
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    Ok(if *p == BigInt::from(2) {
        vec![(3, 3)]
    } else if *p == BigInt::from(3) {
        vec![(1, 2)]
    } else {
        // x = 0 would need y^2 = 2; x >= 1 is ruled out for p > 3
        vec![]
    })
}

/// A solution of (x^n - 1)/(x - 1) = y^q with x, y > 1, n > 2, q >= 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NLSolution {
    pub x: u64,
    pub y: BigInt,
    pub n: u32,
    pub q: u32,
}

/// The repunit sum 1 + x + ... + x^(n-1), computed without division.
fn repunit(x: u64, n: u32) -> BigInt {
    let big = BigInt::from(x);
    let mut acc = BigInt::one();
    let mut pow = BigInt::one();
    for _ in 1..n {
        pow *= &big;
        acc += &pow;
    }
    acc
}

/// All (x, y, n, q) in range with (x^n - 1)/(x - 1) = y^q; y is derived
/// by exact q-th root extraction.
pub fn nagell_ljunggren_search(x_max: u64, n_max: u32, q_max: u32) -> Vec<NLSolution> {
    assert!(x_max >= 2 && q_max >= 2 && n_max >= 3, "bounds out of range");
    let mut out = Vec::new();
    for x in 2..=x_max {
        for n in 3..=n_max {
            let s = repunit(x, n);
            for q in 2..=q_max {
                if let Some(y) = arith::exact_nth_root(&s, q) {
                    if y > BigInt::one() {
                        out.push(NLSolution { x, y, n, q });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// All non-negative solutions (y, z) of 1 + (2^k(2p+1))^y = z^2 for a
/// Sophie Germain prime p and k >= 1: (1, 9) at (p, k) = (2, 4) and
/// (1, 15) at (p, k) = (3, 5), none otherwise.
pub fn solve_safe_power_square(p: &BigInt, k: u32) -> Result<Vec<(u64, BigInt)>> {
    if k == 0 {
        return Err(Error::KZero);
    }
    if !primes::is_sophie_germain(p) {
        let reason = if primes::is_prime(p) {
            format!("2p+1 = {} is not prime", p * 2 + 1)
        } else {
            format!("{p} is not prime")
        };
        return Err(Error::NotSophieGermain {
            p: p.clone(),
            reason,
        });
    }
    Ok(if *p == BigInt::from(2) && k == 4 {
        vec![(1, BigInt::from(9))]
    } else if *p == BigInt::from(3) && k == 5 {
        vec![(1, BigInt::from(15))]
    } else {
        vec![]
    })
}
