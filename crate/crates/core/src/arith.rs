//! Exact integer primitives: square roots, perfect-square and perfect-power
//! detection, modular exponentiation, Legendre and Jacobi symbols.
//!
//! Everything here is pure integer arithmetic; there is no floating point
//! anywhere, so results are exact at any magnitude.

use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::primes;

/// Value of a Legendre or Jacobi symbol: one of -1, 0, +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolValue {
    MinusOne,
    Zero,
    PlusOne,
}

impl SymbolValue {
    pub fn value(self) -> i8 {
        match self {
            SymbolValue::MinusOne => -1,
            SymbolValue::Zero => 0,
            SymbolValue::PlusOne => 1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Self> {
        match v {
            -1 => Some(SymbolValue::MinusOne),
            0 => Some(SymbolValue::Zero),
            1 => Some(SymbolValue::PlusOne),
            _ => None,
        }
    }
}

impl Mul for SymbolValue {
    type Output = SymbolValue;

    fn mul(self, rhs: SymbolValue) -> SymbolValue {
        SymbolValue::from_i8(self.value() * rhs.value()).unwrap()
    }
}

impl fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

/// Floor square root by Newton iteration, starting from a power of two
/// at or above the true root so the sequence decreases monotonically.
fn isqrt_uint(n: &BigUint) -> BigUint {
    if n < &BigUint::from(2u32) {
        return n.clone();
    }
    let mut x: BigUint = BigUint::one() << ((n.bits() + 1) / 2);
    loop {
        let next = (&x + n / &x) >> 1;
        if next >= x {
            break;
        }
        x = next;
    }
    while &x * &x > *n {
        x -= 1u32;
    }
    x
}

/// Floor integer square root: the unique r with r^2 <= n < (r+1)^2.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::NegativeInput("isqrt"));
    }
    Ok(BigInt::from(isqrt_uint(&n.magnitude().clone())))
}

// Residues attained by squares mod 256; rejects ~83% of non-squares
// before any root extraction.
const SQUARES_MOD_256: [bool; 256] = {
    let mut t = [false; 256];
    let mut i = 0usize;
    while i < 256 {
        t[(i * i) % 256] = true;
        i += 1;
    }
    t
};

/// Returns the root r >= 0 when n = r^2, `None` when n is negative or
/// not a square.
pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let mag = n.magnitude();
    let low = (mag % 256u32).to_usize().unwrap();
    if !SQUARES_MOD_256[low] {
        return None;
    }
    let r = isqrt_uint(mag);
    if &(&r * &r) == mag {
        Some(BigInt::from(r))
    } else {
        None
    }
}

/// base^exp mod modulus, reduced into [0, modulus).
pub fn mod_pow(base: &BigInt, exp: &BigInt, modulus: &BigInt) -> Result<BigInt> {
    if modulus < &BigInt::one() {
        return Err(Error::BadModulus {
            min: 1,
            got: modulus.clone(),
        });
    }
    if exp.is_negative() {
        return Err(Error::NegativeExponent);
    }
    let b = base.mod_floor(modulus);
    Ok(b.modpow(exp, modulus))
}

/// Jacobi symbol (a/n) for odd positive n, via binary quadratic reciprocity.
///
/// Multiplicative in both arguments and equal to the Legendre symbol when
/// n is prime. (a/1) = +1 by the empty-product convention.
pub fn jacobi_symbol(a: &BigInt, n: &BigInt) -> Result<SymbolValue> {
    if !n.is_positive() || n.is_even() {
        return Err(Error::EvenArgument(n.clone()));
    }
    let mut den = n.magnitude().clone();
    let mut num = a.mod_floor(n).magnitude().clone();
    let mut acc = 1i8;
    let three = BigUint::from(3u32);
    let five = BigUint::from(5u32);
    loop {
        if den.is_one() {
            return Ok(SymbolValue::from_i8(acc).unwrap());
        }
        num %= &den;
        if num.is_zero() {
            return Ok(SymbolValue::Zero);
        }
        // (2/den) = -1 iff den = 3, 5 (mod 8)
        while num.is_even() {
            num >>= 1;
            let r = &den % 8u32;
            if r == three || r == five {
                acc = -acc;
            }
        }
        if num.is_one() {
            return Ok(SymbolValue::from_i8(acc).unwrap());
        }
        // reciprocity: sign flips iff both are 3 (mod 4)
        if &num % 4u32 == three && &den % 4u32 == three {
            acc = -acc;
        }
        std::mem::swap(&mut num, &mut den);
    }
}

/// Legendre symbol (a/p) for an odd prime p.
///
/// Computed through the Jacobi reciprocity algorithm; Euler's criterion
/// a^((p-1)/2) mod p is kept as an independent oracle in the tests.
pub fn legendre_symbol(a: &BigInt, p: &BigInt) -> Result<SymbolValue> {
    if p.is_even() || !primes::is_prime(p) {
        return Err(Error::NotOddPrime(p.clone()));
    }
    jacobi_symbol(a, p)
}

/// Floor q-th root of n >= 0 by binary search. Panics if q = 0.
pub fn nth_root(n: &BigInt, q: u32) -> Result<BigInt> {
    assert!(q >= 1, "nth_root requires q >= 1");
    if n.is_negative() {
        return Err(Error::NegativeInput("nth_root"));
    }
    if q == 1 || n.is_zero() || n.is_one() {
        return Ok(n.clone());
    }
    let mag = n.magnitude();
    let mut lo = BigUint::one();
    let mut hi = BigUint::one() << (mag.bits() / u64::from(q) + 1);
    // invariant: lo^q <= n < hi^q
    while &lo + 1u32 < hi {
        let mid: BigUint = (&lo + &hi) >> 1;
        if mid.pow(q) <= *mag {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(BigInt::from(lo))
}

/// Returns r >= 0 with r^q = n exactly, if one exists.
pub fn exact_nth_root(n: &BigInt, q: u32) -> Option<BigInt> {
    let r = nth_root(n, q).ok()?;
    if r.clone().pow(q) == *n {
        Some(r)
    } else {
        None
    }
}
