//! Exact integer machinery for the exponential Diophantine equations
//! (-1)^alpha p^x + (-1)^beta (2^k(2p+1))^y = z^2 over Sophie Germain
//! primes p, together with the classical ingredients used to solve them:
//! Mordell curve tables, Catalan/Nagell-Ljunggren checkers, quadratic
//! symbols, and primality testing. All arithmetic is exact; searches and
//! closed forms cross-validate each other.

pub mod arith;
pub mod classical;
pub mod error;
pub mod mordell;
pub mod primes;
pub mod search;
pub mod theorems;

pub use error::{Error, Result};
