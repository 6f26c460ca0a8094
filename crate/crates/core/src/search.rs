//! Bounded brute-force search over the equation family, plus modular
//! obstruction filters mirroring the congruence arguments used in the
//! completeness proofs.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::arith;
use crate::error::{Error, Result};
use crate::primes;

/// One instance of (-1)^alpha p^x + (-1)^beta (2^k(2p+1))^y = z^2.
///
/// Invariants enforced at construction: alpha, beta in {0,1} with
/// alpha*beta = 0, and p a Sophie Germain prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSpec {
    alpha: u8,
    beta: u8,
    p: BigInt,
    k: u32,
}

impl EquationSpec {
    pub fn new(alpha: u8, beta: u8, p: BigInt, k: u32) -> Result<Self> {
        if alpha > 1 || beta > 1 {
            return Err(Error::BadSign);
        }
        if alpha == 1 && beta == 1 {
            return Err(Error::BothSignsNegative);
        }
        if !primes::is_prime(&p) {
            return Err(Error::NotSophieGermain {
                p: p.clone(),
                reason: format!("{p} is not prime"),
            });
        }
        let q: BigInt = &p * 2 + 1;
        if !primes::is_prime(&q) {
            return Err(Error::NotSophieGermain {
                p: p.clone(),
                reason: format!("2p+1 = {q} is not prime"),
            });
        }
        Ok(Self { alpha, beta, p, k })
    }

    pub fn alpha(&self) -> u8 {
        self.alpha
    }

    pub fn beta(&self) -> u8 {
        self.beta
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The safe companion q = 2p + 1.
    pub fn q(&self) -> BigInt {
        &self.p * 2 + 1
    }

    /// The second power base 2^k (2p+1).
    pub fn power_base(&self) -> BigInt {
        (BigInt::one() << self.k) * self.q()
    }
}

/// Inclusive exponent bounds for the brute-force scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub x_max: u64,
    pub y_max: u64,
}

impl SearchBounds {
    pub fn new(x_max: u64, y_max: u64) -> Self {
        Self { x_max, y_max }
    }
}

/// How a solution was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Search,
    ClosedForm,
    FamilyExpansion,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::Search => "search",
            Provenance::ClosedForm => "closed-form",
            Provenance::FamilyExpansion => "family-expansion",
        })
    }
}

/// A concrete non-negative solution triple, tagged with the k of the
/// spec it solves. Equality and ordering look at (x, y, z) only.
#[derive(Debug, Clone)]
pub struct Solution {
    pub x: u64,
    pub y: u64,
    pub z: BigInt,
    pub k: u32,
    pub provenance: Provenance,
}

impl Solution {
    pub fn triple(&self) -> (u64, u64, &BigInt) {
        (self.x, self.y, &self.z)
    }
}

impl PartialEq for Solution {
    fn eq(&self, other: &Self) -> bool {
        self.triple() == other.triple()
    }
}

impl Eq for Solution {}

impl PartialOrd for Solution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Solution {
    fn cmp(&self, other: &Self) -> Ordering {
        self.triple().cmp(&other.triple())
    }
}

impl std::fmt::Display for Solution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(x={}, y={}, z={})", self.x, self.y, self.z)
    }
}

fn signed(sign_exp: u8, v: BigInt) -> BigInt {
    if sign_exp == 0 {
        v
    } else {
        -v
    }
}

/// Exact value of the left-hand side (-1)^alpha p^x + (-1)^beta B^y.
pub fn evaluate(spec: &EquationSpec, x: u64, y: u64) -> BigInt {
    let px = spec.p().pow(u32::try_from(x).expect("exponent fits u32"));
    let by = spec.power_base().pow(u32::try_from(y).expect("exponent fits u32"));
    signed(spec.alpha(), px) + signed(spec.beta(), by)
}

/// All solutions with x <= x_max, y <= y_max, in lexicographic (x, y)
/// order. z is derived, never iterated.
pub fn brute_force(spec: &EquationSpec, bounds: SearchBounds) -> Vec<Solution> {
    let base = spec.power_base();
    let mut out = Vec::new();
    let mut px = BigInt::one();
    for x in 0..=bounds.x_max {
        let mut by = BigInt::one();
        for y in 0..=bounds.y_max {
            let lhs = signed(spec.alpha(), px.clone()) + signed(spec.beta(), by.clone());
            if !lhs.is_negative() {
                if let Some(z) = arith::is_perfect_square(&lhs) {
                    out.push(Solution {
                        x,
                        y,
                        z,
                        k: spec.k(),
                        provenance: Provenance::Search,
                    });
                }
            }
            by *= &base;
        }
        px *= spec.p();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn matches(self, e: u64) -> bool {
        match self {
            Parity::Even => e % 2 == 0,
            Parity::Odd => e % 2 == 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Feasible,
    Infeasible,
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Residues of base^e mod m over all exponents e >= 1 of the requested
/// parity, collected by walking the power sequence until its
/// (residue, parity) state repeats.
fn exponent_residues(base: u64, m: u64, parity: Option<Parity>) -> HashSet<u64> {
    let base = base % m;
    let mut seen: HashSet<(u64, u64)> = HashSet::new();
    let mut out = HashSet::new();
    let mut r = base;
    let mut e = 1u64;
    while seen.insert((r, e % 2)) {
        if parity.map_or(true, |p| p.matches(e)) {
            out.insert(r);
        }
        r = mulmod(r, base, m);
        e += 1;
    }
    out
}

/// Congruence filter for the branch x >= 1, y >= 1 of the equation.
///
/// `Infeasible` certifies that no exponent pair with x, y >= 1 and the
/// stated parities makes the left-hand side a square residue mod the
/// modulus, so the brute-force search can find nothing on that branch.
/// The x = 0 / y = 0 edge cases are handled by the closed-form lemmas,
/// not here; when a power base is invertible mod the modulus its full
/// power cycle already contains the exponent-0 residue.
pub fn modular_obstruction(
    spec: &EquationSpec,
    modulus: &BigInt,
    x_parity: Option<Parity>,
    y_parity: Option<Parity>,
) -> Result<Verdict> {
    if modulus < &BigInt::from(2) {
        return Err(Error::BadModulus {
            min: 2,
            got: modulus.clone(),
        });
    }
    let m = match modulus.to_u64() {
        Some(v) if v <= 4_000_000 => v,
        _ => return Err(Error::ModulusTooLarge(modulus.clone())),
    };

    let squares: HashSet<u64> = (0..=m / 2).map(|i| mulmod(i, i, m)).collect();
    let p_res = exponent_residues(
        (spec.p() % m).to_u64().expect("reduced residue fits"),
        m,
        x_parity,
    );
    let b_res = exponent_residues(
        (spec.power_base() % m).to_u64().expect("reduced residue fits"),
        m,
        y_parity,
    );

    let sign = |exp: u8, v: u64| -> i128 {
        if exp == 0 {
            v as i128
        } else {
            -(v as i128)
        }
    };
    for &rx in &p_res {
        for &ry in &b_res {
            let v = (sign(spec.alpha(), rx) + sign(spec.beta(), ry)).rem_euclid(m as i128) as u64;
            if squares.contains(&v) {
                return Ok(Verdict::Feasible);
            }
        }
    }
    Ok(Verdict::Infeasible)
}
