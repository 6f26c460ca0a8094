//! Bounded integral-point search on Mordell curves y^2 = x^3 + n, and the
//! two solvers that reduce 5^x = 4 + y^2 and 2*5^x = 1 + y^2 to integral
//! points on the curves n = -4, -100, -2500.
//!
//! The shipped point tables for those three curves are complete (they come
//! from the LMFDB elliptic-curve database); completeness beyond the scan
//! bound is table-trusted rather than proved here.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};

/// An integral point (x, y) with y >= 0; the reflection -y is implied.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MordellPoint {
    pub x: BigInt,
    pub y: BigInt,
}

/// The curve y^2 = x^3 + n, optionally carrying a trusted complete point
/// table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MordellCurve {
    pub n: BigInt,
    pub known_complete_points: Option<Vec<MordellPoint>>,
}

impl MordellCurve {
    pub fn new(n: BigInt) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::ZeroCurveConstant);
        }
        Ok(Self {
            n,
            known_complete_points: None,
        })
    }
}

/// All integral points with |x| <= x_bound and y >= 0, ascending in x.
/// Complete within the bound; found by exact perfect-square testing.
pub fn integral_points(curve: &MordellCurve, x_bound: &BigInt) -> Vec<MordellPoint> {
    assert!(x_bound >= &BigInt::from(1), "x_bound must be >= 1");
    let bound = x_bound.to_i64().expect("x_bound fits i64");
    let mut out = Vec::new();
    for x in -bound..=bound {
        let xi = BigInt::from(x);
        let v = &xi * &xi * &xi + &curve.n;
        if v.is_negative() {
            continue;
        }
        if let Some(y) = arith::is_perfect_square(&v) {
            out.push(MordellPoint { x: xi, y });
        }
    }
    out
}

/// Whether a scan result reproduces the curve's trusted table exactly.
/// `None` when the curve carries no table.
pub fn matches_known_table(curve: &MordellCurve, points: &[MordellPoint]) -> Option<bool> {
    curve
        .known_complete_points
        .as_ref()
        .map(|table| table.as_slice() == points)
}

/// Parses a point table: one `n x y` triple of decimal integers per line,
/// consecutive lines with equal n forming one curve.
pub fn parse_table(text: &str) -> Result<Vec<MordellCurve>> {
    let mut curves: Vec<MordellCurve> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!(
                "line {}: expected `n x y`, got {line:?}",
                idx + 1
            )));
        }
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", idx + 1)))
        };
        let n = parse(fields[0])?;
        let point = MordellPoint {
            x: parse(fields[1])?,
            y: parse(fields[2])?,
        };
        if point.y.is_negative() {
            return Err(Error::Parse(format!("line {}: y must be >= 0", idx + 1)));
        }
        match curves.last_mut() {
            Some(c) if c.n == n => c
                .known_complete_points
                .as_mut()
                .expect("table curves always carry points")
                .push(point),
            _ => {
                let mut curve = MordellCurve::new(n)?;
                curve.known_complete_points = Some(vec![point]);
                curves.push(curve);
            }
        }
    }
    Ok(curves)
}

/// Inverse of [`parse_table`]; round-trips the shipped data byte for byte.
pub fn format_table(curves: &[MordellCurve]) -> String {
    let mut out = String::new();
    for curve in curves {
        for pt in curve.known_complete_points.as_deref().unwrap_or(&[]) {
            out.push_str(&format!("{} {} {}\n", curve.n, pt.x, pt.y));
        }
    }
    out
}

const BUILTIN_TABLE: &str = include_str!("../data/mordell_points.txt");

/// The three shipped curves n = -4, -100, -2500 with their complete
/// integral-point tables.
pub fn builtin_curves() -> Vec<MordellCurve> {
    parse_table(BUILTIN_TABLE).expect("builtin table parses")
}

fn power_of_5_exponent(w: &BigInt) -> Option<u32> {
    if !w.is_positive() {
        return None;
    }
    let five = BigInt::from(5);
    let mut w = w.clone();
    let mut e = 0u32;
    while w > BigInt::from(1) {
        if (&w % &five).is_zero() {
            w /= &five;
            e += 1;
        } else {
            return None;
        }
    }
    Some(e)
}

/// Solves c*5^x = d + y^2 through the three curve tables.
///
/// Writing x = 3k + r, multiplying by c^2 * 5^(3r - r mod ...) turns the
/// equation into Y^2 = X^3 - d*c^2*5^(2r) with X = c*5^(k+r), Y scaled by
/// c*5^r; each table point whose X has that shape yields one (x, y),
/// which is then re-verified exactly and cross-checked against a direct
/// scan up to `confirm_bound`.
fn solve_by_curve_reduction(
    curves: &[MordellCurve],
    c: u64,
    d: u64,
    confirm_bound: u64,
) -> Result<Vec<(u64, BigInt)>> {
    let mut sols: BTreeSet<(u64, BigInt)> = BTreeSet::new();
    for r in 0u32..3 {
        let j = r; // smallest j with 3j >= r and 3j - r even
        let exp = 3 * j - r;
        let scale = BigInt::from(c) * BigInt::from(5u64).pow(exp / 2);
        let n_val = -(BigInt::from(d) * BigInt::from(c * c) * BigInt::from(5u64).pow(exp));
        let curve = curves.iter().find(|cv| cv.n == n_val).ok_or_else(|| {
            Error::TableMismatch(format!("no curve table for n = {n_val}"))
        })?;
        let table = curve
            .known_complete_points
            .as_ref()
            .ok_or_else(|| Error::TableMismatch(format!("curve n = {n_val} has no table")))?;
        for pt in table {
            if !(&pt.x % c).is_zero() {
                continue;
            }
            let w = &pt.x / c;
            let e = match power_of_5_exponent(&w) {
                Some(e) if e >= j => e,
                _ => continue,
            };
            let k = e - j;
            let x = u64::from(3 * k + r);
            if !(&pt.y % &scale).is_zero() {
                return Err(Error::TableMismatch(format!(
                    "point ({}, {}) on n = {n_val} maps to a non-integral y",
                    pt.x, pt.y
                )));
            }
            let y = &pt.y / &scale;
            let lhs = BigInt::from(c) * BigInt::from(5u64).pow(u32::try_from(x).unwrap());
            if lhs != BigInt::from(d) + &y * &y {
                return Err(Error::TableMismatch(format!(
                    "point ({}, {}) on n = {n_val} maps to (x, y) = ({x}, {y}) which does not solve {c}*5^x = {d} + y^2",
                    pt.x, pt.y
                )));
            }
            sols.insert((x, y));
        }
    }

    // independent confirmation by direct scan
    let mut scanned: BTreeSet<(u64, BigInt)> = BTreeSet::new();
    let mut pow = BigInt::from(c);
    for x in 0..=confirm_bound {
        let v = &pow - d;
        if !v.is_negative() {
            if let Some(y) = arith::is_perfect_square(&v) {
                scanned.insert((x, y));
            }
        }
        pow *= 5;
    }
    let derived_in_bound: BTreeSet<(u64, BigInt)> = sols
        .iter()
        .filter(|(x, _)| *x <= confirm_bound)
        .cloned()
        .collect();
    if derived_in_bound != scanned {
        return Err(Error::TableMismatch(format!(
            "reduction set {sols:?} disagrees with direct scan {scanned:?} up to x = {confirm_bound}"
        )));
    }
    Ok(sols.into_iter().collect())
}

/// All non-negative solutions of 5^x = 4 + y^2.
pub fn solve_5x_eq_4_plus_square(confirm_bound: u64) -> Result<Vec<(u64, BigInt)>> {
    solve_by_curve_reduction(&builtin_curves(), 1, 4, confirm_bound)
}

/// All non-negative solutions of 2*5^x = 1 + y^2.
pub fn solve_2_5x_eq_1_plus_square(confirm_bound: u64) -> Result<Vec<(u64, BigInt)>> {
    solve_by_curve_reduction(&builtin_curves(), 2, 1, confirm_bound)
}
