//! Working precision policy: start at a default, double on demand, stop at a hard cap.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};

use super::log::ln_interval;
use super::rational::PosRational;
use super::interval::BoundedReal;
use crate::arith::rational_perfect_power;
use crate::error::{Error, Result};

/// Fractional bits used when the caller does not ask for anything else.
pub const DEFAULT_PRECISION: u32 = 128;

/// Precision doubling stops here with [`Error::UndecidableAtCap`].
pub const PRECISION_CAP: u32 = 4096;

/// Exact power comparisons are done in integers up to this many bits.
const EXACT_POWER_BITS: u64 = 1 << 22;

/// Runs `f` at `start`, `2 start`, ... up to [`PRECISION_CAP`] while it reports
/// [`Error::Unresolved`]. Other errors and successes are returned unchanged.
pub fn refine<T>(start: u32, what: &str, mut f: impl FnMut(u32) -> Result<T>) -> Result<T> {
    let mut prec = start.clamp(32, PRECISION_CAP);
    loop {
        match f(prec) {
            Err(Error::Unresolved(_)) if prec < PRECISION_CAP => {
                prec = (prec * 2).min(PRECISION_CAP);
            }
            Err(Error::Unresolved(_)) => {
                return Err(Error::UndecidableAtCap {
                    cap: PRECISION_CAP,
                    what: what.to_string(),
                })
            }
            other => return other,
        }
    }
}

/// Turns an undecided interval comparison into [`Error::Unresolved`].
pub fn resolved<T>(x: Option<T>, what: &str) -> Result<T> {
    x.ok_or_else(|| Error::Unresolved(what.to_string()))
}

/// Compares `x^e1` with `y^e2` exactly.
///
/// Small cases are multiplied out. Large cases decide equality through the
/// primitive bases of `x` and `y` and otherwise compare `e1 ln x` with `e2 ln y`
/// at increasing precision (two distinct reals always separate eventually).
pub fn compare_powers(x: &PosRational, e1: &BigUint, y: &PosRational, e2: &BigUint) -> Result<Ordering> {
    let size = |q: &PosRational, e: &BigUint| e * (q.num().bits() + q.den().bits());
    if size(x, e1) + size(y, e2) <= BigUint::from(EXACT_POWER_BITS) {
        let p = |b: &BigUint, e: &BigUint| Pow::pow(b, e);
        let lhs = p(x.num(), e1) * p(y.den(), e2);
        let rhs = p(y.num(), e2) * p(x.den(), e1);
        return Ok(lhs.cmp(&rhs));
    }
    let xe_one = x.is_one() || e1.is_zero();
    let ye_one = y.is_one() || e2.is_zero();
    if xe_one && ye_one {
        return Ok(Ordering::Equal);
    }
    if !xe_one && !ye_one {
        if let (Some((g, i)), Some((h, j))) = (rational_perfect_power(x), rational_perfect_power(y)) {
            let lhs = BigInt::from(i) * BigInt::from(e1.clone());
            let rhs = BigInt::from(j) * BigInt::from(e2.clone());
            if g == h && lhs == rhs {
                return Ok(Ordering::Equal);
            }
        }
    }
    refine(DEFAULT_PRECISION, "power comparison", |prec| {
        let w = prec + 64 + e1.bits().max(e2.bits()) as u32;
        let l = ln_interval(x, w).mul(&BoundedReal::from_biguint(e1), w);
        let r = ln_interval(y, w).mul(&BoundedReal::from_biguint(e2), w);
        resolved(l.compare(&r), "power comparison")
    })
}

/// [`compare_powers`] with machine-word exponents.
pub fn compare_powers_u64(x: &PosRational, e1: u64, y: &PosRational, e2: u64) -> Result<Ordering> {
    compare_powers(x, &BigUint::from(e1), y, &BigUint::from(e2))
}

/// `true` iff `x^e1 >= y^e2`.
pub fn power_ge(x: &PosRational, e1: &BigUint, y: &PosRational, e2: &BigUint) -> Result<bool> {
    Ok(compare_powers(x, e1, y, e2)? != Ordering::Less)
}

pub(crate) fn int(n: &BigUint) -> PosRational {
    PosRational::new(n.clone(), BigUint::one()).expect("positive integer")
}
