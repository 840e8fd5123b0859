//! Certified natural logarithms of positive rationals.
//!
//! `ln x = k ln 2 + 2 atanh t` with `x = 2^k y`, `y` in `[2/3, 4/3]` and
//! `t = (y - 1)/(y + 1)`, so `|t| <= 1/5`. Both arctangents are summed in
//! fixed point with one-sided truncation errors that are tracked explicitly.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::dyadic::Dyadic;
use super::interval::BoundedReal;
use super::rational::PosRational;

/// Returns `s` and `err` with `s <= 2^w atanh(u/v) < s + err`. Needs `0 <= u/v <= 1/3`.
fn atanh_scaled(u: &BigUint, v: &BigUint, w: u64) -> (BigUint, u64) {
    debug_assert!(BigUint::from(3u32) * u <= *v);
    let u2 = u * u;
    let v2 = v * v;
    let mut p = (u << w) / v;
    let mut sum = BigUint::zero();
    let mut terms = 0u64;
    while !p.is_zero() {
        sum += &p / (2 * terms + 1);
        p = p * &u2 / &v2;
        terms += 1;
    }
    // each truncated power is short by at most j + 1 ulps, each term by at most 2,
    // and the dropped tail is below (J + 1) / (1 - t^2) ulps
    (sum, 4 * terms + 4)
}

/// Lower and upper endpoints on the `2^-prec` grid enclosing `ln(num/den)`.
///
/// Endpoints carry an extra `2^-(prec+1)` of slack so that enclosures computed at a
/// higher precision are always nested inside the ones computed at a lower precision.
pub(crate) fn ln_bounds(num: &BigUint, den: &BigUint, prec: u32) -> (Dyadic, Dyadic) {
    assert!(!num.is_zero() && !den.is_zero(), "ln of a non-positive number");
    if num == den {
        return (Dyadic::zero(), Dyadic::zero());
    }
    let prec = prec.max(32);
    let mut k = num.bits() as i64 - den.bits() as i64;
    let (u, v) = loop {
        let (u, v) = if k >= 0 {
            (num.clone(), den << k as u64)
        } else {
            (num << (-k) as u64, den.clone())
        };
        let three_u = BigUint::from(3u32) * &u;
        if three_u > BigUint::from(4u32) * &v {
            k += 1;
        } else if three_u < BigUint::from(2u32) * &v {
            k -= 1;
        } else {
            break (u, v);
        }
    };
    let guard = 48 + 64 - (k.unsigned_abs().leading_zeros() as u64);
    let w = prec as u64 + guard;

    let negative = u < v;
    let diff = if negative { &v - &u } else { &u - &v };
    let (st, et) = atanh_scaled(&diff, &(&u + &v), w);
    let (s2, e2) = atanh_scaled(&BigUint::one(), &BigUint::from(3u32), w);

    let st = BigInt::from(st);
    let s2 = BigInt::from(s2);
    let kk = BigInt::from(k);
    // 2k atanh(1/3)
    let (ln2_lo, ln2_hi) = {
        let a = &kk * 2 * &s2;
        let b = &kk * 2 * (&s2 + e2);
        if k >= 0 {
            (a, b)
        } else {
            (b, a)
        }
    };
    // 2 sign(t) atanh|t|
    let (t_lo, t_hi) = if negative {
        (-(&st + et) * 2, -&st * 2)
    } else {
        (&st * 2, (&st + et) * 2)
    };
    let exp = -(w as i64);
    let lo = Dyadic::new(ln2_lo + t_lo, exp);
    let hi = Dyadic::new(ln2_hi + t_hi, exp);
    let slack = Dyadic::half_pow(prec + 1);
    ((&lo - &slack).floor_to(prec), (&hi + &slack).ceil_to(prec))
}

/// Certified enclosure of `ln x`. Width is at most `2^(2 - prec) * max(1, |ln x|)`.
pub fn ln_interval(x: &PosRational, prec: u32) -> BoundedReal {
    let (lo, hi) = ln_bounds(x.num(), x.den(), prec);
    BoundedReal::new(lo, hi)
}

/// `ln n` for a positive integer.
pub fn ln_uint(n: &BigUint, prec: u32) -> BoundedReal {
    let (lo, hi) = ln_bounds(n, &BigUint::one(), prec);
    BoundedReal::new(lo, hi)
}
