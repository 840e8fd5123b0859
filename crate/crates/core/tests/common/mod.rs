#![allow(dead_code)]

use irrmeasure::numerics::{BoundedReal, Dyadic, PosRational};
use num_bigint::{BigInt, BigUint};
use num_traits::Pow;

pub fn u(n: u64) -> BigUint {
    BigUint::from(n)
}

pub fn i(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn q(n: u64, d: u64) -> PosRational {
    PosRational::from_u64s(n, d)
}

pub fn ten_pow(k: u32) -> BigUint {
    Pow::pow(BigUint::from(10u32), k)
}

/// Exact ratio for a decimal literal such as `-12.5`.
pub fn decimal(s: &str) -> (BigInt, BigInt) {
    let (int_part, frac) = s.split_once('.').unwrap_or((s, ""));
    let n: BigInt = format!("{int_part}{frac}").parse().unwrap();
    (n, Pow::pow(BigInt::from(10), frac.len() as u32))
}

/// Asserts that `x` contains the reference decimal up to `10^-slack_digits`
/// (the reference is itself rounded), and that `x` is narrower than `10^-width_digits`.
pub fn assert_encloses(x: &BoundedReal, reference: &str, slack_digits: u32, width_digits: u32) {
    let (n, d) = decimal(reference);
    let eps = BoundedReal::from_ratio(&BigInt::from(1), &Pow::pow(BigInt::from(10), slack_digits), 512);
    let widened = BoundedReal::new(x.lo() - eps.hi(), x.hi() + eps.hi());
    assert!(widened.contains_ratio(&n, &d), "{x} does not enclose {reference}");
    let w = BoundedReal::from_ratio(&BigInt::from(1), &Pow::pow(BigInt::from(10), width_digits), 512);
    assert!(x.width() <= *w.lo(), "{x} is wider than 1e-{width_digits}");
}

pub fn dy(n: i64) -> Dyadic {
    Dyadic::from_int(n)
}
