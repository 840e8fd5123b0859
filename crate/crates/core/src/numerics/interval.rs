use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::dyadic::Dyadic;
use super::log::ln_bounds;
use super::rational::PosRational;
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with dyadic endpoints that is known to contain
/// some exact real number.
///
/// Every operation takes the precision `prec` and rounds its endpoints outward
/// to the grid `2^-prec`. Results that are already on the grid stay exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundedReal {
    lo: Dyadic,
    hi: Dyadic,
}

impl BoundedReal {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn exact(x: Dyadic) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::exact(Dyadic::from_int(n))
    }

    pub fn from_biguint(n: &BigUint) -> Self {
        Self::exact(Dyadic::from_biguint(n))
    }

    /// Outward enclosure of `num / den`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        Self {
            lo: Dyadic::ratio_floor(num, den, prec),
            hi: Dyadic::ratio_ceil(num, den, prec),
        }
    }

    pub fn from_rational(q: &PosRational, prec: u32) -> Self {
        let (n, d) = q.to_signed_parts();
        Self::from_ratio(&n, &d, prec)
    }

    pub fn from_big_rational(q: &num_rational::BigRational, prec: u32) -> Self {
        Self::from_ratio(q.numer(), q.denom(), prec)
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    fn rounded(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        Self {
            lo: lo.floor_to(prec),
            hi: hi.ceil_to(prec),
        }
    }

    pub fn add(&self, o: &Self, prec: u32) -> Self {
        Self::rounded(&self.lo + &o.lo, &self.hi + &o.hi, prec)
    }

    pub fn sub(&self, o: &Self, prec: u32) -> Self {
        Self::rounded(&self.lo - &o.hi, &self.hi - &o.lo, prec)
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, o: &Self, prec: u32) -> Self {
        let products = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = products.iter().min().cloned().expect("four products");
        let hi = products.iter().max().cloned().expect("four products");
        Self::rounded(lo, hi, prec)
    }

    pub fn square(&self, prec: u32) -> Self {
        if self.lo.is_negative() && self.hi.is_positive() {
            let m = self.lo.abs().max(self.hi.abs());
            Self::rounded(Dyadic::zero(), &m * &m, prec)
        } else {
            self.mul(self, prec)
        }
    }

    pub fn cube(&self, prec: u32) -> Self {
        // x -> x^3 is monotone
        Self::rounded(
            &(&self.lo * &self.lo) * &self.lo,
            &(&self.hi * &self.hi) * &self.hi,
            prec,
        )
    }

    /// Fails with [`Error::Unresolved`] when the divisor contains zero.
    pub fn div(&self, o: &Self, prec: u32) -> Result<Self> {
        if !o.lo.is_positive() && !o.hi.is_negative() {
            return Err(Error::Unresolved("divisor interval contains zero".into()));
        }
        let pairs = [
            (&self.lo, &o.lo),
            (&self.lo, &o.hi),
            (&self.hi, &o.lo),
            (&self.hi, &o.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| a.div_floor(b, prec))
            .min()
            .expect("four quotients");
        let hi = pairs
            .iter()
            .map(|(a, b)| a.div_ceil(b, prec))
            .max()
            .expect("four quotients");
        Ok(Self { lo, hi })
    }

    pub fn recip(&self, prec: u32) -> Result<Self> {
        Self::from_int(1).div(self, prec)
    }

    pub fn max(&self, o: &Self) -> Self {
        Self {
            lo: self.lo.clone().max(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
        }
    }

    pub fn min(&self, o: &Self) -> Self {
        Self {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().min(o.hi.clone()),
        }
    }

    /// Natural logarithm; fails with [`Error::Unresolved`] unless `lo > 0`.
    pub fn ln(&self, prec: u32) -> Result<Self> {
        if !self.lo.is_positive() {
            return Err(Error::Unresolved("logarithm of a non-positive interval".into()));
        }
        let to_rat = |d: &Dyadic| {
            let (n, den) = d.to_ratio();
            (n.magnitude().clone(), den.magnitude().clone())
        };
        let (ln_, ld) = to_rat(&self.lo);
        if self.is_exact() {
            let (lo, hi) = ln_bounds(&ln_, &ld, prec);
            return Ok(Self { lo, hi });
        }
        let (hn, hd) = to_rat(&self.hi);
        let (lo, _) = ln_bounds(&ln_, &ld, prec);
        let (_, hi) = ln_bounds(&hn, &hd, prec);
        Ok(Self { lo, hi })
    }

    /// Principal `k`-th root of a non-negative interval, rounded exactly outward.
    pub fn nth_root(&self, k: u32, prec: u32) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(Error::Unresolved("root of a possibly negative interval".into()));
        }
        let scale = prec as u64 * k as u64;
        let scaled_floor = |d: &Dyadic| {
            let (n, den) = d.to_ratio();
            let v = num_integer::Integer::div_floor(&(n << scale), &den);
            v.magnitude().clone()
        };
        let lo_root = scaled_floor(&self.lo).nth_root(k);
        let (n, den) = self.hi.to_ratio();
        let hi_scaled = -num_integer::Integer::div_floor(&(-(n << scale)), &den);
        let hi_scaled = hi_scaled.magnitude().clone();
        let mut hi_root = hi_scaled.nth_root(k);
        if num_traits::Pow::pow(&hi_root, k) < hi_scaled {
            hi_root += 1u32;
        }
        let exp = -(prec as i64);
        Ok(Self {
            lo: Dyadic::new(lo_root.into(), exp),
            hi: Dyadic::new(hi_root.into(), exp),
        })
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        let lo = self.lo.clone().max(o.lo.clone());
        let hi = self.hi.clone().min(o.hi.clone());
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// Whether `num / den` (with `den > 0`) lies in the interval.
    pub fn contains_ratio(&self, num: &BigInt, den: &BigInt) -> bool {
        let (ln, ld) = self.lo.to_ratio();
        let (hn, hd) = self.hi.to_ratio();
        ln * den <= num * &ld && num * hd <= hn * den
    }

    pub fn is_subset_of(&self, o: &Self) -> bool {
        o.lo <= self.lo && self.hi <= o.hi
    }

    /// Certain ordering of every point of `self` against every point of `o`,
    /// `None` when the intervals overlap (and are not the same exact point).
    pub fn compare(&self, o: &Self) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if self.lo > o.hi {
            Some(Ordering::Greater)
        } else if self.is_exact() && o.is_exact() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Decides `self <= o` for the enclosed values, or `None` if undecided.
    pub fn certainly_le(&self, o: &Self) -> Option<bool> {
        if self.hi <= o.lo {
            Some(true)
        } else if self.lo > o.hi {
            Some(false)
        } else {
            None
        }
    }

    /// Decides `self < o` for the enclosed values, or `None` if undecided.
    pub fn certainly_lt(&self, o: &Self) -> Option<bool> {
        if self.hi < o.lo {
            Some(true)
        } else if self.lo >= o.hi {
            Some(false)
        } else {
            None
        }
    }

    pub fn zero() -> Self {
        Self::exact(Dyadic::zero())
    }

    pub fn from_u64(n: u64) -> Self {
        Self::from_int(BigInt::from(n))
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }
}

impl Serialize for BoundedReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundedReal", 2)?;
        st.serialize_field("lo", &self.lo.to_decimal_string())?;
        st.serialize_field("hi", &self.hi.to_decimal_string())?;
        st.end()
    }
}

impl std::fmt::Display for BoundedReal {
    /// A point, or `[lo, hi]` rounded outward to 12 fractional digits.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(
                f,
                "[{}, {}]",
                self.lo.to_decimal_floor(12),
                self.hi.to_decimal_ceil(12)
            )
        }
    }
}
