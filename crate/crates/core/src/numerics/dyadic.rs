use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

/// `mant * 2^exp`, normalized so that `mant` is odd (or the pair is `(0, 0)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Self::zero();
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        Self {
            mant: mant >> tz,
            exp: exp + tz as i64,
        }
    }

    pub fn zero() -> Self {
        Self {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::new(n.into(), 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> Sign {
        self.mant.sign()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// `2^-k`.
    pub fn half_pow(k: u32) -> Self {
        Self {
            mant: BigInt::one(),
            exp: -(k as i64),
        }
    }

    /// Exact `(num, den)` with `den = 2^j > 0`.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        if self.exp >= 0 {
            (&self.mant << self.exp as u64, BigInt::one())
        } else {
            (self.mant.clone(), pow2((-self.exp) as u64))
        }
    }

    /// Largest multiple of `2^-prec` not above `self`.
    pub fn floor_to(&self, prec: u32) -> Self {
        let target = -(prec as i64);
        if self.exp >= target {
            return self.clone();
        }
        let shift = (target - self.exp) as u64;
        Self::new(self.mant.div_floor(&pow2(shift)), target)
    }

    /// Smallest multiple of `2^-prec` not below `self`.
    pub fn ceil_to(&self, prec: u32) -> Self {
        -(-self).floor_to(prec)
    }

    pub fn floor(&self) -> BigInt {
        let (n, d) = self.to_ratio();
        n.div_floor(&d)
    }

    /// `floor(num / den)` on the `2^-prec` grid; `den` must be nonzero.
    pub fn ratio_floor(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        debug_assert!(!den.is_zero());
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        Self::new((num << prec as u64).div_floor(&den), -(prec as i64))
    }

    pub fn ratio_ceil(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        -Self::ratio_floor(&-num, den, prec)
    }

    /// `floor(self / other)` on the `2^-prec` grid.
    pub fn div_floor(&self, other: &Self, prec: u32) -> Self {
        let (n1, d1) = self.to_ratio();
        let (n2, d2) = other.to_ratio();
        Self::ratio_floor(&(n1 * d2), &(d1 * n2), prec)
    }

    pub fn div_ceil(&self, other: &Self, prec: u32) -> Self {
        let (n1, d1) = self.to_ratio();
        let (n2, d2) = other.to_ratio();
        Self::ratio_ceil(&(n1 * d2), &(d1 * n2), prec)
    }

    /// Exact decimal expansion (always finite for a dyadic).
    pub fn to_decimal_string(&self) -> String {
        if self.exp >= 0 {
            return (&self.mant << self.exp as u64).to_string();
        }
        let k = (-self.exp) as u32;
        let scaled = self.mant.abs() * Pow::pow(BigInt::from(5), k);
        let digits = scaled.to_string();
        let k = k as usize;
        let (int_part, frac_part) = if digits.len() > k {
            let (i, f) = digits.split_at(digits.len() - k);
            (i.to_string(), f.to_string())
        } else {
            ("0".to_string(), format!("{digits:0>k$}"))
        };
        let frac_part = frac_part.trim_end_matches('0');
        let sign = if self.mant.is_negative() { "-" } else { "" };
        if frac_part.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    /// Decimal rounded toward minus infinity to `digits` fractional digits.
    pub fn to_decimal_floor(&self, digits: u32) -> String {
        let (n, d) = self.to_ratio();
        let scale = Pow::pow(BigInt::from(10), digits);
        let q = (n * &scale).div_floor(&d);
        let neg = q.is_negative();
        let (i, f) = q.abs().div_rem(&scale);
        let sign = if neg && !(i.is_zero() && f.is_zero()) { "-" } else { "" };
        if digits == 0 {
            return format!("{sign}{i}");
        }
        let width = digits as usize;
        format!("{sign}{i}.{:0>width$}", f.to_string())
    }

    /// Decimal rounded toward plus infinity to `digits` fractional digits.
    pub fn to_decimal_ceil(&self, digits: u32) -> String {
        let s = (-self).to_decimal_floor(digits);
        match s.strip_prefix('-') {
            Some(rest) => rest.to_string(),
            None if s.chars().all(|c| c == '0' || c == '.') => s,
            None => format!("-{s}"),
        }
    }

    /// Parses an exact decimal (`-12.375`) that denotes a dyadic rational.
    pub fn parse_decimal(s: &str) -> Option<Self> {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() || !(int_part.chars().chain(frac_part.chars())).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
        let k = frac_part.len() as u32;
        let five_k = Pow::pow(BigInt::from(5), k);
        let (q, r) = digits.div_rem(&five_k);
        if !r.is_zero() {
            return None;
        }
        let d = Self::new(q, -(k as i64));
        Some(if neg { -d } else { d })
    }

    pub fn from_biguint(n: &BigUint) -> Self {
        Self::new(BigInt::from(n.clone()), 0)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).mant.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &rhs.mant << (rhs.exp - e) as u64;
        Dyadic::new(a + b, e)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &rhs.mant, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        -&self
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}
