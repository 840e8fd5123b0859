use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{invalid, Error, Result};

/// Exact positive fraction in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PosRational {
    num: BigUint,
    den: BigUint,
}

impl PosRational {
    pub fn new(num: BigUint, den: BigUint) -> Result<Self> {
        if num.is_zero() || den.is_zero() {
            return Err(invalid("positive rational needs nonzero numerator and denominator"));
        }
        let g = num.gcd(&den);
        Ok(Self {
            num: num / &g,
            den: den / g,
        })
    }

    pub fn from_int(n: BigUint) -> Result<Self> {
        Self::new(n, BigUint::one())
    }

    /// Panics on zero arguments; meant for literals.
    pub fn from_u64s(num: u64, den: u64) -> Self {
        Self::new(num.into(), den.into()).expect("nonzero literal")
    }

    pub fn one() -> Self {
        Self {
            num: BigUint::one(),
            den: BigUint::one(),
        }
    }

    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Self {
        Self {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("product of positives")
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            num: Pow::pow(&self.num, e),
            den: Pow::pow(&self.den, e),
        }
    }

    pub fn to_signed_parts(&self) -> (BigInt, BigInt) {
        (BigInt::from(self.num.clone()), BigInt::from(self.den.clone()))
    }
}

impl Ord for PosRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for PosRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PosRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for PosRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<BigUint>()
                .map_err(|_| invalid(format!("not a positive rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?),
            None => Self::new(parse(s)?, BigUint::one()),
        }
    }
}
