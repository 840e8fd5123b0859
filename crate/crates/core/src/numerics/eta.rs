//! The closeness parameter η of `a/b` to 1, in each of its four guises.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::interval::BoundedReal;
use super::log::ln_interval;
use super::precision::int;
use super::rational::PosRational;
use crate::arith::rational_perfect_power;
use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EtaKind {
    /// `a - b = a^(1 - η)`.
    #[serde(rename = "real-thm21")]
    RealThm21,
    /// `η = 1 - ln|a - b| / ln b`.
    #[serde(rename = "real-bm")]
    RealBm,
    /// `|a - b|_p^(-1) = a^η`.
    #[serde(rename = "padic-thm31")]
    PadicThm31,
    /// Chosen freely by the caller (Thue-Mahler families).
    #[serde(rename = "free-thm41")]
    FreeThm41,
}

/// η as `ln(exact_arg) / ln(base)`, with the exact rational value when there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EtaValue {
    pub kind: EtaKind,
    pub value: BoundedReal,
    #[serde(serialize_with = "ser_display")]
    pub exact_arg: PosRational,
    #[serde(skip)]
    pub base: PosRational,
    #[serde(serialize_with = "ser_opt_display")]
    pub exact: Option<BigRational>,
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn ser_opt_display<S: serde::Serializer>(x: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

/// `ln x / ln base` when it is rational: both must be powers of one primitive base.
pub fn exact_log_ratio(x: &PosRational, base: &PosRational) -> Option<BigRational> {
    let (h, j) = rational_perfect_power(base)?;
    if x.is_one() {
        return Some(BigRational::zero());
    }
    let (g, i) = rational_perfect_power(x)?;
    (g == h).then(|| BigRational::new(BigInt::from(i), BigInt::from(j)))
}

/// Enclosure of `ln x / ln base` for `base != 1`.
pub fn log_ratio(x: &PosRational, base: &PosRational, prec: u32) -> BoundedReal {
    if let Some(q) = exact_log_ratio(x, base) {
        return BoundedReal::from_big_rational(&q, prec);
    }
    let w = prec + 16;
    let num = ln_interval(x, w);
    let den = ln_interval(base, w);
    num.div(&den, prec).expect("ln base bounded away from zero")
}

impl EtaValue {
    fn build(kind: EtaKind, exact_arg: PosRational, base: PosRational, prec: u32) -> Self {
        let exact = exact_log_ratio(&exact_arg, &base);
        let value = log_ratio(&exact_arg, &base, prec);
        Self { kind, value, exact_arg, base, exact }
    }

    /// Recomputes the enclosure at another precision.
    pub fn at(&self, prec: u32) -> Self {
        Self::build(self.kind, self.exact_arg.clone(), self.base.clone(), prec)
    }

    /// Enclosure of `η ln(base) = ln(exact_arg)`, computed without dividing.
    pub fn scaled_log(&self, prec: u32) -> BoundedReal {
        ln_interval(&self.exact_arg, prec)
    }
}

/// η for the real closeness theorem: `a - b = a^(1 - η)`, computed as `ln(a/(a-b)) / ln a`.
pub fn eta_real(a: &BigUint, b: &BigUint, prec: u32) -> Result<EtaValue> {
    if b.is_zero() || a <= b {
        return Err(invalid("eta_real needs a > b >= 1"));
    }
    let arg = PosRational::new(a.clone(), a - b)?;
    let mut e = EtaValue::build(EtaKind::RealThm21, arg, int(a), prec);
    // 1 <= a - b < a puts η in (0, 1]
    let one = super::Dyadic::from_int(1);
    if e.value.hi() > &one {
        e.value = BoundedReal::new(e.value.lo().clone().min(one.clone()), one);
    }
    Ok(e)
}

/// η of the classical theorem for `(a/b)^(1/n)`: `1 - ln|a - b| / ln b`, possibly `<= 0`.
pub fn eta_bm(a: &BigUint, b: &BigUint, prec: u32) -> Result<EtaValue> {
    if *b < BigUint::from(2u32) {
        return Err(invalid("eta_bm needs b >= 2"));
    }
    if a == b {
        return Err(invalid("eta_bm needs a != b"));
    }
    let diff = if a > b { a - b } else { b - a };
    let arg = PosRational::new(b.clone(), diff)?;
    Ok(EtaValue::build(EtaKind::RealBm, arg, int(b), prec))
}

/// p-adic η: `a^η = p^e` with `e = v_p(a - b)`.
pub fn eta_padic(a: &BigUint, p: u64, e: u64, prec: u32) -> Result<EtaValue> {
    if *a < BigUint::from(2u32) || e == 0 {
        return Err(invalid("eta_padic needs a >= 2 and e >= 1"));
    }
    let pe = num_traits::Pow::pow(BigUint::from(p), BigUint::from(e));
    Ok(EtaValue::build(EtaKind::PadicThm31, int(&pe), int(a), prec))
}

/// A caller-chosen rational η.
pub fn eta_free(eta: &PosRational, prec: u32) -> EtaValue {
    let q = BigRational::new(eta.num().clone().into(), eta.den().clone().into());
    EtaValue {
        kind: EtaKind::FreeThm41,
        value: BoundedReal::from_big_rational(&q, prec),
        exact_arg: eta.clone(),
        base: PosRational::one(),
        exact: Some(q),
    }
}

/// `k / η`, exact when η is.
pub fn over_eta(k: &BigRational, eta: &EtaValue, prec: u32) -> Result<BoundedReal> {
    if let Some(q) = &eta.exact {
        if q.is_zero() {
            return Err(crate::error::Error::Unresolved("division by η = 0".into()));
        }
        return Ok(BoundedReal::from_big_rational(&(k / q), prec));
    }
    let w = prec + 16;
    let kk = BoundedReal::from_big_rational(k, w);
    // k / η = k ln(base) / ln(arg)
    let lb = ln_interval(&eta.base, w);
    let la = eta.scaled_log(w);
    kk.mul(&lb, w).div(&la, prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// `lo/10^4 < x < hi/10^4` for every point of `x`.
    fn between(x: &BoundedReal, lo: i64, hi: i64) -> bool {
        let q = |n: i64| BoundedReal::from_ratio(&BigInt::from(n), &BigInt::from(10_000), 64);
        x.certainly_lt(&q(hi)) == Some(true) && q(lo).certainly_lt(x) == Some(true)
    }

    #[test]
    fn exact_cases() {
        let e = eta_real(&u(100), &u(90), 128).unwrap();
        assert_eq!(e.exact, Some(BigRational::new(1.into(), 2.into())));
        assert!(e.value.is_exact());
        let e = eta_real(&u(17), &u(16), 128).unwrap();
        assert_eq!(e.value, BoundedReal::from_int(1));
        let e = eta_bm(&u(4), &u(2), 128).unwrap();
        assert!(e.value.is_zero());
        let e = eta_bm(&u(101), &u(100), 128).unwrap();
        assert_eq!(e.value, BoundedReal::from_int(1));
    }

    #[test]
    fn inexact_cases_enclose_reference() {
        // 1 - ln 9 / ln 1009 = 0.682331...
        let e = eta_real(&u(1009), &u(1000), 128).unwrap();
        assert!(e.exact.is_none());
        assert!(between(&e.value, 6823, 6824));
        // 1 - ln 9 / ln 100 = 0.522878...
        let e = eta_bm(&u(109), &u(100), 128).unwrap();
        assert!(between(&e.value, 5228, 5229));
    }

    #[test]
    fn errors() {
        assert!(eta_real(&u(5), &u(5), 64).is_err());
        assert!(eta_bm(&u(5), &u(1), 64).is_err());
    }
}
