//! Empirical checks of the bounds: certified roots, continued fractions and
//! measured approximation exponents, real and p-adic.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::measures::{padic_root_rational, real_root_degree};
use crate::numerics::{int, ln_interval, BoundedReal, Dyadic, PosRational, PRECISION_CAP};
use crate::padic::{hensel_nth_root, root_distance_by_residue, PAdicApprox};

/// `(a/b)^(1/n)` enclosed in an interval of width at most `2^-prec`, both endpoints
/// certified by comparing their exact `n`-th powers with `a/b`.
pub fn real_root(a: &BigUint, b: &BigUint, n: u32, prec: u32) -> Result<BoundedReal> {
    if a.is_zero() || b.is_zero() || n < 1 {
        return Err(invalid("real_root needs a, b >= 1 and n >= 1"));
    }
    let scaled = (a << (prec as u64 * n as u64)) / b;
    let lo = scaled.nth_root(n);
    let exp = -(prec as i64);
    let exact = Pow::pow(&lo, n) * b == a << (prec as u64 * n as u64);
    let hi = if exact { lo.clone() } else { &lo + 1u32 };
    Ok(BoundedReal::new(
        Dyadic::new(lo.into(), exp),
        Dyadic::new(hi.into(), exp),
    ))
}

/// Partial quotients and convergents of `(a/b)^(1/n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CFExpansion {
    #[serde(serialize_with = "ser_list")]
    pub quotients: Vec<BigUint>,
    #[serde(serialize_with = "ser_pairs")]
    pub convergents: Vec<(BigUint, BigUint)>,
    pub requested: usize,
    pub certified_count: usize,
}

fn ser_list<S: serde::Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn ser_pairs<S: serde::Serializer>(v: &[(BigUint, BigUint)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(p, q)| [p.to_string(), q.to_string()]))
}

/// `ζ >= u/w` for `ζ = (a/b)^(1/n)`, `u >= 0`, `w > 0`: exactly `a w^n >= b u^n`.
fn root_ge(a: &BigUint, b: &BigUint, n: u32, u: &BigUint, w: &BigUint) -> bool {
    a * Pow::pow(w, n) >= b * Pow::pow(u, n)
}

/// Floor of an interval, if both endpoints agree.
fn floor_if_decided(x: &BoundedReal) -> Option<BigInt> {
    let (l, h) = (x.lo().floor(), x.hi().floor());
    (l == h).then_some(l)
}

/// First `k` partial quotients, with the default starting precision.
pub fn cf_expand(a: &BigUint, b: &BigUint, n: u32, k: usize) -> Result<CFExpansion> {
    cf_expand_with_precision(a, b, n, k, 64)
}

/// Each quotient comes from the complete quotient
/// `x_k = (p_{k-2} - q_{k-2} ζ) / (q_{k-1} ζ - p_{k-1})` evaluated on a certified
/// enclosure of `ζ`; the precision is doubled whenever the floor is not determined.
/// When an enclosure straddles a single integer `m`, the exact test
/// `x_k >= m  <=>  (-1)^k (ζ - R_m) >= 0` with
/// `R_m = (m p_{k-1} + p_{k-2}) / (m q_{k-1} + q_{k-2})` settles it.
pub fn cf_expand_with_precision(a: &BigUint, b: &BigUint, n: u32, k: usize, start_prec: u32) -> Result<CFExpansion> {
    if k == 0 {
        return Err(invalid("K must be at least 1"));
    }
    if real_root_degree(a, b, &BigUint::from(n))? < BigUint::from(2u32) {
        return Err(invalid("the root is rational"));
    }
    let mut quotients: Vec<BigUint> = Vec::with_capacity(k);
    let mut convergents: Vec<(BigUint, BigUint)> = Vec::with_capacity(k);
    // (p_{k-2}, q_{k-2}), (p_{k-1}, q_{k-1})
    let (mut p2, mut q2) = (BigUint::zero(), BigUint::one());
    let (mut p1, mut q1) = (BigUint::one(), BigUint::zero());
    let mut prec = start_prec.max(32);
    let mut zeta = real_root(a, b, n, prec)?;
    while quotients.len() < k {
        let w = prec;
        let num = BoundedReal::from_biguint(&p2).sub(&BoundedReal::from_biguint(&q2).mul(&zeta, w), w);
        let den = BoundedReal::from_biguint(&q1).mul(&zeta, w).sub(&BoundedReal::from_biguint(&p1), w);
        let x = num.div(&den, w);
        let mut decided = None;
        if let Ok(x) = &x {
            if let Some(f) = floor_if_decided(x) {
                decided = Some(f);
            } else if x.hi().floor() - x.lo().floor() == BigInt::one() {
                let m = x.hi().floor().to_biguint().unwrap_or_default();
                let sign_up = quotients.len() % 2 == 0;
                let ge = root_ge(a, b, n, &(&m * &p1 + &p2), &(&m * &q1 + &q2));
                let x_ge_m = if sign_up { ge } else { !ge || is_equal(a, b, n, &(&m * &p1 + &p2), &(&m * &q1 + &q2)) };
                decided = Some(if x_ge_m { m.into() } else { BigInt::from(m) - 1 });
            }
        }
        match decided {
            Some(f) if !f.is_negative() => {
                let q = f.to_biguint().expect("non-negative");
                let p0 = &q * &p1 + &p2;
                let q0 = &q * &q1 + &q2;
                quotients.push(q);
                convergents.push((p0.clone(), q0.clone()));
                p2 = std::mem::replace(&mut p1, p0);
                q2 = std::mem::replace(&mut q1, q0);
            }
            _ => {
                if prec >= PRECISION_CAP * 4 {
                    break;
                }
                prec *= 2;
                zeta = real_root(a, b, n, prec)?;
            }
        }
    }
    let certified_count = quotients.len();
    Ok(CFExpansion {
        quotients,
        convergents,
        requested: k,
        certified_count,
    })
}

fn is_equal(a: &BigUint, b: &BigUint, n: u32, u: &BigUint, w: &BigUint) -> bool {
    a * Pow::pow(w, n) == b * Pow::pow(u, n)
}

/// One rational approximation `x/y` and its measured exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentSample {
    #[serde(serialize_with = "ser_display")]
    pub x: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub y: BigInt,
    pub exponent: BoundedReal,
    /// `v_p(ζ - x/y)` for p-adic samples.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valuation: Option<u64>,
}

fn ser_display<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// `-log|ζ - x/y| / log y` for every convergent with `y >= 2`.
pub fn measure_exponents_real(a: &BigUint, b: &BigUint, n: u32, k: usize, prec: u32) -> Result<Vec<ExponentSample>> {
    let cf = cf_expand(a, b, n, k)?;
    if cf.certified_count < k {
        return Err(Error::UndecidableAtCap {
            cap: PRECISION_CAP,
            what: format!("only {} of {k} partial quotients certified", cf.certified_count),
        });
    }
    cf.convergents
        .par_iter()
        .filter(|(_, q)| *q >= BigUint::from(2u32))
        .map(|(p, q)| real_sample(a, b, n, p, q, prec))
        .collect()
}

fn real_sample(a: &BigUint, b: &BigUint, n: u32, p: &BigUint, q: &BigUint, prec: u32) -> Result<ExponentSample> {
    let zeta_ge = root_ge(a, b, n, p, q);
    let mut w = prec + 8 * q.bits() as u32 + 64;
    loop {
        let zeta = real_root(a, b, n, w)?;
        let frac = BoundedReal::from_ratio(&BigInt::from(p.clone()), &BigInt::from(q.clone()), w);
        let diff = if zeta_ge { zeta.sub(&frac, w) } else { frac.sub(&zeta, w) };
        if diff.lo().is_positive() {
            let num = diff.ln(w)?.neg();
            let exponent = num.div(&ln_interval(&int(q), w), prec)?;
            return Ok(ExponentSample {
                x: p.clone().into(),
                y: q.clone().into(),
                exponent,
                valuation: None,
            });
        }
        if w > 1 << 20 {
            return Err(Error::SizeCap("convergent too close to the root".into()));
        }
        w *= 2;
    }
}

/// `v_p(ζ - x/y)` for the Hensel root, raising the Hensel precision until it is found.
pub fn padic_distance(a: &BigInt, b: &BigInt, p: u64, n: u64, x: &BigInt, y: &BigInt) -> Result<u64> {
    let mut k = 32u32;
    loop {
        let root = hensel_nth_root(a, b, p, n, k)?;
        if let Some(v) = distance_with(&root, x, y) {
            return Ok(v);
        }
        if k >= 1 << 16 {
            return Err(Error::SizeCap("Hensel precision".into()));
        }
        k *= 2;
    }
}

fn distance_with(root: &PAdicApprox, x: &BigInt, y: &BigInt) -> Option<u64> {
    root_distance_by_residue(root, x, y)
}

/// Exhaustive scan of coprime `(x, y)`, `y >= 1`, `2 <= max(|x|, y) <= h`,
/// `x ≡ y (mod p)`, measuring `v_p(ζ - x/y) log p / log max(|x|, y)`.
///
/// Rows of `y` are processed in parallel; the output is sorted by `(x, y)`.
pub fn measure_exponents_padic(a: &BigUint, b: &BigUint, p: u64, n: u64, h: u64, prec: u32) -> Result<Vec<ExponentSample>> {
    if h < 2 {
        return Err(invalid("height cap H must be at least 2"));
    }
    if padic_root_rational(a, b, p, &BigUint::from(n))? {
        return Err(invalid("the p-adic root is rational"));
    }
    let (ai, bi) = (BigInt::from(a.clone()), BigInt::from(b.clone()));
    let k0 = 64u32;
    let root = hensel_nth_root(&ai, &bi, p, n, k0)?;
    let lp = ln_interval(&PosRational::from_u64s(p, 1), prec + 32);
    let h_i = h as i64;
    let mut rows: Vec<Vec<ExponentSample>> = (1..=h_i)
        .into_par_iter()
        .map(|y| -> Result<Vec<ExponentSample>> {
            let mut out = Vec::new();
            if y as u64 % p == 0 {
                return Ok(out);
            }
            for x in -h_i..=h_i {
                if x == 0 || (x - y).rem_euclid(p as i64) != 0 || x.gcd(&y) != 1 {
                    continue;
                }
                let height = x.unsigned_abs().max(y as u64);
                if height < 2 {
                    continue;
                }
                let (xb, yb) = (BigInt::from(x), BigInt::from(y));
                let v = match distance_with(&root, &xb, &yb) {
                    Some(v) => v,
                    None => padic_distance(&ai, &bi, p, n, &xb, &yb)?,
                };
                let w = prec + 32;
                let exponent = BoundedReal::from_u64(v)
                    .mul(&lp, w)
                    .div(&ln_interval(&PosRational::from_u64s(height, 1), w), prec)?;
                out.push(ExponentSample {
                    x: xb,
                    y: yb,
                    exponent,
                    valuation: Some(v),
                });
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut all: Vec<ExponentSample> = rows.drain(..).flatten().collect();
    all.sort_by(|s, t| s.x.cmp(&t.x).then(s.y.cmp(&t.y)));
    Ok(all)
}

/// The sample with the largest exponent (by upper endpoint, then by position).
pub fn max_exponent(samples: &[ExponentSample]) -> Option<&ExponentSample> {
    samples.iter().fold(None, |best: Option<&ExponentSample>, s| match best {
        Some(b) if b.exponent.hi().cmp(s.exponent.hi()) != Ordering::Less => Some(b),
        _ => Some(s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn roots() {
        let r = real_root(&u(8), &u(1), 3, 100).unwrap();
        assert_eq!(r, BoundedReal::from_u64(2));
        let r = real_root(&u(2), &u(1), 2, 100).unwrap();
        let lo = BoundedReal::from_ratio(&BigInt::from(1_414_213_562u64), &BigInt::from(1_000_000_000u64), 64);
        let hi = BoundedReal::from_ratio(&BigInt::from(1_414_213_563u64), &BigInt::from(1_000_000_000u64), 64);
        assert_eq!(lo.certainly_lt(&r), Some(true));
        assert_eq!(r.certainly_lt(&hi), Some(true));
        assert!(r.width() <= Dyadic::half_pow(100));
    }

    #[test]
    fn cube_root_of_two() {
        let cf = cf_expand(&u(2), &u(1), 3, 7).unwrap();
        let q: Vec<u64> = cf.quotients.iter().map(|x| u64::try_from(x).unwrap()).collect();
        assert_eq!(q, vec![1, 3, 1, 5, 1, 1, 4]);
        assert_eq!(cf.certified_count, 7);
        assert!(cf_expand(&u(4), &u(1), 2, 3).is_err());
    }

    #[test]
    fn padic_scan_small() {
        let s = measure_exponents_padic(&u(6), &u(1), 5, 3, 20, 64).unwrap();
        let eleven = s.iter().find(|s| s.x == BigInt::from(11) && s.y == BigInt::one()).unwrap();
        assert!(eleven.valuation.unwrap() >= 2);
        assert!(s.iter().all(|s| (&s.x - &s.y) % 5 == BigInt::zero()));
    }
}
